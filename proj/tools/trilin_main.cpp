#include <cstdio>
int main() { std::puts("trilin: cli under construction"); return 0; }
