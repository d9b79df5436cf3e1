#ifndef TRILIN_SEQUENCES_HPP
#define TRILIN_SEQUENCES_HPP

#include <gmpxx.h>
#include <stdexcept>

namespace trilin {

// The four integer sequences behind the second-order coefficient catalog:
//   a(n) = (3^(2n+1) - 8n - 3)/16
//   X(n) = 54 a(n-1) + 25n - 18 - n(n-1)/2
//   Y(n) = 18 a(n-1) + 7n - 6 - n(n-1)/2
//   Z(n) = (2n+1)! sum_{k=0}^{n} [X(k-1) + Y(n-k) - k(n-k)] / ((2k)! (2(n-k)+1)!)
// The closed formulas extend to the tabulated boundary row n = -1, where
// a(-1) = 1/3 and Y(-1) = 2/3 are genuinely fractional.

namespace detail {
/// 3^k for possibly negative k, as an exact rational.
inline mpq_class pow3(long k) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(k < 0 ? -k : k));
  if (k >= 0) return mpq_class(p);
  mpq_class q(1);
  q /= mpq_class(p);
  return q;
}
inline mpz_class fact(unsigned long n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return f;
}
}  // namespace detail

inline mpq_class seq_a(long n) {
  if (n < -1) throw std::domain_error("seq_a: n >= -1 required");
  mpq_class v = detail::pow3(2 * n + 1) - mpq_class(8 * n + 3);
  v /= 16;
  return v;
}

namespace detail {
// a(n-1) evaluated without the public domain check (needed at n-1 = -2).
inline mpq_class a_unchecked(long n) {
  mpq_class v = pow3(2 * n + 1) - mpq_class(8 * n + 3);
  v /= 16;
  return v;
}
}  // namespace detail

inline mpq_class seq_X(long n) {
  if (n < -1) throw std::domain_error("seq_X: n >= -1 required");
  return 54 * detail::a_unchecked(n - 1) + mpq_class(25 * n - 18) - mpq_class(n * (n - 1)) / 2;
}

inline mpq_class seq_Y(long n) {
  if (n < -1) throw std::domain_error("seq_Y: n >= -1 required");
  return 18 * detail::a_unchecked(n - 1) + mpq_class(7 * n - 6) - mpq_class(n * (n - 1)) / 2;
}

inline mpq_class seq_Z(long n) {
  if (n < 0) throw std::domain_error("seq_Z: n >= 0 required");
  mpq_class sum(0);
  for (long k = 0; k <= n; ++k) {
    mpq_class term = seq_X(k - 1) + seq_Y(n - k) - mpq_class(k * (n - k));
    term /= mpq_class(detail::fact(2 * k) * detail::fact(2 * (n - k) + 1));
    sum += term;
  }
  sum *= mpq_class(detail::fact(2 * n + 1));
  return sum;
}

}  // namespace trilin

#endif
