#ifndef TRILIN_MONOMIAL_HPP
#define TRILIN_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace trilin {

/// Normal-ordered monomial over three bosonic modes,
///   a†^p a^q  b†^r b^s  c†^t c^u,
/// stored as the exponent tuple (p,q,r,s,t,u). Within each mode the creation
/// exponent precedes the annihilation exponent; distinct modes commute, so
/// this tuple is the canonical form and equality is tuple equality.
struct BosonMonomial {
  std::array<std::uint16_t, 6> e{0, 0, 0, 0, 0, 0};

  constexpr BosonMonomial() = default;
  constexpr BosonMonomial(unsigned p, unsigned q, unsigned r, unsigned s, unsigned t, unsigned u)
      : e{static_cast<std::uint16_t>(p), static_cast<std::uint16_t>(q),
          static_cast<std::uint16_t>(r), static_cast<std::uint16_t>(s),
          static_cast<std::uint16_t>(t), static_cast<std::uint16_t>(u)} {}

  // creation/annihilation exponents per mode (modes 0,1,2 = a,b,c)
  std::uint16_t dag(int mode) const { return e[2 * mode]; }
  std::uint16_t ann(int mode) const { return e[2 * mode + 1]; }
  void set_dag(int mode, unsigned v) { e[2 * mode] = static_cast<std::uint16_t>(v); }
  void set_ann(int mode, unsigned v) { e[2 * mode + 1] = static_cast<std::uint16_t>(v); }

  bool is_identity() const {
    return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0 && e[4] == 0 && e[5] == 0;
  }

  /// Hermitian adjoint: (a†^p a^q)† = a†^q a^p per mode, already canonical.
  BosonMonomial dagger() const { return {e[1], e[0], e[3], e[2], e[5], e[4]}; }

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }

  auto operator<=>(const BosonMonomial&) const = default;

  static constexpr BosonMonomial identity() { return {}; }
  static constexpr BosonMonomial a_dag() { return {1, 0, 0, 0, 0, 0}; }
  static constexpr BosonMonomial a() { return {0, 1, 0, 0, 0, 0}; }
  static constexpr BosonMonomial b_dag() { return {0, 0, 1, 0, 0, 0}; }
  static constexpr BosonMonomial b() { return {0, 0, 0, 1, 0, 0}; }
  static constexpr BosonMonomial c_dag() { return {0, 0, 0, 0, 1, 0}; }
  static constexpr BosonMonomial c() { return {0, 0, 0, 0, 0, 1}; }

  /// Swap the a and b modes (the paper-level a<->b symmetry of the generator).
  BosonMonomial swap_ab() const { return {e[2], e[3], e[0], e[1], e[4], e[5]}; }

  std::string str() const {
    static const char* names[6] = {"ad", "a", "bd", "b", "cd", "c"};
    if (is_identity()) return "1";
    std::string s;
    for (int k = 0; k < 6; ++k) {
      if (e[k] == 0) continue;
      if (!s.empty()) s += ' ';
      s += names[k];
      if (e[k] > 1) s += std::to_string(e[k]);
    }
    return s;
  }
};

}  // namespace trilin

#endif
