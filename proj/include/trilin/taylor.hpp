#ifndef TRILIN_TAYLOR_HPP
#define TRILIN_TAYLOR_HPP

#include <cassert>
#include <cstddef>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilin/monomial.hpp"
#include "trilin/rational.hpp"

namespace trilin {

/// Truncated power series in x = chi' with exact rational coefficients.
/// cosh/sinh enter through their defining series, so every closed form the
/// catalog builds is an exact Taylor generator, never a float approximation.
class RatSeries {
 public:
  explicit RatSeries(std::size_t len) : c_(len, mpq_class(0)) {}

  static RatSeries constant(const mpq_class& v, std::size_t len) {
    RatSeries r(len);
    if (len > 0) r.c_[0] = v;
    return r;
  }
  static RatSeries x_power(unsigned k, std::size_t len) {
    RatSeries r(len);
    if (k < len) r.c_[k] = 1;
    return r;
  }
  static RatSeries cosh_kx(unsigned k, std::size_t len) { return hyper(k, len, 0); }
  static RatSeries sinh_kx(unsigned k, std::size_t len) { return hyper(k, len, 1); }

  std::size_t size() const { return c_.size(); }
  const mpq_class& operator[](std::size_t i) const { return c_.at(i); }

  RatSeries& operator+=(const RatSeries& o) {
    assert(size() == o.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  RatSeries& operator-=(const RatSeries& o) {
    assert(size() == o.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  RatSeries& operator*=(const mpq_class& q) {
    for (auto& v : c_) v *= q;
    return *this;
  }
  friend RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
  friend RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }
  friend RatSeries operator*(RatSeries a, const mpq_class& q) { return a *= q; }
  friend RatSeries operator*(const mpq_class& q, RatSeries a) { return a *= q; }

  /// Truncated Cauchy product.
  RatSeries mul(const RatSeries& o) const {
    RatSeries r(std::min(size(), o.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = 0; i + j < r.size() && j < o.size(); ++j)
        if (i < size()) r.c_[i + j] += c_[i] * o.c_[j];
    return r;
  }

  /// Division by x^m. The first m coefficients must vanish identically —
  /// this is the exact witness that the singularity is removable.
  RatSeries div_x(unsigned m) const {
    if (m >= size()) throw std::invalid_argument("div_x: series too short");
    for (unsigned i = 0; i < m; ++i)
      if (c_[i] != 0)
        throw std::logic_error("div_x: nonzero coefficient below the pole order");
    RatSeries r(size() - m);
    for (std::size_t i = 0; i < r.size(); ++i) r.c_[i] = c_[i + m];
    return r;
  }

  RatSeries truncate(std::size_t len) const {
    RatSeries r(len);
    for (std::size_t i = 0; i < len && i < size(); ++i) r.c_[i] = c_[i];
    return r;
  }

  /// Horner evaluation with double coefficients (used for small-x fallbacks).
  double eval(double x) const {
    double acc = 0.0;
    for (std::size_t i = size(); i-- > 0;) acc = acc * x + c_[i].get_d();
    return acc;
  }

  std::vector<double> to_doubles() const {
    std::vector<double> d(size());
    for (std::size_t i = 0; i < size(); ++i) d[i] = c_[i].get_d();
    return d;
  }

 private:
  static RatSeries hyper(unsigned k, std::size_t len, unsigned parity) {
    RatSeries r(len);
    mpz_class kj(1), fj(1);
    for (std::size_t j = 0; j < len; ++j) {
      if (j > 0) {
        kj *= k;
        fj *= static_cast<unsigned long>(j);
      }
      if (j % 2 == parity) {
        mpq_class q(kj);
        q /= mpq_class(fj);
        r.c_[j] = q;
      }
    }
    return r;
  }

  std::vector<mpq_class> c_;
};

/// Every closed form the paper names: the main-text A, B, C, D following
/// Eq.-area of the effective operators, the two second-order coefficient
/// catalogs, and the first-order structural factors of the resummed
/// operators. Each id owns one exact Taylor generator (here) and one direct
/// numeric evaluator (closed_forms.hpp); tests cross-check the two.
enum class ClosedFormId {
  // main-text aliases
  A, B, C, D,
  // signal-mode second-order catalog
  A_a, A_bdag, A_a2b, A_abdagb, A_adagabdag, A_adagbdag2, A_adaga2,
  A_adc2, A_adcdag2, A_adcdagdc, A_bdag2b, A_bdagdc2, A_bdagdcdagdc, A_bdagdcdag2,
  // pump-mode second-order catalog (+ the third-order amplitude C_alpha)
  C_alpha, C_dc, C_adagadc, C_bdagbdc, C_abdc, C_abdcdag, C_adagbdagdc,
  C_dcdag, C_adagadcdag, C_bdagbdcdag, C_adagbdagdcdag,
  // first-order structural factors
  F_one, F_x, F_cosh, F_sinh, F_half_sinh, F_bddc, F_bddcd,
  F_amp_depl, F_adbd, F_ab,
};

/// Exact Taylor series (in x = chi') of the chi'-dependent factor of a
/// closed form, to `len` coefficients.
inline RatSeries taylor_series(ClosedFormId id, std::size_t len) {
  using RS = RatSeries;
  const std::size_t L = len + 4;  // headroom for the x^-m divisions
  const auto ch1 = RS::cosh_kx(1, L), sh1 = RS::sinh_kx(1, L);
  const auto ch2 = RS::cosh_kx(2, L), sh2 = RS::sinh_kx(2, L);
  const auto ch3 = RS::cosh_kx(3, L), sh3 = RS::sinh_kx(3, L);
  const auto ch4 = RS::cosh_kx(4, L);
  const auto one = RS::constant(1, L);
  const auto x = RS::x_power(1, L), x2 = RS::x_power(2, L);
  const mpq_class half(1, 2);

  switch (id) {
    case ClosedFormId::F_one:
      return one.truncate(len);
    case ClosedFormId::F_x:
      return x.truncate(len);
    case ClosedFormId::F_cosh:
      return ch1.truncate(len);
    case ClosedFormId::F_sinh:
      return sh1.truncate(len);
    case ClosedFormId::F_half_sinh:
      return (sh1 * half).truncate(len);
    case ClosedFormId::F_bddc:  // cosh/2 + sinh/(2x)
      return (ch1 * half + sh1.div_x(1).truncate(L) * half).truncate(len);
    case ClosedFormId::F_bddcd:  // cosh/2 - sinh/(2x)
      return (ch1 * half - sh1.div_x(1).truncate(L) * half).truncate(len);
    case ClosedFormId::F_amp_depl:  // sinh^2/(2x) = (cosh 2x - 1)/(4x)
      return ((ch2 - one).div_x(1).truncate(L) * mpq_class(1, 4)).truncate(len);
    case ClosedFormId::F_adbd:  // (1 - sinh(2x)/(2x))/2
      return ((one - sh2.div_x(1).truncate(L) * half) * half).truncate(len);
    case ClosedFormId::F_ab:  // (1 + sinh(2x)/(2x))/2
      return ((one + sh2.div_x(1).truncate(L) * half) * half).truncate(len);

    case ClosedFormId::B:
    case ClosedFormId::A_a:  // -(-cosh - x^2 cosh + cosh3 - 3x sinh)/(8x^2)
      return (((ch1 + x2.mul(ch1) - ch3 + x.mul(sh1) * mpq_class(3)).div_x(2).truncate(L)) *
              mpq_class(1, 8))
          .truncate(len);
    case ClosedFormId::A:
    case ClosedFormId::A_bdag:  // (-5x cosh + 2 sinh - x^2 sinh + sinh3)/(8x^2)
      return (((sh1 * mpq_class(2) - x.mul(ch1) * mpq_class(5) - x2.mul(sh1) + sh3)
                   .div_x(2)
                   .truncate(L)) *
              mpq_class(1, 8))
          .truncate(len);
    case ClosedFormId::A_a2b:  // (4x cosh - 7 sinh + sinh3)/(16x^2)
      return (((x.mul(ch1) * mpq_class(4) - sh1 * mpq_class(7) + sh3).div_x(2).truncate(L)) *
              mpq_class(1, 16))
          .truncate(len);
    case ClosedFormId::A_abdagb:  // (cosh - cosh3)/(8x^2)
      return (((ch1 - ch3).div_x(2).truncate(L)) * mpq_class(1, 8)).truncate(len);
    case ClosedFormId::A_adagabdag:  // (-4x cosh + sinh + sinh3)/(8x^2)
      return (((sh1 + sh3 - x.mul(ch1) * mpq_class(4)).div_x(2).truncate(L)) * mpq_class(1, 8))
          .truncate(len);
    case ClosedFormId::A_adagbdag2:  // (-cosh + cosh3 - 4x sinh)/(16x^2)
      return (((ch3 - ch1 - x.mul(sh1) * mpq_class(4)).div_x(2).truncate(L)) * mpq_class(1, 16))
          .truncate(len);
    case ClosedFormId::A_adaga2:  // -A_adagbdag2
      return (((ch1 - ch3 + x.mul(sh1) * mpq_class(4)).div_x(2).truncate(L)) * mpq_class(1, 16))
          .truncate(len);
    case ClosedFormId::A_adc2:
    case ClosedFormId::A_adcdag2:  // (x cosh - sinh)/(8x)
      return (((x.mul(ch1) - sh1).div_x(1).truncate(L)) * mpq_class(1, 8)).truncate(len);
    case ClosedFormId::A_adcdagdc:  // (x cosh + sinh)/(4x)
      return (((x.mul(ch1) + sh1).div_x(1).truncate(L)) * mpq_class(1, 4)).truncate(len);
    case ClosedFormId::A_bdag2b:  // (-4x cosh + sinh + sinh3)/(16x^2)
      return (((sh1 + sh3 - x.mul(ch1) * mpq_class(4)).div_x(2).truncate(L)) * mpq_class(1, 16))
          .truncate(len);
    case ClosedFormId::A_bdagdc2:  // (x cosh - sinh + x^2 sinh)/(8x^2)
      return (((x.mul(ch1) - sh1 + x2.mul(sh1)).div_x(2).truncate(L)) * mpq_class(1, 8))
          .truncate(len);
    case ClosedFormId::A_bdagdcdagdc:  // twice A_bdagdc2
      return (((x.mul(ch1) - sh1 + x2.mul(sh1)).div_x(2).truncate(L)) * mpq_class(1, 4))
          .truncate(len);
    case ClosedFormId::A_bdagdcdag2:  // (-3x cosh + 3 sinh + x^2 sinh)/(8x^2)
      return (((sh1 * mpq_class(3) - x.mul(ch1) * mpq_class(3) + x2.mul(sh1))
                   .div_x(2)
                   .truncate(L)) *
              mpq_class(1, 8))
          .truncate(len);

    case ClosedFormId::C:
    case ClosedFormId::C_alpha:
      // (-3 - 4x^2 + (2 - 4x^2) cosh2 + cosh4 - 2x sinh2)/(32x^3)
      return (((ch2 * mpq_class(2) - x2.mul(ch2) * mpq_class(4) + ch4 -
                x.mul(sh2) * mpq_class(2) - RS::constant(3, L) - x2 * mpq_class(4))
                   .div_x(3)
                   .truncate(L)) *
              mpq_class(1, 32))
          .truncate(len);
    case ClosedFormId::C_dc:
    case ClosedFormId::C_adagadc:
    case ClosedFormId::C_bdagbdc:
      // -(1 - cosh2 + 2 sinh^2 + x sinh2)/(4x^2)
      return (((ch2 - one - sh1.mul(sh1) * mpq_class(2) - x.mul(sh2)).div_x(2).truncate(L)) *
              mpq_class(1, 4))
          .truncate(len);
    case ClosedFormId::C_abdc:
    case ClosedFormId::C_abdcdag:  // (2x cosh2 - sinh2)/(8x^2)
      return (((x.mul(ch2) * mpq_class(2) - sh2).div_x(2).truncate(L)) * mpq_class(1, 8))
          .truncate(len);
    case ClosedFormId::C_adagbdagdc:  // (-4x + 2x cosh2 + sinh2)/(8x^2)
      return (((x.mul(ch2) * mpq_class(2) + sh2 - x * mpq_class(4)).div_x(2).truncate(L)) *
              mpq_class(1, 8))
          .truncate(len);
    case ClosedFormId::D:
    case ClosedFormId::C_dcdag:
    case ClosedFormId::C_adagadcdag:
    case ClosedFormId::C_bdagbdcdag:  // -(1 - cosh2 + x sinh2)/(4x^2)
      return (((ch2 - one - x.mul(sh2)).div_x(2).truncate(L)) * mpq_class(1, 4)).truncate(len);
    case ClosedFormId::C_adagbdagdcdag:  // (4x + 2x cosh2 - 3 sinh2)/(8x^2)
      return (((x * mpq_class(4) + x.mul(ch2) * mpq_class(2) - sh2 * mpq_class(3))
                   .div_x(2)
                   .truncate(L)) *
              mpq_class(1, 8))
          .truncate(len);
  }
  throw std::logic_error("taylor_series: unhandled id");
}

/// One row of the pattern catalog: the operator pattern (in expanded, i.e.
/// dc-based, exponents), its suborder, a unit prefactor carrying sign and i,
/// and the closed form giving the chi'-series of the remaining factor.
struct PatternCatalogEntry {
  const char* name;
  ClosedFormId form;
  BosonMonomial pattern;
  int suborder;
  GaussianRational prefactor;
};

/// All catalogued (pattern, suborder) series of the evolved signal mode.
inline const std::vector<PatternCatalogEntry>& signal_pattern_catalog() {
  static const auto i = GaussianRational::i();
  static const GaussianRational one(1);
  static const std::vector<PatternCatalogEntry> cat = {
      {"a", ClosedFormId::F_cosh, {0, 1, 0, 0, 0, 0}, 0, one},
      {"bd", ClosedFormId::F_sinh, {0, 0, 1, 0, 0, 0}, 0, -i},
      {"a dc", ClosedFormId::F_half_sinh, {0, 1, 0, 0, 0, 1}, 1, one},
      {"a dcd", ClosedFormId::F_half_sinh, {0, 1, 0, 0, 1, 0}, 1, one},
      {"bd dc", ClosedFormId::F_bddc, {0, 0, 1, 0, 0, 1}, 1, -i},
      {"bd dcd", ClosedFormId::F_bddcd, {0, 0, 1, 0, 1, 0}, 1, -i},
      {"A_a", ClosedFormId::A_a, {0, 1, 0, 0, 0, 0}, 2, one},
      {"A_bd", ClosedFormId::A_bdag, {0, 0, 1, 0, 0, 0}, 2, i},
      {"A_a2b", ClosedFormId::A_a2b, {0, 2, 0, 1, 0, 0}, 2, -i},
      {"A_abdb", ClosedFormId::A_abdagb, {0, 1, 1, 1, 0, 0}, 2, one},
      {"A_adabd", ClosedFormId::A_adagabdag, {1, 1, 1, 0, 0, 0}, 2, i},
      {"A_adbd2", ClosedFormId::A_adagbdag2, {1, 0, 2, 0, 0, 0}, 2, one},
      {"A_ada2", ClosedFormId::A_adaga2, {1, 2, 0, 0, 0, 0}, 2, one},
      {"A_adc2", ClosedFormId::A_adc2, {0, 1, 0, 0, 0, 2}, 2, one},
      {"A_adcd2", ClosedFormId::A_adcdag2, {0, 1, 0, 0, 2, 0}, 2, one},
      {"A_adcddc", ClosedFormId::A_adcdagdc, {0, 1, 0, 0, 1, 1}, 2, one},
      {"A_bd2b", ClosedFormId::A_bdag2b, {0, 0, 2, 1, 0, 0}, 2, i},
      {"A_bddc2", ClosedFormId::A_bdagdc2, {0, 0, 1, 0, 0, 2}, 2, -i},
      {"A_bddcddc", ClosedFormId::A_bdagdcdagdc, {0, 0, 1, 0, 1, 1}, 2, -i},
      {"A_bddcd2", ClosedFormId::A_bdagdcdag2, {0, 0, 1, 0, 2, 0}, 2, -i},
  };
  return cat;
}

/// All catalogued series of the evolved pump mode, including the amplitude
/// entries: the bare alpha sits at suborder -1 and the third-order amplitude
/// correction C_alpha at suborder 3 (it feeds <c†c> only through alpha * chi^3).
inline const std::vector<PatternCatalogEntry>& pump_pattern_catalog() {
  static const auto i = GaussianRational::i();
  static const GaussianRational one(1);
  static const std::vector<PatternCatalogEntry> cat = {
      {"alpha", ClosedFormId::F_x, {0, 0, 0, 0, 0, 0}, -1, one},
      {"dc", ClosedFormId::F_one, {0, 0, 0, 0, 0, 1}, 0, one},
      {"amp_depl", ClosedFormId::F_amp_depl, {0, 0, 0, 0, 0, 0}, 1, -one},
      {"ada amp", ClosedFormId::F_amp_depl, {1, 1, 0, 0, 0, 0}, 1, -one},
      {"bdb amp", ClosedFormId::F_amp_depl, {0, 0, 1, 1, 0, 0}, 1, -one},
      {"adbd", ClosedFormId::F_adbd, {1, 0, 1, 0, 0, 0}, 1, -i},
      {"ab", ClosedFormId::F_ab, {0, 1, 0, 1, 0, 0}, 1, -i},
      {"C_alpha", ClosedFormId::C_alpha, {0, 0, 0, 0, 0, 0}, 3, one},
      {"C_dc", ClosedFormId::C_dc, {0, 0, 0, 0, 0, 1}, 2, one},
      {"C_adadc", ClosedFormId::C_adagadc, {1, 1, 0, 0, 0, 1}, 2, one},
      {"C_bdbdc", ClosedFormId::C_bdagbdc, {0, 0, 1, 1, 0, 1}, 2, one},
      {"C_abdc", ClosedFormId::C_abdc, {0, 1, 0, 1, 0, 1}, 2, -i},
      {"C_abdcd", ClosedFormId::C_abdcdag, {0, 1, 0, 1, 1, 0}, 2, -i},
      {"C_adbddc", ClosedFormId::C_adagbdagdc, {1, 0, 1, 0, 0, 1}, 2, i},
      {"C_dcd", ClosedFormId::C_dcdag, {0, 0, 0, 0, 1, 0}, 2, one},
      {"C_adadcd", ClosedFormId::C_adagadcdag, {1, 1, 0, 0, 1, 0}, 2, one},
      {"C_bdbdcd", ClosedFormId::C_bdagbdcdag, {0, 0, 1, 1, 1, 0}, 2, one},
      {"C_adbddcd", ClosedFormId::C_adagbdagdcdag, {1, 0, 1, 0, 1, 0}, 2, i},
  };
  return cat;
}

}  // namespace trilin

#endif
