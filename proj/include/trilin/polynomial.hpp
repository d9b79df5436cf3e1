#ifndef TRILIN_POLYNOMIAL_HPP
#define TRILIN_POLYNOMIAL_HPP

#include <cstddef>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "trilin/monomial.hpp"
#include "trilin/rational.hpp"

namespace trilin {

/// Thrown when a polynomial operation would exceed the configured term cap.
class TermCapError : public std::runtime_error {
 public:
  TermCapError(std::size_t cap, int order_reached)
      : std::runtime_error("term cap " + std::to_string(cap) +
                           " exceeded at chi-order " + std::to_string(order_reached)),
        cap(cap),
        order_reached(order_reached) {}
  std::size_t cap;
  int order_reached;
};

constexpr std::size_t kDefaultTermCap = 10'000'000;
constexpr int kUnboundedOrder = std::numeric_limits<int>::max();

/// Normal-ordered operator polynomial with chi-graded exact coefficients.
///
/// Each term is (chi-order k, monomial M) -> GaussianRational; chi itself is
/// never a symbol, only the grading integer k, so truncation is a key lookup
/// and orders never mix. Term storage is an ordered map keyed lexicographically
/// by (k, p, q, r, s, t, u), which fixes the canonical serialization order.
class OperatorPolynomial {
 public:
  struct Key {
    int chi_order = 0;
    BosonMonomial mono;
    auto operator<=>(const Key&) const = default;
  };
  using TermMap = std::map<Key, GaussianRational>;

  OperatorPolynomial() = default;

  static OperatorPolynomial monomial(const BosonMonomial& m, int chi_order = 0,
                                     const GaussianRational& coeff = GaussianRational(1)) {
    OperatorPolynomial p;
    if (!coeff.is_zero()) p.terms_[{chi_order, m}] = coeff;
    return p;
  }
  static OperatorPolynomial identity() { return monomial(BosonMonomial::identity()); }

  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  /// Coefficient of (monomial, chi-order); zero if absent.
  GaussianRational coeff(const BosonMonomial& m, int chi_order) const {
    auto it = terms_.find({chi_order, m});
    return it == terms_.end() ? GaussianRational() : it->second;
  }

  void add_term(const Key& k, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  OperatorPolynomial& operator+=(const OperatorPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
  }
  OperatorPolynomial& operator-=(const OperatorPolynomial& o) {
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
  }
  OperatorPolynomial& operator*=(const GaussianRational& s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
  }
  friend OperatorPolynomial operator+(OperatorPolynomial a, const OperatorPolynomial& b) { return a += b; }
  friend OperatorPolynomial operator-(OperatorPolynomial a, const OperatorPolynomial& b) { return a -= b; }
  friend OperatorPolynomial operator*(OperatorPolynomial a, const GaussianRational& s) { return a *= s; }
  friend OperatorPolynomial operator*(const GaussianRational& s, OperatorPolynomial a) { return a *= s; }

  friend bool operator==(const OperatorPolynomial& a, const OperatorPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  /// Terms with chi-order <= max_order.
  OperatorPolynomial truncated(int max_order) const {
    OperatorPolynomial r;
    for (const auto& [k, c] : terms_)
      if (k.chi_order <= max_order) r.terms_.emplace(k, c);
    return r;
  }
  /// Terms of exactly chi-order n.
  OperatorPolynomial order_slice(int n) const {
    OperatorPolynomial r;
    for (const auto& [k, c] : terms_)
      if (k.chi_order == n) r.terms_.emplace(k, c);
    return r;
  }

  std::optional<int> lowest_order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first.chi_order;
  }
  std::optional<int> highest_order() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.rbegin()->first.chi_order;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [k, c] : terms_) {
      if (!s.empty()) s += "  +  ";
      s += "(" + c.str() + ")";
      if (k.chi_order > 0) s += " x^" + std::to_string(k.chi_order);
      if (!k.mono.is_identity()) s += " " + k.mono.str();
    }
    return s;
  }

 private:
  TermMap terms_;
};

namespace detail {

/// Single-mode reordering a^q a†^p = sum_k k! C(p,k) C(q,k) a†^(p-k) a^(q-k).
/// Returns the integer coefficient for a given k.
inline mpz_class reorder_coeff(unsigned p, unsigned q, unsigned k) {
  mpz_class f, b1, b2;
  mpz_fac_ui(f.get_mpz_t(), k);
  mpz_bin_uiui(b1.get_mpz_t(), p, k);
  mpz_bin_uiui(b2.get_mpz_t(), q, k);
  return f * b1 * b2;
}

/// Normal-ordered product of two canonical monomials: a list of
/// (monomial, integer coefficient) pairs. Per mode,
///   (†^p1 a^q1)(†^p2 a^q2) = sum_k k! C(p2,k) C(q1,k) †^(p1+p2-k) a^(q1+q2-k).
inline void normal_order_product(const BosonMonomial& A, const BosonMonomial& B,
                                 std::vector<std::pair<BosonMonomial, mpz_class>>& out) {
  out.clear();
  const unsigned ka_max = std::min(A.ann(0), B.dag(0));
  const unsigned kb_max = std::min(A.ann(1), B.dag(1));
  const unsigned kc_max = std::min(A.ann(2), B.dag(2));
  for (unsigned ka = 0; ka <= ka_max; ++ka) {
    mpz_class ca = reorder_coeff(B.dag(0), A.ann(0), ka);
    for (unsigned kb = 0; kb <= kb_max; ++kb) {
      mpz_class cab = ca * reorder_coeff(B.dag(1), A.ann(1), kb);
      for (unsigned kc = 0; kc <= kc_max; ++kc) {
        mpz_class coeff = cab * reorder_coeff(B.dag(2), A.ann(2), kc);
        BosonMonomial m;
        m.set_dag(0, A.dag(0) + B.dag(0) - ka);
        m.set_ann(0, A.ann(0) + B.ann(0) - ka);
        m.set_dag(1, A.dag(1) + B.dag(1) - kb);
        m.set_ann(1, A.ann(1) + B.ann(1) - kb);
        m.set_dag(2, A.dag(2) + B.dag(2) - kc);
        m.set_ann(2, A.ann(2) + B.ann(2) - kc);
        out.emplace_back(m, std::move(coeff));
      }
    }
  }
}

}  // namespace detail

/// Normal-ordered product truncated to chi-order <= max_order.
/// Associative and distributive up to truncation; deterministic canonical
/// output (ordered-map accumulation, no schedule dependence).
inline OperatorPolynomial multiply(const OperatorPolynomial& P, const OperatorPolynomial& Q,
                                   int max_order = kUnboundedOrder,
                                   std::size_t term_cap = kDefaultTermCap) {
  OperatorPolynomial r;
  std::vector<std::pair<BosonMonomial, mpz_class>> prod;
  for (const auto& [kp, cp] : P.terms()) {
    for (const auto& [kq, cq] : Q.terms()) {
      const int order = kp.chi_order + kq.chi_order;
      if (order > max_order) continue;
      GaussianRational c = cp * cq;
      detail::normal_order_product(kp.mono, kq.mono, prod);
      for (auto& [m, z] : prod) {
        r.add_term({order, m}, c * mpq_class(z));
        if (r.term_count() > term_cap) throw TermCapError(term_cap, order);
      }
    }
  }
  return r;
}

/// Normal-ordered form of scalar * chi^chi_order * factors[0] * factors[1] * ...
inline OperatorPolynomial normalize(const std::vector<BosonMonomial>& factors,
                                    const GaussianRational& scalar = GaussianRational(1),
                                    int chi_order = 0,
                                    std::size_t term_cap = kDefaultTermCap) {
  if (factors.empty()) throw std::invalid_argument("normalize: empty factor list");
  OperatorPolynomial r = OperatorPolynomial::monomial(factors.front(), chi_order, scalar);
  for (std::size_t i = 1; i < factors.size(); ++i)
    r = multiply(r, OperatorPolynomial::monomial(factors[i]), kUnboundedOrder, term_cap);
  return r;
}

inline OperatorPolynomial commutator(const OperatorPolynomial& P, const OperatorPolynomial& Q,
                                     int max_order = kUnboundedOrder,
                                     std::size_t term_cap = kDefaultTermCap) {
  return multiply(P, Q, max_order, term_cap) - multiply(Q, P, max_order, term_cap);
}

/// Hermitian adjoint; per-mode exponent swap keeps canonical form, scalars conjugate.
inline OperatorPolynomial dagger(const OperatorPolynomial& P) {
  OperatorPolynomial r;
  for (const auto& [k, c] : P.terms())
    r.add_term({k.chi_order, k.mono.dagger()}, c.conj());
  return r;
}

/// Exchange of the two squeezed modes; the generator is invariant under it,
/// so the evolved idler is the swap of the evolved signal.
inline OperatorPolynomial swap_ab(const OperatorPolynomial& P) {
  OperatorPolynomial r;
  for (const auto& [k, c] : P.terms())
    r.add_term({k.chi_order, k.mono.swap_ab()}, c);
  return r;
}

/// The trilinear generator G = i chi (a†b†c + a b c†), stored at chi-order 1.
inline OperatorPolynomial trilinear_generator() {
  OperatorPolynomial g;
  g.add_term({1, BosonMonomial{1, 0, 1, 0, 0, 1}}, GaussianRational::i());
  g.add_term({1, BosonMonomial{0, 1, 0, 1, 1, 0}}, GaussianRational::i());
  return g;
}

/// Heisenberg evolution e^G X e^-G = sum_{n<=N} ad_G^n(X)/n!.
/// The generator must be homogeneous of chi-order 1, so the n-th nested
/// commutator is exactly chi-order n and the truncation at N is exact.
inline OperatorPolynomial bch_evolve(const OperatorPolynomial& generator,
                                     const BosonMonomial& seed, int order,
                                     std::size_t term_cap = kDefaultTermCap) {
  if (order < 0) throw std::invalid_argument("bch_evolve: order must be >= 0");
  if (auto lo = generator.lowest_order(); !lo || *lo != 1 || generator.highest_order() != 1)
    throw std::invalid_argument("bch_evolve: generator must be homogeneous of chi-order 1");
  OperatorPolynomial acc = OperatorPolynomial::monomial(seed);
  OperatorPolynomial nested = acc;  // ad_G^n(seed)/n!
  for (int n = 1; n <= order; ++n) {
    nested = commutator(generator, nested, order, term_cap);
    nested *= GaussianRational::make(1, n);
    if (nested.empty()) break;
    acc += nested;
  }
  return acc;
}

inline BosonMonomial mode_seed(char mode) {
  switch (mode) {
    case 'a': return BosonMonomial::a();
    case 'b': return BosonMonomial::b();
    case 'c': return BosonMonomial::c();
    default: throw std::invalid_argument("mode must be one of a, b, c");
  }
}

/// Result of the truncation-consistency check on commutation relations.
struct CommutatorOrderReport {
  char mode;
  int order;                                // BCH truncation order N
  std::optional<int> lowest_residual_order; // lowest chi-order of [X_o, X_o†] - 1
  bool pass;                                // residual absent at all orders <= N
};

/// Computes [X_o, X_o†] - 1 for X_o = bch_evolve(G, X, N) and reports the
/// lowest chi-order carrying a nonzero residual. Passes iff that order > N.
inline CommutatorOrderReport verify_commutator_order(char mode, int order,
                                                     std::size_t term_cap = kDefaultTermCap) {
  const auto g = trilinear_generator();
  const auto xo = bch_evolve(g, mode_seed(mode), order, term_cap);
  OperatorPolynomial r = commutator(xo, dagger(xo), kUnboundedOrder, term_cap);
  r -= OperatorPolynomial::identity();
  CommutatorOrderReport rep{mode, order, r.lowest_order(), false};
  rep.pass = !rep.lowest_residual_order || *rep.lowest_residual_order > order;
  return rep;
}

}  // namespace trilin

#endif
