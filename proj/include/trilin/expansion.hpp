#ifndef TRILIN_EXPANSION_HPP
#define TRILIN_EXPANSION_HPP

#include <map>
#include <string>
#include <vector>

#include "trilin/polynomial.hpp"

namespace trilin {

/// Monomial after the pump decomposition c -> alpha + dc: exponents over
/// a†, a, b†, b, dc†, dc plus the power of alpha. dc†/dc inherit the c-mode
/// canonical ordering, so the operator part reuses BosonMonomial with the
/// c slots reinterpreted as the pump fluctuation.
struct ExpandedKey {
  BosonMonomial ops;      // slots 4,5 hold dc†, dc exponents
  int alpha_degree = 0;
  int chi_order = 0;

  int suborder() const { return chi_order - alpha_degree; }
  auto operator<=>(const ExpandedKey&) const = default;
};

using ExpandedPolynomial = std::map<ExpandedKey, GaussianRational>;

namespace detail {
inline mpz_class binom(unsigned n, unsigned k) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}
}  // namespace detail

/// Binomially expands every c†^t c^u into (alpha + dc†)^t (alpha + dc)^u.
/// All factors inside one such product commute, so no reordering arises and
/// coefficients stay exact. Total operator content is preserved: the inverse
/// substitution dc -> c - alpha recovers the input identically.
inline ExpandedPolynomial substitute_pump(const OperatorPolynomial& p) {
  ExpandedPolynomial out;
  for (const auto& [key, coeff] : p.terms()) {
    const unsigned t = key.mono.dag(2), u = key.mono.ann(2);
    for (unsigned i = 0; i <= t; ++i) {
      mpz_class bi = detail::binom(t, i);
      for (unsigned j = 0; j <= u; ++j) {
        mpz_class w = bi * detail::binom(u, j);
        ExpandedKey k;
        k.ops = key.mono;
        k.ops.set_dag(2, i);
        k.ops.set_ann(2, j);
        k.alpha_degree = static_cast<int>(t - i) + static_cast<int>(u - j);
        k.chi_order = key.chi_order;
        GaussianRational c = coeff * mpq_class(w);
        auto [it, ins] = out.try_emplace(k, c);
        if (!ins) {
          it->second += c;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return out;
}

/// Inverse substitution dc -> c - alpha, dc† -> c† - alpha. Every surviving
/// term must end up alpha-free; any non-cancelling alpha power means the
/// expansion was inconsistent, which is reported as a logic error.
inline OperatorPolynomial back_substitute(const ExpandedPolynomial& e) {
  // accumulate per (chi_order, monomial, residual alpha power)
  std::map<std::pair<OperatorPolynomial::Key, int>, GaussianRational> acc;
  for (const auto& [key, coeff] : e) {
    const unsigned i = key.ops.dag(2), j = key.ops.ann(2);
    for (unsigned x = 0; x <= i; ++x) {
      mpz_class bx = detail::binom(i, x);
      if ((i - x) % 2 != 0) bx = -bx;
      for (unsigned y = 0; y <= j; ++y) {
        mpz_class s = bx * detail::binom(j, y);
        if ((j - y) % 2 != 0) s = -s;
        BosonMonomial m = key.ops;
        m.set_dag(2, x);
        m.set_ann(2, y);
        const int apow = key.alpha_degree + static_cast<int>(i - x) + static_cast<int>(j - y);
        auto k = std::make_pair(OperatorPolynomial::Key{key.chi_order, m}, apow);
        GaussianRational c = coeff * mpq_class(s);
        auto [it, ins] = acc.try_emplace(k, c);
        if (!ins) it->second += c;
      }
    }
  }
  OperatorPolynomial out;
  for (const auto& [k, c] : acc) {
    if (c.is_zero()) continue;
    if (k.second != 0)
      throw std::logic_error("back_substitute: residual alpha power, input was not pure");
    out.add_term(k.first, c);
  }
  return out;
}

/// One grouped expansion: a fixed operator pattern at a fixed suborder s,
/// with exact coefficients gamma_n attached to alpha^(n-s) chi^n.
struct PatternSeries {
  BosonMonomial pattern;
  int suborder = 0;
  std::vector<std::pair<int, GaussianRational>> entries;  // (chi_order, coeff), strictly increasing
};

struct ClassifyResult {
  std::vector<PatternSeries> series;   // canonical pattern order
  std::size_t discarded_terms = 0;     // count of terms with s > max_suborder
};

/// Groups terms by (pattern, suborder), keeping s <= max_suborder and
/// reporting (not silently dropping) the rest.
inline ClassifyResult classify(const ExpandedPolynomial& e, int max_suborder) {
  std::map<std::pair<BosonMonomial, int>, PatternSeries> groups;
  ClassifyResult res;
  for (const auto& [key, coeff] : e) {
    const int s = key.suborder();
    if (s > max_suborder) {
      ++res.discarded_terms;
      continue;
    }
    auto& g = groups[{key.ops, s}];
    g.pattern = key.ops;
    g.suborder = s;
    g.entries.emplace_back(key.chi_order, coeff);
  }
  for (auto& [k, g] : groups) {
    // ExpandedPolynomial iterates in (ops, alpha_degree, chi_order) order;
    // within one (pattern, s) group alpha_degree increases with chi_order,
    // so entries are already strictly increasing in chi_order.
    res.series.push_back(std::move(g));
  }
  return res;
}

/// The single series for one (pattern, suborder), regardless of any cutoff;
/// empty series if no such terms exist.
inline PatternSeries extract_series(const ExpandedPolynomial& e, const BosonMonomial& pattern,
                                    int suborder) {
  PatternSeries ps{pattern, suborder, {}};
  for (const auto& [key, coeff] : e)
    if (key.ops == pattern && key.suborder() == suborder)
      ps.entries.emplace_back(key.chi_order, coeff);
  return ps;
}

/// Render an expanded pattern, with the c slots printed as the fluctuation.
inline std::string pattern_str(const BosonMonomial& m) {
  static const char* names[6] = {"ad", "a", "bd", "b", "dcd", "dc"};
  if (m.is_identity()) return "1";
  std::string s;
  for (int k = 0; k < 6; ++k) {
    if (m.e[k] == 0) continue;
    if (!s.empty()) s += ' ';
    s += names[k];
    if (m.e[k] > 1) s += std::to_string(m.e[k]);
  }
  return s;
}

}  // namespace trilin

#endif
