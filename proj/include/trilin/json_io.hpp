#ifndef TRILIN_JSON_IO_HPP
#define TRILIN_JSON_IO_HPP

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "trilin/polynomial.hpp"

namespace trilin {

// A polynomial serializes to a JSON array of
//   {chi_order, exponents:[p,q,r,s,t,u], coeff:{num_re,den_re,num_im,den_im}}
// in canonical term order (lexicographic on (chi_order, p..u)). Components
// that fit in 64 bits are emitted as JSON integers, otherwise as decimal
// strings; the parser accepts both.

namespace detail {

inline nlohmann::json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

inline mpz_class mpz_from_json(const nlohmann::json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::runtime_error("polynomial json: integer or string expected");
}

}  // namespace detail

inline nlohmann::json to_json(const OperatorPolynomial& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [k, c] : p.terms()) {
    nlohmann::json t;
    t["chi_order"] = k.chi_order;
    t["exponents"] = {k.mono.e[0], k.mono.e[1], k.mono.e[2], k.mono.e[3], k.mono.e[4], k.mono.e[5]};
    t["coeff"] = {{"num_re", detail::mpz_to_json(c.re().get_num())},
                  {"den_re", detail::mpz_to_json(c.re().get_den())},
                  {"num_im", detail::mpz_to_json(c.im().get_num())},
                  {"den_im", detail::mpz_to_json(c.im().get_den())}};
    arr.push_back(std::move(t));
  }
  return arr;
}

inline OperatorPolynomial polynomial_from_json(const nlohmann::json& arr) {
  if (!arr.is_array()) throw std::runtime_error("polynomial json: array expected");
  OperatorPolynomial p;
  for (const auto& t : arr) {
    const auto& ex = t.at("exponents");
    if (!ex.is_array() || ex.size() != 6)
      throw std::runtime_error("polynomial json: exponents must have 6 entries");
    BosonMonomial m;
    for (int k = 0; k < 6; ++k) m.e[k] = ex[k].get<std::uint16_t>();
    const auto& co = t.at("coeff");
    mpq_class re(detail::mpz_from_json(co.at("num_re")), detail::mpz_from_json(co.at("den_re")));
    mpq_class im(detail::mpz_from_json(co.at("num_im")), detail::mpz_from_json(co.at("den_im")));
    re.canonicalize();
    im.canonicalize();
    p.add_term({t.at("chi_order").get<int>(), m}, GaussianRational(re, im));
  }
  return p;
}

/// Canonical on-disk rendering (2-space indent, one term object per block).
inline std::string serialize_polynomial(const OperatorPolynomial& p) {
  return to_json(p).dump(2) + "\n";
}

inline void write_polynomial(const std::string& path, const OperatorPolynomial& p) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << serialize_polynomial(p);
}

inline OperatorPolynomial read_polynomial(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open: " + path);
  nlohmann::json j;
  f >> j;
  return polynomial_from_json(j);
}

}  // namespace trilin

#endif
