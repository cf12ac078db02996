#pragma once

#include <initializer_list>
#include <ostream>
#include <random>
#include <string_view>
#include <vector>

#include "hybridqec/catalog.hpp"
#include "hybridqec/code_file.hpp"
#include "hybridqec/pauli.hpp"

namespace hqec::testing {

inline FieldRef gf(int q) { return FieldSpec::builtin(q); }

inline PauliOperator P(std::string_view text, int q = 2) { return parse_pauli(text, gf(q)); }

inline std::vector<PauliOperator> Ps(std::initializer_list<std::string_view> rows, int q = 2) {
  std::vector<PauliOperator> out;
  for (auto r : rows) out.push_back(P(r, q));
  return out;
}

inline CodeFile example_file(std::string_view name) { return parse_code_file(find_example(name)->text); }
inline HybridCode example(std::string_view name) { return make_hybrid(example_file(name)); }

inline PauliOperator random_pauli(std::mt19937& rng, const FieldRef& f, std::size_t n) {
  std::uniform_int_distribution<Elem> d(0, static_cast<Elem>(f->q() - 1));
  std::vector<Elem> x(n), z(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = d(rng);
    z[i] = d(rng);
  }
  return PauliOperator(f, x, z);
}

// Every phase-free operator on n qudits, x and z read as base-q digits.
inline std::vector<PauliOperator> all_paulis(const FieldRef& f, std::size_t n) {
  const auto q = static_cast<std::size_t>(f->q());
  std::size_t total = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) total *= q;
  std::vector<PauliOperator> out;
  out.reserve(total);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Elem> x(n), z(n);
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= q) x[i] = static_cast<Elem>(c % q);
    for (std::size_t i = 0; i < n; ++i, c /= q) z[i] = static_cast<Elem>(c % q);
    out.emplace_back(f, x, z);
  }
  return out;
}

}  // namespace hqec::testing

namespace hqec {
inline void PrintTo(const PauliOperator& e, std::ostream* os) { *os << format_pauli(e); }
}  // namespace hqec
