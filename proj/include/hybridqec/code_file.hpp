#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hybridqec/hybrid.hpp"
#include "hybridqec/linear_code.hpp"

namespace hqec {

/// Text form of a subsystem or hybrid code.
///
///   q 2
///   n 6
///   poly 1 1 1          (optional; defining polynomial, constant term first)
///   [stabilizer]        subsystem layout, with optional [gauge_x] / [gauge_z]
///   [quantum_stabilizer] hybrid layout, with [classical_stabilizer] and
///                        optional [translations]
///
/// One Pauli string per line, '#' starts a comment, blank lines are ignored.
struct CodeFile {
  enum class Kind { subsystem, hybrid };

  FieldRef spec;
  std::size_t n = 0;
  Kind kind = Kind::subsystem;
  std::vector<PauliOperator> stabilizer;  // [stabilizer] or [quantum_stabilizer]
  std::vector<PauliOperator> gauge_x;
  std::vector<PauliOperator> gauge_z;
  std::vector<PauliOperator> classical;
  std::vector<PauliOperator> translations;
  bool has_translations = false;
};

/// Throws ParseError with 1-based line and column.
CodeFile parse_code_file(std::string_view text);
std::string write_code_file(const CodeFile& file);

CodeFile to_code_file(const SubsystemCode& code);
CodeFile to_code_file(const HybridCode& code);

SubsystemCode make_subsystem(const CodeFile& file);
/// A subsystem file is gauge-fixed with every G^Z kept.
HybridCode make_hybrid(const CodeFile& file);

/// "q <int>", "n <int> k <int>", then k rows of n integer-encoded symbols.
LinearCode parse_linear_code(std::string_view text);
std::string write_linear_code(const LinearCode& code);

}  // namespace hqec
