#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hqec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("inversion of zero in a finite field") {}
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

/// Malformed text input. Line and column are 1-based; 0 means "unknown".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(format(what, line, column)), line_(line), column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    if (line == 0) {
      return column == 0 ? what : what + " (column " + std::to_string(column) + ")";
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what;
  }

  std::size_t line_;
  std::size_t column_;
};

class NotAbelian : public Error {
 public:
  NotAbelian(std::size_t i, std::size_t j)
      : Error("generators " + std::to_string(i) + " and " + std::to_string(j) + " do not commute"),
        i_(i),
        j_(j) {}
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_, j_;
};

class InconsistentPhases : public Error {
 public:
  using Error::Error;
};

class GaugePairRelationViolated : public Error {
 public:
  GaugePairRelationViolated(std::size_t i, std::size_t j, const std::string& detail)
      : Error("gauge pair relation violated between " + std::to_string(i) + " and " +
              std::to_string(j) + ": " + detail),
        i_(i),
        j_(j) {}
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_, j_;
};

class GaugeNotInCentralizer : public Error {
 public:
  explicit GaugeNotInCentralizer(std::size_t i)
      : Error("gauge operator " + std::to_string(i) + " does not commute with the stabilizer"),
        index_(i) {}
  std::size_t index() const noexcept { return index_; }

 private:
  std::size_t index_;
};

class FixedSetNotCommuting : public Error {
 public:
  FixedSetNotCommuting(std::size_t i, std::size_t j)
      : Error("fixed gauge operators " + std::to_string(i) + " and " + std::to_string(j) +
              " do not commute"),
        i_(i),
        j_(j) {}
  std::size_t first() const noexcept { return i_; }
  std::size_t second() const noexcept { return j_; }

 private:
  std::size_t i_, j_;
};

/// A hybrid code whose classical part is inconsistent with its translations.
class InvalidHybrid : public Error {
 public:
  using Error::Error;
};

class InvalidCode : public Error {
 public:
  using Error::Error;
};

class NoCodewords : public Error {
 public:
  NoCodewords() : Error("zero-dimensional code has no nonzero codewords") {}
};

class DimensionTooLarge : public Error {
 public:
  DimensionTooLarge(std::size_t dim, std::size_t cap)
      : Error("Hilbert space dimension " + std::to_string(dim) + " exceeds oracle cap " +
              std::to_string(cap)),
        dim_(dim),
        cap_(cap) {}
  std::size_t dimension() const noexcept { return dim_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t dim_, cap_;
};

class RankMismatch : public Error {
 public:
  using Error::Error;
};

class DifferentLength : public Error {
 public:
  using Error::Error;
};

class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace hqec
