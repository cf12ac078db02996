#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hybridqec/rational.hpp"

namespace hqec {

/// [[n, k:m, d:c]]_q
struct HybridParams {
  long long n = 0;
  Rational k{0};
  Rational m{0};
  long long d = 1;
  long long c = 1;
  int q = 2;

  friend bool operator==(const HybridParams&, const HybridParams&) = default;
};

enum class SingletonResult { saturates, satisfies, violates };

enum class Order { less_equal, greater_equal, equal, incomparable };

struct SplitResult {
  enum class Kind { ruled_out, not_ruled_out, not_applicable } kind;
  /// First (n1, n2) not excluded by the Singleton bounds, when kind is not_ruled_out.
  long long n1 = 0;
  long long n2 = 0;
};

/// Compares k + m with n - 2(d - 1).
SingletonResult singleton_check(const HybridParams& p);

/// less_equal means p1 is dominated by p2 in all of k + m, k, d and c.
/// Throws DifferentLength when n or q differ.
Order params_preceq(const HybridParams& p1, const HybridParams& p2);

/// Scans n1 = 0..n for a quantum [[n1, k, d]] plus classical [n - n1, m, c]
/// split allowed by both Singleton bounds. Needs k >= 1 and m >= 1.
SplitResult rule_out_trivial_split(const HybridParams& p);

/// Parses "[[n,k:m,d:c]]_q". The suffix defaults to q = 2, "d" alone means
/// c = d, and k, m may be written as fractions "a/b". Throws ParseError.
HybridParams parse_params(std::string_view text);

std::string format_params(const HybridParams& p);

std::string to_string(SingletonResult r);
std::string to_string(Order o);
std::string to_string(const SplitResult& r);

}  // namespace hqec
