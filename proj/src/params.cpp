#include "hybridqec/params.hpp"

#include <charconv>

#include "hybridqec/errors.hpp"

namespace hqec {

SingletonResult singleton_check(const HybridParams& p) {
  const Rational lhs = p.k + p.m;
  const Rational rhs(p.n - 2 * (p.d - 1));
  if (lhs == rhs) return SingletonResult::saturates;
  return lhs < rhs ? SingletonResult::satisfies : SingletonResult::violates;
}

Order params_preceq(const HybridParams& p1, const HybridParams& p2) {
  if (p1.n != p2.n || p1.q != p2.q) throw DifferentLength("parameters differ in n or q");
  const bool le = p1.k + p1.m <= p2.k + p2.m && p1.k <= p2.k && p1.d <= p2.d && p1.c <= p2.c;
  const bool ge = p2.k + p2.m <= p1.k + p1.m && p2.k <= p1.k && p2.d <= p1.d && p2.c <= p1.c;
  if (le && ge) return Order::equal;
  if (le) return Order::less_equal;
  if (ge) return Order::greater_equal;
  return Order::incomparable;
}

SplitResult rule_out_trivial_split(const HybridParams& p) {
  if (p.k <= 0 || p.m <= 0) return {SplitResult::Kind::not_applicable};
  for (long long n1 = 0; n1 <= p.n; ++n1) {
    const long long n2 = p.n - n1;
    const bool quantum_ok = p.k <= Rational(n1 - 2 * (p.d - 1));
    const bool classical_ok = p.m <= Rational(n2 - p.c + 1);
    if (quantum_ok && classical_ok) return {SplitResult::Kind::not_ruled_out, n1, n2};
  }
  return {SplitResult::Kind::ruled_out};
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::string_view s) : s_(s) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 0, pos_ + 1); }

  void expect(std::string_view lit) {
    if (s_.substr(pos_, lit.size()) != lit) fail("expected '" + std::string(lit) + "'");
    pos_ += lit.size();
  }
  bool accept(char c) {
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  long long integer() {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
    if (ec != std::errc() || ptr == s_.data() + pos_) fail("expected an integer");
    if (v < 0) fail("expected a nonnegative integer");
    pos_ = static_cast<std::size_t>(ptr - s_.data());
    return v;
  }
  Rational rational() {
    const long long num = integer();
    if (!accept('/')) return Rational(num);
    const long long den = integer();
    if (den == 0) fail("zero denominator");
    return Rational(num, den);
  }
  bool done() const { return pos_ == s_.size(); }

 private:
  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

HybridParams parse_params(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  Cursor cur(text);
  HybridParams p;
  cur.expect("[[");
  p.n = cur.integer();
  cur.expect(",");
  p.k = cur.rational();
  cur.expect(":");
  p.m = cur.rational();
  cur.expect(",");
  p.d = cur.integer();
  p.c = cur.accept(':') ? cur.integer() : p.d;
  cur.expect("]]");
  if (cur.accept('_')) {
    const long long q = cur.integer();
    if (q < 2) cur.fail("field order must be at least 2");
    p.q = static_cast<int>(q);
  }
  if (!cur.done()) cur.fail("trailing characters");
  return p;
}

std::string format_params(const HybridParams& p) {
  return "[[" + std::to_string(p.n) + "," + to_string(p.k) + ":" + to_string(p.m) + "," +
         std::to_string(p.d) + ":" + std::to_string(p.c) + "]]_" + std::to_string(p.q);
}

std::string to_string(SingletonResult r) {
  switch (r) {
    case SingletonResult::saturates: return "saturates";
    case SingletonResult::satisfies: return "satisfies";
    case SingletonResult::violates: return "violates";
  }
  return "?";
}

std::string to_string(Order o) {
  switch (o) {
    case Order::less_equal: return "p1 <= p2";
    case Order::greater_equal: return "p2 <= p1";
    case Order::equal: return "equal";
    case Order::incomparable: return "incomparable";
  }
  return "?";
}

std::string to_string(const SplitResult& r) {
  switch (r.kind) {
    case SplitResult::Kind::ruled_out: return "ruled_out";
    case SplitResult::Kind::not_applicable: return "not_applicable";
    case SplitResult::Kind::not_ruled_out:
      return "not_ruled_out (n1=" + std::to_string(r.n1) + ", n2=" + std::to_string(r.n2) + ")";
  }
  return "?";
}

}  // namespace hqec
