#include "hybridqec/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

#include "hybridqec/errors.hpp"

namespace hqec {
namespace {

using Poly = std::vector<int>;  // constant term first, over F_p

int mod(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int inv_mod_p(int a, int p) {
  // p is prime and small; Fermat.
  long long result = 1, base = mod(a, p);
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int dm = static_cast<int>(m.size()) - 1;
  const int lead_inv = inv_mod_p(m.back(), p);
  while (static_cast<int>(a.size()) - 1 >= dm && !a.empty()) {
    const int shift = static_cast<int>(a.size()) - 1 - dm;
    const int factor = static_cast<int>(static_cast<long long>(a.back()) * lead_inv % p);
    for (int i = 0; i <= dm; ++i) {
      a[shift + i] = mod(a[shift + i] - static_cast<long long>(factor) * m[i], p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = mod(r[i + j] + static_cast<long long>(a[i]) * b[j], p);
    }
  }
  return poly_mod(std::move(r), m, p);
}

Poly poly_gcd(Poly a, Poly b, int p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool has_root(std::span<const int> f, int p) {
  for (int x = 0; x < p; ++x) {
    long long acc = 0;
    for (std::size_t i = f.size(); i-- > 0;) acc = (acc * x + f[i]) % p;
    if (acc == 0) return true;
  }
  return false;
}

}  // namespace

bool FieldSpec::is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

bool FieldSpec::is_irreducible(int p, std::span<const int> poly) {
  if (!is_prime(p) || poly.size() < 2) return false;
  const int ell = static_cast<int>(poly.size()) - 1;
  if (mod(poly.back(), p) != 1) return false;
  if (ell == 1) return true;
  if (ell <= 3) return !has_root(poly, p);
  // Ben-Or: f is irreducible iff gcd(f, x^(p^i) - x) = 1 for 1 <= i <= ell/2.
  Poly f(poly.begin(), poly.end());
  for (int& c : f) c = mod(c, p);
  Poly xpow = {0, 1};
  for (int i = 1; i <= ell / 2; ++i) {
    Poly acc = {1};
    Poly base = xpow;
    for (int e = p; e > 0; e >>= 1) {
      if (e & 1) acc = poly_mulmod(acc, base, f, p);
      base = poly_mulmod(base, base, f, p);
    }
    xpow = acc;
    Poly diff = xpow;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = mod(diff[1] - 1, p);
    Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

std::vector<int> FieldSpec::smallest_irreducible(int p, int ell) {
  if (!is_prime(p) || ell < 1) throw InvalidField("no field of characteristic " + std::to_string(p));
  long long count = 1;
  for (int i = 0; i < ell; ++i) count *= p;
  std::vector<int> poly(ell + 1, 0);
  poly[ell] = 1;
  for (long long code = 0; code < count; ++code) {
    long long c = code;
    for (int i = 0; i < ell; ++i, c /= p) poly[i] = static_cast<int>(c % p);
    if (is_irreducible(p, poly)) return poly;
  }
  throw InvalidField("no irreducible polynomial found");
}

FieldRef FieldSpec::make(int p, int ell, std::vector<int> poly) {
  if (!is_prime(p)) throw InvalidField("characteristic " + std::to_string(p) + " is not prime");
  if (ell < 1) throw InvalidField("extension degree must be at least 1");
  long long q = 1;
  for (int i = 0; i < ell; ++i) {
    q *= p;
    if (q > kMaxOrder) throw InvalidField("field order exceeds " + std::to_string(kMaxOrder));
  }
  if (static_cast<int>(poly.size()) != ell + 1) {
    throw InvalidField("defining polynomial must have ell+1 coefficients");
  }
  for (int& c : poly) c = mod(c, p);
  if (poly.back() != 1) throw InvalidField("defining polynomial must be monic");
  if (!is_irreducible(p, poly)) throw InvalidField("defining polynomial is reducible");
  return FieldRef(new FieldSpec(p, ell, std::move(poly)));
}

FieldRef FieldSpec::builtin(int q) {
  static std::mutex guard;
  static std::map<int, FieldRef> cache;
  std::lock_guard lock(guard);
  if (auto it = cache.find(q); it != cache.end()) return it->second;
  int p = 0;
  for (int d = 2; d <= q; ++d) {
    if (q % d == 0) {
      p = d;
      break;
    }
  }
  if (p == 0) throw InvalidField("field order must be at least 2");
  int ell = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++ell;
  }
  if (rest != 1) throw InvalidField(std::to_string(q) + " is not a prime power");
  auto spec = make(p, ell, smallest_irreducible(p, ell));
  cache.emplace(q, spec);
  return spec;
}

FieldSpec::FieldSpec(int p, int ell, std::vector<int> poly)
    : p_(p), ell_(ell), q_(1), poly_(std::move(poly)) {
  for (int i = 0; i < ell_; ++i) q_ *= p_;
  const auto uq = static_cast<std::size_t>(q_);
  add_.resize(uq * uq);
  mul_.resize(uq * uq);
  neg_.resize(uq);
  inv_.assign(uq, 0);
  trace_.resize(uq);

  std::vector<std::vector<int>> digits(uq);
  for (Elem e = 0; e < uq; ++e) digits[e] = coeffs(e);

  Poly modulus(poly_.begin(), poly_.end());
  for (Elem a = 0; a < uq; ++a) {
    std::vector<int> n(ell_);
    for (int i = 0; i < ell_; ++i) n[i] = mod(-digits[a][i], p_);
    neg_[a] = from_coeffs(n);
    for (Elem b = 0; b < uq; ++b) {
      std::vector<int> s(ell_);
      for (int i = 0; i < ell_; ++i) s[i] = (digits[a][i] + digits[b][i]) % p_;
      add_[a * uq + b] = from_coeffs(s);
      Poly prod = poly_mulmod(Poly(digits[a].begin(), digits[a].end()),
                              Poly(digits[b].begin(), digits[b].end()), modulus, p_);
      prod.resize(ell_, 0);
      mul_[a * uq + b] = from_coeffs(prod);
    }
  }
  for (Elem a = 1; a < uq; ++a) {
    for (Elem b = 1; b < uq; ++b) {
      if (mul_[a * uq + b] == 1) {
        inv_[a] = b;
        break;
      }
    }
  }
  for (Elem x = 0; x < uq; ++x) {
    Elem acc = 0;
    Elem frob = x;
    for (int i = 0; i < ell_; ++i) {
      acc = add(acc, frob);
      frob = pow(frob, static_cast<std::uint64_t>(p_));
    }
    if (acc >= static_cast<Elem>(p_)) throw InvalidField("trace left the prime subfield");
    trace_[x] = static_cast<int>(acc);
  }
}

Elem FieldSpec::inv(Elem x) const {
  if (x == 0) throw DivisionByZero();
  return inv_[x];
}

Elem FieldSpec::pow(Elem x, std::uint64_t e) const {
  Elem result = 1;
  Elem base = x;
  while (e > 0) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
    e >>= 1;
  }
  return result;
}

Elem FieldSpec::scalar(long long c) const { return static_cast<Elem>(mod(c, p_)); }

int FieldSpec::coeff(Elem x, int i) const {
  for (int k = 0; k < i; ++k) x /= static_cast<Elem>(p_);
  return static_cast<int>(x % static_cast<Elem>(p_));
}

std::vector<int> FieldSpec::coeffs(Elem x) const {
  std::vector<int> c(ell_);
  for (int i = 0; i < ell_; ++i, x /= static_cast<Elem>(p_)) c[i] = static_cast<int>(x % p_);
  return c;
}

Elem FieldSpec::from_coeffs(std::span<const int> c) const {
  Elem e = 0;
  for (std::size_t i = c.size(); i-- > 0;) e = e * static_cast<Elem>(p_) + static_cast<Elem>(mod(c[i], p_));
  return e;
}

Elem FieldSpec::basis(int i) const {
  Elem e = 1;
  for (int k = 0; k < i; ++k) e *= static_cast<Elem>(p_);
  return e;
}

std::string FieldSpec::name() const { return "GF(" + std::to_string(q_) + ")"; }

bool same_field(const FieldRef& a, const FieldRef& b) {
  return a == b || (a && b && *a == *b);
}

void require_same_field(const FieldRef& a, const FieldRef& b) {
  if (!same_field(a, b)) {
    throw FieldMismatch("operands live in different fields (" + (a ? a->name() : "null") +
                        " vs " + (b ? b->name() : "null") + ")");
  }
}

FieldElement::FieldElement(FieldRef spec, Elem value) : spec_(std::move(spec)), value_(value) {
  if (!spec_ || !spec_->valid(value_)) throw InvalidField("element encoding out of range");
}

FieldElement FieldElement::from_coeffs(const FieldRef& spec, std::span<const int> c) {
  if (static_cast<int>(c.size()) != spec->ell()) throw ShapeError("expected ell coefficients");
  return {spec, spec->from_coeffs(c)};
}

FieldElement FieldElement::inv() const { return {spec_, spec_->inv(value_)}; }

FieldElement FieldElement::pow(std::uint64_t e) const { return {spec_, spec_->pow(value_, e)}; }

FieldElement FieldElement::trace() const {
  return {spec_, static_cast<Elem>(spec_->trace(value_))};
}

FieldElement FieldElement::operator-() const { return {spec_, spec_->neg(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  return {a.spec_, a.spec_->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  return {a.spec_, a.spec_->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a.spec_, b.spec_);
  return {a.spec_, a.spec_->mul(a.value_, b.value_)};
}

FieldElement operator*(long long c, const FieldElement& a) {
  return {a.spec_, a.spec_->mul(a.spec_->scalar(c), a.value_)};
}

bool operator==(const FieldElement& a, const FieldElement& b) {
  return same_field(a.spec_, b.spec_) && a.value_ == b.value_;
}

}  // namespace hqec
