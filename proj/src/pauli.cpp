#include "hybridqec/pauli.hpp"

#include <cctype>
#include <charconv>

#include "hybridqec/errors.hpp"

namespace hqec {
namespace {

int wrap(long long v, int m) {
  long long r = v % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

void require_compatible(const PauliOperator& a, const PauliOperator& b) {
  if (!same_field(a.spec(), b.spec())) throw ShapeError("operators over different fields");
  if (a.n() != b.n()) {
    throw ShapeError("operators on " + std::to_string(a.n()) + " and " + std::to_string(b.n()) +
                     " qudits");
  }
}

// Tr(sum_j u_j v_j) in F_p.
int trace_dot(const FieldSpec& f, const std::vector<Elem>& u, const std::vector<Elem>& v) {
  Elem acc = 0;
  for (std::size_t j = 0; j < u.size(); ++j) acc = f.add(acc, f.mul(u[j], v[j]));
  return f.trace(acc);
}

std::size_t count_y(const PauliOperator& e) {
  std::size_t ys = 0;
  for (std::size_t j = 0; j < e.n(); ++j) ys += (e.x(j) != 0 && e.z(j) != 0) ? 1 : 0;
  return ys;
}

}  // namespace

int phase_modulus(const FieldSpec& spec) { return spec.p() == 2 ? 4 : spec.p(); }

int canonical_phase(const FieldSpec& spec, std::span<const Elem> x, std::span<const Elem> z) {
  if (spec.p() != 2) return 0;
  int c = 0;
  for (std::size_t j = 0; j < x.size(); ++j) c += spec.trace(spec.mul(x[j], z[j]));
  return c % 4;
}

PauliOperator::PauliOperator(FieldRef spec, std::vector<Elem> x, std::vector<Elem> z, int phase)
    : spec_(std::move(spec)), x_(std::move(x)), z_(std::move(z)), phase_(0) {
  if (!spec_) throw ShapeError("operator without a field");
  if (x_.size() != z_.size()) throw ShapeError("x and z parts differ in length");
  for (std::size_t j = 0; j < x_.size(); ++j) {
    if (!spec_->valid(x_[j]) || !spec_->valid(z_[j])) throw ShapeError("symbol out of range");
  }
  phase_ = wrap(phase, phase_modulus(*spec_));
}

PauliOperator PauliOperator::identity(FieldRef spec, std::size_t n) {
  return {std::move(spec), std::vector<Elem>(n, 0), std::vector<Elem>(n, 0), 0};
}

PauliOperator PauliOperator::x_on(FieldRef spec, std::size_t n, std::size_t qudit, Elem a) {
  std::vector<Elem> x(n, 0);
  x.at(qudit) = a;
  return {std::move(spec), std::move(x), std::vector<Elem>(n, 0), 0};
}

PauliOperator PauliOperator::z_on(FieldRef spec, std::size_t n, std::size_t qudit, Elem b) {
  std::vector<Elem> z(n, 0);
  z.at(qudit) = b;
  return {std::move(spec), std::vector<Elem>(n, 0), std::move(z), 0};
}

PauliOperator PauliOperator::with_phase(int phase) const { return {spec_, x_, z_, phase}; }

PauliOperator PauliOperator::canonical() const {
  return {spec_, x_, z_, canonical_phase(*spec_, x_, z_)};
}

bool PauliOperator::is_identity_up_to_phase() const {
  for (std::size_t j = 0; j < x_.size(); ++j) {
    if (x_[j] != 0 || z_[j] != 0) return false;
  }
  return true;
}

bool PauliOperator::same_up_to_phase(const PauliOperator& other) const {
  return same_field(spec_, other.spec_) && x_ == other.x_ && z_ == other.z_;
}

bool operator==(const PauliOperator& a, const PauliOperator& b) {
  return a.same_up_to_phase(b) && a.phase_ == b.phase_;
}

std::size_t weight(const PauliOperator& e) {
  std::size_t w = 0;
  for (std::size_t j = 0; j < e.n(); ++j) w += (e.x(j) != 0 || e.z(j) != 0) ? 1 : 0;
  return w;
}

std::vector<std::size_t> support(const PauliOperator& e) {
  std::vector<std::size_t> s;
  for (std::size_t j = 0; j < e.n(); ++j) {
    if (e.x(j) != 0 || e.z(j) != 0) s.push_back(j);
  }
  return s;
}

int pairing(const PauliOperator& e1, const PauliOperator& e2) {
  require_compatible(e1, e2);
  const FieldSpec& f = *e1.spec();
  return wrap(trace_dot(f, e1.z(), e2.x()) - trace_dot(f, e2.z(), e1.x()), f.p());
}

PauliOperator multiply(const PauliOperator& e1, const PauliOperator& e2) {
  require_compatible(e1, e2);
  const FieldSpec& f = *e1.spec();
  // X(a)Z(b) X(a')Z(b') = omega^{Tr(b.a')} X(a+a') Z(b+b'); omega = i^2 when p = 2.
  const int unit = f.p() == 2 ? 2 : 1;
  std::vector<Elem> x(e1.n()), z(e1.n());
  for (std::size_t j = 0; j < e1.n(); ++j) {
    x[j] = f.add(e1.x(j), e2.x(j));
    z[j] = f.add(e1.z(j), e2.z(j));
  }
  const int phase = e1.phase() + e2.phase() + unit * trace_dot(f, e1.z(), e2.x());
  return {e1.spec(), std::move(x), std::move(z), phase};
}

PauliOperator power(const PauliOperator& e, long long k) {
  const int order = phase_modulus(*e.spec());
  const int reduced = wrap(k, order);
  PauliOperator result = PauliOperator::identity(e.spec(), e.n());
  for (int i = 0; i < reduced; ++i) result = multiply(result, e);
  return result;
}

PauliOperator inverse(const PauliOperator& e) { return power(e, -1); }

PauliOperator parse_pauli(std::string_view text, const FieldRef& spec) {
  const int modulus = phase_modulus(*spec);
  std::size_t pos = 0;
  auto fail = [&](const std::string& what) -> PauliOperator { throw ParseError(what, 0, pos + 1); };

  if (spec->q() == 2) {
    int sign = 0;
    if (pos < text.size() && text[pos] == '+') ++pos;
    if (pos < text.size() && text[pos] == '-') {
      sign = 2;
      ++pos;
    }
    if (pos < text.size() && text[pos] == 'i') {
      sign += 1;
      ++pos;
    }
    std::vector<Elem> x, z;
    int ys = 0;
    for (; pos < text.size(); ++pos) {
      switch (text[pos]) {
        case 'I': x.push_back(0); z.push_back(0); break;
        case 'X': x.push_back(1); z.push_back(0); break;
        case 'Z': x.push_back(0); z.push_back(1); break;
        case 'Y': x.push_back(1); z.push_back(1); ++ys; break;
        default: return fail(std::string("unexpected character '") + text[pos] + "'");
      }
    }
    if (x.empty()) return fail("empty Pauli string");
    return {spec, std::move(x), std::move(z), sign + ys};
  }

  auto skip_spaces = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto read_int = [&](long long& out) {
    const char* first = text.data() + pos;
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos += static_cast<std::size_t>(ptr - first);
  };
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c) fail(std::string("expected '") + c + "'");
    ++pos;
  };

  int phase = 0;
  skip_spaces();
  if (pos < text.size() && (text[pos] == 'w' || text[pos] == 'i')) {
    const char unit = text[pos];
    if ((unit == 'i') != (spec->p() == 2)) fail("phase unit does not match the characteristic");
    ++pos;
    expect('^');
    long long k = 0;
    read_int(k);
    phase = wrap(k, modulus);
    skip_spaces();
  }
  std::vector<Elem> x, z;
  while (pos < text.size()) {
    expect('(');
    long long a = 0, b = 0;
    const std::size_t a_pos = pos;
    read_int(a);
    if (a < 0 || a >= spec->q()) {
      pos = a_pos;
      fail("field element encoding out of range");
    }
    expect('|');
    const std::size_t b_pos = pos;
    read_int(b);
    if (b < 0 || b >= spec->q()) {
      pos = b_pos;
      fail("field element encoding out of range");
    }
    expect(')');
    x.push_back(static_cast<Elem>(a));
    z.push_back(static_cast<Elem>(b));
    skip_spaces();
  }
  if (x.empty()) return fail("empty Pauli string");
  return {spec, std::move(x), std::move(z), phase};
}

std::string format_pauli(const PauliOperator& e) {
  const FieldSpec& f = *e.spec();
  std::string out;
  if (f.q() == 2) {
    const int rel = wrap(e.phase() - static_cast<long long>(count_y(e)), 4);
    static constexpr const char* kPrefix[] = {"", "i", "-", "-i"};
    out = kPrefix[rel];
    static constexpr char kLetter[2][2] = {{'I', 'Z'}, {'X', 'Y'}};
    for (std::size_t j = 0; j < e.n(); ++j) out.push_back(kLetter[e.x(j)][e.z(j)]);
    return out;
  }
  if (e.phase() != 0) {
    out += f.p() == 2 ? "i^" : "w^";
    out += std::to_string(e.phase());
  }
  for (std::size_t j = 0; j < e.n(); ++j) {
    if (!out.empty()) out.push_back(' ');
    out += "(" + std::to_string(e.x(j)) + "|" + std::to_string(e.z(j)) + ")";
  }
  return out;
}

bool next_combination_colex(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t w = comb.size();
  for (std::size_t i = 0; i < w; ++i) {
    const std::size_t limit = (i + 1 < w) ? comb[i + 1] : n;
    if (comb[i] + 1 < limit) {
      ++comb[i];
      for (std::size_t k = 0; k < i; ++k) comb[k] = k;
      return true;
    }
  }
  return false;
}

bool for_each_pauli_of_weight(const FieldRef& spec, std::size_t n, std::size_t w,
                              const std::function<bool(const PauliOperator&)>& fn) {
  if (w > n) return true;
  const Elem q = static_cast<Elem>(spec->q());
  const Elem letters = q * q - 1;
  std::vector<std::size_t> comb(w);
  for (std::size_t i = 0; i < w; ++i) comb[i] = i;
  std::vector<Elem> x(n, 0), z(n, 0);
  do {
    std::vector<Elem> digit(w, 0);
    while (true) {
      for (std::size_t i = 0; i < w; ++i) {
        const Elem code = digit[i] + 1;
        x[comb[i]] = code / q;
        z[comb[i]] = code % q;
      }
      if (!fn(PauliOperator(spec, x, z, 0))) return false;
      // Odometer with the last support position varying fastest.
      std::size_t i = w;
      while (i > 0) {
        --i;
        if (++digit[i] < letters) break;
        digit[i] = 0;
        if (i == 0) {
          i = w + 1;
          break;
        }
      }
      if (i == w + 1 || w == 0) break;
    }
    for (std::size_t i = 0; i < w; ++i) x[comb[i]] = z[comb[i]] = 0;
  } while (w > 0 && next_combination_colex(comb, n));
  return true;
}

}  // namespace hqec
