#include "hybridqec/symplectic.hpp"

#include "hybridqec/errors.hpp"

namespace hqec {
namespace {

int wrap(long long v, int p) {
  long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

void require_shape(const PauliSpan& span, const PauliOperator& e) {
  if (!same_field(span.spec(), e.spec()) || span.n() != e.n()) {
    throw ShapeError("operator shape does not match the span");
  }
}

}  // namespace

int inverse_mod_p(int a, int p) {
  a = wrap(a, p);
  if (a == 0) throw DivisionByZero();
  long long result = 1, base = a;
  for (int e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<int>(result);
}

FpVector expand(const PauliOperator& e) {
  const FieldSpec& f = *e.spec();
  const std::size_t ell = static_cast<std::size_t>(f.ell());
  const std::size_t n = e.n();
  FpVector v(2 * ell * n);
  for (std::size_t j = 0; j < n; ++j) {
    Elem xa = e.x(j), zb = e.z(j);
    for (std::size_t t = 0; t < ell; ++t) {
      v[j * ell + t] = static_cast<int>(xa % static_cast<Elem>(f.p()));
      v[ell * n + j * ell + t] = static_cast<int>(zb % static_cast<Elem>(f.p()));
      xa /= static_cast<Elem>(f.p());
      zb /= static_cast<Elem>(f.p());
    }
  }
  return v;
}

PauliOperator contract(const FieldRef& spec, std::size_t n, std::span<const int> v) {
  const std::size_t ell = static_cast<std::size_t>(spec->ell());
  if (v.size() != 2 * ell * n) throw ShapeError("expanded vector has the wrong length");
  std::vector<Elem> x(n), z(n);
  for (std::size_t j = 0; j < n; ++j) {
    x[j] = spec->from_coeffs(v.subspan(j * ell, ell));
    z[j] = spec->from_coeffs(v.subspan(ell * n + j * ell, ell));
  }
  const int phase = canonical_phase(*spec, x, z);
  return {spec, std::move(x), std::move(z), phase};
}

SymplecticForm::SymplecticForm(FieldRef spec, std::size_t n)
    : spec_(std::move(spec)), n_(n), ell_(static_cast<std::size_t>(spec_->ell())) {
  gram_.assign(ell_, std::vector<int>(ell_));
  for (std::size_t s = 0; s < ell_; ++s) {
    for (std::size_t t = 0; t < ell_; ++t) {
      gram_[s][t] = spec_->trace(spec_->mul(spec_->basis(static_cast<int>(s)),
                                            spec_->basis(static_cast<int>(t))));
    }
  }
}

int SymplecticForm::pair(std::span<const int> u, std::span<const int> v) const {
  const std::size_t half = ell_ * n_;
  long long acc = 0;
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t s = 0; s < ell_; ++s) {
      const int uz = u[half + j * ell_ + s];
      const int vz = v[half + j * ell_ + s];
      for (std::size_t t = 0; t < ell_; ++t) {
        acc += static_cast<long long>(gram_[s][t]) * (uz * v[j * ell_ + t] - vz * u[j * ell_ + t]);
      }
    }
  }
  return wrap(acc, spec_->p());
}

FpVector SymplecticForm::functional(std::span<const int> g) const {
  const std::size_t half = ell_ * n_;
  const int p = spec_->p();
  FpVector f(2 * half, 0);
  for (std::size_t j = 0; j < n_; ++j) {
    for (std::size_t t = 0; t < ell_; ++t) {
      long long fx = 0, fz = 0;
      for (std::size_t s = 0; s < ell_; ++s) {
        fx += static_cast<long long>(gram_[s][t]) * g[half + j * ell_ + s];
        fz -= static_cast<long long>(gram_[t][s]) * g[j * ell_ + s];
      }
      f[j * ell_ + t] = wrap(fx, p);
      f[half + j * ell_ + t] = wrap(fz, p);
    }
  }
  return f;
}

PauliSpan::PauliSpan(FieldRef spec, std::size_t n) : spec_(std::move(spec)), n_(n) {}

FpVector PauliSpan::reduce(FpVector v, std::vector<int>* combo) const {
  const int p = spec_->p();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const int c = v[pivots_[i]];
    if (c == 0) continue;
    for (std::size_t k = pivots_[i]; k < v.size(); ++k) v[k] = wrap(v[k] - static_cast<long long>(c) * rows_[i][k], p);
    if (combo) {
      for (std::size_t k = 0; k < row_combos_[i].size(); ++k) {
        (*combo)[k] = wrap((*combo)[k] + static_cast<long long>(c) * row_combos_[i][k], p);
      }
    }
  }
  return v;
}

bool PauliSpan::insert(const PauliOperator& e) {
  require_shape(*this, e);
  const int p = spec_->p();
  std::vector<int> combo(basis_.size() + 1, 0);
  FpVector v = reduce(expand(e), &combo);
  std::size_t lead = 0;
  while (lead < v.size() && v[lead] == 0) ++lead;
  if (lead == v.size()) return false;
  // v = e - sum combo_k basis_k, so row = (e - sum combo_k basis_k) / lead.
  const int s = inverse_mod_p(v[lead], p);
  for (int& x : v) x = static_cast<int>(static_cast<long long>(x) * s % p);
  std::vector<int> row_combo(basis_.size() + 1);
  for (std::size_t k = 0; k < basis_.size(); ++k) row_combo[k] = wrap(-static_cast<long long>(combo[k]) * s, p);
  row_combo[basis_.size()] = s;
  for (auto& rc : row_combos_) rc.push_back(0);
  basis_.push_back(e);
  rows_.push_back(std::move(v));
  pivots_.push_back(lead);
  row_combos_.push_back(std::move(row_combo));
  return true;
}

bool PauliSpan::member(const PauliOperator& e) const {
  require_shape(*this, e);
  FpVector v = reduce(expand(e), nullptr);
  for (int x : v) {
    if (x != 0) return false;
  }
  return true;
}

std::optional<std::vector<int>> PauliSpan::solve(const PauliOperator& e) const {
  require_shape(*this, e);
  std::vector<int> combo(basis_.size(), 0);
  FpVector v = reduce(expand(e), &combo);
  for (int x : v) {
    if (x != 0) return std::nullopt;
  }
  return combo;
}

bool PauliSpan::contains(const PauliSpan& other) const {
  for (const auto& b : other.basis()) {
    if (!member(b)) return false;
  }
  return true;
}

PauliOperator PauliSpan::combination(std::span<const int> coeffs) const {
  if (coeffs.size() != basis_.size()) throw ShapeError("coefficient vector has the wrong length");
  PauliOperator acc = PauliOperator::identity(spec_, n_);
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (coeffs[k] != 0) acc = multiply(acc, power(basis_[k], coeffs[k]));
  }
  return acc;
}

void PauliSpan::for_each_element(const std::function<void(const PauliOperator&)>& fn) const {
  const int p = spec_->p();
  std::vector<int> c(basis_.size(), 0);
  while (true) {
    fn(combination(c));
    std::size_t i = 0;
    while (i < c.size() && ++c[i] == p) c[i++] = 0;
    if (i == c.size()) break;
  }
}

PauliSpan reduce_and_rank(const FieldRef& spec, std::size_t n, std::span<const PauliOperator> ops) {
  PauliSpan span(spec, n);
  for (const auto& e : ops) span.insert(e);
  return span;
}

std::vector<FpVector> nullspace_mod_p(std::vector<FpVector> rows, std::size_t cols, int p) {
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const int s = inverse_mod_p(rows[r][c], p);
    for (int& x : rows[r]) x = static_cast<int>(static_cast<long long>(x) * s % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = wrap(rows[i][k] - static_cast<long long>(f) * rows[r][k], p);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<FpVector> kernel;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    FpVector v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = wrap(-rows[i][free], p);
    kernel.push_back(std::move(v));
  }
  return kernel;
}

std::optional<FpVector> solve_mod_p(std::vector<FpVector> rows, std::size_t cols, FpVector rhs, int p) {
  if (rhs.size() != rows.size()) throw ShapeError("right-hand side has the wrong length");
  for (std::size_t i = 0; i < rows.size(); ++i) rows[i].push_back(wrap(rhs[i], p));
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const int s = inverse_mod_p(rows[r][c], p);
    for (int& x : rows[r]) x = static_cast<int>(static_cast<long long>(x) * s % p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const int f = rows[i][c];
      for (std::size_t k = 0; k <= cols; ++k) rows[i][k] = wrap(rows[i][k] - static_cast<long long>(f) * rows[r][k], p);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i) {
    if (rows[i][cols] != 0) return std::nullopt;
  }
  FpVector x(cols, 0);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = rows[i][cols];
  return x;
}

std::size_t rank_mod_p(std::vector<FpVector> rows, std::size_t cols, int p) {
  return cols - nullspace_mod_p(std::move(rows), cols, p).size();
}

PauliSpan centralizer_basis(const PauliSpan& span) {
  const SymplecticForm form(span.spec(), span.n());
  std::vector<FpVector> functionals;
  functionals.reserve(span.rank());
  for (const auto& g : span.basis()) functionals.push_back(form.functional(expand(g)));
  PauliSpan result(span.spec(), span.n());
  for (const auto& v : nullspace_mod_p(std::move(functionals), form.dimension(), span.spec()->p())) {
    result.insert(contract(span.spec(), span.n(), v));
  }
  return result;
}

PauliOperator scale(const PauliOperator& e, int c) { return power(e, c); }

std::vector<std::pair<PauliOperator, PauliOperator>> symplectic_pairs(
    const FieldRef& spec, std::size_t n, std::span<const PauliOperator> ops) {
  const int p = spec->p();
  const SymplecticForm form(spec, n);
  std::vector<FpVector> work;
  work.reserve(ops.size());
  for (const auto& e : ops) {
    if (!same_field(e.spec(), spec) || e.n() != n) throw ShapeError("operator shape mismatch");
    work.push_back(expand(e));
  }
  std::vector<std::pair<PauliOperator, PauliOperator>> pairs;
  while (!work.empty()) {
    FpVector u = std::move(work.front());
    work.erase(work.begin());
    std::size_t partner = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (form.pair(u, work[i]) != 0) {
        partner = i;
        break;
      }
    }
    if (partner == work.size()) continue;  // u is in the radical
    FpVector v = std::move(work[partner]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(partner));
    const int s = inverse_mod_p(form.pair(u, v), p);
    for (int& x : v) x = static_cast<int>(static_cast<long long>(x) * s % p);
    for (auto& w : work) {
      // w' = w - <w,v> u + <w,u> v
      const int wv = form.pair(w, v);
      const int wu = form.pair(w, u);
      for (std::size_t k = 0; k < w.size(); ++k) {
        w[k] = wrap(w[k] - static_cast<long long>(wv) * u[k] + static_cast<long long>(wu) * v[k], p);
      }
    }
    pairs.emplace_back(contract(spec, n, u), contract(spec, n, v));
  }
  return pairs;
}

std::vector<PauliOperator> complement_basis(const PauliSpan& span) {
  PauliSpan grown = span;
  std::vector<PauliOperator> added;
  const std::size_t dim = span.ambient_dimension();
  for (std::size_t k = 0; k < dim && grown.rank() < dim; ++k) {
    FpVector unit(dim, 0);
    unit[k] = 1;
    PauliOperator e = contract(span.spec(), span.n(), unit);
    if (grown.insert(e)) added.push_back(e);
  }
  return added;
}

}  // namespace hqec
