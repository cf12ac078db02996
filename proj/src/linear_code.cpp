#include "hybridqec/linear_code.hpp"

#include <algorithm>
#include <limits>

#include "hybridqec/errors.hpp"

namespace hqec {

FqMatrix rref(const FieldSpec& f, FqMatrix rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t sel = r;
    while (sel < rows.size() && rows[sel][c] == 0) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[r], rows[sel]);
    const Elem s = f.inv(rows[r][c]);
    for (auto& x : rows[r]) x = f.mul(x, s);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      const Elem factor = rows[i][c];
      for (std::size_t k = 0; k < cols; ++k) rows[i][k] = f.sub(rows[i][k], f.mul(factor, rows[r][k]));
    }
    ++r;
  }
  rows.resize(r);
  return rows;
}

FqMatrix kernel(const FieldSpec& f, const FqMatrix& rows, std::size_t cols) {
  const FqMatrix red = rref(f, rows, cols);
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(cols, false);
  for (const auto& row : red) {
    std::size_t c = 0;
    while (row[c] == 0) ++c;
    pivots.push_back(c);
    is_pivot[c] = true;
  }
  FqMatrix out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Elem> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < red.size(); ++i) v[pivots[i]] = f.neg(red[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

LinearCode::LinearCode(FieldRef spec, std::size_t n, FqMatrix generator)
    : spec_(std::move(spec)), n_(n), generator_(std::move(generator)) {
  for (const auto& row : generator_) {
    if (row.size() != n_) throw InvalidCode("generator row has the wrong length");
    for (Elem e : row) {
      if (!spec_->valid(e)) throw InvalidCode("generator entry out of range");
    }
  }
  if (rref(*spec_, generator_, n_).size() != generator_.size()) {
    throw InvalidCode("generator rows are linearly dependent");
  }
  parity_ = kernel(*spec_, generator_, n_);
}

LinearCode::LinearCode(FieldRef spec, std::size_t n, FqMatrix generator, FqMatrix parity)
    : spec_(std::move(spec)), n_(n), generator_(std::move(generator)), parity_(std::move(parity)) {}

LinearCode LinearCode::repetition(FieldRef spec, std::size_t n) {
  return LinearCode(std::move(spec), n, FqMatrix{std::vector<Elem>(n, 1)});
}

LinearCode LinearCode::full(FieldRef spec, std::size_t n) {
  FqMatrix g(n, std::vector<Elem>(n, 0));
  for (std::size_t i = 0; i < n; ++i) g[i][i] = 1;
  return LinearCode(std::move(spec), n, std::move(g));
}

bool LinearCode::same_code(const LinearCode& other) const {
  return same_field(spec_, other.spec_) && n_ == other.n_ &&
         rref(*spec_, generator_, n_) == rref(*spec_, other.generator_, n_);
}

std::size_t classical_min_distance(const LinearCode& c) {
  if (c.k() == 0) throw NoCodewords();
  const FieldSpec& f = *c.spec();
  const auto q = static_cast<Elem>(f.q());
  std::vector<Elem> msg(c.k(), 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (true) {
    std::size_t i = 0;
    while (i < msg.size() && ++msg[i] == q) msg[i++] = 0;
    if (i == msg.size()) break;
    std::size_t w = 0;
    for (std::size_t j = 0; j < c.n(); ++j) {
      Elem acc = 0;
      for (std::size_t r = 0; r < msg.size(); ++r) acc = f.add(acc, f.mul(msg[r], c.generator()[r][j]));
      w += acc != 0 ? 1 : 0;
    }
    best = std::min(best, w);
  }
  return best;
}

LinearCode dual(const LinearCode& c) {
  return LinearCode(c.spec(), c.n(), c.parity_check(), c.generator());
}

}  // namespace hqec
