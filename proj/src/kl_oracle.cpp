#include "hybridqec/kl_oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdlib>
#include <numbers>
#include <set>
#include <tuple>

#include "hybridqec/errors.hpp"

namespace hqec {
namespace {

using cd = std::complex<double>;

constexpr std::size_t kWarnDimension = 1024;

// Monomial action E|x> = root^exp(x) |y(x)> on the computational basis.
class Space {
 public:
  struct Compiled {
    std::uint32_t xmask = 0, zmask = 0;  // binary fast path
    std::vector<Elem> a, b;
    int phase = 0;
  };

  Space(FieldRef spec, std::size_t n, std::size_t cap)
      : spec_(std::move(spec)), n_(n), dim_(hilbert_dimension(*spec_, n, cap)),
        binary_(spec_->q() == 2), modulus_(phase_modulus(*spec_)), unit_(spec_->p() == 2 ? 2 : 1) {
    for (int k = 0; k < modulus_; ++k) {
      roots_.push_back(std::polar(1.0, 2.0 * std::numbers::pi * k / modulus_));
    }
    // Snap to exact values for the quarter turns.
    for (auto& r : roots_) {
      if (std::abs(r.real()) < 1e-15) r.real(0.0);
      if (std::abs(r.imag()) < 1e-15) r.imag(0.0);
    }
    if (!binary_) {
      const auto q = static_cast<std::uint32_t>(spec_->q());
      place_.assign(n_, 1);
      for (std::size_t j = n_; j-- > 1;) place_[j - 1] = place_[j] * q;
      digits_.resize(dim_ * n_);
      for (std::uint32_t x = 0; x < dim_; ++x) {
        std::uint32_t rest = x;
        for (std::size_t j = n_; j-- > 0;) {
          digits_[x * n_ + j] = rest % q;
          rest /= q;
        }
      }
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  cd root(int k) const { return roots_[static_cast<std::size_t>(k)]; }

  Compiled compile(const PauliOperator& e) const {
    if (!same_field(e.spec(), spec_) || e.n() != n_) throw ShapeError("operator shape mismatch");
    Compiled c;
    c.phase = e.phase();
    if (binary_) {
      for (std::size_t j = 0; j < n_; ++j) {
        const std::uint32_t bit = std::uint32_t{1} << (n_ - 1 - j);
        if (e.x(j)) c.xmask |= bit;
        if (e.z(j)) c.zmask |= bit;
      }
    } else {
      c.a = e.x();
      c.b = e.z();
    }
    return c;
  }

  std::pair<std::uint32_t, int> act(const Compiled& c, std::uint32_t x) const {
    if (binary_) {
      const int parity = std::popcount(c.zmask & x) & 1;
      return {x ^ c.xmask, (c.phase + 2 * parity) & 3};
    }
    const FieldSpec& f = *spec_;
    std::uint32_t y = 0;
    Elem tr = 0;
    const Elem* d = &digits_[x * n_];
    for (std::size_t j = 0; j < n_; ++j) {
      y += f.add(d[j], c.a[j]) * place_[j];
      tr = f.add(tr, f.mul(c.b[j], d[j]));
    }
    return {y, (c.phase + unit_ * f.trace(tr)) % modulus_};
  }

 private:
  FieldRef spec_;
  std::size_t n_;
  std::size_t dim_;
  bool binary_;
  int modulus_;
  int unit_;
  std::vector<cd> roots_;
  std::vector<std::uint32_t> place_;
  std::vector<Elem> digits_;
};

struct SparseVec {
  std::vector<std::uint32_t> idx;
  std::vector<cd> val;
};

SparseVec sparsify(const Eigen::VectorXcd& v) {
  SparseVec s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) > 1e-13) {
      s.idx.push_back(static_cast<std::uint32_t>(i));
      s.val.push_back(v[i]);
    }
  }
  return s;
}

std::vector<Space::Compiled> group_elements(const Space& space, const StabilizerGroup& s) {
  std::vector<Space::Compiled> out;
  s.span().for_each_element([&](const PauliOperator& g) { out.push_back(space.compile(g)); });
  return out;
}

// Orthonormal bases of every inner code t_a C0, aligned through the translations.
class InnerCodes {
 public:
  InnerCodes(const HybridCode& h, std::size_t cap)
      : space_(h.spec(), h.n(), cap), messages_(all_messages(h)) {
    const StabilizerGroup s0 = inner_code_stabilizer(h, messages_.front());
    const std::size_t dim = space_.dim();
    std::size_t group_size = 1;
    for (std::size_t i = 0; i < s0.dimension(); ++i) group_size *= static_cast<std::size_t>(h.spec()->p());
    if (group_size > dim) throw RankMismatch("stabilizer group larger than the Hilbert space");
    k_ = dim / group_size;

    const auto elements = group_elements(space_, s0);
    const double scale = 1.0 / static_cast<double>(elements.size());
    // Diagonal of P_0: the squared norms of P_0 e_x, used for column pivoting.
    std::vector<double> diag(dim, 0.0);
    for (const auto& g : elements) {
      if (g.xmask != 0 || std::any_of(g.a.begin(), g.a.end(), [](Elem e) { return e != 0; })) continue;
      for (std::uint32_t x = 0; x < dim; ++x) diag[x] += space_.root(space_.act(g, x).second).real() * scale;
    }
    std::vector<std::uint32_t> order_idx(dim);
    for (std::uint32_t x = 0; x < dim; ++x) order_idx[x] = x;
    std::stable_sort(order_idx.begin(), order_idx.end(),
                     [&](std::uint32_t l, std::uint32_t r) { return diag[l] > diag[r]; });

    std::vector<Eigen::VectorXcd> base;
    for (std::uint32_t x : order_idx) {
      if (base.size() == k_ || diag[x] < 1e-9) break;
      Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
      for (const auto& g : elements) {
        const auto [y, e] = space_.act(g, x);
        v[y] += space_.root(e) * scale;
      }
      for (const auto& u : base) v -= u * u.dot(v);  // modified Gram-Schmidt
      const double norm = v.norm();
      if (norm > 1e-6) base.push_back(v / norm);
    }
    if (base.size() != k_) {
      throw RankMismatch("inner code basis has rank " + std::to_string(base.size()) + ", expected " +
                         std::to_string(k_));
    }

    for (const auto& a : messages_) {
      const auto t = space_.compile(translation_for_message(h, a));
      std::vector<Eigen::VectorXcd> ba;
      for (const auto& v : base) {
        Eigen::VectorXcd w = Eigen::VectorXcd::Zero(v.size());
        for (std::uint32_t x = 0; x < dim; ++x) {
          if (v[x] == cd(0.0)) continue;
          const auto [y, e] = space_.act(t, x);
          w[y] += space_.root(e) * v[x];
        }
        ba.push_back(std::move(w));
      }
      // Alignment: the tagged inner stabilizer must fix t_a B_0.
      const StabilizerGroup sa = inner_code_stabilizer(h, a);
      for (const auto& g : sa.generators()) {
        const auto cg = space_.compile(g);
        for (const auto& w : ba) {
          Eigen::VectorXcd gw = Eigen::VectorXcd::Zero(w.size());
          for (std::uint32_t x = 0; x < dim; ++x) {
            if (w[x] == cd(0.0)) continue;
            const auto [y, e] = space_.act(cg, x);
            gw[y] += space_.root(e) * w[x];
          }
          if ((gw - w).cwiseAbs().maxCoeff() > kOracleTolerance) {
            throw InvalidHybrid("translated basis is not fixed by the tagged inner stabilizer");
          }
        }
      }
      std::vector<SparseVec> sparse;
      for (const auto& w : ba) sparse.push_back(sparsify(w));
      dense_.push_back(std::move(ba));
      sparse_.push_back(std::move(sparse));
    }
  }

  const Space& space() const noexcept { return space_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t messages() const noexcept { return messages_.size(); }

  // E B_b as sparse columns.
  std::vector<SparseVec> apply(const Space::Compiled& e, std::size_t b) const {
    std::vector<SparseVec> out;
    for (const auto& col : sparse_[b]) {
      SparseVec s;
      s.idx.reserve(col.idx.size());
      s.val.reserve(col.idx.size());
      for (std::size_t i = 0; i < col.idx.size(); ++i) {
        const auto [y, ex] = space_.act(e, col.idx[i]);
        s.idx.push_back(y);
        s.val.push_back(space_.root(ex) * col.val[i]);
      }
      out.push_back(std::move(s));
    }
    return out;
  }

  // B_a^dag (E B_b) from the output of apply().
  Eigen::MatrixXcd block(const std::vector<SparseVec>& eb, std::size_t a) const {
    Eigen::MatrixXcd m(static_cast<Eigen::Index>(k_), static_cast<Eigen::Index>(k_));
    for (std::size_t al = 0; al < k_; ++al) {
      const auto& u = dense_[a][al];
      for (std::size_t be = 0; be < k_; ++be) {
        cd acc = 0.0;
        const auto& s = eb[be];
        for (std::size_t i = 0; i < s.idx.size(); ++i) acc += std::conj(u[s.idx[i]]) * s.val[i];
        m(static_cast<Eigen::Index>(al), static_cast<Eigen::Index>(be)) = acc;
      }
    }
    return m;
  }

 private:
  Space space_;
  std::vector<std::vector<Elem>> messages_;
  std::size_t k_ = 0;
  std::vector<std::vector<Eigen::VectorXcd>> dense_;
  std::vector<std::vector<SparseVec>> sparse_;
};

double identity_residual(const Eigen::MatrixXcd& m) {
  const cd lambda = m.trace() / static_cast<double>(m.rows());
  Eigen::MatrixXcd r = m;
  r.diagonal().array() -= lambda;
  return r.cwiseAbs().maxCoeff();
}

std::vector<PauliOperator> errors_below(const FieldRef& spec, std::size_t n, std::size_t bound) {
  std::vector<PauliOperator> out;
  for (std::size_t w = 0; w < bound && w <= n; ++w) {
    for_each_pauli_of_weight(spec, n, w, [&](const PauliOperator& e) {
      out.push_back(e);
      return true;
    });
  }
  return out;
}

// Distinct phase-free products E^dag F with wt(E), wt(F) <= t, by weight then encoding.
std::vector<PauliOperator> products_up_to(const FieldRef& spec, std::size_t n, std::size_t t) {
  const auto singles = errors_below(spec, n, t + 1);
  std::set<std::pair<std::vector<Elem>, std::vector<Elem>>> seen;
  std::vector<PauliOperator> out;
  for (const auto& e : singles) {
    const PauliOperator ed = inverse(e);
    for (const auto& f : singles) {
      const PauliOperator prod = multiply(ed, f);
      if (seen.emplace(prod.x(), prod.z()).second) out.push_back(prod.with_phase(0));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const PauliOperator& l, const PauliOperator& r) {
    return weight(l) < weight(r);
  });
  return out;
}

enum class Pairs { diagonal, all };

void run_condition1(const InnerCodes& codes, const std::vector<PauliOperator>& errors, Pairs pairs,
                    KlReport& report) {
  report.condition1_errors = errors.size();
  for (const auto& e : errors) {
    const auto ce = codes.space().compile(e);
    for (std::size_t b = 0; b < codes.messages(); ++b) {
      const auto eb = codes.apply(ce, b);
      for (std::size_t a = 0; a < codes.messages(); ++a) {
        if (pairs == Pairs::diagonal && a != b) continue;
        const double res = identity_residual(codes.block(eb, a));
        if (res > kOracleTolerance) report.violations.push_back({1, e, a, b, res});
      }
    }
  }
}

void run_condition2(const InnerCodes& codes, const std::vector<PauliOperator>& errors, KlReport& report) {
  report.condition2_errors = errors.size();
  if (codes.messages() < 2) return;
  for (const auto& f : errors) {
    const auto cf = codes.space().compile(f);
    for (std::size_t b = 0; b < codes.messages(); ++b) {
      const auto fb = codes.apply(cf, b);
      for (std::size_t a = 0; a < codes.messages(); ++a) {
        if (a == b) continue;
        const double res = codes.block(fb, a).cwiseAbs().maxCoeff();
        if (res > kOracleTolerance) report.violations.push_back({2, f, a, b, res});
      }
    }
  }
}

KlReport start_report(const InnerCodes& codes) {
  KlReport r;
  r.dimension = codes.space().dim();
  r.code_dimension = codes.k();
  r.messages = codes.messages();
  if (r.dimension > kWarnDimension) {
    r.warnings.push_back("dense oracle on dimension " + std::to_string(r.dimension) + " (above " +
                         std::to_string(kWarnDimension) + ") may be slow");
  }
  return r;
}

void finish_report(KlReport& r) {
  std::stable_sort(r.violations.begin(), r.violations.end(), [](const KlViolation& l, const KlViolation& r) {
    const auto wl = weight(l.error), wr = weight(r.error);
    return std::tie(wl, l.error.x(), l.error.z(), l.condition, l.a, l.b) <
           std::tie(wr, r.error.x(), r.error.z(), r.condition, r.a, r.b);
  });
}

}  // namespace

std::size_t oracle_cap() {
  if (const char* env = std::getenv("HYBRIDQEC_ORACLE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 4096;
}

std::size_t hilbert_dimension(const FieldSpec& f, std::size_t n, std::size_t cap) {
  std::size_t dim = 1;
  for (std::size_t j = 0; j < n; ++j) {
    dim *= static_cast<std::size_t>(f.q());
    if (dim > cap) {
      // Report the true size when it fits, otherwise the first overflow.
      std::size_t full = dim;
      for (std::size_t k = j + 1; k < n && full <= (std::size_t{1} << 40); ++k) full *= static_cast<std::size_t>(f.q());
      throw DimensionTooLarge(full, cap);
    }
  }
  return dim;
}

DenseOperator pauli_matrix(const PauliOperator& e, std::size_t cap) {
  const Space space(e.spec(), e.n(), cap);
  const auto c = space.compile(e);
  const auto dim = static_cast<Eigen::Index>(space.dim());
  DenseOperator m = DenseOperator::Zero(dim, dim);
  for (std::uint32_t x = 0; x < space.dim(); ++x) {
    const auto [y, ex] = space.act(c, x);
    m(y, x) = space.root(ex);
  }
  return m;
}

DenseOperator projector(const StabilizerGroup& s, std::size_t cap) {
  const Space space(s.spec(), s.n(), cap);
  const auto dim = static_cast<Eigen::Index>(space.dim());
  DenseOperator p = DenseOperator::Zero(dim, dim);
  const auto elements = group_elements(space, s);
  const double scale = 1.0 / static_cast<double>(elements.size());
  for (const auto& g : elements) {
    for (std::uint32_t x = 0; x < space.dim(); ++x) {
      const auto [y, ex] = space.act(g, x);
      p(y, x) += space.root(ex) * scale;
    }
  }
  return p;
}

std::optional<std::size_t> KlReport::min_witness_weight(int condition) const {
  std::optional<std::size_t> best;
  for (const auto& v : violations) {
    if (v.condition != condition) continue;
    const std::size_t w = weight(v.error);
    if (!best || w < *best) best = w;
  }
  return best;
}

KlReport check_detection(const HybridCode& h, std::size_t d, std::size_t c, std::size_t cap) {
  const InnerCodes codes(h, cap);
  KlReport r = start_report(codes);
  run_condition1(codes, errors_below(h.spec(), h.n(), d), Pairs::diagonal, r);
  run_condition2(codes, errors_below(h.spec(), h.n(), c), r);
  finish_report(r);
  return r;
}

KlReport check_subsystem_conditions(const HybridCode& h, std::size_t d, std::size_t c, std::size_t cap) {
  const InnerCodes codes(h, cap);
  KlReport r = start_report(codes);
  run_condition1(codes, errors_below(h.spec(), h.n(), d), Pairs::all, r);
  run_condition2(codes, errors_below(h.spec(), h.n(), c), r);
  finish_report(r);
  return r;
}

KlReport check_correction(const HybridCode& h, std::size_t d, std::size_t c, std::size_t cap) {
  const InnerCodes codes(h, cap);
  KlReport r = start_report(codes);
  const std::size_t td = d == 0 ? 0 : (d - 1) / 2;
  const std::size_t tc = c == 0 ? 0 : (c - 1) / 2;
  run_condition1(codes, products_up_to(h.spec(), h.n(), td), Pairs::diagonal, r);
  run_condition2(codes, products_up_to(h.spec(), h.n(), tc), r);
  finish_report(r);
  return r;
}

}  // namespace hqec
