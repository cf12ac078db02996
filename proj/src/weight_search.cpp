#include "hybridqec/weight_search.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

#include "hybridqec/errors.hpp"

namespace hqec {
namespace {

// Syndromes over F_2 packed 64 to a word; addition is XOR.
struct PackedBits {
  using Word = std::uint64_t;
  std::size_t stride;
  std::vector<Word> commute_mask, anticommute_mask;

  PackedBits(std::size_t na, std::size_t nb) : stride((na + nb + 63) / 64) {
    commute_mask.assign(stride, 0);
    anticommute_mask.assign(stride, 0);
    for (std::size_t i = 0; i < na + nb; ++i) {
      auto& mask = i < na ? commute_mask : anticommute_mask;
      mask[i / 64] |= Word{1} << (i % 64);
    }
  }
  void set(Word* s, std::size_t i, int v) const {
    if (v) s[i / 64] |= Word{1} << (i % 64);
  }
  void add(Word* out, const Word* a, const Word* b) const {
    for (std::size_t w = 0; w < stride; ++w) out[w] = a[w] ^ b[w];
  }
  bool accept(const Word* s, bool need_anticommute) const {
    Word bad = 0, good = 0;
    for (std::size_t w = 0; w < stride; ++w) {
      bad |= s[w] & commute_mask[w];
      good |= s[w] & anticommute_mask[w];
    }
    return bad == 0 && (!need_anticommute || good != 0);
  }
};

// One byte per syndrome entry, arithmetic mod p.
struct BytesModP {
  using Word = std::uint8_t;
  std::size_t stride, na;
  int p;

  BytesModP(std::size_t na_, std::size_t nb, int p_) : stride(na_ + nb), na(na_), p(p_) {}
  void set(Word* s, std::size_t i, int v) const { s[i] = static_cast<Word>(v); }
  void add(Word* out, const Word* a, const Word* b) const {
    for (std::size_t i = 0; i < stride; ++i) {
      const int v = a[i] + b[i];
      out[i] = static_cast<Word>(v >= p ? v - p : v);
    }
  }
  bool accept(const Word* s, bool need_anticommute) const {
    for (std::size_t i = 0; i < na; ++i) {
      if (s[i] != 0) return false;
    }
    if (!need_anticommute) return true;
    for (std::size_t i = na; i < stride; ++i) {
      if (s[i] != 0) return true;
    }
    return false;
  }
};

template <class Ops>
class Searcher {
 public:
  using Word = typename Ops::Word;

  Searcher(Ops ops, const FieldRef& spec, std::size_t n, std::span<const PauliOperator> a,
           std::span<const PauliOperator> b)
      : ops_(std::move(ops)), spec_(spec), n_(n), q_(static_cast<std::size_t>(spec->q())),
        letters_(q_ * q_), need_anticommute_(!b.empty()) {
    // cols_[(j * letters + code) * stride ...] = syndrome of the letter `code` on qudit j.
    cols_.assign(n_ * letters_ * ops_.stride, 0);
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t code = 1; code < letters_; ++code) {
        std::vector<Elem> x(n_, 0), z(n_, 0);
        x[j] = static_cast<Elem>(code / q_);
        z[j] = static_cast<Elem>(code % q_);
        const PauliOperator e(spec_, std::move(x), std::move(z));
        Word* col = &cols_[(j * letters_ + code) * ops_.stride];
        for (std::size_t i = 0; i < a.size(); ++i) ops_.set(col, i, pairing(a[i], e));
        for (std::size_t i = 0; i < b.size(); ++i) ops_.set(col, a.size() + i, pairing(b[i], e));
      }
    }
  }

  WeightSearchResult run(std::size_t max_weight) {
    WeightSearchResult result;
    const std::size_t limit = std::min(max_weight, n_);
    for (std::size_t w = 1; w <= limit; ++w) {
      if (search(w)) {
        result.weight = w;
        result.searched_to = w;
        std::vector<Elem> x(n_, 0), z(n_, 0);
        for (std::size_t i = 0; i < w; ++i) {
          x[comb_[i]] = static_cast<Elem>(letter_[i] / q_);
          z[comb_[i]] = static_cast<Elem>(letter_[i] % q_);
        }
        const int phase = canonical_phase(*spec_, x, z);
        result.witness = PauliOperator(spec_, std::move(x), std::move(z), phase);
        result.exhaustive = true;
        return result;
      }
      result.searched_to = w;
    }
    result.searched_to = limit;
    result.exhaustive = limit == n_;
    return result;
  }

 private:
  bool search(std::size_t w) {
    w_ = w;
    comb_.resize(w);
    letter_.assign(w, 0);
    for (std::size_t i = 0; i < w; ++i) comb_[i] = i;
    partial_.assign((w + 1) * ops_.stride, 0);
    do {
      if (descend(0)) return true;
    } while (next_combination_colex(comb_, n_));
    return false;
  }

  bool descend(std::size_t depth) {
    const Word* in = &partial_[depth * ops_.stride];
    Word* out = &partial_[(depth + 1) * ops_.stride];
    for (std::size_t code = 1; code < letters_; ++code) {
      ops_.add(out, in, &cols_[(comb_[depth] * letters_ + code) * ops_.stride]);
      letter_[depth] = code;
      if (depth + 1 == w_) {
        if (ops_.accept(out, need_anticommute_)) return true;
      } else if (descend(depth + 1)) {
        return true;
      }
    }
    return false;
  }

  Ops ops_;
  FieldRef spec_;
  std::size_t n_, q_, letters_;
  bool need_anticommute_;
  std::vector<Word> cols_;
  std::vector<Word> partial_;
  std::vector<std::size_t> comb_, letter_;
  std::size_t w_ = 0;
};

}  // namespace

WeightSearchResult min_weight_search(const FieldRef& spec, std::size_t n,
                                     std::span<const PauliOperator> commute_with,
                                     std::span<const PauliOperator> anticommute_with,
                                     std::size_t max_weight) {
  for (const auto* list : {&commute_with, &anticommute_with}) {
    for (const auto& h : *list) {
      if (!same_field(h.spec(), spec) || h.n() != n) throw ShapeError("operator shape mismatch");
    }
  }
  if (spec->p() == 2) {
    Searcher<PackedBits> s(PackedBits(commute_with.size(), anticommute_with.size()), spec, n,
                           commute_with, anticommute_with);
    return s.run(max_weight);
  }
  Searcher<BytesModP> s(BytesModP(commute_with.size(), anticommute_with.size(), spec->p()), spec,
                        n, commute_with, anticommute_with);
  return s.run(max_weight);
}

WeightSearchResult min_weight_outside(const FieldRef& spec, std::size_t n,
                                      std::span<const PauliOperator> commute_with,
                                      std::span<const PauliOperator> anticommute_with,
                                      std::size_t max_weight) {
  if (anticommute_with.empty()) {
    WeightSearchResult none;
    none.searched_to = n;
    none.exhaustive = true;
    return none;
  }
  return min_weight_search(spec, n, commute_with, anticommute_with, max_weight);
}

}  // namespace hqec
