#ifndef HP0_ECHELON_HPP
#define HP0_ECHELON_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "hp0/rational.hpp"

namespace hp0 {

/// Sparse vector over coordinate ids; ids strictly ascending. With ids taken
/// from a DegreeTable this is a polynomial with terms graded-lex descending,
/// so the leading term is the first entry.
template <class Q>
using SparseVec = std::vector<std::pair<std::uint32_t, Q>>;

using SparseInts = std::vector<std::pair<std::uint32_t, std::int64_t>>;
using SparseRats = std::vector<std::pair<std::uint32_t, BigRat>>;

namespace detail {

inline std::optional<Rat64> try_rat64(const BigRat& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) return std::nullopt;
  return Rat64(q.get_num().get_si(), q.get_den().get_si());
}

template <class Q>
Q from_int(std::int64_t v);
template <>
inline Rat64 from_int<Rat64>(std::int64_t v) { return Rat64(v); }
template <>
inline BigRat from_int<BigRat>(std::int64_t v) {
  BigRat r;
  r = static_cast<long>(v);
  return r;
}

/// Row-echelon accumulator over a fixed id range. Rows are monic, keyed by
/// their leading id; reduction runs in a dense scratch buffer with a bitmap
/// for next-nonzero scans.
template <class Q>
class SpanImpl {
 public:
  SpanImpl(std::uint32_t ambient, bool keep_reduced)
      : ambient_(ambient),
        keep_reduced_(keep_reduced),
        pivot_(ambient, -1),
        vals_(ambient),
        bits_((ambient + 63) / 64, 0) {}

  std::uint32_t ambient() const { return ambient_; }
  std::uint32_t rank() const { return static_cast<std::uint32_t>(rows_.size()); }
  const std::vector<SparseVec<Q>>& rows() const { return rows_; }
  const std::vector<std::int32_t>& pivots() const { return pivot_; }
  bool is_pivot(std::uint32_t id) const { return pivot_[id] >= 0; }

  bool insert(const SparseVec<Q>& v) {
    load(v);
    std::uint32_t id = next_nonzero(0);
    while (id < ambient_) {
      std::int32_t r = pivot_[id];
      if (r < 0) break;
      eliminate(id, r);
      id = next_nonzero(id + 1);
    }
    if (id >= ambient_) {
      clear_scratch();
      return false;
    }
    if (keep_reduced_) {
      // finish reducing the tail so the stored row has no pivot ids in it
      std::uint32_t t = next_nonzero(id + 1);
      while (t < ambient_) {
        if (pivot_[t] >= 0) eliminate(t, pivot_[t]);
        t = next_nonzero(t + 1);
      }
    }
    SparseVec<Q> row = extract_from(id);
    clear_scratch();
    Q inv = from_int<Q>(1) / row.front().second;
    for (auto& [j, c] : row) c = c * inv;
    std::int32_t idx = static_cast<std::int32_t>(rows_.size());
    rows_.push_back(std::move(row));
    pivot_[id] = idx;
    if (keep_reduced_) back_substitute(id, idx);
    return true;
  }

  /// Canonical normal form: eliminates every pivot id, keeps the rest.
  SparseVec<Q> normal_form(const SparseVec<Q>& v) {
    load(v);
    SparseVec<Q> out;
    std::uint32_t id = next_nonzero(0);
    while (id < ambient_) {
      std::int32_t r = pivot_[id];
      if (r >= 0) {
        eliminate(id, r);
      } else {
        out.push_back({id, vals_[id]});
        vals_[id] = Q();
      }
      id = next_nonzero(id + 1);
    }
    clear_scratch();
    return out;
  }

 private:
  void mark(std::uint32_t id) { bits_[id >> 6] |= (std::uint64_t{1} << (id & 63)); }

  void load(const SparseVec<Q>& v) {
    for (const auto& [id, c] : v) {
      vals_[id] = vals_[id] + c;
      mark(id);
      touched_.push_back(id);
    }
  }

  std::uint32_t next_nonzero(std::uint32_t from) {
    if (from >= ambient_) return ambient_;
    std::uint32_t w = from >> 6;
    std::uint64_t word = bits_[w] & (~std::uint64_t{0} << (from & 63));
    while (true) {
      while (word != 0) {
        std::uint32_t id = (w << 6) + static_cast<std::uint32_t>(__builtin_ctzll(word));
        if (id >= ambient_) return ambient_;
        if (!is_zero(vals_[id])) return id;
        word &= word - 1;  // stale bit from a cancellation
      }
      if (++w >= bits_.size()) return ambient_;
      word = bits_[w];
    }
  }

  void eliminate(std::uint32_t id, std::int32_t r) {
    Q c = vals_[id];
    vals_[id] = Q();
    const SparseVec<Q>& row = rows_[r];
    for (std::size_t t = 1; t < row.size(); ++t) {
      const auto& [j, q] = row[t];
      vals_[j] = vals_[j] - c * q;
      mark(j);
      touched_.push_back(j);
    }
  }

  SparseVec<Q> extract_from(std::uint32_t id) {
    SparseVec<Q> out;
    while (id < ambient_) {
      out.push_back({id, vals_[id]});
      vals_[id] = Q();
      id = next_nonzero(id + 1);
    }
    return out;
  }

  void clear_scratch() {
    for (std::uint32_t id : touched_) {
      vals_[id] = Q();
      bits_[id >> 6] = 0;
    }
    touched_.clear();
  }

  void back_substitute(std::uint32_t lead, std::int32_t new_row) {
    const SparseVec<Q> target = rows_[new_row];
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      if (static_cast<std::int32_t>(r) == new_row) continue;
      auto& row = rows_[r];
      auto it = std::lower_bound(row.begin(), row.end(), lead,
                                 [](const auto& t, std::uint32_t key) { return t.first < key; });
      if (it == row.end() || it->first != lead) continue;
      Q c = it->second;
      SparseVec<Q> merged;
      merged.reserve(row.size() + target.size());
      auto a = row.begin();
      auto b = target.begin();
      while (a != row.end() || b != target.end()) {
        if (b == target.end() || (a != row.end() && a->first < b->first)) {
          merged.push_back(*a++);
        } else if (a == row.end() || a->first > b->first) {
          merged.push_back({b->first, Q() - c * b->second});
          ++b;
        } else {
          Q v = a->second - c * b->second;
          if (!is_zero(v)) merged.push_back({a->first, v});
          ++a;
          ++b;
        }
      }
      row = std::move(merged);
    }
  }

  std::uint32_t ambient_;
  bool keep_reduced_;
  std::vector<SparseVec<Q>> rows_;
  std::vector<std::int32_t> pivot_;
  std::vector<Q> vals_;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace detail

/// Exact row-echelon span over a fixed coordinate range. Arithmetic runs on
/// checked 64-bit rationals and upgrades the whole span to GMP rationals the
/// first time an entry would overflow.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::uint32_t ambient, bool keep_reduced = false)
      : impl_(std::in_place_index<0>, ambient, keep_reduced),
        ambient_(ambient),
        keep_reduced_(keep_reduced) {}

  std::uint32_t ambient() const { return ambient_; }

  std::uint32_t rank() const {
    return std::visit([](const auto& s) { return s.rank(); }, impl_);
  }

  bool is_pivot(std::uint32_t id) const {
    return std::visit([&](const auto& s) { return s.is_pivot(id); }, impl_);
  }

  std::vector<std::uint32_t> pivot_ids() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t id = 0; id < ambient_; ++id)
      if (is_pivot(id)) out.push_back(id);
    return out;
  }

  std::vector<std::uint32_t> free_ids() const {
    std::vector<std::uint32_t> out;
    for (std::uint32_t id = 0; id < ambient_; ++id)
      if (!is_pivot(id)) out.push_back(id);
    return out;
  }

  bool insert_ints(const SparseInts& v) {
    if (auto* small = std::get_if<0>(&impl_)) {
      SparseVec<Rat64> w;
      w.reserve(v.size());
      for (const auto& [id, c] : v) w.push_back({id, Rat64(c)});
      try {
        return small->insert(w);
      } catch (const RatOverflow&) {
        upgrade();
      }
    }
    SparseVec<BigRat> w;
    w.reserve(v.size());
    for (const auto& [id, c] : v) w.push_back({id, detail::from_int<BigRat>(c)});
    return std::get<1>(impl_).insert(w);
  }

  bool insert(const SparseRats& v) {
    if (auto* small = std::get_if<0>(&impl_)) {
      SparseVec<Rat64> w;
      if (downconvert(v, w)) {
        try {
          return small->insert(w);
        } catch (const RatOverflow&) {
        }
      }
      upgrade();
    }
    return std::get<1>(impl_).insert(v);
  }

  SparseRats normal_form(const SparseRats& v) {
    if (auto* small = std::get_if<0>(&impl_)) {
      SparseVec<Rat64> w;
      if (downconvert(v, w)) {
        try {
          SparseVec<Rat64> nf = small->normal_form(w);
          SparseRats out;
          out.reserve(nf.size());
          for (const auto& [id, c] : nf) out.push_back({id, to_bigrat(c)});
          return out;
        } catch (const RatOverflow&) {
        }
      }
      upgrade();
    }
    return std::get<1>(impl_).normal_form(v);
  }

  SparseRats normal_form_ints(const SparseInts& v) {
    SparseRats w;
    w.reserve(v.size());
    for (const auto& [id, c] : v) w.push_back({id, detail::from_int<BigRat>(c)});
    return normal_form(w);
  }

  bool member(const SparseRats& v) { return normal_form(v).empty(); }

  /// Stored rows as rationals, each monic with ascending ids.
  std::vector<SparseRats> rows() const {
    std::vector<SparseRats> out;
    auto emit = [&](const auto& impl) {
      for (const auto& row : impl.rows()) {
        SparseRats r;
        r.reserve(row.size());
        for (const auto& [id, c] : row) r.push_back({id, to_bigrat(c)});
        out.push_back(std::move(r));
      }
    };
    std::visit(emit, impl_);
    return out;
  }

  bool upgraded() const { return impl_.index() == 1; }

 private:
  static bool downconvert(const SparseRats& v, SparseVec<Rat64>& w) {
    w.clear();
    w.reserve(v.size());
    for (const auto& [id, c] : v) {
      auto q = detail::try_rat64(c);
      if (!q) return false;
      w.push_back({id, *q});
    }
    return true;
  }

  void upgrade() {
    if (impl_.index() == 1) return;
    const auto& small = std::get<0>(impl_);
    detail::SpanImpl<BigRat> big(ambient_, keep_reduced_);
    // Replay rows directly; they are already an echelon basis, so insertion
    // order preserves pivots exactly.
    for (const auto& row : small.rows()) {
      SparseVec<BigRat> r;
      r.reserve(row.size());
      for (const auto& [id, c] : row) r.push_back({id, to_bigrat(c)});
      big.insert(r);
    }
    impl_ = std::move(big);
  }

  std::variant<detail::SpanImpl<Rat64>, detail::SpanImpl<BigRat>> impl_;
  std::uint32_t ambient_;
  bool keep_reduced_;
};

}  // namespace hp0

#endif
