// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PICARD_PICARD_SET_HPP
#define PICARD_PICARD_SET_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace picard {

using Value = std::int64_t;

namespace detail {

/// Mutable word-packed bit array, 64 values per word. Bit i of word w is the
/// value 64 * w + i.
class BitRow {
 public:
  BitRow() = default;
  explicit BitRow(Value universe) : universe_(universe), words_(word_count(universe), 0) {}

  static std::size_t word_count(Value universe) {
    return static_cast<std::size_t>(universe / 64 + 1);
  }

  Value universe() const { return universe_; }
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool test(Value x) const {
    return x >= 0 && x <= universe_ && ((words_[x >> 6] >> (x & 63)) & 1U);
  }
  void set(Value x) { words_[x >> 6] |= std::uint64_t{1} << (x & 63); }

  /// this |= src << shift, truncated to [0, universe].
  void shift_or(const BitRow& src, Value shift);
  /// this |= this << shift, in place, truncated to [0, universe].
  void self_shift_or(Value shift);
  void or_with(const BitRow& other);
  void clear();
  /// Clears any bits above universe in the last word.
  void trim();

  bool any() const;
  std::size_t count() const;

 private:
  Value universe_ = -1;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// A maximal run [lo, hi] of consecutive members.
struct Run {
  Value lo;
  Value hi;
  bool operator==(const Run&) const = default;
};

/// Finite set of attainable Picard numbers for a fixed dimension g, stored as
/// a word-packed membership array over [0, g^2]. Immutable once built.
class PicardSet {
 public:
  /// The conventional R_0 = {0}.
  PicardSet();

  static PicardSet empty(int dim);
  /// Throws std::out_of_range if a member lies outside [0, dim^2].
  static PicardSet from_members(int dim, std::span<const Value> members);
  static PicardSet from_members(int dim, std::initializer_list<Value> members);
  /// Adopts a row; bits above dim^2 must be clear.
  static PicardSet from_row(int dim, detail::BitRow row);

  int dim() const { return dim_; }
  Value universe() const { return static_cast<Value>(dim_) * dim_; }

  bool contains(Value x) const { return row_.test(x); }
  std::size_t size() const { return size_; }
  bool is_empty() const { return size_ == 0; }
  std::optional<Value> min() const;
  std::optional<Value> max() const;

  std::vector<Value> members() const;
  const std::vector<Run>& runs() const { return runs_; }
  std::span<const std::uint64_t> words() const { return row_.words(); }
  const detail::BitRow& row() const { return row_; }

  /// Compares member sets, ignoring dim.
  bool same_members(const PicardSet& other) const;
  bool is_subset_of(const PicardSet& other) const;

  bool operator==(const PicardSet& other) const {
    return dim_ == other.dim_ && same_members(other);
  }

  template <typename F>
  void for_each(F&& f) const {
    const auto w = row_.words();
    for (std::size_t i = 0; i < w.size(); ++i) {
      std::uint64_t bits = w[i];
      while (bits != 0) {
        const int b = __builtin_ctzll(bits);
        f(static_cast<Value>(i) * 64 + b);
        bits &= bits - 1;
      }
    }
  }

 private:
  PicardSet(int dim, detail::BitRow row);

  int dim_ = 0;
  detail::BitRow row_;
  std::size_t size_ = 0;
  std::vector<Run> runs_;
};

/// {x + y : x in a, y in b}, with dim a.dim() + b.dim().
PicardSet sumset(const PicardSet& a, const PicardSet& b);

/// dst |= a + b, where dst spans at least [0, a.universe() + b.universe()]
/// truncated to its own universe. Drives the shifts from whichever operand
/// has fewer runs; each run [lo, hi] costs O(log(hi - lo + 1)) shifts.
void sumset_into(detail::BitRow& dst, const PicardSet& a, const PicardSet& b, detail::BitRow& scratch);

struct GapInterval {
  Value lo;
  Value hi;
  bool operator==(const GapInterval&) const = default;
};

/// Maximal intervals of [1, dim^2] missing from s, increasing. Requires
/// 1 and dim^2 to be members.
std::vector<GapInterval> gaps_of(const PicardSet& s);

}  // namespace picard

#endif  // PICARD_PICARD_SET_HPP
