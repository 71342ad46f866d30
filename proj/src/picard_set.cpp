// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#include "picard/picard_set.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace picard {
namespace detail {
namespace {

// dst[ws + i] |= (src << bs) over source words [lo, hi], with the carry word.
void shift_or_words(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src, Value shift,
                    std::size_t lo, std::size_t hi) {
  const std::size_t ws = static_cast<std::size_t>(shift >> 6);
  const unsigned bs = static_cast<unsigned>(shift & 63);
  const std::size_t n = dst.size();
  if (ws >= n || lo > hi) return;
  hi = std::min(hi, n - 1 - ws);
  if (lo > hi) return;
  std::uint64_t* d = dst.data() + ws;
  const std::uint64_t* s = src.data();
  if (bs == 0) {
    for (std::size_t i = lo; i <= hi; ++i) d[i] |= s[i];
    return;
  }
  const unsigned rs = 64 - bs;
  d[lo] |= s[lo] << bs;
  for (std::size_t i = lo + 1; i <= hi; ++i) d[i] |= (s[i] << bs) | (s[i - 1] >> rs);
  if (hi + 1 + ws < n) d[hi + 1] |= s[hi] >> rs;
}

// w |= w << shift where w is zero outside words [lo, hi] except that words
// below lo may hold unrelated data, which is never read.
void self_shift_or_words(std::span<std::uint64_t> w, Value shift, std::size_t lo, std::size_t hi) {
  const std::size_t ws = static_cast<std::size_t>(shift >> 6);
  const unsigned bs = static_cast<unsigned>(shift & 63);
  const std::size_t n = w.size();
  if (shift <= 0 || lo + ws >= n) return;
  const std::size_t top = std::min(n - 1, hi + ws + (bs != 0 ? 1 : 0));
  std::uint64_t* p = w.data();
  if (bs == 0) {
    for (std::size_t i = top + 1; i-- > lo + ws;) p[i] |= p[i - ws];
    return;
  }
  const unsigned rs = 64 - bs;
  for (std::size_t i = top + 1; i-- > lo + ws + 1;) {
    const std::uint64_t cur = i - ws <= hi ? p[i - ws] : 0;
    p[i] |= (cur << bs) | (p[i - ws - 1] >> rs);
  }
  p[lo + ws] |= p[lo] << bs;
}

}  // namespace

void BitRow::shift_or(const BitRow& src, Value shift) {
  if (shift < 0 || shift > universe_ || src.words_.empty()) return;
  shift_or_words(words_, src.words_, shift, 0, src.words_.size() - 1);
  trim();
}

void BitRow::self_shift_or(Value shift) {
  if (shift <= 0 || shift > universe_) return;
  const std::size_t ws = static_cast<std::size_t>(shift >> 6);
  const unsigned bs = static_cast<unsigned>(shift & 63);
  const std::size_t n = words_.size();
  std::uint64_t* w = words_.data();
  // Descending so every read sees pre-shift contents.
  if (bs == 0) {
    for (std::size_t i = n; i-- > ws;) w[i] |= w[i - ws];
  } else {
    const unsigned rs = 64 - bs;
    for (std::size_t i = n; i-- > ws + 1;) w[i] |= (w[i - ws] << bs) | (w[i - ws - 1] >> rs);
    w[ws] |= w[0] << bs;
  }
  trim();
}

void BitRow::or_with(const BitRow& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t i = 0; i < n; ++i) words_[i] |= other.words_[i];
  trim();
}

void BitRow::clear() { std::fill(words_.begin(), words_.end(), 0); }

void BitRow::trim() {
  if (words_.empty()) return;
  const unsigned top = static_cast<unsigned>(universe_ & 63);
  if (top != 63) words_.back() &= (std::uint64_t{2} << top) - 1;
}

bool BitRow::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t BitRow::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

}  // namespace detail

PicardSet::PicardSet() : PicardSet(0, [] {
    detail::BitRow r(0);
    r.set(0);
    return r;
  }()) {}

PicardSet::PicardSet(int dim, detail::BitRow row) : dim_(dim), row_(std::move(row)) {
  row_.trim();
  size_ = row_.count();
  for_each([this](Value x) {
    if (!runs_.empty() && runs_.back().hi + 1 == x) {
      runs_.back().hi = x;
    } else {
      runs_.push_back({x, x});
    }
  });
}

PicardSet PicardSet::empty(int dim) {
  if (dim < 0) throw std::invalid_argument("PicardSet: negative dimension");
  return PicardSet(dim, detail::BitRow(static_cast<Value>(dim) * dim));
}

PicardSet PicardSet::from_members(int dim, std::span<const Value> members) {
  if (dim < 0) throw std::invalid_argument("PicardSet: negative dimension");
  const Value universe = static_cast<Value>(dim) * dim;
  detail::BitRow row(universe);
  for (Value x : members) {
    if (x < 0 || x > universe) {
      throw std::out_of_range("PicardSet: member " + std::to_string(x) + " outside [0, " +
                              std::to_string(universe) + "]");
    }
    row.set(x);
  }
  return PicardSet(dim, std::move(row));
}

PicardSet PicardSet::from_members(int dim, std::initializer_list<Value> members) {
  return from_members(dim, std::span<const Value>(members.begin(), members.size()));
}

PicardSet PicardSet::from_row(int dim, detail::BitRow row) {
  if (dim < 0 || row.universe() != static_cast<Value>(dim) * dim) {
    throw std::invalid_argument("PicardSet: row universe does not match dimension");
  }
  return PicardSet(dim, std::move(row));
}

std::optional<Value> PicardSet::min() const {
  if (runs_.empty()) return std::nullopt;
  return runs_.front().lo;
}

std::optional<Value> PicardSet::max() const {
  if (runs_.empty()) return std::nullopt;
  return runs_.back().hi;
}

std::vector<Value> PicardSet::members() const {
  std::vector<Value> out;
  out.reserve(size_);
  for_each([&out](Value x) { out.push_back(x); });
  return out;
}

bool PicardSet::same_members(const PicardSet& other) const {
  if (size_ != other.size_) return false;
  const auto a = row_.words();
  const auto b = other.row_.words();
  const std::size_t n = std::min(a.size(), b.size());
  if (!std::equal(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(n), b.begin())) return false;
  // Sizes match, so any surplus words are zero.
  return true;
}

bool PicardSet::is_subset_of(const PicardSet& other) const {
  const auto a = row_.words();
  const auto b = other.row_.words();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::uint64_t bw = i < b.size() ? b[i] : 0;
    if ((a[i] & ~bw) != 0) return false;
  }
  return true;
}

void sumset_into(detail::BitRow& dst, const PicardSet& a, const PicardSet& b, detail::BitRow& scratch) {
  if (a.is_empty() || b.is_empty()) return;
  const bool a_drives = a.runs().size() <= b.runs().size();
  const PicardSet& driver = a_drives ? a : b;
  const PicardSet& other = a_drives ? b : a;
  const Value universe = dst.universe();
  const Value omin = *other.min();
  const Value omax = *other.max();
  const auto ow = other.words();
  const std::size_t olo = static_cast<std::size_t>(omin >> 6);
  const std::size_t ohi = static_cast<std::size_t>(omax >> 6);

  if (scratch.universe() != universe) scratch = detail::BitRow(universe);
  auto sw = scratch.words();
  auto dw = dst.words();
  const std::size_t last = dw.size() - 1;

  for (const Run& run : driver.runs()) {
    if (run.lo + omin > universe) break;
    const Value len = run.hi - run.lo + 1;
    if (len <= 4) {
      for (Value s = run.lo; s <= run.hi; ++s) detail::shift_or_words(dw, ow, s, olo, ohi);
      continue;
    }
    // scratch = (other << lo) + [0, len - 1], doubling the covered width.
    const std::size_t wlo = static_cast<std::size_t>((omin + run.lo) >> 6);
    const std::size_t whi = std::min(last, static_cast<std::size_t>((omax + run.hi) >> 6));
    std::fill(sw.begin() + static_cast<std::ptrdiff_t>(wlo), sw.begin() + static_cast<std::ptrdiff_t>(whi) + 1,
              std::uint64_t{0});
    detail::shift_or_words(sw, ow, run.lo, olo, ohi);
    Value top = omax + run.lo;
    Value cover = 1;
    while (cover < len) {
      const Value step = std::min(cover, len - cover);
      detail::self_shift_or_words(sw, step, wlo, std::min(last, static_cast<std::size_t>(top >> 6)));
      top += step;
      cover += step;
    }
    for (std::size_t i = wlo; i <= whi; ++i) dw[i] |= sw[i];
  }
  dst.trim();
}

PicardSet sumset(const PicardSet& a, const PicardSet& b) {
  const int dim = a.dim() + b.dim();
  detail::BitRow dst(static_cast<Value>(dim) * dim);
  detail::BitRow scratch(dst.universe());
  sumset_into(dst, a, b, scratch);
  return PicardSet::from_row(dim, std::move(dst));
}

std::vector<GapInterval> gaps_of(const PicardSet& s) {
  const Value top = s.universe();
  if (s.dim() == 0) return {};
  if (!s.contains(1) || !s.contains(top)) {
    throw std::invalid_argument("gaps_of: set must contain 1 and dim^2");
  }
  std::vector<GapInterval> out;
  const auto& runs = s.runs();
  for (std::size_t i = 0; i + 1 < runs.size(); ++i) {
    const Value lo = std::max<Value>(runs[i].hi + 1, 1);
    const Value hi = runs[i + 1].lo - 1;
    if (lo <= hi) out.push_back({lo, hi});
  }
  return out;
}

}  // namespace picard
