// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PICARD_BLOCKS_HPP
#define PICARD_BLOCKS_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "picard/picard_set.hpp"

namespace picard {

/// Albert type of the endomorphism algebra of a simple abelian variety.
enum class EndoKind : std::uint8_t { I = 0, II = 1, III = 2, IV = 3 };

std::string_view to_string(EndoKind kind);
std::optional<EndoKind> parse_endo_kind(std::string_view text);

/// Endomorphism algebra of a simple factor, reduced to the data its Picard
/// numbers depend on: kinds I-III carry e = [K:Q], kind IV carries
/// v = e0 * d^2.
class EndoClass {
 public:
  /// Returns the class if a simple abelian variety of dimension base_dim with
  /// this data exists:
  ///   I:   e | m
  ///   II:  2e | m
  ///   III: 2e | m and m / 2e >= 2
  ///   IV:  v | m
  static std::optional<EndoClass> realizable(EndoKind kind, std::int64_t param, int base_dim);

  EndoKind kind() const { return kind_; }
  std::int64_t param() const { return param_; }

  auto operator<=>(const EndoClass&) const = default;

 private:
  EndoClass(EndoKind kind, std::int64_t param) : kind_(kind), param_(param) {}

  EndoKind kind_;
  std::int64_t param_;
};

bool is_realizable(EndoKind kind, std::int64_t param, int base_dim);

/// One isotypic factor B^k of a Poincare decomposition, B simple of
/// dimension m.
class Block {
 public:
  /// Throws std::invalid_argument if endo is not realizable in dimension m or
  /// m, k < 1.
  Block(int m, int k, EndoClass endo);

  int m() const { return m_; }
  int k() const { return k_; }
  const EndoClass& endo() const { return endo_; }
  Value rho() const { return rho_; }
  int dim() const { return m_ * k_; }

  bool operator==(const Block&) const = default;

 private:
  int m_;
  int k_;
  EndoClass endo_;
  Value rho_;
};

/// Certificate ordering: m descending, then k descending, kind I < II < III
/// < IV, then param ascending. "Less" means preferred.
bool certificate_order(const Block& a, const Block& b);

/// A multiset of blocks witnessing a Picard number in dimension g. Repeated
/// blocks stand for distinct isogeny classes with the same numerical data.
struct Decomposition {
  int g = 0;
  std::vector<Block> blocks;

  Value total_rho() const;
  int total_dim() const;
  /// Total dimension matches g and every block is well formed.
  bool is_consistent() const;
  /// Sorts blocks by certificate_order.
  void canonicalize();

  bool operator==(const Decomposition&) const = default;
};

}  // namespace picard

#endif  // PICARD_BLOCKS_HPP
