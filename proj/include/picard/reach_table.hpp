// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PICARD_REACH_TABLE_HPP
#define PICARD_REACH_TABLE_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <vector>

#include "picard/blocks.hpp"
#include "picard/picard_set.hpp"

namespace picard {

inline constexpr int kDefaultGCap = 4096;
inline constexpr int kOracleGCap = 12;

/// A requested dimension exceeds a configured cap.
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct EngineConfig {
  int g_cap = kDefaultGCap;
  /// Worker threads used inside one row; results do not depend on it.
  unsigned threads = 1;

  /// Defaults, with PICARD_G_CAP applied when set. Throws
  /// std::invalid_argument if the variable is not a positive integer.
  static EngineConfig from_environment();
};

/// Every block of total dimension dim (m * k = dim, every realizable class),
/// in certificate order.
std::vector<Block> block_generators(int dim);

/// Isogeny-type shape of a block with the endomorphism kind forgotten.
struct ShapeBlock {
  int m;
  int k;
  Value rho;
  auto operator<=>(const ShapeBlock&) const = default;
};
using Shape = std::vector<ShapeBlock>;

struct ShapeEnumeration {
  std::vector<Shape> shapes;
  bool truncated = false;
};

/// Memoized R_d for every d up to the highest dimension requested, plus a
/// lazily built back-pointer store for certificates.
///
/// Rows follow R_d = U_{k | d} S(d/k, k) U U_{1 <= n <= d/2} (R_n + R_{d-n})
/// and are never modified once published. All public members are safe to
/// call concurrently.
class ReachTable {
 public:
  explicit ReachTable(EngineConfig config = {});

  const EngineConfig& config() const { return config_; }

  /// R_g; R_0 = {0}. Throws ResourceLimitError above the cap and
  /// std::invalid_argument for negative g. The reference stays valid for
  /// the lifetime of the table.
  const PicardSet& compute_R(int g);

  /// A decomposition with the fewest blocks, ties broken by the
  /// lexicographically smallest block sequence in certificate order, or
  /// nullopt if rho is not in R_g. Requires 1 <= rho <= g^2.
  std::optional<Decomposition> find_certificate(int g, Value rho);

  /// Distinct multisets of (m, k, rho) realizing (g, rho), at most max_count.
  /// Blocks in each shape are ordered m descending, k descending, rho
  /// ascending.
  ShapeEnumeration enumerate_shapes(int g, Value rho, std::size_t max_count);

  /// Maximum Picard number over decompositions with exactly r blocks.
  Value max_picard_with_blocks(int g, int r);

 private:
  struct Pointer {
    std::uint16_t count;  // fewest blocks; kUnreached if unreachable
    std::uint16_t gen;    // index into generators_[dim]
    std::uint32_t dim;    // generator dimension
  };
  static constexpr std::uint16_t kUnreached = 0xFFFF;

  void check_dim(int g) const;
  void extend_rows(int g);
  void extend_pointers(int g);
  const std::vector<Block>& generators_locked(int dim);

  EngineConfig config_;
  std::mutex mutex_;
  std::deque<PicardSet> rows_;
  std::vector<std::vector<Block>> generators_;
  std::vector<std::vector<Pointer>> pointers_;
};

/// R_0..R_g_max via the block-generator closure
/// R_d = U_{D <= d} U_{r single-block value of dim D} (R_{d-D} + r).
std::vector<PicardSet> closure_rows(int g_max);

/// R_g by enumerating every multiset of (m, k) with sum m k = g and every
/// choice of self-product value per pair. Refuses g > kOracleGCap.
PicardSet oracle_R(int g);

}  // namespace picard

#endif  // PICARD_REACH_TABLE_HPP
