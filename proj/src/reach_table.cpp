// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#include "picard/reach_table.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <limits>
#include <string>
#include <thread>
#include <tuple>
#include <unordered_set>

#include "picard/murty.hpp"

namespace picard {

EngineConfig EngineConfig::from_environment() {
  EngineConfig config;
  if (const char* env = std::getenv("PICARD_G_CAP"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (*end != '\0' || value < 1 || value > std::numeric_limits<int>::max()) {
      throw std::invalid_argument(std::string("PICARD_G_CAP must be a positive integer, got '") + env + "'");
    }
    config.g_cap = static_cast<int>(value);
  }
  return config;
}

std::vector<Block> block_generators(int dim) {
  std::vector<Block> out;
  for (std::int64_t k : divisors(dim)) {
    const int m = dim / static_cast<int>(k);
    for (const EndoClass& c : realizable_classes(m)) out.emplace_back(m, static_cast<int>(k), c);
  }
  std::sort(out.begin(), out.end(), certificate_order);
  return out;
}

ReachTable::ReachTable(EngineConfig config) : config_(config) {
  if (config_.threads == 0) config_.threads = 1;
  rows_.emplace_back();
  generators_.emplace_back();
  pointers_.push_back({Pointer{0, 0, 0}});
}

void ReachTable::check_dim(int g) const {
  if (g < 0) throw std::invalid_argument("dimension must be non-negative");
  if (g > config_.g_cap) {
    throw ResourceLimitError("dimension " + std::to_string(g) + " exceeds the cap " +
                             std::to_string(config_.g_cap));
  }
}

const PicardSet& ReachTable::compute_R(int g) {
  check_dim(g);
  std::lock_guard lock(mutex_);
  extend_rows(g);
  return rows_[static_cast<std::size_t>(g)];
}

void ReachTable::extend_rows(int g) {
  for (int d = static_cast<int>(rows_.size()); d <= g; ++d) {
    const Value universe = static_cast<Value>(d) * d;
    detail::BitRow row(universe);
    for (std::int64_t k : divisors(d)) {
      for (Value v : self_product_spectrum(d / static_cast<int>(k), static_cast<int>(k))) row.set(v);
    }

    const int splits = d / 2;
    const unsigned workers = std::min<unsigned>(config_.threads, static_cast<unsigned>(std::max(splits, 1)));
    if (workers <= 1) {
      detail::BitRow scratch(universe);
      for (int n = 1; n <= splits; ++n) {
        sumset_into(row, rows_[static_cast<std::size_t>(n)], rows_[static_cast<std::size_t>(d - n)], scratch);
      }
    } else {
      // Round-robin splits; OR is order independent so the row is identical
      // for every worker count.
      std::vector<detail::BitRow> partial(workers, detail::BitRow(universe));
      {
        std::vector<std::jthread> pool;
        for (unsigned w = 0; w < workers; ++w) {
          pool.emplace_back([this, d, splits, workers, w, universe, &partial] {
            detail::BitRow scratch(universe);
            for (int n = 1 + static_cast<int>(w); n <= splits; n += static_cast<int>(workers)) {
              sumset_into(partial[w], rows_[static_cast<std::size_t>(n)],
                          rows_[static_cast<std::size_t>(d - n)], scratch);
            }
          });
        }
      }
      for (const auto& p : partial) row.or_with(p);
    }
    rows_.push_back(PicardSet::from_row(d, std::move(row)));
  }
}

const std::vector<Block>& ReachTable::generators_locked(int dim) {
  while (static_cast<int>(generators_.size()) <= dim) {
    generators_.push_back(block_generators(static_cast<int>(generators_.size())));
  }
  return generators_[static_cast<std::size_t>(dim)];
}

void ReachTable::extend_pointers(int g) {
  const int built = static_cast<int>(pointers_.size()) - 1;
  if (built >= g) return;
  extend_rows(g);

  // Generators of dimension <= g in global certificate order. Later
  // generators with an already-seen (dim, rho) can never strictly improve a
  // cell, so they are dropped.
  struct Candidate {
    const Block* block;
    std::uint32_t dim;
    std::uint16_t index;
  };
  std::vector<Candidate> order;
  for (int dim = 1; dim <= g; ++dim) {
    const auto& gens = generators_locked(dim);
    for (std::size_t j = 0; j < gens.size(); ++j) {
      order.push_back({&gens[j], static_cast<std::uint32_t>(dim), static_cast<std::uint16_t>(j)});
    }
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Candidate& a, const Candidate& b) { return certificate_order(*a.block, *b.block); });
  {
    std::vector<Candidate> unique;
    std::unordered_set<std::uint64_t> seen;
    for (const Candidate& c : order) {
      const std::uint64_t key = (static_cast<std::uint64_t>(c.dim) << 40) | static_cast<std::uint64_t>(c.block->rho());
      if (seen.insert(key).second) unique.push_back(c);
    }
    order.swap(unique);
  }

  for (int d = built + 1; d <= g; ++d) {
    std::vector<Pointer> cells(static_cast<std::size_t>(d) * d + 1, Pointer{kUnreached, 0, 0});
    for (const Candidate& c : order) {
      if (static_cast<int>(c.dim) > d) continue;
      const auto& prev = pointers_[static_cast<std::size_t>(d) - c.dim];
      const Value r = c.block->rho();
      for (std::size_t x = 0; x < prev.size(); ++x) {
        if (prev[x].count == kUnreached) continue;
        const std::uint16_t count = static_cast<std::uint16_t>(prev[x].count + 1);
        Pointer& cell = cells[x + static_cast<std::size_t>(r)];
        if (count < cell.count) cell = Pointer{count, c.index, c.dim};
      }
    }
    pointers_.push_back(std::move(cells));
  }
}

std::optional<Decomposition> ReachTable::find_certificate(int g, Value rho) {
  check_dim(g);
  if (g < 1) throw std::invalid_argument("find_certificate: g must be positive");
  if (rho < 1 || rho > static_cast<Value>(g) * g) {
    throw std::invalid_argument("find_certificate: rho must lie in [1, g^2]");
  }
  std::lock_guard lock(mutex_);
  extend_pointers(g);
  if (pointers_[static_cast<std::size_t>(g)][static_cast<std::size_t>(rho)].count == kUnreached) return std::nullopt;

  Decomposition out;
  out.g = g;
  int d = g;
  Value x = rho;
  while (d > 0) {
    const Pointer& p = pointers_[static_cast<std::size_t>(d)][static_cast<std::size_t>(x)];
    const Block& b = generators_[p.dim][p.gen];
    out.blocks.push_back(b);
    d -= static_cast<int>(p.dim);
    x -= b.rho();
  }
  return out;
}

ShapeEnumeration ReachTable::enumerate_shapes(int g, Value rho, std::size_t max_count) {
  check_dim(g);
  if (g < 1) throw std::invalid_argument("enumerate_shapes: g must be positive");
  if (rho < 1 || rho > static_cast<Value>(g) * g) {
    throw std::invalid_argument("enumerate_shapes: rho must lie in [1, g^2]");
  }
  std::vector<ShapeBlock> gens;
  std::vector<const PicardSet*> rows;
  {
    std::lock_guard lock(mutex_);
    extend_rows(g);
    for (int dim = 1; dim <= g; ++dim) {
      for (const Block& b : generators_locked(dim)) gens.push_back({b.m(), b.k(), b.rho()});
    }
    for (int dim = 0; dim <= g; ++dim) rows.push_back(&rows_[static_cast<std::size_t>(dim)]);
  }
  std::sort(gens.begin(), gens.end(), [](const ShapeBlock& a, const ShapeBlock& b) {
    return std::tuple(-a.m, -a.k, a.rho) < std::tuple(-b.m, -b.k, b.rho);
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

  ShapeEnumeration result;
  Shape current;
  // (remaining dim, remaining rho, first generator) states with no completion.
  struct State {
    int d;
    Value x;
    std::size_t first;
    bool operator==(const State&) const = default;
  };
  struct StateHash {
    std::size_t operator()(const State& s) const {
      std::size_t h = std::hash<Value>{}(s.x);
      h ^= std::hash<std::size_t>{}(s.first) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      h ^= std::hash<int>{}(s.d) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };
  std::unordered_set<State, StateHash> dead;

  // Returns true if at least one completion was found below this state.
  std::function<bool(int, Value, std::size_t)> dfs = [&](int d, Value x, std::size_t first) -> bool {
    if (d == 0) {
      if (x != 0) return false;
      if (result.shapes.size() == max_count) {
        result.truncated = true;
      } else {
        result.shapes.push_back(current);
      }
      return true;
    }
    const State key{d, x, first};
    if (dead.contains(key)) return false;
    bool found = false;
    for (std::size_t i = first; i < gens.size() && !result.truncated; ++i) {
      const ShapeBlock& b = gens[i];
      const int dim = b.m * b.k;
      if (dim > d || b.rho > x) continue;
      if (!rows[static_cast<std::size_t>(d - dim)]->contains(x - b.rho)) continue;
      current.push_back(b);
      found = dfs(d - dim, x - b.rho, i) || found;
      current.pop_back();
    }
    if (!found) dead.insert(key);
    return found;
  };
  dfs(g, rho, 0);
  return result;
}

Value ReachTable::max_picard_with_blocks(int g, int r) {
  check_dim(g);
  if (r < 1 || r > g) throw std::invalid_argument("max_picard_with_blocks: need 1 <= r <= g");
  std::vector<Value> best_block(static_cast<std::size_t>(g) + 1, 0);
  {
    std::lock_guard lock(mutex_);
    for (int dim = 1; dim <= g; ++dim) {
      for (const Block& b : generators_locked(dim)) {
        best_block[static_cast<std::size_t>(dim)] = std::max(best_block[static_cast<std::size_t>(dim)], b.rho());
      }
    }
  }
  // best[d] after c rounds: largest total over exactly c blocks of total
  // dimension d, or -1 when no such decomposition exists.
  std::vector<Value> best(static_cast<std::size_t>(g) + 1, -1);
  best[0] = 0;
  for (int c = 1; c <= r; ++c) {
    std::vector<Value> next(best.size(), -1);
    for (int d = 1; d <= g; ++d) {
      for (int dim = 1; dim <= d; ++dim) {
        const Value prev = best[static_cast<std::size_t>(d - dim)];
        if (prev < 0) continue;
        next[static_cast<std::size_t>(d)] =
            std::max(next[static_cast<std::size_t>(d)], prev + best_block[static_cast<std::size_t>(dim)]);
      }
    }
    best.swap(next);
  }
  return best[static_cast<std::size_t>(g)];
}

std::vector<PicardSet> closure_rows(int g_max) {
  if (g_max < 0) throw std::invalid_argument("closure_rows: g_max must be non-negative");
  std::vector<std::vector<Value>> single(static_cast<std::size_t>(g_max) + 1);
  for (int dim = 1; dim <= g_max; ++dim) {
    auto& values = single[static_cast<std::size_t>(dim)];
    for (std::int64_t k : divisors(dim)) {
      const auto s = self_product_spectrum(dim / static_cast<int>(k), static_cast<int>(k));
      values.insert(values.end(), s.begin(), s.end());
    }
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
  }

  std::vector<PicardSet> rows;
  rows.emplace_back();
  for (int d = 1; d <= g_max; ++d) {
    detail::BitRow row(static_cast<Value>(d) * d);
    for (int dim = 1; dim <= d; ++dim) {
      const detail::BitRow& prev = rows[static_cast<std::size_t>(d - dim)].row();
      for (Value r : single[static_cast<std::size_t>(dim)]) row.shift_or(prev, r);
    }
    rows.push_back(PicardSet::from_row(d, std::move(row)));
  }
  return rows;
}

PicardSet oracle_R(int g) {
  if (g < 0) throw std::invalid_argument("oracle_R: g must be non-negative");
  if (g > kOracleGCap) {
    throw ResourceLimitError("oracle_R refuses g = " + std::to_string(g) + " (cap " + std::to_string(kOracleGCap) + ")");
  }
  if (g == 0) return PicardSet();

  struct Pair {
    int m;
    int k;
    std::vector<Value> spectrum;
  };
  std::vector<Pair> pairs;
  for (int m = 1; m <= g; ++m) {
    for (int k = 1; m * k <= g; ++k) pairs.push_back({m, k, self_product_spectrum(m, k)});
  }

  std::vector<Value> found;
  // Choose a multiset of pairs by non-decreasing index, carrying every
  // partial sum reachable by the choices so far.
  std::function<void(std::size_t, int, const std::vector<Value>&)> walk =
      [&](std::size_t first, int remaining, const std::vector<Value>& sums) {
        if (remaining == 0) {
          found.insert(found.end(), sums.begin(), sums.end());
          return;
        }
        for (std::size_t i = first; i < pairs.size(); ++i) {
          const Pair& p = pairs[i];
          if (p.m * p.k > remaining) continue;
          std::vector<Value> next;
          for (Value s : sums) {
            for (Value v : p.spectrum) next.push_back(s + v);
          }
          std::sort(next.begin(), next.end());
          next.erase(std::unique(next.begin(), next.end()), next.end());
          walk(i, remaining - p.m * p.k, next);
        }
      };
  walk(0, g, {0});
  return PicardSet::from_members(g, found);
}

}  // namespace picard
