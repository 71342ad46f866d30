// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#include "picard/blocks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include "picard/murty.hpp"

namespace picard {

std::string_view to_string(EndoKind kind) {
  switch (kind) {
    case EndoKind::I:
      return "I";
    case EndoKind::II:
      return "II";
    case EndoKind::III:
      return "III";
    case EndoKind::IV:
      return "IV";
  }
  return "?";
}

std::optional<EndoKind> parse_endo_kind(std::string_view text) {
  if (text == "I") return EndoKind::I;
  if (text == "II") return EndoKind::II;
  if (text == "III") return EndoKind::III;
  if (text == "IV") return EndoKind::IV;
  return std::nullopt;
}

bool is_realizable(EndoKind kind, std::int64_t param, int base_dim) {
  if (param < 1 || base_dim < 1) return false;
  const std::int64_t m = base_dim;
  switch (kind) {
    case EndoKind::I:
    case EndoKind::IV:
      return m % param == 0;
    case EndoKind::II:
      return m % (2 * param) == 0;
    case EndoKind::III:
      // m / 2e = 1 forces A to be isogenous to a square.
      return m % (2 * param) == 0 && m / (2 * param) >= 2;
  }
  return false;
}

std::optional<EndoClass> EndoClass::realizable(EndoKind kind, std::int64_t param, int base_dim) {
  if (!is_realizable(kind, param, base_dim)) return std::nullopt;
  return EndoClass(kind, param);
}

Block::Block(int m, int k, EndoClass endo) : m_(m), k_(k), endo_(endo), rho_(0) {
  if (m < 1 || k < 1) throw std::invalid_argument("Block: m and k must be positive");
  if (!is_realizable(endo.kind(), endo.param(), m)) {
    throw std::invalid_argument("Block: type " + std::string(to_string(endo.kind())) + " with param " +
                                std::to_string(endo.param()) + " is not realizable in dimension " +
                                std::to_string(m));
  }
  rho_ = rho_power(endo, k);
}

bool certificate_order(const Block& a, const Block& b) {
  return std::tuple(-a.m(), -a.k(), a.endo().kind(), a.endo().param()) <
         std::tuple(-b.m(), -b.k(), b.endo().kind(), b.endo().param());
}

Value Decomposition::total_rho() const {
  Value total = 0;
  for (const Block& b : blocks) total += b.rho();
  return total;
}

int Decomposition::total_dim() const {
  int total = 0;
  for (const Block& b : blocks) total += b.dim();
  return total;
}

bool Decomposition::is_consistent() const {
  if (g < 1 || blocks.empty() || total_dim() != g) return false;
  return std::all_of(blocks.begin(), blocks.end(), [](const Block& b) {
    return is_realizable(b.endo().kind(), b.endo().param(), b.m()) && b.rho() == rho_power(b.endo(), b.k());
  });
}

void Decomposition::canonicalize() { std::stable_sort(blocks.begin(), blocks.end(), certificate_order); }

}  // namespace picard
