// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#include "picard/murty.hpp"

#include <algorithm>
#include <stdexcept>

namespace picard {

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n must be positive");
  std::vector<std::int64_t> low;
  std::vector<std::int64_t> high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

Value rho_power(const EndoClass& endo, int k) {
  if (k < 1) throw std::invalid_argument("rho_power: k must be positive");
  const Value e = endo.param();
  const Value kk = k;
  switch (endo.kind()) {
    case EndoKind::I:
      return e * kk * (kk + 1) / 2;
    case EndoKind::II:
      return e * kk * (2 * kk + 1);
    case EndoKind::III:
      return e * kk * (2 * kk - 1);
    case EndoKind::IV:
      return e * kk * kk;
  }
  return 0;
}

std::vector<EndoClass> realizable_classes(int m) {
  if (m < 1) throw std::invalid_argument("realizable_classes: m must be positive");
  std::vector<EndoClass> out;
  const auto divs = divisors(m);
  for (EndoKind kind : {EndoKind::I, EndoKind::II, EndoKind::III, EndoKind::IV}) {
    for (std::int64_t d : divs) {
      if (auto c = EndoClass::realizable(kind, d, m)) out.push_back(*c);
    }
  }
  return out;
}

std::vector<Value> self_product_spectrum(int m, int k) {
  std::vector<Value> out;
  for (const EndoClass& c : realizable_classes(m)) out.push_back(rho_power(c, k));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Value> simple_spectrum(int m) { return self_product_spectrum(m, 1); }

}  // namespace picard
