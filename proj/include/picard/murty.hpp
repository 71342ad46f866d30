// Copyright 2026 The picard-range Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef PICARD_MURTY_HPP
#define PICARD_MURTY_HPP

#include <cstdint>
#include <vector>

#include "picard/blocks.hpp"

namespace picard {

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Picard number of A^k for A simple with endomorphism class endo:
///   I:   e k(k+1)/2
///   II:  e k(2k+1)
///   III: e k(2k-1)
///   IV:  v k^2
Value rho_power(const EndoClass& endo, int k);

/// Every endomorphism class realizable by a simple abelian variety of
/// dimension m, ordered by kind then param.
std::vector<EndoClass> realizable_classes(int m);

/// Picard numbers of simple abelian varieties of dimension m, ascending.
std::vector<Value> simple_spectrum(int m);

/// Picard numbers of A^k over simple A of dimension m, ascending.
std::vector<Value> self_product_spectrum(int m, int k);

}  // namespace picard

#endif  // PICARD_MURTY_HPP
