#pragma once

#include "qd/fusion.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>

namespace qd {

/// Fusion support of one double: bitmask per (a, b) of the simples appearing
/// in V_a (x) V_b, computed from the Verlinde formula.
struct FusionTable {
  int count = 0;                  // number of simples (<= 64)
  std::vector<uint64_t> support;  // [a * count + b]
  uint64_t all = 0;

  uint64_t fuse(int a, int b) const { return support[static_cast<size_t>(a) * count + b]; }
};

FusionTable fusion_table(const FiniteGroup& G);

/// Least set containing the summands and closed under fusing with them.
/// Equals the union of the supports of all tensor powers of the sum.
uint64_t support_closure(const FusionTable& T, const std::vector<int>& summands);

/// Simples appearing in each tensor power V^{(x)k}, k = 1..max_depth.
std::vector<uint64_t> tensor_power_supports(const FusionTable& T, const std::vector<int>& summands,
                                            int max_depth);

bool is_inner_faithful(const FusionTable& T, const std::vector<int>& summands);

struct Census {
  int k_min = 0;
  long long multiset_count = 0;  // inner-faithful multisets of size k_min
  long long set_count = 0;       // inner-faithful k_min-subsets of distinct simples
  bool conventions_agree = false;
  std::vector<std::vector<int>> sums;  // the multisets, lexicographic
};

/// Smallest number of simple summands admitting an inner-faithful sum, with
/// the census reported under both the multiset and the set convention.
Census minimal_inner_faithful(const FusionTable& T);

}  // namespace qd
