#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace braidfree {

/// C(n, k) with the vanishing convention: 0 whenever n < k, n < 0 or k < 0.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Visits every k-subset of {0,...,n-1} in lexicographic order. The visitor
/// may return false to stop early; the function returns false iff it stopped.
bool for_each_combination(int n, int k, const std::function<bool(std::span<const int>)>& visit);

/// Visits every subset of {0,...,n-1} with at least min_size elements,
/// ordered by size and then lexicographically within each size.
bool for_each_subset_by_size(int n, int min_size,
                             const std::function<bool(std::span<const int>)>& visit);

} // namespace braidfree
