#include "braidfree/combinatorics.hpp"

namespace braidfree {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || n < k) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;
    }
    return result;
}

bool for_each_combination(int n, int k, const std::function<bool(std::span<const int>)>& visit) {
    if (k < 0 || k > n) return true;
    std::vector<int> c(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) c[static_cast<std::size_t>(i)] = i;
    while (true) {
        if (!visit(c)) return false;
        int i = k - 1;
        while (i >= 0 && c[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return true;
        ++c[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) {
            c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
}

bool for_each_subset_by_size(int n, int min_size,
                             const std::function<bool(std::span<const int>)>& visit) {
    for (int k = min_size; k <= n; ++k) {
        if (!for_each_combination(n, k, visit)) return false;
    }
    return true;
}

} // namespace braidfree
