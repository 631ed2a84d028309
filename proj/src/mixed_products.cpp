#include "braidfree/mixed_products.hpp"

#include "braidfree/combinatorics.hpp"

namespace braidfree {

namespace {

struct PowerSums {
    std::int64_t triangle_square_sum = 0; // sum of m_ijk^2
    std::int64_t disjoint_product_sum = 0;
    std::int64_t total = 0;
    std::int64_t odd_triples = 0;
};

PowerSums power_sums(const MultiBraid& m) {
    PowerSums p;
    const int n = m.vertex_count();
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            p.total += m.at(i, j);
            for (int k = j + 1; k < n; ++k) {
                const std::int64_t t = triangle_sum(m, i, j, k);
                p.triangle_square_sum += t * t;
                p.odd_triples += t & 1;
            }
            for (int s = i; s < n; ++s) {
                for (int t = s + 1; t < n; ++t) {
                    if (std::make_pair(s, t) <= std::make_pair(i, j)) continue;
                    if (s == i || s == j || t == i || t == j) continue;
                    p.disjoint_product_sum += m.at(i, j) * m.at(s, t);
                }
            }
        }
    }
    return p;
}

} // namespace

std::int64_t sos_residual(const MultiBraid& m) {
    // Both sides scaled by 4l so the comparison is pure integer arithmetic:
    // 4l * (m_ijk/2)^2 sums to l * m_ijk^2 and 4l * C(l,2)|m|^2/l^2 is
    // 2(l-1)|m|^2.
    const std::int64_t ell = m.rank();
    const PowerSums p = power_sums(m);
    const std::int64_t lhs =
        ell * p.triangle_square_sum + 4 * ell * p.disjoint_product_sum - 2 * (ell - 1) * p.total * p.total;
    return lhs - deviation(m);
}

MixedProductReport mixed_products(const MultiBraid& m) {
    if (!is_balanced(m).balanced) {
        raise(errc::not_balanced, "mixed products require the balanced cone");
    }
    const std::int64_t ell = m.rank();
    const PowerSums p = power_sums(m);

    MixedProductReport report;
    report.lmp2 = rational(p.triangle_square_sum - p.odd_triples, 4) + p.disjoint_product_sum;
    report.gmp2_bound = rational(binomial(ell, 2) * p.total * p.total, ell * ell);
    report.remainder_p = p.total % ell;
    report.most_balanced_gmp2 =
        report.gmp2_bound - rational(report.remainder_p * (ell - report.remainder_p), 2 * ell);
    report.sos_residual =
        ell * p.triangle_square_sum + 4 * ell * p.disjoint_product_sum -
        2 * (ell - 1) * p.total * p.total - deviation(m);
    return report;
}

} // namespace braidfree
