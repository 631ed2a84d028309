#pragma once

#include <boost/rational.hpp>
#include <cstdint>

#include "braidfree/multi_braid.hpp"

namespace braidfree {

using rational = boost::rational<std::int64_t>;

struct MixedProductReport {
    rational lmp2;                 // sum over rank-2 flats of exponent products
    rational gmp2_bound;           // C(l,2) * |m|^2 / l^2
    rational most_balanced_gmp2;   // gmp2_bound - p(l-p)/(2l)
    std::int64_t remainder_p = 0;  // |m| mod l
    std::int64_t sos_residual = 0; // always 0: the scaled sum-of-squares identity
};

/// Exact local/global mixed product data for a balanced multiplicity.
/// Throws not_balanced outside the balanced cone (the local formula relies on
/// the maximally balanced rank-2 exponents).
MixedProductReport mixed_products(const MultiBraid& m);

/// Residual of the identity
///   4l * (sum (m_ijk/2)^2 + sum_disjoint m_ij m_st - C(l,2)|m|^2/l^2) = DV(m),
/// computed in scaled integer arithmetic. Identically zero for every input.
std::int64_t sos_residual(const MultiBraid& m);

} // namespace braidfree
