#include "braidfree/error.hpp"

namespace braidfree {

const char* errc_name(errc code) {
    switch (code) {
    case errc::missing_pair: return "missing pair";
    case errc::duplicate_pair: return "duplicate pair";
    case errc::non_positive_multiplicity: return "non-positive multiplicity";
    case errc::index_out_of_range: return "index out of range";
    case errc::subset_too_small: return "subset too small";
    case errc::not_balanced: return "not balanced";
    case errc::size_mismatch: return "size mismatch";
    case errc::instance_too_large: return "instance too large";
    case errc::not_a_permutation: return "not a permutation";
    case errc::too_large: return "too large";
    case errc::too_small: return "too small";
    case errc::non_positive_result: return "non-positive result";
    case errc::not_a_free_vertex: return "not a free vertex";
    case errc::budget_exceeded: return "budget exceeded";
    case errc::internal_inconsistency: return "internal inconsistency";
    case errc::bad_input: return "bad input";
    }
    return "unknown error";
}

} // namespace braidfree
