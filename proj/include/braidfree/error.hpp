#pragma once

#include <stdexcept>
#include <string>

namespace braidfree {

enum class errc {
    missing_pair,
    duplicate_pair,
    non_positive_multiplicity,
    index_out_of_range,
    subset_too_small,
    not_balanced,
    size_mismatch,
    instance_too_large,
    not_a_permutation,
    too_large,
    too_small,
    non_positive_result,
    not_a_free_vertex,
    budget_exceeded,
    internal_inconsistency,
    bad_input,
};

const char* errc_name(errc code);

class error : public std::runtime_error {
public:
    error(errc code, const std::string& message)
        : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

[[noreturn]] inline void raise(errc code, const std::string& message) {
    throw error(code, message);
}

} // namespace braidfree
