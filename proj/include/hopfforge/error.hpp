#pragma once

#include <stdexcept>
#include <string>

namespace hopfforge {

enum class ErrorKind {
    malformed_input,
    not_a_face,
    label_clash,
    non_simplicial_quotient,
    invalid_cocycle,
    unsupported_fixed_set,
    order_too_large,
    not_a_subcomplex,
    not_a_cycle,
    search_budget,
    degenerate_hull,
    build_error,
    no_adaptor_needed,
    search_exhausted,
    structure_error,
    polytope_error,
    corrupted_data,
    usage,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind)
    {
    }

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace hopfforge
