#pragma once

#include <stdexcept>
#include <string>

namespace wpl {

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invalid_weight_error : error {
    using error::error;
};

struct invalid_monomial_error : error {
    using error::error;
};

struct parse_error : error {
    using error::error;
};

/// Weights outside the Dynkin range have no presentation table row.
struct no_table_row_error : error {
    using error::error;
};

struct inversion_error : error {
    using error::error;
};

struct indefinite_form_error : error {
    using error::error;
};

/// A root reached the enumeration box boundary, so the box may be truncating the root set.
struct box_too_small_error : error {
    using error::error;
};

} // namespace wpl
