#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace nct {

/// Base class of every error thrown by this library.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// --- exact arithmetic -------------------------------------------------------

class perfect_square_error : public error {
public:
    using error::error;
};

class zero_denominator_error : public error {
public:
    using error::error;
};

class field_mismatch_error : public error {
public:
    using error::error;
};

class division_by_zero_error : public error {
public:
    using error::error;
};

class singular_matrix_error : public error {
public:
    using error::error;
};

class negative_discriminant_error : public error {
public:
    using error::error;
};

class rational_roots_error : public error {
public:
    using error::error;
};

class degenerate_linear_error : public error {
public:
    using error::error;
};

/// Square-part extraction of a radicand exceeded the supported search bounds.
class canonicalization_error : public error {
public:
    using error::error;
};

/// Rejected literal; carries the byte offset of the first offending character.
class syntax_error : public error {
public:
    syntax_error(const std::string& what, std::size_t position)
        : error(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// --- continued fractions ----------------------------------------------------

class not_enough_terms_error : public error {
public:
    using error::error;
};

class rational_expansion_error : public error {
public:
    using error::error;
};

// --- tori and the functor ---------------------------------------------------

class rational_theta_error : public error {
public:
    using error::error;
};

class invalid_order_error : public error {
public:
    using error::error;
};

class no_nontrivial_generator_error : public error {
public:
    using error::error;
};

class nonpositive_period_error : public error {
public:
    using error::error;
};

class singular_lambda_error : public error {
public:
    using error::error;
};

// --- dataset ingestion ------------------------------------------------------

class dataset_io_error : public error {
public:
    using error::error;
};

class dataset_parse_error : public error {
public:
    dataset_parse_error(const std::string& what, std::size_t position)
        : error(what), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

class schema_error : public error {
public:
    schema_error(const std::string& field, const std::string& reason)
        : error("field '" + field + "': " + reason), field_(field), reason_(reason) {}

    const std::string& field() const noexcept { return field_; }
    const std::string& reason() const noexcept { return reason_; }

private:
    std::string field_;
    std::string reason_;
};

class duplicate_label_error : public error {
public:
    using error::error;
};

}  // namespace nct
