#ifndef CARLITZ_ERRORS_HPP
#define CARLITZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace carlitz {

// Base for all library errors.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Mathematically invalid request (inversion of zero, division by zero poly).
struct domain_error : error {
    using error::error;
};

// Caller broke a precondition (mixed field contexts, bad indices, unknown variable).
struct usage_error : error {
    using error::error;
};

// An enumeration or truncation bound was exceeded.
struct resource_error : error {
    using error::error;
};

// A matrix inversion hit repeated nodes.
struct singular_error : error {
    using error::error;
};

// An identity that must hold by theorem failed; indicates a bug in this library.
struct internal_error : error {
    using error::error;
};

// Requested a closed form outside the range where one exists.
struct unsupported_error : error {
    using error::error;
};

// Literal parsing failure; column is 1-based.
struct parse_error : error {
    explicit parse_error(const std::string& what, std::size_t column)
        : error(what + " (column " + std::to_string(column) + ")"), column(column) {}
    std::size_t column;
};

}  // namespace carlitz

#endif
