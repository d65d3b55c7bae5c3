#pragma once

#include <stdexcept>
#include <string>

namespace stargate {

/// Bad argument values (non-prime modulus, singular matrix, ...).
class argument_error : public std::invalid_argument {
public:
    explicit argument_error(const std::string& msg) : std::invalid_argument(msg) {}
};

/// A documented operation precondition does not hold.
class precondition_error : public std::domain_error {
public:
    explicit precondition_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Structurally valid but degenerate input (zero polynomial mod p, empty dims, ...).
class degenerate_input_error : public std::domain_error {
public:
    explicit degenerate_input_error(const std::string& msg) : std::domain_error(msg) {}
};

/// A bounded search ran out of candidates.
class not_found_error : public std::runtime_error {
public:
    explicit not_found_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// An internal invariant failed to verify.
class internal_error : public std::logic_error {
public:
    explicit internal_error(const std::string& msg) : std::logic_error(msg) {}
};

} // namespace stargate
