#pragma once

#include <stdexcept>
#include <string>

namespace qclimit {

/// Invalid argument or violated domain-type invariant.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Unusable runtime configuration (missing or unreadable files).
class configuration_error : public std::runtime_error {
public:
    explicit configuration_error(const std::string& what) : std::runtime_error(what) {}
};

/// Request outside the supported evaluation range of an operation.
class out_of_range_error : public validation_error {
public:
    explicit out_of_range_error(const std::string& what) : validation_error(what) {}
};

/// Evaluation point outside an operation's mathematical domain.
class domain_error : public validation_error {
public:
    explicit domain_error(const std::string& what) : validation_error(what) {}
};

} // namespace qclimit
