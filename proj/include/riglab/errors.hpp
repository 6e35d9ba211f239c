#pragma once

#include <stdexcept>
#include <string>

namespace riglab {

/// Malformed input (bad JSON, missing fields, wrong types). CLI exit code 2.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

/// Structurally well-formed input that violates an instance invariant.
/// CLI exit code 3.
struct invalid_instance : std::runtime_error {
    explicit invalid_instance(const std::string& what) : std::runtime_error(what) {}
};

/// Enumeration exceeded a configured cap; the instance is too large rather
/// than wrong, but it cannot be processed. CLI exit code 3.
struct cap_exceeded : invalid_instance {
    explicit cap_exceeded(const std::string& what) : invalid_instance(what) {}
};

/// Two independent computations of the same quantity disagreed. CLI exit
/// code 4 with a reproducer dump.
struct cross_check_error : std::runtime_error {
    explicit cross_check_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace riglab
