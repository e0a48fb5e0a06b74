#pragma once

#include <stdexcept>
#include <string>

namespace fsind {

/// Bad input: unreadable files, malformed specs, arguments outside an
/// operation's domain. Maps to CLI exit code 2.
struct input_error : std::runtime_error {
    explicit input_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A violated internal invariant ("broken math", not bad data).
/// Maps to CLI exit code 3.
struct integrity_error : std::runtime_error {
    explicit integrity_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A value expected to be a rational integer is not one.
struct not_an_integer : integrity_error {
    explicit not_an_integer(const std::string& msg) : integrity_error(msg) {}
};

} // namespace fsind
