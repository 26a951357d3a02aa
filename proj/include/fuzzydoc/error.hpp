#pragma once

#include <stdexcept>
#include <string>

namespace fuzzydoc {

/// Raised when the data itself makes an operation impossible (an empty
/// document, a cluster that lost all its members, no usable features).
/// Precondition violations on parameters use std::invalid_argument instead.
class DataError : public std::runtime_error {
public:
    explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fuzzydoc
