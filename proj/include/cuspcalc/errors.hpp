#pragma once

#include <stdexcept>
#include <string>

namespace cuspcalc {

// Precondition violation on caller-supplied data. The CLI maps this to exit 2.
class InvalidArgument : public std::invalid_argument {
public:
    explicit InvalidArgument(const std::string& what) : std::invalid_argument(what) {}
};

// A contraction simulation failed (graph stuck or wrong survivor).
class ContractionError : public std::runtime_error {
public:
    explicit ContractionError(const std::string& what) : std::runtime_error(what) {}
};

// Two routes that must agree by theory disagreed; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

} // namespace cuspcalc
