#pragma once

#include <stdexcept>
#include <string>

namespace hhl {

/// Base class for every error raised by the library. `kind()` is a short
/// stable tag ("invalid-cell", "budget", ...) used by the CLI as a reason prefix.
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(what), kind_(std::move(kind)) {}

    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

class InvalidCellError : public Error {
public:
    explicit InvalidCellError(const std::string& what) : Error("invalid-cell", what) {}
};

class RowRangeError : public Error {
public:
    explicit RowRangeError(const std::string& what) : Error("row-range", what) {}
};

class InvalidPartitionError : public Error {
public:
    explicit InvalidPartitionError(const std::string& what) : Error("invalid-partition", what) {}
};

class InvalidFillingError : public Error {
public:
    explicit InvalidFillingError(const std::string& what) : Error("invalid-filling", what) {}
};

class ShapeMismatchError : public Error {
public:
    explicit ShapeMismatchError(const std::string& what) : Error("shape-mismatch", what) {}
};

class BudgetExceededError : public Error {
public:
    explicit BudgetExceededError(const std::string& what) : Error("budget", what) {}
};

class RingMismatchError : public Error {
public:
    explicit RingMismatchError(const std::string& what) : Error("ring-mismatch", what) {}
};

class SymmetryViolationError : public Error {
public:
    explicit SymmetryViolationError(const std::string& what) : Error("symmetry", what) {}
};

class InvalidArgumentError : public Error {
public:
    explicit InvalidArgumentError(const std::string& what) : Error("invalid-argument", what) {}
};

}  // namespace hhl
