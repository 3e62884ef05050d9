#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lovasz {

// Malformed graph6 / edge-list input. `offset` is a byte offset for graph6
// and a 1-based line number for edge lists.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

private:
    std::size_t offset_;
};

// Argument outside the mathematical domain of an operation (pole hit,
// forbidden gamma band, interval outside the spectral interval, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Eigensolver non-convergence or a near-singular solve.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace lovasz
