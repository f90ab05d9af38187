#ifndef GRAPHEX_ERROR_HPP
#define GRAPHEX_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace graphex {

/// Argument outside an operation's domain (negative latent coordinate,
/// p outside [0,1], unknown vertex id, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An estimator whose formula is undefined on the given graph.
class UndefinedEstimate : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed input data, carrying the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Quadrature that failed to converge, or a sampling window with
/// non-finite mass.
class NumericalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace graphex

#endif  // GRAPHEX_ERROR_HPP
