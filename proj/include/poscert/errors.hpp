#ifndef POSCERT_ERRORS_HPP
#define POSCERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace poscert {

// Argument outside the mathematical domain of an operation
// (division by a zero-containing interval, log of a nonpositive
// interval, exponent out of the admissible range, ...).
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// A requested enclosure width cannot be certified at the working
// precision (e.g. bisection stagnates because the function enclosure
// at the midpoint straddles zero at maximum refinement).
class precision_error : public std::runtime_error {
public:
    explicit precision_error(const std::string& what) : std::runtime_error(what) {}
};

// Inconsistent or missing configuration (no eigenvalue source for a
// Poincare constant, empty candidate list, malformed input file).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace poscert

#endif
