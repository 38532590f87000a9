#ifndef DMCODE_ERRORS_HPP
#define DMCODE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace dmcode {

// Exhaustive enumeration would exceed the configured budget.  Callers may
// raise the budget through the DMCODE_ENUM_BUDGET environment variable.
struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

// The least field level containing a requested torsion space was not found
// within the search bound.  Reported, never silently truncated.
struct SplittingLevelNotFound : std::runtime_error {
    explicit SplittingLevelNotFound(const std::string& what) : std::runtime_error(what) {}
};

// An irreducible-polynomial search ran out of candidates (cannot happen for
// valid degrees; signals corrupted state or an out-of-range request).
struct IrreducibleSearchExhausted : std::runtime_error {
    explicit IrreducibleSearchExhausted(const std::string& what) : std::runtime_error(what) {}
};

} // namespace dmcode

#endif
