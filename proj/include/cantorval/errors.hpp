#ifndef CANTORVAL_ERRORS_HPP
#define CANTORVAL_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cantorval {

// Raised when an enumeration would exceed the configured leaf budget.
class GuardExceededError : public std::runtime_error {
public:
    explicit GuardExceededError(const std::string& what) : std::runtime_error(what) {}
};

// Raised when the digit-conversion value oracle detects a wrong output word.
// Reaching this means the conversion case table produced an incorrect digit;
// callers must treat it as a hard failure, never as a recoverable condition.
class DigitConversionError : public std::logic_error {
public:
    explicit DigitConversionError(const std::string& what) : std::logic_error(what) {}
};

inline constexpr std::uint64_t kDefaultMaxLeaves = std::uint64_t{1} << 24;

// Resource contract shared by every tree/prefix enumeration in the library.
// A requested enumeration of `leaves` leaves is admissible iff
// leaves <= max_leaves (inclusive).
struct EnumerationGuard {
    std::uint64_t max_leaves = kDefaultMaxLeaves;

    // `base^depth` leaves, computed without overflow.
    void check_power(std::uint64_t base, std::size_t depth, const char* context) const;
};

}  // namespace cantorval

#endif
