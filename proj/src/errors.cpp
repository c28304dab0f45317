#include "cantorval/errors.hpp"

#include "cantorval/rational.hpp"

namespace cantorval {

void EnumerationGuard::check_power(std::uint64_t base, std::size_t depth, const char* context) const {
    BigInt leaves = 1;
    const BigInt budget = max_leaves;
    for (std::size_t i = 0; i < depth; ++i) {
        leaves *= base;
        if (leaves > budget) {
            throw GuardExceededError(std::string(context) + ": " + std::to_string(base) + "^" +
                                     std::to_string(depth) + " leaves exceed the budget of " +
                                     std::to_string(max_leaves));
        }
    }
}

}  // namespace cantorval
