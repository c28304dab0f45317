#ifndef CANTORVAL_BOX_DIMENSION_HPP
#define CANTORVAL_BOX_DIMENSION_HPP

#include "cantorval/errors.hpp"
#include "cantorval/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cantorval {

struct GridCount {
    std::size_t depth;
    Rational box_size;
    std::uint64_t count;
};

// Counts grid boxes meeting the depth-n boundary approximation of a family
// member: the hull is split into (2l+2)^n equal closed boxes, and a box is
// counted when it intersects the depth-n outer cover but is not fully inside
// the open interior of the depth-n inner approximation. Exact arithmetic
// throughout.
GridCount boundary_box_count(unsigned l, std::size_t depth, const EnumerationGuard& guard = {});

// Least-squares slope of log(count) against -log(box_size); the standard
// box-counting dimension estimate. Since box_size shrinks by the fixed grid
// base per depth step, this equals the regression against depth * log(base)
// up to an intercept shift. Needs at least two distinct depths and nonzero
// counts.
double dimension_fit(const std::vector<GridCount>& counts);

}  // namespace cantorval

#endif
