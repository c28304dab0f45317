#include "cantorval/box_dimension.hpp"

#include "cantorval/family.hpp"
#include "cantorval/ifs.hpp"
#include "cantorval/interval_set.hpp"

#include <cmath>
#include <set>
#include <stdexcept>

namespace cantorval {

GridCount boundary_box_count(unsigned l, std::size_t depth, const EnumerationGuard& guard) {
    FamilyParams params(l);
    guard.check_power(params.base(), depth, "boundary_box_count");

    const IntervalSet cover = cantorval_ifs(l).attractor_cover(depth, guard);
    const IntervalSet inner = inner_approximation(l, depth, guard);

    std::uint64_t boxes = 1;
    for (std::size_t i = 0; i < depth; ++i) boxes *= params.base();
    const Rational width = params.hull().length() / rational_pow(Rational(params.base()), depth);

    const std::vector<Interval>& cov = cover.intervals();
    const std::vector<Interval>& inn = inner.intervals();
    std::uint64_t count = 0;
    std::size_t ci = 0, ii = 0;
    Rational lo(0);
    for (std::uint64_t j = 0; j < boxes; ++j) {
        const Rational hi = lo + width;
        // closed intersection with the cover (touching counts)
        while (ci < cov.size() && rational_less(cov[ci].hi, lo)) ++ci;
        const bool meets_cover = ci < cov.size() && rational_leq(cov[ci].lo, hi);
        // containment in the open interior of the inner approximation
        while (ii < inn.size() && rational_leq(inn[ii].hi, lo)) ++ii;
        const bool inside_interior =
            ii < inn.size() && rational_less(inn[ii].lo, lo) && rational_less(hi, inn[ii].hi);
        if (meets_cover && !inside_interior) ++count;
        lo = hi;
    }
    return GridCount{depth, width, count};
}

double dimension_fit(const std::vector<GridCount>& counts) {
    if (counts.size() < 2) throw std::invalid_argument("dimension_fit: need at least two counts");
    std::set<std::size_t> depths;
    for (const GridCount& c : counts) {
        if (c.count == 0) throw std::invalid_argument("dimension_fit: zero count at depth " +
                                                      std::to_string(c.depth));
        depths.insert(c.depth);
    }
    if (depths.size() < 2) throw std::invalid_argument("dimension_fit: need two distinct depths");

    const double n = static_cast<double>(counts.size());
    double sx = 0, sy = 0;
    for (const GridCount& c : counts) {
        sx += -std::log(to_double(c.box_size));
        sy += std::log(static_cast<double>(c.count));
    }
    const double mx = sx / n, my = sy / n;
    double sxx = 0, sxy = 0;
    for (const GridCount& c : counts) {
        const double dx = -std::log(to_double(c.box_size)) - mx;
        const double dy = std::log(static_cast<double>(c.count)) - my;
        sxx += dx * dx;
        sxy += dx * dy;
    }
    return sxy / sxx;
}

}  // namespace cantorval
