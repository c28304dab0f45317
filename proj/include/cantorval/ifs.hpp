#ifndef CANTORVAL_IFS_HPP
#define CANTORVAL_IFS_HPP

#include "cantorval/errors.hpp"
#include "cantorval/interval_set.hpp"
#include "cantorval/rational.hpp"

#include <cstddef>
#include <vector>

namespace cantorval {

// Orientation-preserving contraction x -> ratio*x + shift with 0 < ratio < 1.
struct Similarity {
    Rational ratio;
    Rational shift;

    Similarity(Rational ratio_, Rational shift_);

    Rational operator()(const Rational& x) const { return ratio * x + shift; }
    Interval operator()(const Interval& iv) const {
        return Interval(ratio * iv.lo + shift, ratio * iv.hi + shift);
    }
    // this after inner: (this o inner)(x) = this(inner(x)).
    Similarity compose(const Similarity& inner) const {
        return Similarity(ratio * inner.ratio, ratio * inner.shift + shift);
    }
    Rational fixed_point() const { return shift / (1 - ratio); }

    friend bool operator==(const Similarity& a, const Similarity& b) {
        return a.ratio == b.ratio && a.shift == b.shift;
    }
};

// Finite address word; digits are 1-based indices into the owning system.
using Address = std::vector<unsigned>;

// Iterated function system on the line. Map order is significant: addresses
// index into it.
class Ifs {
public:
    explicit Ifs(std::vector<Similarity> maps);

    const std::vector<Similarity>& maps() const { return maps_; }
    std::size_t size() const { return maps_.size(); }

    // Convex hull of the attractor: the extreme fixed points.
    Interval hull() const;

    // Cylinder interval of a finite address: the image of the hull under the
    // left-to-right composition of the addressed maps. The empty address
    // yields the hull itself. Widths shrink geometrically with address
    // length, so this is the finite-depth stand-in for the natural
    // projection onto the attractor.
    Interval project(const Address& address) const;

    // One application of the set map S -> union of f_i(S), normalized.
    IntervalSet apply(const IntervalSet& set) const;

    // Union of all depth-n cylinder intervals: a compact superset of the
    // attractor, decreasing in depth. Computed by iterating apply() from the
    // hull; the result equals the leaf-by-leaf enumeration exactly since
    // images of unions are unions of images.
    IntervalSet attractor_cover(std::size_t depth, const EnumerationGuard& guard = {}) const;

private:
    std::vector<Similarity> maps_;
};

// The unique s >= 0 with sum_i ratios[i]^s = 1, to within tol. Uses the
// closed form log(N)/log(1/r) when all ratios coincide, bisection otherwise.
double moran_dimension(const std::vector<Rational>& ratios, double tol);

// Open-set-condition evidence at finite depth, on closed representations of
// the candidate open set's components (measure-zero touching permitted).
bool images_pairwise_disjoint(const Ifs& system, const IntervalSet& candidate);
bool images_contained(const Ifs& system, const IntervalSet& candidate, const IntervalSet& target);
// Both conditions against the candidate itself.
bool osc_check(const Ifs& system, const IntervalSet& candidate);

}  // namespace cantorval

#endif
