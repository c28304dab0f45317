#ifndef CANTORVAL_INTERVAL_SET_HPP
#define CANTORVAL_INTERVAL_SET_HPP

#include "cantorval/rational.hpp"

#include <cstddef>
#include <vector>

namespace cantorval {

// Closed interval [lo, hi]. Degenerate point intervals (lo == hi) are valid.
struct Interval {
    Rational lo;
    Rational hi;

    Interval(Rational lo_, Rational hi_);

    Rational length() const { return hi - lo; }
    bool contains(const Rational& point) const { return lo <= point && point <= hi; }
    bool contains(const Interval& other) const { return lo <= other.lo && other.hi <= hi; }
    // Closed intersection non-empty (endpoint touching counts).
    bool intersects(const Interval& other) const { return lo <= other.hi && other.lo <= hi; }

    friend bool operator==(const Interval& a, const Interval& b) {
        return a.lo == b.lo && a.hi == b.hi;
    }
};

// Canonical finite union of closed intervals: sorted by lo, pairwise disjoint,
// non-adjacent (touching intervals are merged, so previous.hi < next.lo).
// Immutable value type; all operations are pure.
class IntervalSet {
public:
    IntervalSet() = default;

    // Adopts parts that are already canonical (sorted, separated), verifying
    // the invariant in one linear pass. Intended for algorithms whose output
    // is sorted by construction; throws std::logic_error on violation.
    static IntervalSet from_normalized(std::vector<Interval> parts);

    const std::vector<Interval>& intervals() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t size() const { return parts_.size(); }

    Rational measure() const;

    bool contains(const Rational& point) const;
    // True iff t lies within a single member interval.
    bool contains(const Interval& t) const;
    // Pointwise containment: every member of other is contained here.
    bool contains(const IntervalSet& other) const;
    // Closed intersection with t non-empty.
    bool intersects(const Interval& t) const;
    // t is a subset of the open interior of some member (endpoints excluded).
    bool interior_contains(const Interval& t) const;

    // Smallest interval containing the whole set. Throws on empty sets.
    Interval bounding() const;

    // Image under x -> 2*center - x; preserves measure and normalization.
    IntervalSet reflected(const Rational& center) const;

    friend bool operator==(const IntervalSet& a, const IntervalSet& b) {
        return a.parts_ == b.parts_;
    }

    // Union of two normalized sets, merged in one pass.
    static IntervalSet merge_union(const IntervalSet& a, const IntervalSet& b);
    // Total length of the pointwise intersection.
    static Rational overlap_measure(const IntervalSet& a, const IntervalSet& b);
    // Intersection has measure zero (endpoint touching allowed).
    static bool measure_disjoint(const IntervalSet& a, const IntervalSet& b);

private:
    friend IntervalSet normalize(std::vector<Interval> raw);
    struct normalized_tag {};
    IntervalSet(std::vector<Interval> parts, normalized_tag) : parts_(std::move(parts)) {}

    std::vector<Interval> parts_;
};

// Canonicalize an arbitrary collection of intervals: sort, merge overlapping
// and touching members. Idempotent and permutation-invariant. Point intervals
// survive only when isolated.
IntervalSet normalize(std::vector<Interval> raw);

}  // namespace cantorval

#endif
