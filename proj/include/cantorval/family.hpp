#ifndef CANTORVAL_FAMILY_HPP
#define CANTORVAL_FAMILY_HPP

#include "cantorval/errors.hpp"
#include "cantorval/ifs.hpp"
#include "cantorval/interval_set.hpp"
#include "cantorval/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace cantorval {

// One-parameter family of overlapping homogeneous self-similar sets in base
// 2l+2. Each member has full Lebesgue measure 1 inside a convex hull of
// length (4l+1)/(2l+1), contains the interval [2l/(2l+1), 1], and carries a
// fractal boundary of dimension log(2l+1)/log(2l+2).

// Derived constants for a family member. l >= 1.
struct FamilyParams {
    unsigned l;

    explicit FamilyParams(unsigned l_);

    unsigned base() const { return 2 * l + 2; }
    Interval hull() const { return Interval(Rational(0), Rational(4 * l + 1, 2 * l + 1)); }
    Rational midpoint() const { return Rational(4 * l + 1, 4 * l + 2); }
    Interval inner() const { return Interval(Rational(2 * l, 2 * l + 1), Rational(1)); }
};

// The 2l+2 admissible digits in base 2l+2: evens 0, 2, ..., 2l followed by
// odds 2l+1, 2l+3, ..., 4l+1.
std::vector<unsigned> digit_set(unsigned l);

// The generating system: one map x -> (x + d)/(2l+2) per admissible digit d,
// in increasing digit order.
Ifs cantorval_ifs(unsigned l);

// The interval proved to lie inside the attractor: [2l/(2l+1), 1].
Interval inner_interval(unsigned l);

enum class DigitAlphabet {
    Full,        // all of 0 .. 2l+1
    Restricted,  // the admissible digit_set(l)
};

// Finite digit word in base 2l+2 with positional value sum d_i/(2l+2)^i.
struct DigitWord {
    std::vector<unsigned> digits;
    DigitAlphabet alphabet;
    unsigned l;

    Rational value() const;

    friend bool operator==(const DigitWord&, const DigitWord&) = default;
};

// First k digits of the greedy base-(2l+2) expansion of a in [0, 1]. Digits
// are capped at 2l+1, so a = 1 expands to the repeating word (2l+1, 2l+1, ...).
// Truncation undershoots by at most (2l+2)^-k.
DigitWord expand_digits(const Rational& a, unsigned l, std::size_t k);

// Rewrites a full-alphabet word whose first digit is 2l+1 into a word over
// the restricted alphabet with exactly the same value, by right-to-left
// borrow propagation: a position holding an inadmissible effective digit e
// emits e + (2l+2) and charges the position to its left with a unit borrow.
// Every output is checked against the exact value oracle; a mismatch throws
// DigitConversionError rather than returning a wrong word.
DigitWord convert_digits(const DigitWord& word);

// A point of the attractor within eps of a, for a in [(2l+1)/(2l+2), 1]:
// expand far enough, then convert into the restricted alphabet.
Rational approximate_point(const Rational& a, unsigned l, const Rational& eps);

// Union of the images of the inner interval under all map compositions of
// length <= depth. A closed subset of the attractor whose measure increases
// to 1.
IntervalSet inner_approximation(unsigned l, std::size_t depth, const EnumerationGuard& guard = {});

// The affine copies tiling the attractor outside the inner interval: for each
// level k in 0..levels, the compositions (left-edge map)^k after each of the
// l leftmost maps and (right-edge map)^k after each of the l rightmost maps.
// 2l(levels+1) similarities, each of ratio (2l+2)^-(k+1); their hull images
// are pairwise disjoint and avoid the inner interval.
std::vector<Similarity> outer_copy_maps(unsigned l, std::size_t levels);

// Partial sums of the interior measure: the inner interval contributes
// 1/(2l+1) and level k >= 1 contributes 2l(2l+1)^(k-1) / ((2l+1)(2l+2)^k).
// Equals measure(inner_approximation(l, n)) and converges up to 1.
Rational interior_measure_partial(unsigned l, std::size_t n);

// Closed form log(2l+1)/log(2l+2) for the boundary's Hausdorff dimension.
double boundary_dimension(unsigned l);

// Dimension of a countably self-similar set with `copies` disjoint copies at
// every scale ratio^n: the unique s > 0 with
//   sum_{n>=1} copies * ratio^(n*s) = 1.
// Solved by bisection on the geometric-sum reduction
// copies * x/(1-x) = 1 with x = ratio^s; an independent route to the same
// number as boundary_dimension when copies = 2l and ratio = 1/(2l+2).
double n_self_similar_dimension(std::uint64_t copies, const Rational& ratio, double tol);

}  // namespace cantorval

#endif
