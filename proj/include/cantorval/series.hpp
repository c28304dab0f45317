#ifndef CANTORVAL_SERIES_HPP
#define CANTORVAL_SERIES_HPP

#include "cantorval/errors.hpp"
#include "cantorval/interval_set.hpp"
#include "cantorval/rational.hpp"

#include <cstddef>
#include <vector>

namespace cantorval {

// Convergent positive series built from a coefficient block k_1 >= ... >= k_m
// repeated at successive powers of the ratio q:
//
//   k_1, ..., k_m, k_1*q, ..., k_m*q, k_1*q^2, ...
//
// Terms are indexed from 1 and start with the unscaled block, so
// term(1) = k_1. The block constraint k_m >= k_1*q keeps the whole term
// sequence non-increasing.
class MultigeometricSeries {
public:
    MultigeometricSeries(std::vector<Rational> coeffs, Rational ratio);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& ratio() const { return ratio_; }
    std::size_t block_size() const { return coeffs_.size(); }

    // n-th term, n >= 1: coeffs[r] * ratio^b with n-1 = b*m + r.
    Rational term(std::size_t n) const;
    // n-th tail: sum of all terms after the n-th, in closed form.
    Rational tail(std::size_t n) const;
    // Sum of the whole series, (k_1 + ... + k_m) / (1 - q).
    Rational total() const { return tail(0); }

private:
    std::vector<Rational> coeffs_;
    Rational ratio_;
    Rational block_sum_;
};

enum class SubsumTopology {
    FiniteUnionOfIntervals,  // term <= tail for all but finitely many n
    CantorSet,               // term > tail for all but finitely many n
    NotKakeya,               // neither; the subsum set is a Cantor set or a Cantorval
};

const char* to_string(SubsumTopology kind);

// Exact description of the witness set {n : term(n) > tail(n)}. Because
// term(n+m) = q*term(n) and tail(n+m) = q*tail(n) hold exactly for every
// n >= 1, the sign of term(n) - tail(n) depends only on n mod m from the very
// first block: the witness set is a pure union of residue classes and the
// transient part is always empty. The field is kept for the wire format.
struct KakeyaVerdict {
    SubsumTopology kind;
    std::vector<std::size_t> witness_transient;
    std::vector<std::size_t> witness_residues_mod_m;  // values of n mod m, in [0, m)

    friend bool operator==(const KakeyaVerdict&, const KakeyaVerdict&) = default;
};

KakeyaVerdict kakeya_classify(const MultigeometricSeries& series);

// Depth-n cover of the set of subsums: every prefix sum p over the first n
// terms contributes [p, p + tail(n)]. A superset of the subsum set for every
// n, and the covers shrink as n grows.
IntervalSet subsum_cover(const MultigeometricSeries& series, std::size_t terms,
                         const EnumerationGuard& guard = {});

// The series whose subsums form the overlapping self-similar set studied by
// this library: block (2l+1)/(2l+2), then l copies of 2/(2l+2), ratio
// 1/(2l+2). Rejects l = 0.
MultigeometricSeries cantorval_series(unsigned l);

}  // namespace cantorval

#endif
