#include "cantorval/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cantorval {

MultigeometricSeries::MultigeometricSeries(std::vector<Rational> coeffs, Rational ratio)
    : coeffs_(std::move(coeffs)), ratio_(std::move(ratio)), block_sum_(0) {
    if (coeffs_.empty()) throw std::invalid_argument("series: empty coefficient block");
    if (ratio_ <= 0 || ratio_ >= 1) {
        throw std::invalid_argument("series: ratio must lie in (0, 1), got " + to_fraction_string(ratio_));
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] <= 0) throw std::invalid_argument("series: coefficients must be positive");
        if (i > 0 && coeffs_[i] > coeffs_[i - 1]) {
            throw std::invalid_argument("series: coefficient block must be non-increasing");
        }
        block_sum_ += coeffs_[i];
    }
    if (coeffs_.back() < coeffs_.front() * ratio_) {
        throw std::invalid_argument("series: need k_m >= k_1 * q for non-increasing terms");
    }
}

Rational MultigeometricSeries::term(std::size_t n) const {
    if (n == 0) throw std::invalid_argument("term: index starts at 1");
    const std::size_t idx = n - 1;
    const std::size_t block = idx / coeffs_.size();
    return coeffs_[idx % coeffs_.size()] * rational_pow(ratio_, block);
}

Rational MultigeometricSeries::tail(std::size_t n) const {
    const std::size_t block = n / coeffs_.size();
    const std::size_t consumed = n % coeffs_.size();
    Rational rest(0);
    for (std::size_t i = consumed; i < coeffs_.size(); ++i) rest += coeffs_[i];
    // remaining terms of the current block, then whole blocks scaled by q/(1-q)
    return rational_pow(ratio_, block) * (rest + block_sum_ * ratio_ / (1 - ratio_));
}

const char* to_string(SubsumTopology kind) {
    switch (kind) {
        case SubsumTopology::FiniteUnionOfIntervals: return "FiniteUnionOfIntervals";
        case SubsumTopology::CantorSet: return "CantorSet";
        case SubsumTopology::NotKakeya: return "NotKakeya";
    }
    throw std::logic_error("unknown SubsumTopology");
}

KakeyaVerdict kakeya_classify(const MultigeometricSeries& series) {
    const std::size_t m = series.block_size();
    KakeyaVerdict verdict;
    // One block decides everything: the term/tail comparison scales by q
    // across blocks, so the sign pattern has exact period m from n = 1.
    for (std::size_t n = 1; n <= m; ++n) {
        if (series.term(n) > series.tail(n)) {
            verdict.witness_residues_mod_m.push_back(n % m);
        }
    }
    std::sort(verdict.witness_residues_mod_m.begin(), verdict.witness_residues_mod_m.end());
    if (verdict.witness_residues_mod_m.empty()) {
        verdict.kind = SubsumTopology::FiniteUnionOfIntervals;
    } else if (verdict.witness_residues_mod_m.size() == m) {
        verdict.kind = SubsumTopology::CantorSet;
    } else {
        verdict.kind = SubsumTopology::NotKakeya;
    }
    return verdict;
}

IntervalSet subsum_cover(const MultigeometricSeries& series, std::size_t terms,
                         const EnumerationGuard& guard) {
    guard.check_power(2, terms, "subsum_cover");
    // Distinct prefix sums, kept sorted and deduplicated as terms accumulate.
    std::vector<Rational> sums{Rational(0)};
    for (std::size_t n = 1; n <= terms; ++n) {
        const Rational u = series.term(n);
        std::vector<Rational> shifted;
        shifted.reserve(sums.size());
        for (const Rational& p : sums) shifted.push_back(p + u);
        std::vector<Rational> next;
        next.reserve(sums.size() * 2);
        std::size_t i = 0, j = 0;
        while (i < sums.size() || j < shifted.size()) {
            Rational* candidate;
            if (j == shifted.size() ||
                (i < sums.size() && rational_leq(sums[i], shifted[j]))) {
                candidate = &sums[i++];
            } else {
                candidate = &shifted[j++];
            }
            if (next.empty() || !rational_eq(next.back(), *candidate)) {
                next.push_back(std::move(*candidate));
            }
        }
        sums = std::move(next);
    }
    const Rational pad = series.tail(terms);
    std::vector<Interval> cover;
    cover.reserve(sums.size());
    for (Rational& p : sums) {
        Rational hi = p + pad;
        if (!cover.empty() && rational_leq(p, cover.back().hi)) {
            if (rational_less(cover.back().hi, hi)) cover.back().hi = std::move(hi);
        } else {
            cover.emplace_back(std::move(p), std::move(hi));
        }
    }
    return IntervalSet::from_normalized(std::move(cover));
}

MultigeometricSeries cantorval_series(unsigned l) {
    if (l == 0) throw std::invalid_argument("cantorval_series: l must be >= 1");
    const unsigned base = 2 * l + 2;
    std::vector<Rational> coeffs;
    coeffs.reserve(l + 1);
    coeffs.emplace_back(2 * l + 1, base);
    for (unsigned i = 0; i < l; ++i) coeffs.emplace_back(2, base);
    return MultigeometricSeries(std::move(coeffs), Rational(1, base));
}

}  // namespace cantorval
