#include "cantorval/ifs.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cantorval {

Similarity::Similarity(Rational ratio_, Rational shift_)
    : ratio(std::move(ratio_)), shift(std::move(shift_)) {
    if (ratio <= 0 || ratio >= 1) {
        throw std::invalid_argument("similarity: ratio must lie in (0, 1), got " +
                                    to_fraction_string(ratio));
    }
}

Ifs::Ifs(std::vector<Similarity> maps) : maps_(std::move(maps)) {
    if (maps_.empty()) throw std::invalid_argument("ifs: at least one map required");
}

Interval Ifs::hull() const {
    // The attractor's extremes are fixed points of the extremal maps.
    Rational lo = maps_.front().fixed_point();
    Rational hi = lo;
    for (std::size_t i = 1; i < maps_.size(); ++i) {
        Rational fp = maps_[i].fixed_point();
        if (fp < lo) lo = fp;
        if (fp > hi) hi = std::move(fp);
    }
    return Interval(std::move(lo), std::move(hi));
}

Interval Ifs::project(const Address& address) const {
    std::optional<Similarity> composed;
    for (unsigned digit : address) {
        if (digit < 1 || digit > maps_.size()) {
            throw std::invalid_argument("project: address digit " + std::to_string(digit) +
                                        " outside 1.." + std::to_string(maps_.size()));
        }
        const Similarity& next = maps_[digit - 1];
        composed = composed ? composed->compose(next) : next;
    }
    const Interval h = hull();
    return composed ? (*composed)(h) : h;
}

IntervalSet Ifs::apply(const IntervalSet& set) const {
    if (set.empty()) return set;
    const std::vector<Interval>& parts = set.intervals();
    const std::size_t n_maps = maps_.size();

    // Each map preserves order, so its image stream is already sorted; merge
    // the streams lazily and coalesce touching intervals on the fly. No sort,
    // and never more than the merged output in memory.
    std::vector<std::size_t> pos(n_maps, 0);
    std::vector<Interval> head;
    head.reserve(n_maps);
    for (std::size_t i = 0; i < n_maps; ++i) head.push_back(maps_[i](parts[0]));

    std::vector<Interval> out;
    out.reserve(parts.size());
    std::size_t remaining = n_maps * parts.size();
    while (remaining > 0) {
        std::size_t best = n_maps;
        for (std::size_t i = 0; i < n_maps; ++i) {
            if (pos[i] == parts.size()) continue;
            if (best == n_maps || rational_less(head[i].lo, head[best].lo)) best = i;
        }
        Interval& next = head[best];
        if (!out.empty() && rational_leq(next.lo, out.back().hi)) {
            if (rational_less(out.back().hi, next.hi)) out.back().hi = std::move(next.hi);
        } else {
            out.push_back(std::move(next));
        }
        if (++pos[best] < parts.size()) head[best] = maps_[best](parts[pos[best]]);
        --remaining;
    }
    return IntervalSet::from_normalized(std::move(out));
}

IntervalSet Ifs::attractor_cover(std::size_t depth, const EnumerationGuard& guard) const {
    guard.check_power(maps_.size(), depth, "attractor_cover");
    IntervalSet cover = normalize({hull()});
    for (std::size_t level = 0; level < depth; ++level) cover = apply(cover);
    return cover;
}

double moran_dimension(const std::vector<Rational>& ratios, double tol) {
    if (ratios.empty()) throw std::invalid_argument("moran_dimension: no ratios");
    if (!(tol > 0)) throw std::invalid_argument("moran_dimension: tolerance must be positive");
    bool all_equal = true;
    for (const Rational& r : ratios) {
        if (r <= 0 || r >= 1) {
            throw std::invalid_argument("moran_dimension: ratios must lie in (0, 1)");
        }
        all_equal = all_equal && r == ratios.front();
    }
    if (ratios.size() == 1) return 0.0;
    if (all_equal) {
        return std::log(static_cast<double>(ratios.size())) / std::log(1.0 / to_double(ratios.front()));
    }
    const auto excess = [&ratios](double s) {
        double sum = 0.0;
        for (const Rational& r : ratios) sum += std::pow(to_double(r), s);
        return sum - 1.0;
    };
    double lo = 0.0;  // excess(0) = N - 1 > 0
    double hi = 1.0;
    while (excess(hi) > 0) hi *= 2;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

bool images_pairwise_disjoint(const Ifs& system, const IntervalSet& candidate) {
    std::vector<IntervalSet> images;
    images.reserve(system.size());
    for (const Similarity& map : system.maps()) {
        std::vector<Interval> parts;
        parts.reserve(candidate.size());
        for (const Interval& p : candidate.intervals()) parts.push_back(map(p));
        images.push_back(normalize(std::move(parts)));
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            if (!IntervalSet::measure_disjoint(images[i], images[j])) return false;
        }
    }
    return true;
}

bool images_contained(const Ifs& system, const IntervalSet& candidate, const IntervalSet& target) {
    for (const Similarity& map : system.maps()) {
        std::vector<Interval> parts;
        parts.reserve(candidate.size());
        for (const Interval& p : candidate.intervals()) parts.push_back(map(p));
        if (!target.contains(normalize(std::move(parts)))) return false;
    }
    return true;
}

bool osc_check(const Ifs& system, const IntervalSet& candidate) {
    if (candidate.empty()) throw std::invalid_argument("osc_check: empty candidate set");
    return images_pairwise_disjoint(system, candidate) &&
           images_contained(system, candidate, candidate);
}

}  // namespace cantorval
