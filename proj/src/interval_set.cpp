#include "cantorval/interval_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace cantorval {

Interval::Interval(Rational lo_, Rational hi_) : lo(std::move(lo_)), hi(std::move(hi_)) {
    if (rational_less(hi, lo)) {
        throw std::invalid_argument("interval with lo > hi: [" + to_fraction_string(lo) + ", " +
                                    to_fraction_string(hi) + "]");
    }
}

IntervalSet normalize(std::vector<Interval> raw) {
    if (raw.empty()) return IntervalSet{};
    std::sort(raw.begin(), raw.end(), [](const Interval& a, const Interval& b) {
        return rational_less(a.lo, b.lo) ||
               (rational_eq(a.lo, b.lo) && rational_less(a.hi, b.hi));
    });
    std::vector<Interval> merged;
    merged.reserve(raw.size());
    merged.push_back(std::move(raw.front()));
    for (std::size_t i = 1; i < raw.size(); ++i) {
        Interval& cur = merged.back();
        if (rational_leq(raw[i].lo, cur.hi)) {
            if (rational_less(cur.hi, raw[i].hi)) cur.hi = std::move(raw[i].hi);
        } else {
            merged.push_back(std::move(raw[i]));
        }
    }
    return IntervalSet(std::move(merged), IntervalSet::normalized_tag{});
}

IntervalSet IntervalSet::from_normalized(std::vector<Interval> parts) {
    for (std::size_t i = 1; i < parts.size(); ++i) {
        if (!rational_less(parts[i - 1].hi, parts[i].lo)) {
            throw std::logic_error("from_normalized: parts are not sorted and separated");
        }
    }
    return IntervalSet(std::move(parts), normalized_tag{});
}

Rational IntervalSet::measure() const {
    Rational total(0);
    for (const Interval& part : parts_) total += part.hi - part.lo;
    return total;
}

namespace {

// Index of the first part with part.hi >= value, or size() if none.
std::size_t first_part_reaching(const std::vector<Interval>& parts, const Rational& value) {
    std::size_t lo = 0, hi = parts.size();
    while (lo < hi) {
        const std::size_t mid = lo + (hi - lo) / 2;
        if (rational_less(parts[mid].hi, value))
            lo = mid + 1;
        else
            hi = mid;
    }
    return lo;
}

}  // namespace

bool IntervalSet::contains(const Rational& point) const {
    const std::size_t i = first_part_reaching(parts_, point);
    return i < parts_.size() && rational_leq(parts_[i].lo, point);
}

bool IntervalSet::contains(const Interval& t) const {
    const std::size_t i = first_part_reaching(parts_, t.lo);
    return i < parts_.size() && rational_leq(parts_[i].lo, t.lo) && rational_leq(t.hi, parts_[i].hi);
}

bool IntervalSet::contains(const IntervalSet& other) const {
    std::size_t i = 0;
    for (const Interval& t : other.parts_) {
        while (i < parts_.size() && rational_less(parts_[i].hi, t.lo)) ++i;
        if (i == parts_.size() || rational_less(t.lo, parts_[i].lo) ||
            rational_less(parts_[i].hi, t.hi)) {
            return false;
        }
    }
    return true;
}

bool IntervalSet::intersects(const Interval& t) const {
    const std::size_t i = first_part_reaching(parts_, t.lo);
    return i < parts_.size() && rational_leq(parts_[i].lo, t.hi);
}

bool IntervalSet::interior_contains(const Interval& t) const {
    // Candidate: the only part whose open interior can reach t.lo.
    std::size_t i = first_part_reaching(parts_, t.lo);
    while (i < parts_.size() && rational_eq(parts_[i].hi, t.lo)) ++i;  // touching, not covering
    return i < parts_.size() && rational_less(parts_[i].lo, t.lo) &&
           rational_less(t.hi, parts_[i].hi);
}

Interval IntervalSet::bounding() const {
    if (parts_.empty()) throw std::invalid_argument("bounding interval of an empty set");
    return Interval(parts_.front().lo, parts_.back().hi);
}

IntervalSet IntervalSet::reflected(const Rational& center) const {
    const Rational twice = center * 2;
    std::vector<Interval> out;
    out.reserve(parts_.size());
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
        out.emplace_back(twice - it->hi, twice - it->lo);
    }
    // Reflection reverses order but preserves disjointness and separation.
    return IntervalSet(std::move(out), normalized_tag{});
}

IntervalSet IntervalSet::merge_union(const IntervalSet& a, const IntervalSet& b) {
    std::vector<Interval> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    auto push = [&out](const Interval& next) {
        if (!out.empty() && rational_leq(next.lo, out.back().hi)) {
            if (rational_less(out.back().hi, next.hi)) out.back().hi = next.hi;
        } else {
            out.push_back(next);
        }
    };
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && rational_leq(a.parts_[i].lo, b.parts_[j].lo))) {
            push(a.parts_[i++]);
        } else {
            push(b.parts_[j++]);
        }
    }
    return IntervalSet(std::move(out), normalized_tag{});
}

Rational IntervalSet::overlap_measure(const IntervalSet& a, const IntervalSet& b) {
    Rational total(0);
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Interval& x = a.parts_[i];
        const Interval& y = b.parts_[j];
        const Rational& lo = rational_less(y.lo, x.lo) ? x.lo : y.lo;
        const Rational& hi = rational_less(x.hi, y.hi) ? x.hi : y.hi;
        if (rational_less(lo, hi)) total += hi - lo;
        if (rational_less(x.hi, y.hi))
            ++i;
        else
            ++j;
    }
    return total;
}

bool IntervalSet::measure_disjoint(const IntervalSet& a, const IntervalSet& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        const Interval& x = a.parts_[i];
        const Interval& y = b.parts_[j];
        const Rational& lo = rational_less(y.lo, x.lo) ? x.lo : y.lo;
        const Rational& hi = rational_less(x.hi, y.hi) ? x.hi : y.hi;
        if (rational_less(lo, hi)) return false;
        if (rational_less(x.hi, y.hi))
            ++i;
        else
            ++j;
    }
    return true;
}

}  // namespace cantorval
