#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorval/interval_set.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

using namespace cantorval;

namespace {

Interval iv(long a, long b, long c, long d) { return Interval(Rational(a, b), Rational(c, d)); }

// Reference normalizer, deliberately different from the production sweep:
// repeatedly fuse any overlapping or touching pair until a fixed point.
std::vector<Interval> naive_normalize(std::vector<Interval> raw) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < raw.size() && !changed; ++i) {
            for (std::size_t j = i + 1; j < raw.size() && !changed; ++j) {
                if (raw[i].intersects(raw[j])) {
                    const Rational lo = std::min(raw[i].lo, raw[j].lo);
                    const Rational hi = std::max(raw[i].hi, raw[j].hi);
                    raw[i] = Interval(lo, hi);
                    raw.erase(raw.begin() + static_cast<std::ptrdiff_t>(j));
                    changed = true;
                }
            }
        }
    }
    std::sort(raw.begin(), raw.end(),
              [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    return raw;
}

std::vector<Interval> random_intervals(std::mt19937_64& rng, std::size_t max_count) {
    std::uniform_int_distribution<std::size_t> count(0, max_count);
    std::uniform_int_distribution<int> num(-24, 24);
    std::uniform_int_distribution<int> den(1, 8);
    std::vector<Interval> raw;
    const std::size_t n = count(rng);
    for (std::size_t i = 0; i < n; ++i) {
        Rational a = Rational(num(rng)) / den(rng);
        Rational b = Rational(num(rng)) / den(rng);
        if (b < a) std::swap(a, b);
        raw.emplace_back(a, b);
    }
    return raw;
}

}  // namespace

TEST_CASE("interval construction") {
    CHECK_THROWS_AS(Interval(Rational(1), Rational(0)), std::invalid_argument);
    CHECK(Interval(Rational(1), Rational(1)).length() == 0);
}

TEST_CASE("normalize merges overlapping and touching intervals") {
    const IntervalSet s =
        normalize({iv(0, 1, 5, 12), iv(1, 2, 11, 12), iv(3, 4, 7, 6), iv(5, 4, 5, 3)});
    REQUIRE(s.size() == 3);
    CHECK(s.intervals()[0] == iv(0, 1, 5, 12));
    CHECK(s.intervals()[1] == iv(1, 2, 7, 6));
    CHECK(s.intervals()[2] == iv(5, 4, 5, 3));

    CHECK(normalize({}).empty());
    const IntervalSet touching = normalize({iv(0, 1, 1, 1), iv(1, 1, 2, 1)});
    REQUIRE(touching.size() == 1);
    CHECK(touching.intervals()[0] == iv(0, 1, 2, 1));
}

TEST_CASE("degenerate points survive only in isolation") {
    const IntervalSet lone = normalize({Interval(Rational(1), Rational(1))});
    REQUIRE(lone.size() == 1);
    CHECK(lone.measure() == 0);

    const IntervalSet absorbed = normalize({Interval(Rational(1), Rational(1)), iv(1, 1, 2, 1)});
    REQUIRE(absorbed.size() == 1);
    CHECK(absorbed.intervals()[0] == iv(1, 1, 2, 1));
}

TEST_CASE("measure") {
    CHECK(normalize({iv(0, 1, 5, 12), iv(1, 2, 7, 6), iv(5, 4, 5, 3)}).measure() == Rational(3, 2));
    CHECK(IntervalSet{}.measure() == 0);
    CHECK(normalize({iv(2, 3, 1, 1)}).measure() == Rational(1, 3));
}

TEST_CASE("contains_interval") {
    const IntervalSet s = normalize({iv(0, 1, 5, 12), iv(1, 2, 7, 6), iv(5, 4, 5, 3)});
    CHECK(s.contains(iv(2, 3, 1, 1)));
    CHECK(normalize({iv(0, 1, 1, 1)}).contains(iv(0, 1, 1, 1)));
    CHECK_FALSE(normalize({iv(0, 1, 5, 12), iv(1, 2, 7, 6)}).contains(iv(2, 5, 3, 5)));
    CHECK_FALSE(IntervalSet{}.contains(iv(0, 1, 1, 1)));
}

TEST_CASE("measure_disjoint allows endpoint touching") {
    CHECK(IntervalSet::measure_disjoint(normalize({iv(0, 1, 1, 4)}), normalize({iv(1, 4, 1, 2)})));
    CHECK_FALSE(
        IntervalSet::measure_disjoint(normalize({iv(0, 1, 1, 2)}), normalize({iv(1, 4, 3, 4)})));
    CHECK(IntervalSet::measure_disjoint(normalize({iv(1, 6, 1, 4)}), normalize({iv(2, 3, 1, 1)})));
    CHECK(IntervalSet::overlap_measure(normalize({iv(0, 1, 1, 2)}), normalize({iv(1, 4, 3, 4)})) ==
          Rational(1, 4));
}

TEST_CASE("point and interval queries") {
    const IntervalSet s = normalize({iv(0, 1, 1, 1), iv(2, 1, 3, 1)});
    CHECK(s.contains(Rational(1)));
    CHECK_FALSE(s.contains(Rational(3, 2)));
    CHECK(s.intersects(iv(1, 1, 2, 1)));        // touches both parts
    CHECK_FALSE(s.intersects(iv(5, 4, 7, 4)));  // inside the gap
    CHECK(s.interior_contains(iv(1, 4, 3, 4)));
    CHECK_FALSE(s.interior_contains(iv(0, 1, 3, 4)));  // shares the left endpoint
    CHECK_FALSE(s.interior_contains(iv(1, 2, 3, 2)));  // spans the gap
    CHECK(s.bounding() == iv(0, 1, 3, 1));
    CHECK_THROWS_AS(IntervalSet{}.bounding(), std::invalid_argument);
}

TEST_CASE("normalize agrees with the pairwise-fusion reference") {
    std::mt19937_64 rng(987654321);
    for (int round = 0; round < 300; ++round) {
        const std::vector<Interval> raw = random_intervals(rng, 12);
        const IntervalSet got = normalize(raw);
        CHECK(got.intervals() == naive_normalize(raw));
    }
}

TEST_CASE("normalize is idempotent and permutation invariant") {
    std::mt19937_64 rng(1234);
    for (int round = 0; round < 200; ++round) {
        std::vector<Interval> raw = random_intervals(rng, 10);
        const IntervalSet once = normalize(raw);
        CHECK(normalize(once.intervals()) == once);
        std::shuffle(raw.begin(), raw.end(), rng);
        CHECK(normalize(raw) == once);
    }
}

TEST_CASE("union measure is subadditive with equality iff measure disjoint") {
    std::mt19937_64 rng(5678);
    for (int round = 0; round < 200; ++round) {
        const IntervalSet a = normalize(random_intervals(rng, 8));
        const IntervalSet b = normalize(random_intervals(rng, 8));
        const IntervalSet u = IntervalSet::merge_union(a, b);
        CHECK(u.measure() <= a.measure() + b.measure());
        CHECK((u.measure() == a.measure() + b.measure()) == IntervalSet::measure_disjoint(a, b));
        // merge_union must agree with one-shot normalization
        std::vector<Interval> both = a.intervals();
        both.insert(both.end(), b.intervals().begin(), b.intervals().end());
        CHECK(u == normalize(both));
    }
}

TEST_CASE("reflection preserves measure and normalization") {
    std::mt19937_64 rng(43);
    for (int round = 0; round < 200; ++round) {
        const IntervalSet s = normalize(random_intervals(rng, 8));
        const Rational center = Rational(std::uniform_int_distribution<int>(-9, 9)(rng), 2);
        const IntervalSet r = s.reflected(center);
        CHECK(r.measure() == s.measure());
        CHECK(normalize(r.intervals()) == r);
        CHECK(r.reflected(center) == s);
    }
}
