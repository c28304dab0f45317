#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cantorval/family.hpp"
#include "cantorval/ifs.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

using namespace cantorval;

namespace {

Ifs cantor_thirds() {
    return Ifs({Similarity(Rational(1, 3), Rational(0)), Similarity(Rational(1, 3), Rational(2, 3))});
}

// Leaf-by-leaf reference: enumerate every depth-n address, project it, merge.
IntervalSet brute_cover(const Ifs& f, std::size_t depth) {
    std::vector<Interval> raw;
    Address address(depth, 1);
    while (true) {
        raw.push_back(f.project(address));
        std::size_t i = depth;
        while (i > 0 && address[i - 1] == f.size()) address[--i] = 1;
        if (i == 0) break;
        ++address[i - 1];
    }
    return normalize(std::move(raw));
}

Ifs random_ifs(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 4);
    std::uniform_int_distribution<int> rnum(1, 5);
    std::uniform_int_distribution<int> rden(6, 12);
    std::uniform_int_distribution<int> snum(-10, 10);
    std::uniform_int_distribution<int> sden(1, 6);
    std::vector<Similarity> maps;
    const int n = count(rng);
    for (int i = 0; i < n; ++i) {
        maps.emplace_back(Rational(rnum(rng), rden(rng)), Rational(snum(rng), sden(rng)));
    }
    return Ifs(std::move(maps));
}

}  // namespace

TEST_CASE("similarity basics") {
    CHECK_THROWS_AS(Similarity(Rational(1), Rational(0)), std::invalid_argument);
    CHECK_THROWS_AS(Similarity(Rational(0), Rational(1)), std::invalid_argument);
    CHECK_THROWS_AS(Similarity(Rational(-1, 2), Rational(0)), std::invalid_argument);

    const Similarity f(Rational(1, 2), Rational(1, 2));
    CHECK(f.fixed_point() == 1);
    CHECK(f(Rational(0)) == Rational(1, 2));

    const Similarity g(Rational(1, 4), Rational(3, 4));
    const Similarity fg = f.compose(g);  // f(g(x)) = (x/4 + 3/4)/2 + 1/2
    CHECK(fg.ratio == Rational(1, 8));
    CHECK(fg.shift == Rational(7, 8));
    CHECK(fg(Rational(1)) == f(g(Rational(1))));
}

TEST_CASE("hull is spanned by the extreme fixed points") {
    CHECK(cantorval_ifs(1).hull() == Interval(Rational(0), Rational(5, 3)));
    CHECK(cantorval_ifs(2).hull() == Interval(Rational(0), Rational(9, 5)));
    const Ifs point(std::vector<Similarity>{Similarity(Rational(1, 2), Rational(1, 2))});
    CHECK(point.hull() == Interval(Rational(1), Rational(1)));
}

TEST_CASE("project computes cylinder intervals") {
    const Ifs psi = cantorval_ifs(1);
    CHECK(psi.project({2}) == Interval(Rational(1, 2), Rational(11, 12)));
    CHECK(psi.project({2, 1}) == Interval(Rational(1, 2), Rational(29, 48)));
    CHECK(psi.project({}) == psi.hull());
    CHECK_THROWS_AS(psi.project({0}), std::invalid_argument);
    CHECK_THROWS_AS(psi.project({5}), std::invalid_argument);

    // refinement: appending digits stays inside the parent cylinder and
    // scales the width by the product of the addressed ratios
    const Interval parent = psi.project({3});
    const Interval child = psi.project({3, 4});
    CHECK(parent.contains(child));
    CHECK(child.length() == psi.hull().length() / 16);
}

TEST_CASE("attractor cover frozen examples") {
    const Ifs psi = cantorval_ifs(1);
    CHECK(psi.attractor_cover(0) == normalize({Interval(Rational(0), Rational(5, 3))}));

    const IntervalSet depth1 = psi.attractor_cover(1);
    REQUIRE(depth1.size() == 3);
    CHECK(depth1.intervals()[0] == Interval(Rational(0), Rational(5, 12)));
    CHECK(depth1.intervals()[1] == Interval(Rational(1, 2), Rational(7, 6)));
    CHECK(depth1.intervals()[2] == Interval(Rational(5, 4), Rational(5, 3)));

    const IntervalSet cantor2 = cantor_thirds().attractor_cover(2);
    REQUIRE(cantor2.size() == 4);
    CHECK(cantor2.intervals()[0] == Interval(Rational(0), Rational(1, 9)));
    CHECK(cantor2.intervals()[1] == Interval(Rational(2, 9), Rational(1, 3)));
    CHECK(cantor2.intervals()[2] == Interval(Rational(2, 3), Rational(7, 9)));
    CHECK(cantor2.intervals()[3] == Interval(Rational(8, 9), Rational(1)));
}

TEST_CASE("iterated cover equals the address enumeration") {
    std::mt19937_64 rng(909090);
    for (int round = 0; round < 30; ++round) {
        const Ifs f = random_ifs(rng);
        for (std::size_t depth = 0; depth <= 5; ++depth) {
            CHECK(f.attractor_cover(depth) == brute_cover(f, depth));
        }
    }
}

TEST_CASE("covers nest and never exceed the hull") {
    std::mt19937_64 rng(11111);
    for (int round = 0; round < 20; ++round) {
        const Ifs f = random_ifs(rng);
        const Rational hull_length = f.hull().length();
        IntervalSet prev = f.attractor_cover(0);
        for (std::size_t depth = 1; depth <= 6; ++depth) {
            const IntervalSet cur = f.attractor_cover(depth);
            CHECK(prev.contains(cur));
            CHECK(cur.measure() <= prev.measure());
            CHECK(cur.measure() <= hull_length);
            prev = cur;
        }
    }
}

TEST_CASE("attractor cover guard") {
    const Ifs psi = cantorval_ifs(1);
    CHECK_THROWS_AS(psi.attractor_cover(13), GuardExceededError);  // 4^13 > 2^24
    EnumerationGuard tight{64};
    CHECK_NOTHROW(psi.attractor_cover(3, tight));  // 4^3 == 64, inclusive
    CHECK_THROWS_AS(psi.attractor_cover(4, tight), GuardExceededError);
}

TEST_CASE("moran dimension") {
    CHECK(moran_dimension({Rational(1, 3), Rational(1, 3)}, 1e-12) ==
          doctest::Approx(0.6309297535714574).epsilon(1e-12));
    CHECK(moran_dimension({Rational(1, 2), Rational(1, 2)}, 1e-12) == doctest::Approx(1.0));
    for (unsigned l = 1; l <= 10; ++l) {
        std::vector<Rational> ratios(2 * l + 2, Rational(1, 2 * l + 2));
        CHECK(std::abs(moran_dimension(ratios, 1e-12) - 1.0) < 1e-12);
    }
    // mixed ratios solve x + x^2 = 1 with x = 2^-s
    const double expected = std::log2((std::sqrt(5.0) + 1.0) / 2.0);
    CHECK(moran_dimension({Rational(1, 2), Rational(1, 4)}, 1e-11) ==
          doctest::Approx(expected).epsilon(1e-9));
    // a single map collapses to a point, dimension 0
    CHECK(moran_dimension({Rational(1, 2)}, 1e-12) == 0.0);

    CHECK_THROWS_AS(moran_dimension({}, 1e-12), std::invalid_argument);
    CHECK_THROWS_AS(moran_dimension({Rational(1, 2)}, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(moran_dimension({Rational(2)}, 1e-12), std::invalid_argument);
}

TEST_CASE("bisection residual stays within tolerance") {
    std::mt19937_64 rng(5150);
    std::uniform_int_distribution<int> num(1, 4);
    std::uniform_int_distribution<int> den(5, 9);
    for (int round = 0; round < 50; ++round) {
        std::vector<Rational> ratios;
        const int n = 2 + round % 3;
        for (int i = 0; i < n; ++i) ratios.emplace_back(num(rng), den(rng));
        const double s = moran_dimension(ratios, 1e-10);
        double sum = 0;
        for (const Rational& r : ratios) sum += std::pow(to_double(r), s);
        // |sum - 1| small enough that the root lies within tol of s
        CHECK(std::abs(sum - 1.0) < 1e-8);
    }
}

TEST_CASE("open set condition checks") {
    const IntervalSet unit = normalize({Interval(Rational(0), Rational(1))});
    CHECK(osc_check(cantor_thirds(), unit));

    const Ifs psi = cantorval_ifs(1);
    const IntervalSet hull_set = normalize({psi.hull()});
    // the two middle maps overlap on the hull
    CHECK_FALSE(images_pairwise_disjoint(psi, hull_set));
    CHECK_FALSE(osc_check(psi, hull_set));

    // the inner approximation witnesses the condition at finite depth:
    // images are disjoint and land inside the next approximation
    const IntervalSet v2 = inner_approximation(1, 2);
    const IntervalSet v3 = inner_approximation(1, 3);
    CHECK(images_pairwise_disjoint(psi, v2));
    CHECK(images_contained(psi, v2, v3));
    CHECK_FALSE(images_contained(psi, v2, v2));

    CHECK_THROWS_AS(osc_check(psi, IntervalSet{}), std::invalid_argument);
}
