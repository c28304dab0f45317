#include "cantorval/family.hpp"

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace cantorval {

FamilyParams::FamilyParams(unsigned l_) : l(l_) {
    if (l == 0) throw std::invalid_argument("family parameter l must be >= 1");
}

std::vector<unsigned> digit_set(unsigned l) {
    FamilyParams params(l);
    std::vector<unsigned> digits;
    digits.reserve(params.base());
    for (unsigned d = 0; d <= 2 * l; d += 2) digits.push_back(d);
    for (unsigned d = 2 * l + 1; d <= 4 * l + 1; d += 2) digits.push_back(d);
    return digits;
}

Ifs cantorval_ifs(unsigned l) {
    FamilyParams params(l);
    std::vector<Similarity> maps;
    maps.reserve(params.base());
    for (unsigned d : digit_set(l)) {
        maps.emplace_back(Rational(1, params.base()), Rational(d, params.base()));
    }
    return Ifs(std::move(maps));
}

Interval inner_interval(unsigned l) { return FamilyParams(l).inner(); }

Rational DigitWord::value() const {
    const unsigned base = FamilyParams(l).base();
    Rational v(0);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        v = (v + *it) / base;
    }
    return v;
}

DigitWord expand_digits(const Rational& a, unsigned l, std::size_t k) {
    FamilyParams params(l);
    if (a < 0 || a > 1) {
        throw std::invalid_argument("expand_digits: value " + to_fraction_string(a) +
                                    " outside [0, 1]");
    }
    if (k == 0) throw std::invalid_argument("expand_digits: need at least one digit");
    const unsigned base = params.base();
    const unsigned cap = 2 * l + 1;
    DigitWord word{{}, DigitAlphabet::Full, l};
    word.digits.reserve(k);
    Rational rem = a;
    for (std::size_t i = 0; i < k; ++i) {
        const Rational scaled = rem * base;
        unsigned d = static_cast<unsigned>(rational_floor(scaled));
        if (d > cap) d = cap;  // only reachable when rem == 1
        word.digits.push_back(d);
        rem = scaled - d;
    }
    return word;
}

namespace {

bool in_restricted_alphabet(long digit, unsigned l) {
    if (digit < 0) return false;
    const long d = digit;
    if (d <= 2 * static_cast<long>(l)) return d % 2 == 0;
    return d <= 4 * static_cast<long>(l) + 1 && d % 2 == 1;
}

}  // namespace

DigitWord convert_digits(const DigitWord& word) {
    const unsigned l = word.l;
    FamilyParams params(l);
    if (word.alphabet != DigitAlphabet::Full) {
        throw std::invalid_argument("convert_digits: input must be a full-alphabet word");
    }
    if (word.digits.empty()) throw std::invalid_argument("convert_digits: empty word");
    if (word.digits.front() != 2 * l + 1) {
        throw std::invalid_argument("convert_digits: first digit must be " + std::to_string(2 * l + 1));
    }
    for (unsigned d : word.digits) {
        if (d > 2 * l + 1) {
            throw std::invalid_argument("convert_digits: digit " + std::to_string(d) +
                                        " outside the full alphabet 0.." + std::to_string(2 * l + 1));
        }
    }

    const long base = params.base();
    std::vector<unsigned> out(word.digits.size());
    bool borrow = false;
    for (std::size_t i = word.digits.size(); i-- > 0;) {
        const long effective = static_cast<long>(word.digits[i]) - (borrow ? 1 : 0);
        if (in_restricted_alphabet(effective, l)) {
            out[i] = static_cast<unsigned>(effective);
            borrow = false;
        } else {
            out[i] = static_cast<unsigned>(effective + base);
            borrow = true;
        }
    }
    DigitWord result{std::move(out), DigitAlphabet::Restricted, l};

    // Mandatory oracle: exact value identity plus alphabet membership. The
    // first digit 2l+1 absorbs any final borrow as 2l, so `borrow` must be
    // clear here and the values must agree exactly.
    bool ok = !borrow;
    for (unsigned d : result.digits) ok = ok && in_restricted_alphabet(d, l);
    ok = ok && result.value() == word.value();
    if (!ok) {
        throw DigitConversionError("convert_digits: output failed the exact value oracle");
    }
    return result;
}

Rational approximate_point(const Rational& a, unsigned l, const Rational& eps) {
    FamilyParams params(l);
    if (eps <= 0) throw std::invalid_argument("approximate_point: eps must be positive");
    if (a < Rational(2 * l + 1, params.base()) || a > 1) {
        throw std::invalid_argument("approximate_point: value " + to_fraction_string(a) +
                                    " outside [(2l+1)/(2l+2), 1]");
    }
    // smallest k with (2l+2)^-k < eps
    std::size_t k = 1;
    Rational width(1, params.base());
    while (width >= eps) {
        ++k;
        width /= params.base();
    }
    return convert_digits(expand_digits(a, l, k)).value();
}

IntervalSet inner_approximation(unsigned l, std::size_t depth, const EnumerationGuard& guard) {
    FamilyParams params(l);
    guard.check_power(params.base(), depth, "inner_approximation");
    const Ifs system = cantorval_ifs(l);
    const IntervalSet seed = normalize({params.inner()});
    IntervalSet acc = seed;
    // union over lengths <= depth: acc_{k+1} = seed ∪ system(acc_k)
    for (std::size_t k = 0; k < depth; ++k) {
        acc = IntervalSet::merge_union(seed, system.apply(acc));
    }
    return acc;
}

std::vector<Similarity> outer_copy_maps(unsigned l, std::size_t levels) {
    FamilyParams params(l);
    const Ifs system = cantorval_ifs(l);
    const std::vector<Similarity>& maps = system.maps();
    const Similarity& left_edge = maps[l];       // 1-based index l+1
    const Similarity& right_edge = maps[l + 1];  // 1-based index l+2

    std::vector<Similarity> copies;
    copies.reserve(2 * static_cast<std::size_t>(l) * (levels + 1));
    std::optional<Similarity> left_power;   // left_edge^k
    std::optional<Similarity> right_power;  // right_edge^k
    for (std::size_t k = 0; k <= levels; ++k) {
        for (unsigned i = 0; i < l; ++i) {
            copies.push_back(left_power ? left_power->compose(maps[i]) : maps[i]);
        }
        for (unsigned j = l + 2; j < 2 * l + 2; ++j) {
            copies.push_back(right_power ? right_power->compose(maps[j]) : maps[j]);
        }
        left_power = left_power ? left_power->compose(left_edge) : left_edge;
        right_power = right_power ? right_power->compose(right_edge) : right_edge;
    }
    return copies;
}

Rational interior_measure_partial(unsigned l, std::size_t n) {
    FamilyParams params(l);
    Rational sum(1, 2 * l + 1);
    Rational copies(2 * l);                      // 2l(2l+1)^{k-1} copies at level k
    Rational scale(1, params.base());            // (2l+2)^-k
    const Rational copy_length(1, 2 * l + 1);    // each copy scales the inner interval
    for (std::size_t k = 1; k <= n; ++k) {
        sum += copies * scale * copy_length;
        copies *= 2 * l + 1;
        scale /= params.base();
    }
    return sum;
}

double boundary_dimension(unsigned l) {
    FamilyParams params(l);
    return std::log(static_cast<double>(2 * l + 1)) / std::log(static_cast<double>(params.base()));
}

double n_self_similar_dimension(std::uint64_t copies, const Rational& ratio, double tol) {
    if (copies == 0) throw std::invalid_argument("n_self_similar_dimension: copies must be >= 1");
    if (ratio <= 0 || ratio >= 1) {
        throw std::invalid_argument("n_self_similar_dimension: ratio must lie in (0, 1)");
    }
    if (!(tol > 0)) throw std::invalid_argument("n_self_similar_dimension: tolerance must be positive");
    const double r = to_double(ratio);
    const double c = static_cast<double>(copies);
    // excess(s) = c*x/(1-x) - 1 with x = r^s: strictly decreasing, +inf at
    // s -> 0+, -1 as s -> inf.
    const auto excess = [r, c](double s) {
        const double x = std::pow(r, s);
        return c * x / (1.0 - x) - 1.0;
    };
    double lo = 1.0;
    while (excess(lo) <= 0) lo *= 0.5;
    double hi = 1.0;
    while (excess(hi) > 0) hi *= 2.0;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (excess(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace cantorval
