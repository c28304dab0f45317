#include "cantorval/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace cantorval {

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) {
        throw std::invalid_argument("invalid rational '" + std::string(whole) + "': empty integer part");
    }
    bool negative = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) {
        throw std::invalid_argument("invalid rational '" + std::string(whole) + "': sign without digits");
    }
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("invalid rational '" + std::string(whole) + "': unexpected character");
        }
    }
    const BigInt magnitude(std::string(text.substr(i)));
    return negative ? -magnitude : magnitude;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const std::size_t slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_integer(text, text));
    }
    const BigInt num = parse_integer(text.substr(0, slash), text);
    const BigInt den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) {
        throw std::invalid_argument("invalid rational '" + std::string(text) + "': zero denominator");
    }
    // Division canonicalizes sign and reduces to lowest terms.
    return Rational(num) / Rational(den);
}

std::string to_fraction_string(const Rational& value) {
    return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_decimal_string(const Rational& value, int digits) {
    if (digits < 0) throw std::invalid_argument("to_decimal_string: negative digit count");
    BigInt num = numerator(value);
    const BigInt den = denominator(value);
    const bool negative = num < 0;
    if (negative) num = -num;
    BigInt scale = 1;
    for (int i = 0; i < digits; ++i) scale *= 10;
    // round half away from zero
    BigInt scaled = (num * scale * 2 + den) / (den * 2);
    const BigInt whole = scaled / scale;
    BigInt frac = scaled % scale;
    std::string out = negative && scaled != 0 ? "-" : "";
    out += whole.str();
    if (digits > 0) {
        std::string f = frac.str();
        out += ".";
        out += std::string(static_cast<std::size_t>(digits) - f.size(), '0');
        out += f;
    }
    return out;
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

Rational rational_pow(const Rational& value, std::size_t exponent) {
    Rational result(1);
    Rational base = value;
    while (exponent > 0) {
        if (exponent & 1) result *= base;
        base *= base;
        exponent >>= 1;
    }
    return result;
}

BigInt rational_floor(const Rational& value) {
    BigInt q, r;
    divide_qr(numerator(value), denominator(value), q, r);
    if (r != 0 && numerator(value) < 0) --q;  // divide_qr truncates toward zero
    return q;
}

}  // namespace cantorval
