#include "qaff/rational.hpp"

#include "qaff/errors.hpp"

namespace qaff {

Rational parse_rational(std::string_view text) {
    const auto fail = [&] {
        throw ParseError("not a rational literal: \"" + std::string(text) + "\"");
    };

    while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
        text.remove_prefix(1);
    while (!text.empty() && (text.back() == ' ' || text.back() == '\t'))
        text.remove_suffix(1);

    std::size_t i = 0;
    if (i < text.size() && text[i] == '-') ++i;
    const std::size_t digits_begin = i;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
    if (i == digits_begin) fail();
    BigInt num{std::string(text.substr(0, i))};

    BigInt den = 1;
    if (i < text.size()) {
        if (text[i] != '/') fail();
        ++i;
        const std::size_t den_begin = i;
        if (i == text.size() || text[i] < '1' || text[i] > '9') fail();  // bans "/0..."
        while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
        if (i != text.size()) fail();
        den = BigInt{std::string(text.substr(den_begin))};
    }
    if (i != text.size()) fail();

    return {num, den};
}

std::string to_text(const Rational& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

std::size_t numerator_bits(const Rational& x) {
    if (x == 0) return 0;
    return static_cast<std::size_t>(msb(abs(numerator(x)))) + 1;
}

QParam::QParam(Rational value) : value_(std::move(value)) {
    if (value_ == 0 || value_ == 1 || value_ == -1)
        throw DomainError("q must avoid 0, 1 and -1; got " + to_text(value_));
}

Rational QParam::inv() const { return Rational(1) / value_; }

Rational q_power(const QParam& q, long e) {
    Rational base = e < 0 ? q.inv() : q.value();
    // careful with LONG_MIN: negate in unsigned space
    unsigned long m = e < 0 ? 0ul - static_cast<unsigned long>(e) : static_cast<unsigned long>(e);
    Rational out = 1;
    while (m != 0) {
        if (m & 1ul) out *= base;
        base *= base;
        m >>= 1;
    }
    return out;
}

Rational q_int(unsigned n, const QParam& q) {
    if (n == 0) return 0;
    return (q_power(q, static_cast<long>(n)) - q_power(q, -static_cast<long>(n))) /
           (q.value() - q.inv());
}

}  // namespace qaff
