#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <string_view>

namespace qaff {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar.  Always held in lowest terms with positive
/// denominator (the backing type canonicalizes after every operation), so
/// equality of scalars, matrices and subspaces is decidable bit for bit.
/// There is no floating point and no epsilon anywhere in this library.
using Rational = boost::multiprecision::cpp_rational;

/// Parses the text form `-?[0-9]+(/[1-9][0-9]*)?`.
///
/// The denominator may not start with 0, which also rules out "1/0".
/// Anything outside the grammar (whitespace, '+', empty string, trailing
/// garbage) throws ParseError.
Rational parse_rational(std::string_view text);

/// Lowest-terms text form; integers print without the "/1".
std::string to_text(const Rational& x);

/// Bit length of |numerator(x)|, 0 for x == 0.  Verification reports use
/// this as the size measure for residual entries.
std::size_t numerator_bits(const Rational& x);

/// Deformation parameter.  Guards the blanket assumption q != 0, 1, -1;
/// a rational q outside that set is never a root of unity, so the
/// q-integers [n] never vanish for n >= 1.
class QParam {
public:
    /// Throws DomainError when value is 0, 1 or -1.
    explicit QParam(Rational value);

    const Rational& value() const noexcept { return value_; }

    /// q^-1.
    Rational inv() const;

    bool operator==(const QParam&) const = default;

private:
    Rational value_;
};

/// q^e for any integer e.
Rational q_power(const QParam& q, long e);

/// The q-integer [n] = (q^n - q^-n) / (q - q^-1); [0] = 0, [1] = 1.
Rational q_int(unsigned n, const QParam& q);

}  // namespace qaff
