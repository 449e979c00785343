#pragma once

// Exact arithmetic primitives: nonnegative extended rationals (with a single
// point at infinity) and Gaussian rationals x + yi.

#include <compare>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace moebius {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct ArithmeticError : std::domain_error {
    using std::domain_error::domain_error;
};

struct DivisionByZero : ArithmeticError {
    using ArithmeticError::ArithmeticError;
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A point of [0, inf]: either a reduced fraction num/den with den >= 1, or
/// infinity stored as 1/0. Zero is always 0/1.
class ExtendedRational {
public:
    ExtendedRational() : num_(0), den_(1) {}
    /// Normalizes to lowest terms. Throws ArithmeticError for 0/0 or a
    /// negative component.
    ExtendedRational(BigInt num, BigInt den);
    ExtendedRational(BigInt num) : ExtendedRational(std::move(num), BigInt(1)) {}
    ExtendedRational(long long num, long long den) : ExtendedRational(BigInt(num), BigInt(den)) {}

    static ExtendedRational infinity() { return {BigInt(1), BigInt(0)}; }
    /// Throws ArithmeticError if r < 0.
    static ExtendedRational from_rational(const Rational& r);
    /// "p/q", "p" or "inf".
    static ExtendedRational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    bool is_zero() const { return num_ == 0; }

    /// Finite value as a signed rational. Throws ArithmeticError on infinity.
    Rational to_rational() const;
    std::string to_string() const;

    friend bool operator==(const ExtendedRational&, const ExtendedRational&) = default;
    friend std::strong_ordering operator<=>(const ExtendedRational& p, const ExtendedRational& q);

private:
    BigInt num_;
    BigInt den_;
};

/// Total order on [0, inf]; finite values are compared by cross-multiplication.
std::strong_ordering compare(const ExtendedRational& p, const ExtendedRational& q);

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x);

/// Signed rational rendered as "p/q" (always with a denominator).
std::string rational_to_string(const Rational& r);
Rational parse_rational(std::string_view text);

/// Exact complex number with rational components.
struct GaussianRational {
    Rational re;
    Rational im;

    GaussianRational() = default;
    GaussianRational(Rational re_, Rational im_) : re(std::move(re_)), im(std::move(im_)) {}

    /// True iff re > 0 and im > 0, i.e. the point lies in the open quadrant.
    bool in_quadrant() const { return re > 0 && im > 0; }
    bool is_zero() const { return re == 0 && im == 0; }
    GaussianRational conj() const { return {re, -im}; }

    /// "p/q+r/si" (or "p/q-r/si" for negative imaginary part).
    std::string to_string() const;
    static GaussianRational parse(std::string_view text);

    friend bool operator==(const GaussianRational&, const GaussianRational&) = default;
};

GaussianRational operator+(const GaussianRational& z, const GaussianRational& w);
GaussianRational operator-(const GaussianRational& z, const GaussianRational& w);
GaussianRational operator-(const GaussianRational& z);
GaussianRational operator*(const GaussianRational& z, const GaussianRational& w);
GaussianRational operator*(const Rational& k, const GaussianRational& z);

/// Exact quotient via the conjugate. Throws DivisionByZero when w = 0.
GaussianRational gaussian_div(const GaussianRational& z, const GaussianRational& w);
inline GaussianRational operator/(const GaussianRational& z, const GaussianRational& w)
{
    return gaussian_div(z, w);
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace moebius
