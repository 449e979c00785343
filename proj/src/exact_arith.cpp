#include "moebius/exact_arith.hpp"

#include <ostream>
#include <regex>

namespace moebius {

namespace {

bool all_digits(std::string_view s)
{
    if (s.empty()) return false;
    for (char ch : s)
        if (ch < '0' || ch > '9') return false;
    return true;
}

BigInt parse_natural(std::string_view s)
{
    if (!all_digits(s)) throw ParseError("expected a nonnegative integer, got '" + std::string(s) + "'");
    return BigInt(std::string(s));
}

}  // namespace

ExtendedRational::ExtendedRational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den))
{
    if (num_ < 0 || den_ < 0) throw ArithmeticError("extended rational components must be nonnegative");
    if (num_ == 0 && den_ == 0) throw ArithmeticError("0/0 is not a value");
    if (den_ == 0) {
        num_ = 1;
        return;
    }
    if (num_ == 0) {
        den_ = 1;
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g != 1) {
        num_ /= g;
        den_ /= g;
    }
}

ExtendedRational ExtendedRational::from_rational(const Rational& r)
{
    if (r < 0) throw ArithmeticError("negative value " + rational_to_string(r) + " has no extended rational form");
    return {numerator(r), denominator(r)};
}

ExtendedRational ExtendedRational::parse(std::string_view text)
{
    if (text == "inf") return infinity();
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return {parse_natural(text), BigInt(1)};
    BigInt num = parse_natural(text.substr(0, slash));
    BigInt den = parse_natural(text.substr(slash + 1));
    if (num == 0 && den == 0) throw ParseError("0/0 is not a value");
    return {std::move(num), std::move(den)};
}

Rational ExtendedRational::to_rational() const
{
    if (is_infinite()) throw ArithmeticError("infinity has no rational value");
    return Rational(num_, den_);
}

std::string ExtendedRational::to_string() const
{
    if (is_infinite()) return "inf";
    return num_.str() + "/" + den_.str();
}

std::strong_ordering compare(const ExtendedRational& p, const ExtendedRational& q)
{
    if (p.is_infinite() || q.is_infinite()) {
        if (p.is_infinite() && q.is_infinite()) return std::strong_ordering::equal;
        return p.is_infinite() ? std::strong_ordering::greater : std::strong_ordering::less;
    }
    BigInt lhs = p.num() * q.den();
    BigInt rhs = q.num() * p.den();
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const ExtendedRational& p, const ExtendedRational& q) { return compare(p, q); }

std::ostream& operator<<(std::ostream& os, const ExtendedRational& x) { return os << x.to_string(); }

std::string rational_to_string(const Rational& r)
{
    return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(std::string_view text)
{
    bool negative = false;
    if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    auto slash = text.find('/');
    BigInt num = parse_natural(text.substr(0, slash));
    BigInt den = slash == std::string_view::npos ? BigInt(1) : parse_natural(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational r(num, den);
    return negative ? Rational(-r) : r;
}

std::string GaussianRational::to_string() const
{
    std::string out = rational_to_string(re);
    if (im < 0)
        out += "-" + rational_to_string(-im);
    else
        out += "+" + rational_to_string(im);
    return out + "i";
}

GaussianRational GaussianRational::parse(std::string_view text)
{
    static const std::regex grammar(R"(^([+-]?\d+(?:/\d+)?)([+-]\d+(?:/\d+)?)i$)");
    std::string s(text);
    std::smatch m;
    if (!std::regex_match(s, m, grammar))
        throw ParseError("expected a Gaussian rational like 3/2+1/1i, got '" + s + "'");
    return {parse_rational(m[1].str()), parse_rational(m[2].str())};
}

GaussianRational operator+(const GaussianRational& z, const GaussianRational& w)
{
    return {z.re + w.re, z.im + w.im};
}

GaussianRational operator-(const GaussianRational& z, const GaussianRational& w)
{
    return {z.re - w.re, z.im - w.im};
}

GaussianRational operator-(const GaussianRational& z) { return {-z.re, -z.im}; }

GaussianRational operator*(const GaussianRational& z, const GaussianRational& w)
{
    return {z.re * w.re - z.im * w.im, z.re * w.im + z.im * w.re};
}

GaussianRational operator*(const Rational& k, const GaussianRational& z) { return {k * z.re, k * z.im}; }

GaussianRational gaussian_div(const GaussianRational& z, const GaussianRational& w)
{
    if (w.is_zero()) throw DivisionByZero("division by the zero Gaussian rational");
    Rational norm = w.re * w.re + w.im * w.im;
    GaussianRational num = z * w.conj();
    return {num.re / norm, num.im / norm};
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.to_string(); }

}  // namespace moebius
