#include "moebius/moebius_core.hpp"

#include <ostream>
#include <sstream>

namespace moebius {

Matrix Matrix::make(BigInt a, BigInt b, BigInt c, BigInt d)
{
    if (a < 0 || b < 0 || c < 0 || d < 0) throw InvalidMatrix("matrix entries must be nonnegative");
    BigInt det = a * d - b * c;
    if (det != 1)
        throw InvalidMatrix("determinant of (" + a.str() + " " + b.str() + " " + c.str() + " " + d.str() +
                            ") is " + det.str() + ", expected 1");
    return Matrix(std::move(a), std::move(b), std::move(c), std::move(d));
}

Matrix Matrix::parse(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string tok[4];
    for (auto& t : tok) {
        if (!(in >> t)) throw ParseError("expected four entries \"a b c d\", got '" + std::string(text) + "'");
    }
    std::string extra;
    if (in >> extra) throw ParseError("expected four entries \"a b c d\", got '" + std::string(text) + "'");
    BigInt e[4];
    for (int i = 0; i < 4; ++i) {
        const auto& t = tok[i];
        bool digits = !t.empty();
        for (char ch : t) digits = digits && ch >= '0' && ch <= '9';
        if (!digits) throw ParseError("matrix entry '" + t + "' is not a nonnegative integer");
        e[i] = BigInt(t);
    }
    return make(e[0], e[1], e[2], e[3]);
}

std::string Matrix::to_string() const
{
    return a_.str() + " " + b_.str() + " " + c_.str() + " " + d_.str();
}

std::strong_ordering operator<=>(const Matrix& x, const Matrix& y)
{
    const BigInt* lhs[] = {&x.a_, &x.b_, &x.c_, &x.d_};
    const BigInt* rhs[] = {&y.a_, &y.b_, &y.c_, &y.d_};
    for (int i = 0; i < 4; ++i) {
        if (*lhs[i] < *rhs[i]) return std::strong_ordering::less;
        if (*lhs[i] > *rhs[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) { return os << "(" << m.to_string() << ")"; }

Matrix compose(const Matrix& A, const Matrix& B)
{
    return Matrix::make(A.a() * B.a() + A.b() * B.c(), A.a() * B.b() + A.b() * B.d(),
                        A.c() * B.a() + A.d() * B.c(), A.c() * B.b() + A.d() * B.d());
}

Matrix power(const Matrix& M, std::uint64_t n)
{
    Matrix out = Matrix::identity();
    for (std::uint64_t k = 0; k < n; ++k) out = compose(out, M);
    return out;
}

ExtendedRational apply_boundary(const Matrix& M, const ExtendedRational& x)
{
    // Never 0/0: d >= 1 keeps the denominator positive for finite x, and
    // a >= 1 keeps the numerator positive for x = inf.
    return {M.a() * x.num() + M.b() * x.den(), M.c() * x.num() + M.d() * x.den()};
}

GaussianRational apply_interior(const Matrix& M, const GaussianRational& z)
{
    if (!z.in_quadrant()) throw DomainError("point " + z.to_string() + " is not in the open quadrant");
    GaussianRational num{Rational(M.a()) * z.re + Rational(M.b()), Rational(M.a()) * z.im};
    GaussianRational den{Rational(M.c()) * z.re + Rational(M.d()), Rational(M.c()) * z.im};
    GaussianRational w = gaussian_div(num, den);
    if (!w.in_quadrant())
        throw InternalError("image " + w.to_string() + " of a quadrant point left the quadrant");
    return w;
}

namespace {

// -c*z + a, the denominator of the inverse map.
GaussianRational inverse_denominator(const Matrix& M, const GaussianRational& z)
{
    return {Rational(M.a()) - Rational(M.c()) * z.re, -Rational(M.c()) * z.im};
}

}  // namespace

GaussianRational inverse_apply(const Matrix& M, const GaussianRational& z)
{
    GaussianRational den = inverse_denominator(M, z);
    if (den.is_zero()) throw PoleError("point " + z.to_string() + " is the pole of the inverse map");
    GaussianRational num{Rational(M.d()) * z.re - Rational(M.b()), Rational(M.d()) * z.im};
    return gaussian_div(num, den);
}

bool contains_interior(const Matrix& M, const GaussianRational& z)
{
    if (inverse_denominator(M, z).is_zero()) return false;
    return inverse_apply(M, z).in_quadrant();
}

Slice::Slice(ExtendedRational lo, ExtendedRational hi) : lo_(std::move(lo)), hi_(std::move(hi))
{
    if (lo_.is_infinite()) throw DomainError("slice lower endpoint must be finite");
    if (!(lo_ < hi_)) throw DomainError("slice endpoints out of order: " + lo_.to_string() + ", " + hi_.to_string());
}

std::string Slice::to_string() const { return "[" + lo_.to_string() + ", " + hi_.to_string() + ")"; }

std::ostream& operator<<(std::ostream& os, const Slice& s) { return os << s.to_string(); }

Slice slice_of(const Matrix& M) { return {ExtendedRational(M.b(), M.d()), ExtendedRational(M.a(), M.c())}; }

ExtendedRational diam(const Slice& s)
{
    if (!s.is_bounded()) return ExtendedRational::infinity();
    return ExtendedRational::from_rational(s.hi().to_rational() - s.lo().to_rational());
}

Rational contraction_bound(const Rational& t, std::uint64_t n)
{
    if (t <= 0) throw DomainError("contraction bound needs t > 0");
    return t / (Rational(n) * t + 1);
}

PathWord PathWord::parse(std::string_view text)
{
    PathWord w;
    for (char ch : text) {
        if (ch == 'L')
            w.push_back(Letter::L);
        else if (ch == 'R')
            w.push_back(Letter::R);
        else
            throw ParseError("path word may only contain L and R, got '" + std::string(text) + "'");
    }
    return w;
}

PathWord PathWord::prepended(Letter x) const
{
    std::vector<Letter> out;
    out.reserve(letters_.size() + 1);
    out.push_back(x);
    out.insert(out.end(), letters_.begin(), letters_.end());
    return PathWord(std::move(out));
}

std::vector<std::pair<Letter, std::size_t>> PathWord::runs() const
{
    std::vector<std::pair<Letter, std::size_t>> out;
    for (Letter x : letters_) {
        if (!out.empty() && out.back().first == x)
            ++out.back().second;
        else
            out.emplace_back(x, 1);
    }
    return out;
}

std::string PathWord::to_string() const
{
    std::string s;
    s.reserve(letters_.size());
    for (Letter x : letters_) s.push_back(static_cast<char>(x));
    return s;
}

Matrix evaluate(const PathWord& word, const Matrix& L, const Matrix& R)
{
    Matrix out = Matrix::identity();
    for (Letter x : word) out = compose(out, x == Letter::L ? L : R);
    return out;
}

}  // namespace moebius
