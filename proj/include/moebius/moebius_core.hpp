#pragma once

// SL2(N0) matrices acting as Moebius transformations z -> (az + b)/(cz + d)
// on the open quadrant, its boundary, and on slices.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "moebius/exact_arith.hpp"

namespace moebius {

struct InvalidMatrix : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Point outside the open quadrant passed where one is required.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct PoleError : std::domain_error {
    using std::domain_error::domain_error;
};

/// Violated internal invariant; reaching this is a bug.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

/// A 2x2 matrix (a b; c d) with nonnegative entries and ad - bc = 1.
/// Construction validates, so a >= 1 and d >= 1 always hold.
class Matrix {
public:
    /// Throws InvalidMatrix on a negative entry or determinant != 1.
    static Matrix make(BigInt a, BigInt b, BigInt c, BigInt d);
    static Matrix identity() { return make(1, 0, 0, 1); }
    /// Four whitespace-separated naturals, "a b c d".
    static Matrix parse(std::string_view text);

    const BigInt& a() const { return a_; }
    const BigInt& b() const { return b_; }
    const BigInt& c() const { return c_; }
    const BigInt& d() const { return d_; }

    bool is_identity() const { return a_ == 1 && b_ == 0 && c_ == 0 && d_ == 1; }
    std::string to_string() const;

    friend bool operator==(const Matrix&, const Matrix&) = default;
    /// Lexicographic on (a, b, c, d).
    friend std::strong_ordering operator<=>(const Matrix& x, const Matrix& y);

private:
    Matrix(BigInt a, BigInt b, BigInt c, BigInt d)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d))
    {
    }

    BigInt a_, b_, c_, d_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

/// Matrix product A*B; as maps, A after B.
Matrix compose(const Matrix& A, const Matrix& B);
inline Matrix operator*(const Matrix& A, const Matrix& B) { return compose(A, B); }

/// M^n by repeated composition. M^0 is the identity.
Matrix power(const Matrix& M, std::uint64_t n);

/// Action on R>=0 u {inf}: (a*num + b*den)/(c*num + d*den).
ExtendedRational apply_boundary(const Matrix& M, const ExtendedRational& x);

/// Image of a point of the open quadrant. Throws DomainError when z is not
/// in the quadrant.
GaussianRational apply_interior(const Matrix& M, const GaussianRational& z);

/// Action of the adjugate (d -b; -c a), valid anywhere except the pole a/c.
/// The result may lie outside the quadrant. Throws PoleError at the pole.
GaussianRational inverse_apply(const Matrix& M, const GaussianRational& z);

/// z in M(D), decided by strict positivity of inverse_apply(M, z).
/// Points on the bounding geodesic are outside.
bool contains_interior(const Matrix& M, const GaussianRational& z);

/// The open region of the quadrant cut off by a geodesic with endpoints
/// lo < hi on R>=0 u {inf}. Only hi may be infinite.
class Slice {
public:
    /// Throws DomainError unless lo is finite and lo < hi.
    Slice(ExtendedRational lo, ExtendedRational hi);

    const ExtendedRational& lo() const { return lo_; }
    const ExtendedRational& hi() const { return hi_; }
    bool is_bounded() const { return !hi_.is_infinite(); }

    /// "[lo, hi)"
    std::string to_string() const;
    friend bool operator==(const Slice&, const Slice&) = default;

private:
    ExtendedRational lo_;
    ExtendedRational hi_;
};

std::ostream& operator<<(std::ostream& os, const Slice& s);

/// M(D): endpoints b/d and a/c.
Slice slice_of(const Matrix& M);

/// hi - lo, or infinity for a vertical-ray slice.
ExtendedRational diam(const Slice& s);

/// n-fold iterate of t -> t/(t + 1), i.e. t/(n*t + 1). Throws DomainError
/// unless t > 0.
Rational contraction_bound(const Rational& t, std::uint64_t n);

enum class Letter : char { L = 'L', R = 'R' };

/// Word over {L, R}, outermost generator first: "RL" denotes R o L.
class PathWord {
public:
    PathWord() = default;
    explicit PathWord(std::vector<Letter> letters) : letters_(std::move(letters)) {}
    /// Throws ParseError on characters other than 'L' and 'R'.
    static PathWord parse(std::string_view text);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    void push_back(Letter x) { letters_.push_back(x); }
    /// New word x o this.
    PathWord prepended(Letter x) const;

    /// Maximal runs of equal letters, outermost first.
    std::vector<std::pair<Letter, std::size_t>> runs() const;

    std::string to_string() const;
    friend bool operator==(const PathWord&, const PathWord&) = default;

private:
    std::vector<Letter> letters_;
};

/// Product of the generators spelled by the word, outermost first.
Matrix evaluate(const PathWord& word, const Matrix& L, const Matrix& R);

}  // namespace moebius
