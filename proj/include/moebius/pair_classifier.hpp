#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "moebius/moebius_core.hpp"

namespace moebius {

/// Outcome of the geometric check. A witness is present exactly when the two
/// slices intersect, and it lies in both open slices.
struct PairVerdict {
    bool is_pair = false;
    std::optional<GaussianRational> witness;
};

/// Closed-form test: a1*d2 <= b2*c1 or a2*d1 <= c2*b1. Symmetric in A, B.
bool is_left_right_pair(const Matrix& A, const Matrix& B);

/// Decides disjointness from the slice endpoints alone and, for overlapping
/// slices, searches m + eps*i (eps = 1, 1/2, 1/4, ...) for a point inside
/// both. Gives up with InternalError after 512 halvings.
PairVerdict disjointness_oracle(const Matrix& A, const Matrix& B);

/// Every SL2(N0) matrix with entries in [0, max_entry], lexicographic.
std::vector<Matrix> enumerate_sl2n(unsigned max_entry);

struct PairMismatch {
    std::size_t first = 0;  // index into the matrix list
    std::size_t second = 0;
    bool predicate = false;
    bool oracle = false;
    std::optional<GaussianRational> witness;
};

struct VerifyReport {
    std::size_t matrices = 0;
    std::size_t pairs_checked = 0;
    std::size_t pairs_found = 0;
    std::size_t bad_witnesses = 0;
    std::vector<PairMismatch> mismatches;  // sorted by (first, second)
};

/// Predicate vs oracle over all ordered pairs of `ms`. Rows are split across
/// `threads` workers; the report does not depend on the thread count.
/// Witnesses are re-checked with contains_interior; failures count in
/// bad_witnesses.
VerifyReport verify_pairs(const std::vector<Matrix>& ms, unsigned threads = 1);

}  // namespace moebius
