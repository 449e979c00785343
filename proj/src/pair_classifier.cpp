#include "moebius/pair_classifier.hpp"

#include <algorithm>
#include <future>

namespace moebius {

namespace {

constexpr int kMaxHalvings = 512;

// A real point strictly inside both open intervals (lo, hi).
Rational overlap_point(const Slice& s, const Slice& t)
{
    const ExtendedRational& lo = std::max(s.lo(), t.lo());
    if (!s.is_bounded() && !t.is_bounded()) return lo.to_rational() + 1;
    const ExtendedRational& hi = std::min(s.hi(), t.hi());
    return (lo.to_rational() + hi.to_rational()) / 2;
}

}  // namespace

bool is_left_right_pair(const Matrix& A, const Matrix& B)
{
    return A.a() * B.d() <= B.b() * A.c() || B.a() * A.d() <= B.c() * A.b();
}

PairVerdict disjointness_oracle(const Matrix& A, const Matrix& B)
{
    Slice sa = slice_of(A);
    Slice sb = slice_of(B);
    // Touching endpoints still count as disjoint: only interiors matter.
    if (sa.hi() <= sb.lo() || sb.hi() <= sa.lo()) return {true, std::nullopt};

    Rational m = overlap_point(sa, sb);
    Rational eps = 1;
    for (int k = 0; k <= kMaxHalvings; ++k) {
        GaussianRational z{m, eps};
        if (contains_interior(A, z) && contains_interior(B, z)) return {false, z};
        eps /= 2;
    }
    throw InternalError("no witness found for overlapping slices " + sa.to_string() + " and " + sb.to_string());
}

std::vector<Matrix> enumerate_sl2n(unsigned max_entry)
{
    std::vector<Matrix> out;
    const unsigned long long n = max_entry;
    for (unsigned long long a = 0; a <= n; ++a)
        for (unsigned long long b = 0; b <= n; ++b)
            for (unsigned long long c = 0; c <= n; ++c)
                for (unsigned long long d = 0; d <= n; ++d)
                    if (a * d == b * c + 1) out.push_back(Matrix::make(a, b, c, d));
    return out;
}

namespace {

struct RowResult {
    std::size_t pairs_found = 0;
    std::size_t bad_witnesses = 0;
    std::vector<PairMismatch> mismatches;
};

RowResult check_rows(const std::vector<Matrix>& ms, std::size_t begin, std::size_t end)
{
    RowResult r;
    for (std::size_t i = begin; i < end; ++i) {
        for (std::size_t j = 0; j < ms.size(); ++j) {
            bool predicate = is_left_right_pair(ms[i], ms[j]);
            PairVerdict v = disjointness_oracle(ms[i], ms[j]);
            if (predicate) ++r.pairs_found;
            if (v.witness && !(contains_interior(ms[i], *v.witness) && contains_interior(ms[j], *v.witness)))
                ++r.bad_witnesses;
            if (predicate != v.is_pair) r.mismatches.push_back({i, j, predicate, v.is_pair, v.witness});
        }
    }
    return r;
}

}  // namespace

VerifyReport verify_pairs(const std::vector<Matrix>& ms, unsigned threads)
{
    VerifyReport report;
    report.matrices = ms.size();
    report.pairs_checked = ms.size() * ms.size();
    threads = std::max(1u, threads);

    std::size_t chunk = (ms.size() + threads - 1) / threads;
    std::vector<std::future<RowResult>> jobs;
    for (std::size_t begin = 0; begin < ms.size(); begin += chunk) {
        std::size_t end = std::min(ms.size(), begin + chunk);
        if (threads == 1)
            jobs.push_back(std::async(std::launch::deferred, check_rows, std::cref(ms), begin, end));
        else
            jobs.push_back(std::async(std::launch::async, check_rows, std::cref(ms), begin, end));
    }
    // Chunks are contiguous row ranges collected in order, so mismatches
    // come out sorted.
    for (auto& job : jobs) {
        RowResult r = job.get();
        report.pairs_found += r.pairs_found;
        report.bad_witnesses += r.bad_witnesses;
        report.mismatches.insert(report.mismatches.end(), std::make_move_iterator(r.mismatches.begin()),
                                 std::make_move_iterator(r.mismatches.end()));
    }
    return report;
}

}  // namespace moebius
