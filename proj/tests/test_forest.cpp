#include <doctest.h>

#include <numeric>
#include <random>

#include "moebius/forest.hpp"

using namespace moebius;

namespace {

const Matrix kL = Matrix::make(1, 1, 0, 1);
const Matrix kR = Matrix::make(1, 0, 1, 1);

Rational q(long long n, long long d) { return Rational(n, d); }
Vertex in(long long rn, long long rd, long long in_, long long id) { return Vertex(GaussianRational(q(rn, rd), q(in_, id))); }
Vertex on(long long n, long long d) { return Vertex(ExtendedRational(n, d)); }

ForestConfig calkin_wilf(Mode m = Mode::interior) { return ForestConfig(kL, kR, m); }

// Euclid on plain integers.
std::vector<long long> continued_fraction(long long p, long long q)
{
    std::vector<long long> out;
    while (q != 0) {
        out.push_back(p / q);
        p %= q;
        std::swap(p, q);
    }
    return out;
}

}  // namespace

TEST_CASE("config validation")
{
    CHECK_NOTHROW(calkin_wilf());
    CHECK_THROWS_AS(ForestConfig(kL, kL), InvalidConfig);
    CHECK_THROWS_AS(ForestConfig(Matrix::identity(), kR), InvalidConfig);
    CHECK_THROWS_AS(ForestConfig(Matrix::make(1, 1, 1, 2), kR), InvalidConfig);
    CHECK_THROWS_AS(Vertex(GaussianRational(0, 1)), DomainError);
    CHECK_THROWS_AS(Vertex(ExtendedRational::infinity()), DomainError);
    CHECK_THROWS_AS(on(0, 1), DomainError);
    CHECK_THROWS_AS(classify_vertex(calkin_wilf(Mode::interior), on(1, 2)), DomainError);
}

TEST_CASE("classify_vertex examples")
{
    auto cfg = calkin_wilf();
    Classification a = classify_vertex(cfg, in(3, 2, 1, 1));
    CHECK(a.kind == Classification::Kind::ChildOfL);
    CHECK(*a.parent == in(1, 2, 1, 1));

    CHECK(classify_vertex(cfg, in(1, 2, 1, 2)).kind == Classification::Kind::Root);

    Classification b = classify_vertex(calkin_wilf(Mode::boundary), on(3, 5));
    CHECK(b.kind == Classification::Kind::ChildOfR);
    CHECK(*b.parent == on(3, 2));
    CHECK(classify_vertex(calkin_wilf(Mode::boundary), on(1, 1)).kind == Classification::Kind::Root);
}

TEST_CASE("find_root examples")
{
    auto cfg = calkin_wilf();
    RootResult r0 = find_root(cfg, in(1, 2, 1, 2));
    CHECK(r0.root == in(1, 2, 1, 2));
    CHECK(r0.word.empty());
    CHECK(r0.steps == 0);

    RootResult r1 = find_root(cfg, in(3, 2, 1, 1));
    CHECK(r1.root == in(1, 2, 1, 1));
    CHECK(r1.word.to_string() == "L");
    CHECK(r1.steps == 1);

    RootResult r2 = find_root(calkin_wilf(Mode::boundary), on(3, 5));
    CHECK(r2.root == on(1, 1));
    CHECK(r2.word.to_string() == "RLR");
    CHECK(r2.steps == 3);
}

TEST_CASE("find_root guard")
{
    auto cfg = calkin_wilf(Mode::boundary);
    CHECK_THROWS_AS(find_root(cfg, on(3, 5), 2), GuardExhausted);
    CHECK(find_root(cfg, on(3, 5), 3).steps == 3);
    // 1000/1 needs 999 L-steps.
    CHECK(find_root(cfg, on(1000, 1)).steps == 999);
}

TEST_CASE("descend examples")
{
    auto cfg = calkin_wilf();
    CHECK(descend(cfg, in(5, 7, 2, 3), PathWord{}) == in(5, 7, 2, 3));
    CHECK(descend(cfg, in(1, 2, 1, 1), PathWord::parse("L")) == in(3, 2, 1, 1));
    CHECK(descend(calkin_wilf(Mode::boundary), on(1, 1), PathWord::parse("RLR")) == on(3, 5));
}

TEST_CASE("enumerate_tree on the Calkin-Wilf tree")
{
    auto cfg = calkin_wilf(Mode::boundary);
    auto d0 = enumerate_tree(cfg, on(1, 1), 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].vertex == on(1, 1));

    auto d2 = enumerate_tree(cfg, on(1, 1), 2);
    REQUIRE(d2.size() == 7);
    std::vector<Vertex> expected{on(1, 1), on(2, 1), on(1, 2), on(3, 1), on(2, 3), on(3, 2), on(1, 3)};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(d2[i].vertex == expected[i]);
        CHECK(descend(cfg, on(1, 1), d2[i].word) == d2[i].vertex);
    }
    CHECK(d2[4].word.to_string() == "RL");
    CHECK(d2[5].word.to_string() == "LR");

    auto w = words_up_to(2);
    REQUIRE(w.size() == 6);
    for (std::size_t i = 0; i < w.size(); ++i) CHECK(w[i] == d2[i + 1].word);
}

TEST_CASE("contraction_trace")
{
    auto t = contraction_trace(kR, 3);
    REQUIRE(t.size() == 3);
    CHECK(t[0] == ExtendedRational(1, 1));
    CHECK(t[1] == ExtendedRational(1, 2));
    CHECK(t[2] == ExtendedRational(1, 3));

    auto u = contraction_trace(Matrix::make(1, 1, 1, 2), 2);
    CHECK(u[0] == ExtendedRational(1, 2));
    CHECK(u[1] == ExtendedRational(1, 15));

    CHECK_THROWS_AS(contraction_trace(Matrix::identity(), 2), InfiniteDiameter);
    CHECK_THROWS_AS(contraction_trace(kL, 2), InfiniteDiameter);
}

TEST_CASE("random interior vertices: exclusivity, root soundness, round trip, finite runs")
{
    const std::vector<std::pair<Matrix, Matrix>> pairs{
        {kL, kR},
        {Matrix::make(2, 1, 1, 1), Matrix::make(1, 1, 1, 2)},
        {Matrix::make(1, 2, 0, 1), Matrix::make(1, 0, 2, 1)},
    };
    std::mt19937 rng(5);
    std::uniform_int_distribution<long long> n(1, 100);
    for (const auto& [L, R] : pairs) {
        ForestConfig cfg(L, R);
        for (int k = 0; k < 300; ++k) {
            Vertex v = in(n(rng), n(rng), n(rng), n(rng));
            RootResult r = find_root(cfg, v);
            CHECK(classify_vertex(cfg, r.root).kind == Classification::Kind::Root);
            CHECK(descend(cfg, r.root, r.word) == v);
            CHECK(r.steps == r.word.size());

            // A run of X of length len starting at vertex w puts w inside
            // X^len(D). When c(X) > 0 that bounds len by the first k with
            // diam(X^k(D)) < Im(w); for a translation by b, len * b < Re(w).
            Vertex w = v;
            for (auto [x, len] : r.word.runs()) {
                const Matrix& M = cfg.generator(x);
                const Rational re = w.interior().re;
                const Rational im = w.interior().im;
                if (M.c() != 0) {
                    std::size_t bound = 1;
                    Matrix Mk = M;
                    while (!(diam(slice_of(Mk)) < ExtendedRational::from_rational(im))) {
                        Mk = compose(Mk, M);
                        ++bound;
                    }
                    CHECK(len <= bound);
                } else {
                    CHECK(Rational(len) * Rational(M.b()) < re);
                }
                for (std::size_t k = 0; k < len; ++k) w = Vertex(inverse_apply(M, w.interior()));
            }
            CHECK(w == r.root);
        }
    }
}

TEST_CASE("boundary mode recovers continued fractions")
{
    auto cfg = calkin_wilf(Mode::boundary);
    for (long long p = 1; p <= 50; ++p) {
        for (long long qq = 1; qq <= 50; ++qq) {
            if (std::gcd(p, qq) != 1) continue;
            RootResult r = find_root(cfg, on(p, qq));
            CHECK(r.root == on(1, 1));
            // Outermost first the runs spell L^(a_0) R^(a_1) L^(a_2) ... with the
            // innermost run one short of a_k, where p/q = [a_0; a_1, ..., a_k].
            std::vector<long long> exps;
            Letter expect = Letter::L;
            for (auto [x, len] : r.word.runs()) {
                if (x != expect) exps.push_back(0);
                exps.push_back(static_cast<long long>(len));
                expect = x == Letter::L ? Letter::R : Letter::L;
            }
            if (exps.empty()) exps.push_back(0);
            exps.back() += 1;
            CHECK(exps == continued_fraction(p, qq));
        }
    }
}
