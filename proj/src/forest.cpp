#include "moebius/forest.hpp"

#include "moebius/pair_classifier.hpp"

namespace moebius {

std::string_view to_string(Mode m) { return m == Mode::interior ? "interior" : "boundary"; }

Mode parse_mode(std::string_view text)
{
    if (text == "interior") return Mode::interior;
    if (text == "boundary") return Mode::boundary;
    throw ParseError("mode must be 'interior' or 'boundary', got '" + std::string(text) + "'");
}

ForestConfig::ForestConfig(Matrix L, Matrix R, Mode mode) : L_(std::move(L)), R_(std::move(R)), mode_(mode)
{
    if (L_.is_identity() || R_.is_identity()) throw InvalidConfig("forest generators must not be the identity");
    if (!is_left_right_pair(L_, R_))
        throw InvalidConfig("(" + L_.to_string() + ", " + R_.to_string() + ") is not a left-right pair");
}

Vertex::Vertex(GaussianRational z) : v_(std::move(z))
{
    if (!interior().in_quadrant()) throw DomainError("vertex " + interior().to_string() + " is not in the open quadrant");
}

Vertex::Vertex(ExtendedRational x) : v_(std::move(x))
{
    if (boundary().is_zero() || boundary().is_infinite())
        throw DomainError("boundary vertex " + boundary().to_string() + " is not in (0, inf)");
}

Vertex Vertex::parse(std::string_view text, Mode mode)
{
    if (mode == Mode::interior) return Vertex(GaussianRational::parse(text));
    return Vertex(ExtendedRational::parse(text));
}

std::string Vertex::to_string() const
{
    return mode() == Mode::interior ? interior().to_string() : boundary().to_string();
}

namespace {

// Parent of x under M when x lies in the open interval (b/d, a/c):
// M^-1(p/q) = (d*p - b*q)/(a*q - c*p), both terms positive exactly then.
std::optional<ExtendedRational> boundary_parent(const Matrix& M, const ExtendedRational& x)
{
    Slice s = slice_of(M);
    if (!(s.lo() < x && x < s.hi())) return std::nullopt;
    BigInt num = M.d() * x.num() - M.b() * x.den();
    BigInt den = M.a() * x.den() - M.c() * x.num();
    if (num <= 0 || den <= 0) throw InternalError("boundary inverse left (0, inf) for " + x.to_string());
    return ExtendedRational(std::move(num), std::move(den));
}

std::optional<Vertex> parent_under(const Matrix& M, const Vertex& v)
{
    if (v.mode() == Mode::interior) {
        if (!contains_interior(M, v.interior())) return std::nullopt;
        return Vertex(inverse_apply(M, v.interior()));
    }
    if (auto p = boundary_parent(M, v.boundary())) return Vertex(std::move(*p));
    return std::nullopt;
}

Vertex apply(const Matrix& M, const Vertex& v)
{
    if (v.mode() == Mode::interior) return Vertex(apply_interior(M, v.interior()));
    return Vertex(apply_boundary(M, v.boundary()));
}

}  // namespace

Classification classify_vertex(const ForestConfig& cfg, const Vertex& v)
{
    if (v.mode() != cfg.mode())
        throw DomainError("vertex " + v.to_string() + " does not match forest mode " + std::string(to_string(cfg.mode())));
    auto from_left = parent_under(cfg.left(), v);
    auto from_right = parent_under(cfg.right(), v);
    if (from_left && from_right)
        throw InternalError("vertex " + v.to_string() + " lies in both L and R images");
    if (from_left) return {Classification::Kind::ChildOfL, std::move(from_left)};
    if (from_right) return {Classification::Kind::ChildOfR, std::move(from_right)};
    return {};
}

RootResult find_root(const ForestConfig& cfg, const Vertex& v, std::uint64_t max_steps)
{
    RootResult r{v, {}, 0};
    for (;;) {
        Classification c = classify_vertex(cfg, r.root);
        if (c.kind == Classification::Kind::Root) return r;
        if (r.steps == max_steps)
            throw GuardExhausted("no root reached from " + v.to_string() + " within " + std::to_string(max_steps) +
                                 " steps");
        // Walking upward discovers the outermost letter first.
        r.word.push_back(c.kind == Classification::Kind::ChildOfL ? Letter::L : Letter::R);
        r.root = std::move(*c.parent);
        ++r.steps;
    }
}

Vertex descend(const ForestConfig& cfg, const Vertex& v, const PathWord& word)
{
    Vertex out = v;
    for (std::size_t i = word.size(); i-- > 0;) out = apply(cfg.generator(word[i]), out);
    return out;
}

std::vector<TreeNode> enumerate_tree(const ForestConfig& cfg, const Vertex& root, unsigned depth)
{
    std::vector<TreeNode> out;
    out.reserve((std::size_t{2} << depth) - 1);
    out.push_back({root, {}});
    std::size_t level_begin = 0;
    for (unsigned k = 0; k < depth; ++k) {
        std::size_t level_end = out.size();
        for (std::size_t i = level_begin; i < level_end; ++i) {
            for (Letter x : {Letter::L, Letter::R}) {
                Vertex child = apply(cfg.generator(x), out[i].vertex);
                out.push_back({std::move(child), out[i].word.prepended(x)});
            }
        }
        level_begin = level_end;
    }
    return out;
}

std::vector<PathWord> words_up_to(unsigned depth)
{
    std::vector<PathWord> out;
    std::vector<PathWord> level{PathWord{}};
    for (unsigned k = 0; k < depth; ++k) {
        std::vector<PathWord> next;
        next.reserve(level.size() * 2);
        for (const auto& w : level) {
            next.push_back(w.prepended(Letter::L));
            next.push_back(w.prepended(Letter::R));
        }
        out.insert(out.end(), next.begin(), next.end());
        level = std::move(next);
    }
    return out;
}

std::vector<ExtendedRational> contraction_trace(const Matrix& M, std::uint64_t n)
{
    if (M.c() == 0) throw InfiniteDiameter("M(D) is unbounded when c = 0; diameters are infinite");
    std::vector<ExtendedRational> out;
    out.reserve(n);
    Matrix Mk = M;
    for (std::uint64_t k = 1; k <= n; ++k) {
        out.push_back(diam(slice_of(Mk)));
        Mk = compose(Mk, M);
    }
    return out;
}

}  // namespace moebius
