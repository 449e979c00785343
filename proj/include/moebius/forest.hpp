#pragma once

// Navigation of the forest F(L, R): vertices are points of the open quadrant
// (interior mode) or of the open half-line (0, inf) (boundary mode), with
// edges z -> L(z) and z -> R(z).

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "moebius/moebius_core.hpp"

namespace moebius {

enum class Mode { interior, boundary };

std::string_view to_string(Mode m);
/// "interior" or "boundary"; throws ParseError otherwise.
Mode parse_mode(std::string_view text);

struct InvalidConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// find_root ran out of steps.
struct GuardExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InfiniteDiameter : std::domain_error {
    using std::domain_error::domain_error;
};

class ForestConfig {
public:
    /// Throws InvalidConfig unless (L, R) is a left-right pair and neither is
    /// the identity.
    ForestConfig(Matrix L, Matrix R, Mode mode = Mode::interior);

    const Matrix& left() const { return L_; }
    const Matrix& right() const { return R_; }
    const Matrix& generator(Letter x) const { return x == Letter::L ? L_ : R_; }
    Mode mode() const { return mode_; }

private:
    Matrix L_;
    Matrix R_;
    Mode mode_;
};

/// A quadrant point or a positive finite boundary point.
class Vertex {
public:
    /// Throws DomainError unless z is in the open quadrant.
    explicit Vertex(GaussianRational z);
    /// Throws DomainError unless 0 < x < inf.
    explicit Vertex(ExtendedRational x);

    /// Interior vertices use the Gaussian grammar, boundary ones "p/q".
    static Vertex parse(std::string_view text, Mode mode);

    Mode mode() const { return std::holds_alternative<GaussianRational>(v_) ? Mode::interior : Mode::boundary; }
    const GaussianRational& interior() const { return std::get<GaussianRational>(v_); }
    const ExtendedRational& boundary() const { return std::get<ExtendedRational>(v_); }

    std::string to_string() const;
    friend bool operator==(const Vertex&, const Vertex&) = default;

private:
    std::variant<GaussianRational, ExtendedRational> v_;
};

struct Classification {
    enum class Kind { ChildOfL, ChildOfR, Root };
    Kind kind = Kind::Root;
    std::optional<Vertex> parent;  // set unless kind == Root
};

/// Which generator, if any, maps a vertex of the forest onto v. Throws
/// DomainError if v's mode differs from the config's.
Classification classify_vertex(const ForestConfig& cfg, const Vertex& v);

struct RootResult {
    Vertex root;
    PathWord word;  // descend(cfg, root, word) == query
    std::uint64_t steps = 0;
};

inline constexpr std::uint64_t kDefaultMaxSteps = std::uint64_t{1} << 20;

/// Climbs parents until a root. Throws GuardExhausted after max_steps
/// parent steps without reaching one.
RootResult find_root(const ForestConfig& cfg, const Vertex& v, std::uint64_t max_steps = kDefaultMaxSteps);

/// Applies the word to v, innermost (last) letter first.
Vertex descend(const ForestConfig& cfg, const Vertex& v, const PathWord& word);

struct TreeNode {
    Vertex vertex;
    PathWord word;
};

/// Breadth-first expansion to the given depth: 2^(depth+1) - 1 nodes, each
/// level listing the children of the previous level in order, L child first.
std::vector<TreeNode> enumerate_tree(const ForestConfig& cfg, const Vertex& root, unsigned depth);

/// Words of lengths 1..depth in the same order as enumerate_tree.
std::vector<PathWord> words_up_to(unsigned depth);

/// [diam(slice_of(M^1)), ..., diam(slice_of(M^n))]. Throws InfiniteDiameter
/// when c = 0.
std::vector<ExtendedRational> contraction_trace(const Matrix& M, std::uint64_t n);

}  // namespace moebius
