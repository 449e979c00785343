#pragma once

#include <string>

#include "moebius/forest.hpp"

namespace moebius {

struct RenderSpec {
    unsigned depth = 3;
    Rational x_max = 4;
    Rational y_max = 2;

    static constexpr unsigned kMaxDepth = 12;
};

/// Decimal text with `digits` significant digits.
std::string to_decimal(const Rational& r, int digits = 20);

/// SVG picture of the quadrant window [0, x_max] x [0, y_max] with the
/// bounding geodesic of slice_of(evaluate(w)) for every word w of length
/// 1..depth, in enumerate_tree order. Each geodesic is one element carrying
/// class="geodesic". Throws DomainError for depth > kMaxDepth or a
/// nonpositive window.
std::string render_svg(const ForestConfig& cfg, const RenderSpec& spec);

}  // namespace moebius
