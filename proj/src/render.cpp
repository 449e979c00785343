#include "moebius/render.hpp"

#include <sstream>

#include <boost/multiprecision/cpp_dec_float.hpp>

namespace moebius {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 400;
constexpr int kMargin = 20;

struct Frame {
    Rational sx, sy;  // pixels per unit

    Rational px(const Rational& x) const { return kMargin + x * sx; }
    Rational py(const Rational& y) const { return kMargin + kHeight - y * sy; }
};

}  // namespace

std::string to_decimal(const Rational& r, int digits)
{
    using Dec = boost::multiprecision::cpp_dec_float_50;
    Dec v = Dec(numerator(r)) / Dec(denominator(r));
    return v.str(digits);
}

std::string render_svg(const ForestConfig& cfg, const RenderSpec& spec)
{
    if (spec.depth > RenderSpec::kMaxDepth)
        throw DomainError("render depth " + std::to_string(spec.depth) + " exceeds " +
                          std::to_string(RenderSpec::kMaxDepth));
    if (spec.x_max <= 0 || spec.y_max <= 0) throw DomainError("render window must be positive");

    const Frame f{Rational(kWidth) / spec.x_max, Rational(kHeight) / spec.y_max};
    auto num = [](const Rational& r) { return to_decimal(r); };

    std::ostringstream svg;
    svg << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << kWidth + 2 * kMargin << R"(" height=")"
        << kHeight + 2 * kMargin << "\">\n";
    svg << "  <defs><clipPath id=\"window\"><rect x=\"" << kMargin << "\" y=\"" << kMargin << "\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\"/></clipPath></defs>\n";
    svg << "  <line class=\"axis\" x1=\"" << kMargin << "\" y1=\"" << kMargin + kHeight << "\" x2=\""
        << kMargin + kWidth << "\" y2=\"" << kMargin + kHeight << "\" stroke=\"black\"/>\n";
    svg << "  <line class=\"axis\" x1=\"" << kMargin << "\" y1=\"" << kMargin << "\" x2=\"" << kMargin
        << "\" y2=\"" << kMargin + kHeight << "\" stroke=\"black\"/>\n";
    svg << "  <g clip-path=\"url(#window)\" fill=\"none\" stroke=\"steelblue\">\n";

    const Rational base = f.py(0);
    for (const PathWord& w : words_up_to(spec.depth)) {
        Slice s = slice_of(evaluate(w, cfg.left(), cfg.right()));
        Rational lo = s.lo().to_rational();
        if (!s.is_bounded()) {
            svg << "    <line class=\"geodesic\" data-word=\"" << w.to_string() << "\" x1=\"" << num(f.px(lo))
                << "\" y1=\"" << num(base) << "\" x2=\"" << num(f.px(lo)) << "\" y2=\"" << num(f.py(spec.y_max))
                << "\"/>\n";
            continue;
        }
        Rational hi = s.hi().to_rational();
        Rational r = (hi - lo) / 2;
        // Left to right over the top is clockwise on screen: sweep flag 1.
        svg << "    <path class=\"geodesic\" data-word=\"" << w.to_string() << "\" d=\"M " << num(f.px(lo)) << " "
            << num(base) << " A " << num(r * f.sx) << " " << num(r * f.sy) << " 0 0 1 " << num(f.px(hi)) << " "
            << num(base) << "\"/>\n";
    }
    svg << "  </g>\n</svg>\n";
    return svg.str();
}

}  // namespace moebius
