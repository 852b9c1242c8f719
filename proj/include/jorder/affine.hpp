#pragma once

#include <string>
#include <vector>

#include "jorder/cyclic.hpp"

namespace jorder {

enum class ImageClass { Parabolic, Elliptic, Hyperbolic };

char image_class_letter(ImageClass c);

/// Shape of the affine part of the interval ]a,b[: a translated cone when
/// one endpoint is infinity, a bounded convex body when b - a is in the
/// cone, everything else hyperbolic. Endpoints must be transversal.
ImageClass classify_pair(const ChartPoint& a, const ChartPoint& b);

/// Membership of x in ]a,b[ decided by cone tests alone (no normalization
/// words): the independent second route for parabolic and elliptic pairs.
/// Throws NotApplicable on hyperbolic pairs.
bool member_by_cones(const ChartPoint& a, const ChartPoint& b, const AlgebraElem& x);

/// For b < a: (a + cone) and (b - cone) both land inside ]a,b[; also hunts
/// for witnesses that the union is proper and that the image is not convex
/// (recorded, not asserted).
AxiomReport hyperbolic_superset_check(const ChartPoint& a, const ChartPoint& b,
                                      const SampleSpec& spec);

/// Open axis-aligned box inside the torus cube (-1,1)^n.
struct Box {
    std::vector<std::pair<Rational, Rational>> sides;

    bool contains(const std::vector<Rational>& point) const;
    std::string str() const;
};

/// Decomposition of a torus interval into its affine cubes: one factor per
/// coordinate with a_i < b_i, two (wrapping past the cut) where b_i < a_i;
/// exactly 2^k boxes for k descending coordinates.
std::vector<Box> torus_boxes(const std::vector<Rational>& a, const std::vector<Rational>& b);

/// Order isomorphism from the open cube coordinate t in (-1,1) onto the
/// chart: t / (1 - |t|).
Rational cube_to_chart(const Rational& t);

struct GridAxis {
    Rational lo, hi;
    long steps = 20;
};

struct GridSpec {
    std::vector<GridAxis> axes;
};

/// One- or two-dimensional slice through an instance: which coordinate
/// slots vary, everything else pinned at a base element.
struct RenderSpec {
    ChartPoint a, b;
    std::vector<std::size_t> axes;
    AlgebraElem pin;
    GridSpec grid;
};

struct RenderResult {
    std::string csv;
    std::string svg;
    long members = 0;
    ImageClass cls = ImageClass::Parabolic;
};

/// Membership grid of ]a,b[ over the slice, emitted as CSV rows and a
/// byte-stable 512x512 SVG shading.
RenderResult render_image(const RenderSpec& spec);

/// SVG of a torus box decomposition (n = 2 only).
std::string render_boxes_svg(const std::vector<Box>& boxes);

} // namespace jorder
