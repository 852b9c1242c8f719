#pragma once

#include <json.hpp>

#include "jorder/affine.hpp"
#include "jorder/geometry.hpp"

namespace jorder {

using Json = nlohmann::json;

// base rings: "q", "q-eps", "q-i", "q-eps-i", "z", "trivial-n",
// {"product": [...]}
Json ring_desc_to_json(const RingDescriptor& d);
RingDescriptor ring_desc_from_json(const Json& j);

// algebras: {"scalar": ring}, {"sym": {"n": 2, "ring": ring}},
// {"spin": {"m": 3, "ring": ring}}, {"product": [...]},
// {"dual-ext": algebra}
Json alg_desc_to_json(const AlgebraDescriptor& d);
AlgebraDescriptor alg_desc_from_json(const Json& j);

// elements: all scalars are "p/q" strings; dual numbers {"re","eps"},
// complex {"re","im"}, products arrays
Json ring_elem_to_json(const RingElem& e);
RingElem ring_elem_from_json(const RingDescriptor& d, const Json& j);

// coordinates array; also accepted: the self-describing record
// {"descriptor": ..., "coordinates": [...]} and, for Sym instances,
// {"matrix": [[...], ...]} validated for symmetry
Json elem_to_json(const AlgebraElem& e);
Json elem_to_record_json(const AlgebraElem& e);
AlgebraElem elem_from_json(const AlgebraDescriptor& d, const Json& j);

// {"inf": true} or {"v": <element>}
Json chart_point_to_json(const ChartPoint& p);
ChartPoint chart_point_from_json(const AlgebraDescriptor& d, const Json& j);

// array of tagged generator records
Json word_to_json(const GroupWord& w);
GroupWord word_from_json(const AlgebraDescriptor& d, const Json& j);

// projective pair [p, q]; Lagrangian frame as 2n x n row-major rational
// array; products as arrays
Json hom_point_to_json(const HomPoint& p);
HomPoint hom_point_from_json(const GeometryDescriptor& geo, const Json& j);

Json report_to_json(const AxiomReport& r);

/// Compact CLI element syntax: elements separated by ';', rational
/// coordinates separated by ','; a lone "inf" is the point at infinity.
/// A single element may omit the ';'.
std::vector<ChartPoint> parse_point_list(const AlgebraDescriptor& d, const std::string& text);

std::vector<Rational> parse_rational_list(const std::string& text);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

} // namespace jorder
