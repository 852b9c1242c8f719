#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jorder/chart.hpp"
#include "jorder/matrix.hpp"

namespace jorder {

enum class GeoKind { ProjLine, Lagrangian, ProductGeo };

/// Homogeneous-coordinate model of the complete geometry of an algebra:
/// the projective line over the base ring for rank-one algebras, the
/// Lagrangian Grassmannian for Sym(n,Q), products componentwise. Spin
/// factors are served by the chart model only.
class GeometryDescriptor {
public:
    static GeometryDescriptor for_algebra(const AlgebraDescriptor& alg);

    GeoKind kind() const { return kind_; }
    const AlgebraDescriptor& algebra() const { return alg_; }
    const std::vector<GeometryDescriptor>& components() const { return components_; }
    int n() const { return n_; } // Lagrangian block size

    bool operator==(const GeometryDescriptor& o) const { return alg_ == o.alg_; }
    bool operator!=(const GeometryDescriptor& o) const { return !(*this == o); }

    std::string name() const;

private:
    GeometryDescriptor(GeoKind k, AlgebraDescriptor alg) : kind_(k), alg_(std::move(alg)) {}
    GeoKind kind_;
    AlgebraDescriptor alg_;
    int n_ = 0;
    std::vector<GeometryDescriptor> components_;
};

/// Point in homogeneous coordinates, always stored in canonical form:
/// ProjPair (p,q) normalized to (v,1), or (1,u) with u a non-unit;
/// LagFrame as the reduced column echelon form of a rank-n isotropic
/// 2n x n frame over Q; products componentwise.
class HomPoint {
public:
    static HomPoint proj_pair(const GeometryDescriptor& geo, RingElem p, RingElem q);
    static HomPoint lag_frame(const GeometryDescriptor& geo, RingMatrix frame);
    static HomPoint product(const GeometryDescriptor& geo, std::vector<HomPoint> parts);

    const GeometryDescriptor& geometry() const { return geo_; }

    const RingElem& proj_p() const;
    const RingElem& proj_q() const;
    const RingMatrix& frame() const;
    const std::vector<HomPoint>& parts() const;

    /// Re-runs canonicalization (idempotent by construction).
    HomPoint canonicalized() const;

    std::string str() const;

private:
    explicit HomPoint(GeometryDescriptor geo) : geo_(std::move(geo)) {}
    GeometryDescriptor geo_;
    std::vector<RingElem> pair_;          // ProjLine
    std::optional<RingMatrix> frame_;     // Lagrangian
    std::vector<HomPoint> parts_;         // ProductGeo
};

bool point_eq(const HomPoint& p, const HomPoint& q);

HomPoint embed(const GeometryDescriptor& geo, const AlgebraElem& v);
HomPoint embed(const GeometryDescriptor& geo, const ChartPoint& p);
HomPoint infinity_point(const GeometryDescriptor& geo);
HomPoint origin_point(const GeometryDescriptor& geo);

/// Inverts the embedding where possible; nullopt marks a point at infinity
/// other than the distinguished one (not representable in V + {inf}).
std::optional<ChartPoint> to_chart(const HomPoint& p);

/// Total action of a generator word; no partiality in the full model.
HomPoint act(const GroupWord& w, const HomPoint& p);
HomPoint act(const Generator& g, const HomPoint& p);

bool transversal(const HomPoint& p, const HomPoint& q);

/// Parity-0 word moving (a,b) to (origin, infinity); postcondition checked
/// on every call. Throws NotTransversal on non-transversal input.
GroupWord carry_to_frame(const HomPoint& a, const HomPoint& b);

/// The cyclic relation evaluated in the full model: normalize (a,b) to the
/// base pair and test the image of x against the cone; componentwise
/// conjunction over product geometries.
bool cyclically_ordered(const HomPoint& a, const HomPoint& x, const HomPoint& b);

HomPoint sample_hom_point(Rng& rng, const GeometryDescriptor& geo, long bound);

} // namespace jorder
