#include "jorder/geometry.hpp"

#include "jorder/errors.hpp"

namespace jorder {

namespace {

bool ring_supported_for_proj_line(const RingDescriptor& r) {
    switch (r.kind()) {
        case RingKind::Q:
        case RingKind::DualQ:
        case RingKind::GaussQ:
        case RingKind::DualGaussQ:
        case RingKind::TrivialNOrder: return true;
        default: return false;
    }
}

} // namespace

GeometryDescriptor GeometryDescriptor::for_algebra(const AlgebraDescriptor& alg) {
    switch (alg.kind()) {
        case AlgKind::Scalar: {
            if (!ring_supported_for_proj_line(alg.ring()))
                throw Error("no projective line model over ring " + alg.ring().name());
            return GeometryDescriptor(GeoKind::ProjLine, alg);
        }
        case AlgKind::Sym: {
            if (alg.ring() != RingDescriptor::q())
                throw Error("Lagrangian model implemented over Q only, got " + alg.name());
            GeometryDescriptor g(GeoKind::Lagrangian, alg);
            g.n_ = alg.n();
            return g;
        }
        case AlgKind::Product: {
            GeometryDescriptor g(GeoKind::ProductGeo, alg);
            for (const auto& c : alg.components()) g.components_.push_back(for_algebra(c));
            return g;
        }
        case AlgKind::Spin:
            throw Error("spin factors are served by the chart model only");
    }
    throw Error("unreachable");
}

std::string GeometryDescriptor::name() const {
    switch (kind_) {
        case GeoKind::ProjLine: return "ProjLine(" + alg_.ring().name() + ")";
        case GeoKind::Lagrangian: return "Lagrangian(" + std::to_string(n_) + ")";
        case GeoKind::ProductGeo: {
            std::string s;
            for (std::size_t i = 0; i < components_.size(); ++i) {
                if (i) s += " x ";
                s += components_[i].name();
            }
            return s;
        }
    }
    return "?";
}

namespace {

// reduced column echelon form via RREF of the transpose; unique per
// column space over the field Q
RingMatrix column_echelon(const RingMatrix& m) {
    RingMatrix t = m.transposed();
    std::size_t rows = t.rows(), cols = t.cols();
    std::size_t r = 0;
    for (std::size_t col = 0; col < cols && r < rows; ++col) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i)
            if (!t.at(i, col).is_zero()) {
                piv = i;
                break;
            }
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(t.at(piv, j), t.at(r, j));
        RingElem pinv = ring_invert(t.at(r, col));
        for (std::size_t j = 0; j < cols; ++j) t.at(r, j) = ring_mul(pinv, t.at(r, j));
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || t.at(i, col).is_zero()) continue;
            RingElem f = t.at(i, col);
            for (std::size_t j = 0; j < cols; ++j)
                t.at(i, j) = ring_sub(t.at(i, j), ring_mul(f, t.at(r, j)));
        }
        ++r;
    }
    return t.transposed();
}

std::vector<AlgebraElem> product_slices(const AlgebraElem& v) {
    std::vector<AlgebraElem> out;
    std::size_t off = 0;
    for (const auto& c : v.descriptor().components()) {
        out.push_back(v.leaf_slice(c, off));
        off += c.dim();
    }
    return out;
}

} // namespace

HomPoint HomPoint::proj_pair(const GeometryDescriptor& geo, RingElem p, RingElem q) {
    if (geo.kind() != GeoKind::ProjLine) throw Error("proj_pair on " + geo.name());
    const RingDescriptor& ring = geo.algebra().ring();
    if (p.descriptor() != ring || q.descriptor() != ring)
        throw DescriptorMismatch("projective pair over wrong ring");
    HomPoint pt(geo);
    if (ring_is_unit(q)) {
        RingElem qi = ring_invert(q);
        pt.pair_ = {ring_mul(p, qi), RingElem::one(ring)};
    } else if (ring_is_unit(p)) {
        RingElem pi = ring_invert(p);
        pt.pair_ = {RingElem::one(ring), ring_mul(q, pi)};
    } else {
        throw Error("pair (" + p.str() + "," + q.str() + ") is not unimodular over " +
                    ring.name());
    }
    return pt;
}

HomPoint HomPoint::lag_frame(const GeometryDescriptor& geo, RingMatrix frame) {
    if (geo.kind() != GeoKind::Lagrangian) throw Error("lag_frame on " + geo.name());
    std::size_t n = static_cast<std::size_t>(geo.n());
    if (frame.rows() != 2 * n || frame.cols() != n) throw Error("frame must be 2n x n");
    if (frame.rank_over_field() != n) throw Error("frame has rank below n");
    // isotropy X^T Y = Y^T X
    RingMatrix x(frame.ring(), n, n), y(frame.ring(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            x.at(i, j) = frame.at(i, j);
            y.at(i, j) = frame.at(n + i, j);
        }
    RingMatrix sym = x.transposed() * y;
    if (sym != sym.transposed()) throw Error("frame is not isotropic");
    HomPoint pt(geo);
    pt.frame_ = column_echelon(frame);
    return pt;
}

HomPoint HomPoint::product(const GeometryDescriptor& geo, std::vector<HomPoint> parts) {
    if (geo.kind() != GeoKind::ProductGeo) throw Error("product point on " + geo.name());
    if (parts.size() != geo.components().size()) throw Error("component count mismatch");
    for (std::size_t i = 0; i < parts.size(); ++i)
        if (parts[i].geometry() != geo.components()[i])
            throw DescriptorMismatch("component geometry mismatch");
    HomPoint pt(geo);
    pt.parts_ = std::move(parts);
    return pt;
}

const RingElem& HomPoint::proj_p() const {
    if (geo_.kind() != GeoKind::ProjLine) throw Error("not a projective pair");
    return pair_[0];
}

const RingElem& HomPoint::proj_q() const {
    if (geo_.kind() != GeoKind::ProjLine) throw Error("not a projective pair");
    return pair_[1];
}

const RingMatrix& HomPoint::frame() const {
    if (!frame_) throw Error("not a Lagrangian frame");
    return *frame_;
}

const std::vector<HomPoint>& HomPoint::parts() const {
    if (geo_.kind() != GeoKind::ProductGeo) throw Error("not a product point");
    return parts_;
}

HomPoint HomPoint::canonicalized() const {
    switch (geo_.kind()) {
        case GeoKind::ProjLine: return proj_pair(geo_, pair_[0], pair_[1]);
        case GeoKind::Lagrangian: {
            HomPoint pt(geo_);
            pt.frame_ = column_echelon(*frame_);
            return pt;
        }
        case GeoKind::ProductGeo: {
            std::vector<HomPoint> parts;
            for (const auto& p : parts_) parts.push_back(p.canonicalized());
            return product(geo_, std::move(parts));
        }
    }
    throw Error("unreachable");
}

std::string HomPoint::str() const {
    switch (geo_.kind()) {
        case GeoKind::ProjLine: return "[" + pair_[0].str() + ":" + pair_[1].str() + "]";
        case GeoKind::Lagrangian: return frame_->str();
        case GeoKind::ProductGeo: {
            std::string s = "(";
            for (std::size_t i = 0; i < parts_.size(); ++i) {
                if (i) s += ", ";
                s += parts_[i].str();
            }
            return s + ")";
        }
    }
    return "?";
}

bool point_eq(const HomPoint& p, const HomPoint& q) {
    if (p.geometry() != q.geometry()) throw DescriptorMismatch("comparing across geometries");
    switch (p.geometry().kind()) {
        case GeoKind::ProjLine:
            return p.proj_p() == q.proj_p() && p.proj_q() == q.proj_q();
        case GeoKind::Lagrangian: return p.frame() == q.frame();
        case GeoKind::ProductGeo: {
            for (std::size_t i = 0; i < p.parts().size(); ++i)
                if (!point_eq(p.parts()[i], q.parts()[i])) return false;
            return true;
        }
    }
    return false;
}

HomPoint embed(const GeometryDescriptor& geo, const AlgebraElem& v) {
    if (v.descriptor() != geo.algebra()) throw DescriptorMismatch("embedding foreign element");
    switch (geo.kind()) {
        case GeoKind::ProjLine:
            return HomPoint::proj_pair(geo, v.coord(0), RingElem::one(geo.algebra().ring()));
        case GeoKind::Lagrangian: {
            std::size_t n = static_cast<std::size_t>(geo.n());
            RingMatrix frame(RingDescriptor::q(), 2 * n, n);
            RingMatrix m = v.sym_matrix();
            for (std::size_t i = 0; i < n; ++i) {
                frame.at(i, i) = RingElem::one(RingDescriptor::q());
                for (std::size_t j = 0; j < n; ++j) frame.at(n + i, j) = m.at(i, j);
            }
            return HomPoint::lag_frame(geo, std::move(frame));
        }
        case GeoKind::ProductGeo: {
            std::vector<HomPoint> parts;
            auto slices = product_slices(v);
            for (std::size_t i = 0; i < slices.size(); ++i)
                parts.push_back(embed(geo.components()[i], slices[i]));
            return HomPoint::product(geo, std::move(parts));
        }
    }
    throw Error("unreachable");
}

HomPoint embed(const GeometryDescriptor& geo, const ChartPoint& p) {
    return p.is_infinity() ? infinity_point(geo) : embed(geo, p.value());
}

HomPoint infinity_point(const GeometryDescriptor& geo) {
    switch (geo.kind()) {
        case GeoKind::ProjLine: {
            const RingDescriptor& ring = geo.algebra().ring();
            return HomPoint::proj_pair(geo, RingElem::one(ring), RingElem::zero(ring));
        }
        case GeoKind::Lagrangian: {
            std::size_t n = static_cast<std::size_t>(geo.n());
            RingMatrix frame(RingDescriptor::q(), 2 * n, n);
            for (std::size_t i = 0; i < n; ++i)
                frame.at(n + i, i) = RingElem::one(RingDescriptor::q());
            return HomPoint::lag_frame(geo, std::move(frame));
        }
        case GeoKind::ProductGeo: {
            std::vector<HomPoint> parts;
            for (const auto& c : geo.components()) parts.push_back(infinity_point(c));
            return HomPoint::product(geo, std::move(parts));
        }
    }
    throw Error("unreachable");
}

HomPoint origin_point(const GeometryDescriptor& geo) {
    return embed(geo, AlgebraElem::zero(geo.algebra()));
}

std::optional<ChartPoint> to_chart(const HomPoint& p) {
    const GeometryDescriptor& geo = p.geometry();
    switch (geo.kind()) {
        case GeoKind::ProjLine: {
            if (ring_is_unit(p.proj_q())) {
                // canonical form already has q = 1
                AlgebraElem v(geo.algebra(), {p.proj_p()});
                return ChartPoint::finite(std::move(v));
            }
            if (p.proj_q().is_zero()) return ChartPoint::infinity(geo.algebra());
            return std::nullopt; // (1, eps c): a tangent-fiber point at infinity
        }
        case GeoKind::Lagrangian: {
            std::size_t n = static_cast<std::size_t>(geo.n());
            const RingMatrix& f = p.frame();
            RingMatrix x(f.ring(), n, n), y(f.ring(), n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    x.at(i, j) = f.at(i, j);
                    y.at(i, j) = f.at(n + i, j);
                }
            auto xi = x.inverse();
            if (xi) {
                RingMatrix v = y * *xi;
                return ChartPoint::finite(AlgebraElem::from_sym_matrix(geo.algebra(), v));
            }
            if (x.is_zero()) return ChartPoint::infinity(geo.algebra());
            return std::nullopt;
        }
        case GeoKind::ProductGeo: {
            std::vector<ChartPoint> parts;
            bool all_finite = true, all_infinite = true;
            for (const auto& q : p.parts()) {
                auto c = to_chart(q);
                if (!c) return std::nullopt;
                all_finite = all_finite && !c->is_infinity();
                all_infinite = all_infinite && c->is_infinity();
                parts.push_back(std::move(*c));
            }
            if (all_infinite) return ChartPoint::infinity(geo.algebra());
            if (!all_finite) return std::nullopt; // mixed point, outside V + {inf}
            std::vector<RingElem> coords;
            for (const auto& c : parts)
                for (const auto& e : c.value().coords()) coords.push_back(e);
            return ChartPoint::finite(AlgebraElem(geo.algebra(), std::move(coords)));
        }
    }
    throw Error("unreachable");
}

namespace {

HomPoint act_leaf(const Generator& g, const HomPoint& p) {
    const GeometryDescriptor& geo = p.geometry();
    if (geo.kind() == GeoKind::ProjLine) {
        RingElem a = p.proj_p(), b = p.proj_q();
        switch (g.kind()) {
            case GenKind::Trans:
                return HomPoint::proj_pair(geo, ring_add(a, ring_mul(g.arg().coord(0), b)), b);
            case GenKind::TildeTrans:
                return HomPoint::proj_pair(geo, a, ring_add(b, ring_mul(g.arg().coord(0), a)));
            case GenKind::Jinv: return HomPoint::proj_pair(geo, b, a);
            case GenKind::Neg: return HomPoint::proj_pair(geo, ring_neg(a), b);
            case GenKind::Quad: {
                RingElem y = g.arg().coord(0);
                return HomPoint::proj_pair(geo, ring_mul(ring_mul(y, y), a), b);
            }
        }
        throw Error("unreachable");
    }
    // Lagrangian
    std::size_t n = static_cast<std::size_t>(geo.n());
    const RingMatrix& f = p.frame();
    RingMatrix x(f.ring(), n, n), y(f.ring(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            x.at(i, j) = f.at(i, j);
            y.at(i, j) = f.at(n + i, j);
        }
    RingMatrix nx = x, ny = y;
    switch (g.kind()) {
        case GenKind::Trans: ny = y + g.arg().sym_matrix() * x; break;
        case GenKind::TildeTrans: nx = x + g.arg().sym_matrix() * y; break;
        case GenKind::Jinv: std::swap(nx, ny); break;
        case GenKind::Neg: ny = y.negated(); break;
        case GenKind::Quad: {
            RingMatrix ym = g.arg().sym_matrix();
            auto yi = ym.inverse();
            if (!yi) throw InternalInvariantViolation("Quad generator argument not invertible");
            nx = *yi * x;
            ny = ym * y;
            break;
        }
    }
    RingMatrix frame(f.ring(), 2 * n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            frame.at(i, j) = nx.at(i, j);
            frame.at(n + i, j) = ny.at(i, j);
        }
    return HomPoint::lag_frame(geo, std::move(frame));
}

} // namespace

HomPoint act(const Generator& g, const HomPoint& p) {
    const GeometryDescriptor& geo = p.geometry();
    if (geo.kind() == GeoKind::ProductGeo) {
        std::vector<HomPoint> parts;
        std::vector<AlgebraElem> slices;
        bool has_arg = g.kind() == GenKind::Trans || g.kind() == GenKind::TildeTrans ||
                       g.kind() == GenKind::Quad;
        if (has_arg) {
            if (g.arg().descriptor() != geo.algebra())
                throw DescriptorMismatch("generator argument over wrong algebra");
            slices = product_slices(g.arg());
        }
        for (std::size_t i = 0; i < p.parts().size(); ++i) {
            Generator sub = [&]() {
                switch (g.kind()) {
                    case GenKind::Trans: return Generator::trans(slices[i]);
                    case GenKind::TildeTrans: return Generator::tilde_trans(slices[i]);
                    case GenKind::Quad: return Generator::quad(slices[i]);
                    case GenKind::Neg: return Generator::neg();
                    case GenKind::Jinv: return Generator::jinv();
                }
                throw Error("unreachable");
            }();
            parts.push_back(act(sub, p.parts()[i]));
        }
        return HomPoint::product(geo, std::move(parts));
    }
    if ((g.kind() == GenKind::Trans || g.kind() == GenKind::TildeTrans ||
         g.kind() == GenKind::Quad) &&
        g.arg().descriptor() != geo.algebra())
        throw DescriptorMismatch("generator argument over wrong algebra");
    return act_leaf(g, p);
}

HomPoint act(const GroupWord& w, const HomPoint& p) {
    HomPoint cur = p;
    for (const auto& g : w.gens) cur = act(g, cur);
    return cur;
}

bool transversal(const HomPoint& p, const HomPoint& q) {
    if (p.geometry() != q.geometry()) throw DescriptorMismatch("transversality across geometries");
    switch (p.geometry().kind()) {
        case GeoKind::ProjLine: {
            RingElem det = ring_sub(ring_mul(p.proj_p(), q.proj_q()),
                                    ring_mul(q.proj_p(), p.proj_q()));
            return ring_is_unit(det);
        }
        case GeoKind::Lagrangian: {
            std::size_t n = static_cast<std::size_t>(p.geometry().n());
            RingMatrix m(RingDescriptor::q(), 2 * n, 2 * n);
            for (std::size_t i = 0; i < 2 * n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    m.at(i, j) = p.frame().at(i, j);
                    m.at(i, n + j) = q.frame().at(i, j);
                }
            return m.rank_over_field() == 2 * n;
        }
        case GeoKind::ProductGeo: {
            for (std::size_t i = 0; i < p.parts().size(); ++i)
                if (!transversal(p.parts()[i], q.parts()[i])) return false;
            return true;
        }
    }
    return false;
}

GroupWord carry_to_frame(const HomPoint& a, const HomPoint& b) {
    if (!transversal(a, b))
        throw NotTransversal("carry_to_frame needs a transversal pair");
    const GeometryDescriptor& geo = a.geometry();
    const AlgebraDescriptor& alg = geo.algebra();
    HomPoint inf = infinity_point(geo);

    GroupWord w;
    if (!point_eq(b, inf)) {
        // (i) pre-word making b transversal to infinity: scalar translations
        // first, then their neg-inv fallbacks
        bool found = transversal(b, inf);
        long radius = 2 * static_cast<long>(alg.dim()) + 1;
        for (int fallback = 0; fallback < 2 && !found; ++fallback) {
            for (long t = 0; t <= radius && !found; ++t) {
                for (long s : {t, -t}) {
                    AlgebraElem te = jscale(AlgebraElem::unit(alg), rat(s));
                    GroupWord u{{Generator::trans(te)}};
                    if (fallback) {
                        u.gens.push_back(Generator::neg());
                        u.gens.push_back(Generator::jinv());
                    }
                    if (transversal(act(u, b), inf)) {
                        w = u;
                        found = true;
                        break;
                    }
                    if (t == 0) break;
                }
            }
        }
        if (!found)
            throw InternalInvariantViolation("normalization catalog exhausted for b=" + b.str());

        // (ii) move the finite image of b to infinity
        auto bc = to_chart(act(w, b));
        if (!bc || bc->is_infinity())
            throw InternalInvariantViolation("image of b transversal to inf but not finite");
        w = w.then(carry_to_infinity(bc->value()));
    }

    // (iii) translate the image of a to the origin
    {
        auto ac = to_chart(act(w, a));
        if (!ac || ac->is_infinity())
            throw InternalInvariantViolation("image of a not finite after normalizing b");
        if (!ac->value().is_zero())
            w = w.then(GroupWord{{Generator::trans(jneg(ac->value()))}});
    }

    if (!point_eq(act(w, a), origin_point(geo)) || !point_eq(act(w, b), inf))
        throw InternalInvariantViolation("carry_to_frame postcondition failed");
    if (w.parity() != 0)
        throw InternalInvariantViolation("carry_to_frame produced an odd-parity word");
    return w;
}

bool cyclically_ordered(const HomPoint& a, const HomPoint& x, const HomPoint& b) {
    const GeometryDescriptor& geo = a.geometry();
    if (x.geometry() != geo || b.geometry() != geo)
        throw DescriptorMismatch("cyclic relation across geometries");
    if (geo.kind() == GeoKind::ProductGeo) {
        for (std::size_t i = 0; i < a.parts().size(); ++i)
            if (!cyclically_ordered(a.parts()[i], x.parts()[i], b.parts()[i])) return false;
        return true;
    }
    if (!transversal(a, x) || !transversal(x, b) || !transversal(a, b)) return false;
    GroupWord w = carry_to_frame(a, b);
    auto img = to_chart(act(w, x));
    if (!img || img->is_infinity())
        throw InternalInvariantViolation("normalized middle point not finite");
    return cone_contains(img->value());
}

HomPoint sample_hom_point(Rng& rng, const GeometryDescriptor& geo, long bound) {
    HomPoint p = embed(geo, sample_chart_point(rng, geo.algebra(), bound));
    if (rng.chance(2)) p = act(sample_word(rng, geo.algebra(), bound, 4), p);
    return p;
}

} // namespace jorder
