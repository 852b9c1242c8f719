#include "jorder/ring.hpp"

#include <sstream>

#include "jorder/errors.hpp"
#include "jorder/io.hpp"

namespace jorder {

RingDescriptor RingDescriptor::product(std::vector<RingDescriptor> factors) {
    if (factors.empty()) throw Error("product ring needs at least one factor");
    RingDescriptor d(RingKind::Product);
    d.factors_ = std::move(factors);
    return d;
}

std::size_t RingDescriptor::arity() const {
    switch (kind_) {
        case RingKind::Q:
        case RingKind::ZInt:
        case RingKind::TrivialNOrder: return 1;
        case RingKind::DualQ:
        case RingKind::GaussQ: return 2;
        case RingKind::DualGaussQ: return 4;
        case RingKind::Product: {
            std::size_t n = 0;
            for (const auto& f : factors_) n += f.arity();
            return n;
        }
    }
    return 0;
}

bool RingDescriptor::has_half() const {
    switch (kind_) {
        case RingKind::ZInt: return false;
        case RingKind::Product:
            for (const auto& f : factors_)
                if (!f.has_half()) return false;
            return true;
        default: return true;
    }
}

bool RingDescriptor::operator==(const RingDescriptor& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ != RingKind::Product) return true;
    if (factors_.size() != o.factors_.size()) return false;
    for (std::size_t i = 0; i < factors_.size(); ++i)
        if (factors_[i] != o.factors_[i]) return false;
    return true;
}

std::string RingDescriptor::name() const {
    switch (kind_) {
        case RingKind::Q: return "Q";
        case RingKind::DualQ: return "Q[eps]";
        case RingKind::GaussQ: return "Q[i]";
        case RingKind::DualGaussQ: return "Q[eps][i]";
        case RingKind::ZInt: return "Z";
        case RingKind::TrivialNOrder: return "Q(N-order)";
        case RingKind::Product: {
            std::string s = "(";
            for (std::size_t i = 0; i < factors_.size(); ++i) {
                if (i) s += " x ";
                s += factors_[i].name();
            }
            return s + ")";
        }
    }
    return "?";
}

OrderFlavor order_flavor(const RingDescriptor& d) {
    switch (d.kind()) {
        case RingKind::Q:
        case RingKind::DualQ: return OrderFlavor::SquareOrderedInversePor;
        case RingKind::GaussQ:
        case RingKind::DualGaussQ: return OrderFlavor::Unordered;
        case RingKind::ZInt:
        case RingKind::TrivialNOrder: return OrderFlavor::Por;
        case RingKind::Product: {
            OrderFlavor best = OrderFlavor::SquareOrderedInversePor;
            for (const auto& f : d.factors()) {
                OrderFlavor of = order_flavor(f);
                if (of == OrderFlavor::Unordered) return OrderFlavor::Unordered;
                if (of == OrderFlavor::Por) best = OrderFlavor::Por;
            }
            return best;
        }
    }
    return OrderFlavor::Unordered;
}

RingDescriptor dual_extension(const RingDescriptor& d) {
    switch (d.kind()) {
        case RingKind::Q: return RingDescriptor::dual_q();
        case RingKind::GaussQ: return RingDescriptor::dual_gauss_q();
        case RingKind::Product: {
            std::vector<RingDescriptor> fs;
            for (const auto& f : d.factors()) fs.push_back(dual_extension(f));
            return RingDescriptor::product(std::move(fs));
        }
        default:
            throw Error("eps-extension not supported for ring " + d.name());
    }
}

RingDescriptor complexification(const RingDescriptor& d) {
    switch (d.kind()) {
        case RingKind::Q: return RingDescriptor::gauss_q();
        case RingKind::DualQ: return RingDescriptor::dual_gauss_q();
        case RingKind::Product: {
            std::vector<RingDescriptor> fs;
            for (const auto& f : d.factors()) fs.push_back(complexification(f));
            return RingDescriptor::product(std::move(fs));
        }
        default:
            throw Error("complexification not supported for ring " + d.name());
    }
}

namespace {

void require_integral(const RingDescriptor& d, const std::vector<Rational>& c) {
    if (d.kind() == RingKind::ZInt && !c.empty() && !is_integer(c[0]))
        throw Error("Z element must be integral, got " + c[0].get_str());
}

using Span = const Rational*;

// All per-kind kernels work on raw coordinate spans so products recurse
// without slicing vectors.

void add_coords(const RingDescriptor& d, Span a, Span b, Rational* out) {
    std::size_t n = d.arity();
    for (std::size_t i = 0; i < n; ++i) out[i] = a[i] + b[i];
}

void neg_coords(const RingDescriptor& d, Span a, Rational* out) {
    std::size_t n = d.arity();
    for (std::size_t i = 0; i < n; ++i) out[i] = -a[i];
}

void mul_coords(const RingDescriptor& d, Span a, Span b, Rational* out) {
    switch (d.kind()) {
        case RingKind::Q:
        case RingKind::ZInt:
        case RingKind::TrivialNOrder:
            out[0] = a[0] * b[0];
            return;
        case RingKind::DualQ:
            out[0] = a[0] * b[0];
            out[1] = a[0] * b[1] + a[1] * b[0];
            return;
        case RingKind::GaussQ:
            out[0] = a[0] * b[0] - a[1] * b[1];
            out[1] = a[0] * b[1] + a[1] * b[0];
            return;
        case RingKind::DualGaussQ: {
            // (x + i y)(x' + i y') with x, y dual numbers (re, eps)
            auto dmul = [](Span u, Span v, Rational* o) {
                o[0] = u[0] * v[0];
                o[1] = u[0] * v[1] + u[1] * v[0];
            };
            Rational xx[2], yy[2], xy[2], yx[2];
            dmul(a, b, xx);
            dmul(a + 2, b + 2, yy);
            dmul(a, b + 2, xy);
            dmul(a + 2, b, yx);
            out[0] = xx[0] - yy[0];
            out[1] = xx[1] - yy[1];
            out[2] = xy[0] + yx[0];
            out[3] = xy[1] + yx[1];
            return;
        }
        case RingKind::Product: {
            std::size_t off = 0;
            for (const auto& f : d.factors()) {
                mul_coords(f, a + off, b + off, out + off);
                off += f.arity();
            }
            return;
        }
    }
}

bool positive_coords(const RingDescriptor& d, Span a) {
    switch (d.kind()) {
        case RingKind::Q: return sgn(a[0]) > 0;
        case RingKind::DualQ: return sgn(a[0]) > 0;
        case RingKind::ZInt: return sgn(a[0]) > 0;
        case RingKind::TrivialNOrder: return is_integer(a[0]) && sgn(a[0]) > 0;
        case RingKind::Product: {
            std::size_t off = 0;
            for (const auto& f : d.factors()) {
                if (!positive_coords(f, a + off)) return false;
                off += f.arity();
            }
            return true;
        }
        default:
            throw NoOrder("ring " + d.name() + " carries no partial order");
    }
}

bool unit_coords(const RingDescriptor& d, Span a) {
    switch (d.kind()) {
        case RingKind::Q:
        case RingKind::TrivialNOrder: return sgn(a[0]) != 0;
        case RingKind::DualQ: return sgn(a[0]) != 0;
        case RingKind::GaussQ: return sgn(a[0]) != 0 || sgn(a[1]) != 0;
        case RingKind::DualGaussQ: return sgn(a[0]) != 0 || sgn(a[2]) != 0;
        case RingKind::ZInt: return a[0] == 1 || a[0] == -1;
        case RingKind::Product: {
            std::size_t off = 0;
            for (const auto& f : d.factors()) {
                if (!unit_coords(f, a + off)) return false;
                off += f.arity();
            }
            return true;
        }
    }
    return false;
}

bool invert_coords(const RingDescriptor& d, Span a, Rational* out) {
    switch (d.kind()) {
        case RingKind::Q:
        case RingKind::TrivialNOrder:
            if (sgn(a[0]) == 0) return false;
            out[0] = 1 / a[0];
            return true;
        case RingKind::ZInt:
            if (a[0] != 1 && a[0] != -1) return false;
            out[0] = a[0];
            return true;
        case RingKind::DualQ:
            // (x + eps y)^-1 = x^-1 - eps y x^-2
            if (sgn(a[0]) == 0) return false;
            out[0] = 1 / a[0];
            out[1] = -a[1] / (a[0] * a[0]);
            return true;
        case RingKind::GaussQ: {
            Rational n = a[0] * a[0] + a[1] * a[1];
            if (sgn(n) == 0) return false;
            out[0] = a[0] / n;
            out[1] = -a[1] / n;
            return true;
        }
        case RingKind::DualGaussQ: {
            // a + eps b over Q[i]: inverse = a^-1 - eps b a^-2
            Rational n = a[0] * a[0] + a[2] * a[2];
            if (sgn(n) == 0) return false;
            Rational inv_re = a[0] / n, inv_im = -a[2] / n;
            // a^-2
            Rational sq_re = inv_re * inv_re - inv_im * inv_im;
            Rational sq_im = 2 * inv_re * inv_im;
            // -b * a^-2 with b = (a[1], a[3])
            out[0] = inv_re;
            out[2] = inv_im;
            out[1] = -(a[1] * sq_re - a[3] * sq_im);
            out[3] = -(a[1] * sq_im + a[3] * sq_re);
            return true;
        }
        case RingKind::Product: {
            std::size_t off = 0;
            for (const auto& f : d.factors()) {
                if (!invert_coords(f, a + off, out + off)) return false;
                off += f.arity();
            }
            return true;
        }
    }
    return false;
}

void eps_free_coords(const RingDescriptor& d, Span a, Rational* out) {
    switch (d.kind()) {
        case RingKind::DualQ:
            out[0] = a[0];
            out[1] = 0;
            return;
        case RingKind::DualGaussQ:
            out[0] = a[0];
            out[1] = 0;
            out[2] = a[2];
            out[3] = 0;
            return;
        case RingKind::Product: {
            std::size_t off = 0;
            for (const auto& f : d.factors()) {
                eps_free_coords(f, a + off, out + off);
                off += f.arity();
            }
            return;
        }
        default: {
            std::size_t n = d.arity();
            for (std::size_t i = 0; i < n; ++i) out[i] = a[i];
            return;
        }
    }
}

void check_same(const RingElem& a, const RingElem& b) {
    if (a.descriptor() != b.descriptor())
        throw DescriptorMismatch("ring operands over " + a.descriptor().name() + " vs " +
                                 b.descriptor().name());
}

} // namespace

RingElem::RingElem(RingDescriptor desc, std::vector<Rational> coords)
    : desc_(std::move(desc)), c_(std::move(coords)) {
    if (c_.size() != desc_.arity())
        throw Error("coordinate count " + std::to_string(c_.size()) + " does not match ring " +
                    desc_.name());
    require_integral(desc_, c_);
}

RingElem RingElem::zero(const RingDescriptor& d) {
    return RingElem(d, std::vector<Rational>(d.arity(), Rational(0)));
}

RingElem RingElem::one(const RingDescriptor& d) {
    return from_rational(d, Rational(1));
}

RingElem RingElem::from_rational(const RingDescriptor& d, const Rational& v) {
    std::vector<Rational> c(d.arity(), Rational(0));
    // fill the "real part" slot of every leaf
    struct Fill {
        static void run(const RingDescriptor& d, const Rational& v, Rational* out) {
            switch (d.kind()) {
                case RingKind::Product: {
                    std::size_t off = 0;
                    for (const auto& f : d.factors()) {
                        run(f, v, out + off);
                        off += f.arity();
                    }
                    return;
                }
                default:
                    out[0] = v;
                    return;
            }
        }
    };
    Fill::run(d, v, c.data());
    RingElem r(d, std::move(c));
    return r;
}

bool RingElem::is_zero() const {
    for (const auto& q : c_)
        if (sgn(q) != 0) return false;
    return true;
}

bool RingElem::operator==(const RingElem& o) const {
    return desc_ == o.desc_ && c_ == o.c_;
}

std::string RingElem::str() const {
    if (c_.size() == 1) return c_[0].get_str();
    std::string s = "(";
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (i) s += ",";
        s += c_[i].get_str();
    }
    return s + ")";
}

RingElem ring_add(const RingElem& a, const RingElem& b) {
    check_same(a, b);
    std::vector<Rational> out(a.descriptor().arity());
    add_coords(a.descriptor(), a.coords().data(), b.coords().data(), out.data());
    return RingElem(a.descriptor(), std::move(out));
}

RingElem ring_sub(const RingElem& a, const RingElem& b) {
    return ring_add(a, ring_neg(b));
}

RingElem ring_mul(const RingElem& a, const RingElem& b) {
    check_same(a, b);
    std::vector<Rational> out(a.descriptor().arity());
    mul_coords(a.descriptor(), a.coords().data(), b.coords().data(), out.data());
    return RingElem(a.descriptor(), std::move(out));
}

RingElem ring_neg(const RingElem& a) {
    std::vector<Rational> out(a.descriptor().arity());
    neg_coords(a.descriptor(), a.coords().data(), out.data());
    return RingElem(a.descriptor(), std::move(out));
}

RingElem ring_scale(const RingElem& a, const Rational& t) {
    if (a.descriptor().kind() == RingKind::ZInt && !is_integer(t))
        throw Error("cannot scale a Z element by " + t.get_str());
    std::vector<Rational> out(a.coords());
    for (auto& q : out) q *= t;
    return RingElem(a.descriptor(), std::move(out));
}

bool ring_is_positive(const RingElem& a) {
    return positive_coords(a.descriptor(), a.coords().data());
}

bool ring_is_unit(const RingElem& a) {
    return unit_coords(a.descriptor(), a.coords().data());
}

std::optional<RingElem> ring_try_invert(const RingElem& a) {
    std::vector<Rational> out(a.descriptor().arity(), Rational(0));
    if (!invert_coords(a.descriptor(), a.coords().data(), out.data())) return std::nullopt;
    return RingElem(a.descriptor(), std::move(out));
}

RingElem ring_invert(const RingElem& a) {
    auto r = ring_try_invert(a);
    if (!r) throw NotInvertible("no inverse for " + a.str() + " in " + a.descriptor().name());
    return *r;
}

RingElem eps_free_part(const RingElem& a) {
    std::vector<Rational> out(a.descriptor().arity());
    eps_free_coords(a.descriptor(), a.coords().data(), out.data());
    return RingElem(a.descriptor(), std::move(out));
}

RingElem sample_ring_elem(Rng& rng, const RingDescriptor& d, long bound) {
    std::vector<Rational> c(d.arity());
    struct Fill {
        static void run(Rng& rng, const RingDescriptor& d, long bound, Rational* out) {
            switch (d.kind()) {
                case RingKind::ZInt:
                    out[0] = rng.integer(bound);
                    return;
                case RingKind::Product: {
                    std::size_t off = 0;
                    for (const auto& f : d.factors()) {
                        run(rng, f, bound, out + off);
                        off += f.arity();
                    }
                    return;
                }
                default: {
                    std::size_t n = d.arity();
                    for (std::size_t i = 0; i < n; ++i) out[i] = rng.rational(bound);
                    return;
                }
            }
        }
    };
    Fill::run(rng, d, bound, c.data());
    return RingElem(d, std::move(c));
}

RingElem sample_ring_unit(Rng& rng, const RingDescriptor& d, long bound) {
    for (int tries = 0; tries < 64; ++tries) {
        RingElem a = sample_ring_elem(rng, d, bound);
        if (ring_is_unit(a)) return a;
    }
    return RingElem::one(d);
}

AxiomReport check_ordered_ring_axioms(const RingDescriptor& d, const SampleSpec& spec) {
    if (!is_ordered(d)) throw NoOrder("ring " + d.name() + " carries no partial order");

    AxiomReport report;
    report.suite = "ordered-ring";
    report.subject = d.name();
    report.spec = spec;

    auto& zero_lt_one = report.add("zero-lt-one");
    zero_lt_one.cases = 1;
    if (!ring_is_positive(RingElem::one(d))) fail_check(zero_lt_one, "1 is not positive");

    auto& translation = report.add("translation-invariance");
    auto& multiplicative = report.add("multiplicativity");
    auto& square_order = report.add("square-order");
    auto& inverse_por = report.add("inverse-por");
    auto& salience = report.add("salience");

    // Deterministic probes first so the documented counterexamples surface
    // with stable witnesses, then random cases.
    std::vector<RingElem> probes;
    for (long v : {2L, -1L, 3L}) probes.push_back(RingElem::from_rational(d, rat(v)));
    if (d.kind() != RingKind::ZInt) {
        probes.push_back(RingElem::from_rational(d, rat(1, 2)));
        probes.push_back(RingElem::from_rational(d, rat(3, 2)));
    }

    Rng rng(spec.seed);
    long total = spec.cases;
    for (long k = 0; k < total; ++k) {
        RingElem a = k < static_cast<long>(probes.size()) ? probes[k]
                                                          : sample_ring_elem(rng, d, spec.bound);
        RingElem b = sample_ring_elem(rng, d, spec.bound);
        RingElem c = sample_ring_elem(rng, d, spec.bound);

        translation.cases++;
        if (ring_is_positive(ring_sub(b, a))) {
            if (!ring_is_positive(ring_sub(ring_add(b, c), ring_add(a, c))))
                fail_check(translation, "a=" + a.str() + " b=" + b.str() + " c=" + c.str());
        }

        multiplicative.cases++;
        if (ring_is_positive(b) && ring_is_positive(ring_sub(c, a))) {
            bool left = ring_is_positive(ring_sub(ring_mul(b, c), ring_mul(b, a)));
            bool right = ring_is_positive(ring_sub(ring_mul(c, b), ring_mul(a, b)));
            if (!left || !right)
                fail_check(multiplicative, "a=" + a.str() + " b=" + b.str() + " c=" + c.str());
        }

        square_order.cases++;
        if (ring_is_unit(a)) {
            if (!ring_is_positive(ring_mul(a, a))) {
                Json replay{{"kind", "ring"},
                            {"op", "square-order"},
                            {"ring", ring_desc_to_json(d)},
                            {"a", ring_elem_to_json(a)}};
                fail_check(square_order,
                           "a=" + a.str() + " a^2=" + ring_mul(a, a).str() + " not positive",
                           replay.dump());
            }
        }

        inverse_por.cases++;
        if (ring_is_positive(a)) {
            if (!ring_is_unit(a)) {
                Json replay{{"kind", "ring"},
                            {"op", "inverse-por"},
                            {"ring", ring_desc_to_json(d)},
                            {"a", ring_elem_to_json(a)}};
                fail_check(inverse_por, "a=" + a.str() + " positive, no inverse", replay.dump());
            }
        }

        salience.cases++;
        if (ring_is_positive(a) && ring_is_positive(ring_neg(a)))
            fail_check(salience, "a=" + a.str() + " and -a both positive");
    }

    return report;
}

} // namespace jorder
