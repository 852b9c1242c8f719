#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jorder/matrix.hpp"
#include "jorder/ring.hpp"

namespace jorder {

enum class AlgKind { Scalar, Sym, Spin, Product };

/// Describes a concrete partially ordered Jordan algebra instance: the base
/// ring over a few classical shapes (rank one, symmetric matrices, spin
/// factors) and direct products of those. Tangent algebras arise through
/// dual_extension, which rewrites the base ring to its eps-extension; the
/// positive cone of the extended instance is then Omega + eps V.
class AlgebraDescriptor {
public:
    static AlgebraDescriptor scalar(RingDescriptor ring);
    static AlgebraDescriptor sym(int n, RingDescriptor ring); // n in [1,6]
    static AlgebraDescriptor spin(int m, RingDescriptor ring); // m >= 1
    static AlgebraDescriptor product(std::vector<AlgebraDescriptor> components);

    AlgKind kind() const { return kind_; }
    int n() const { return n_; } // Sym size / Spin vector-part dimension
    const RingDescriptor& ring() const { return ring_; }
    const std::vector<AlgebraDescriptor>& components() const { return components_; }

    /// Number of ring-valued coordinates of one element.
    std::size_t dim() const { return dim_; }

    /// Flattened leaf algebras with their coordinate offsets.
    std::vector<std::pair<AlgebraDescriptor, std::size_t>> leaves() const;

    bool operator==(const AlgebraDescriptor& o) const;
    bool operator!=(const AlgebraDescriptor& o) const { return !(*this == o); }

    std::string name() const;

private:
    AlgebraDescriptor(AlgKind k, RingDescriptor r) : kind_(k), ring_(std::move(r)) {}
    AlgKind kind_;
    RingDescriptor ring_; // for Product: product of the component rings
    int n_ = 0;
    std::size_t dim_ = 0;
    std::vector<AlgebraDescriptor> components_;
};

AlgebraDescriptor dual_extension(const AlgebraDescriptor& d);
AlgebraDescriptor complexification(const AlgebraDescriptor& d);

/// Inverse of dual_extension on descriptors (throws if the base ring is
/// not eps-extended).
AlgebraDescriptor dual_base_descriptor(const AlgebraDescriptor& d);
bool is_dual_extended(const AlgebraDescriptor& d);

/// Element of a concrete algebra. Coordinate layout: Scalar = (x);
/// Sym = upper triangle, row major; Spin = (lambda, w_1..w_m);
/// Product = concatenation.
class AlgebraElem {
public:
    AlgebraElem(AlgebraDescriptor desc, std::vector<RingElem> coords);

    static AlgebraElem zero(const AlgebraDescriptor& d);
    static AlgebraElem unit(const AlgebraDescriptor& d);
    static AlgebraElem from_sym_matrix(const AlgebraDescriptor& d, const RingMatrix& m);

    const AlgebraDescriptor& descriptor() const { return desc_; }
    const std::vector<RingElem>& coords() const { return c_; }
    const RingElem& coord(std::size_t i) const { return c_[i]; }

    /// Full symmetric matrix (Sym instances only).
    RingMatrix sym_matrix() const;

    /// Slice belonging to one leaf of a product (identity on leaves).
    AlgebraElem leaf_slice(const AlgebraDescriptor& leaf, std::size_t offset) const;

    bool is_zero() const;
    bool operator==(const AlgebraElem& o) const;
    bool operator!=(const AlgebraElem& o) const { return !(*this == o); }

    std::string str() const;

private:
    AlgebraDescriptor desc_;
    std::vector<RingElem> c_;
};

AlgebraElem jadd(const AlgebraElem& a, const AlgebraElem& b);
AlgebraElem jsub(const AlgebraElem& a, const AlgebraElem& b);
AlgebraElem jneg(const AlgebraElem& a);
AlgebraElem jscale(const AlgebraElem& a, const Rational& t);

/// The Jordan product a * b.
AlgebraElem bullet(const AlgebraElem& a, const AlgebraElem& b);

/// Linear operator on an algebra, stored block-diagonally along the leaf
/// decomposition (every operator built here is block diagonal).
class LinOp {
public:
    LinOp(AlgebraDescriptor desc, std::vector<RingMatrix> blocks);

    static LinOp identity(const AlgebraDescriptor& d);
    static LinOp zero_op(const AlgebraDescriptor& d);

    const AlgebraDescriptor& descriptor() const { return desc_; }
    const std::vector<RingMatrix>& blocks() const { return blocks_; }

    AlgebraElem apply(const AlgebraElem& x) const;
    LinOp compose(const LinOp& inner) const; // this after inner
    LinOp add(const LinOp& o) const;
    LinOp sub(const LinOp& o) const;
    LinOp scaled(const Rational& t) const;

    bool operator==(const LinOp& o) const;
    bool operator!=(const LinOp& o) const { return !(*this == o); }

    bool is_invertible() const;
    std::optional<AlgebraElem> solve(const AlgebraElem& rhs) const;

private:
    AlgebraDescriptor desc_;
    std::vector<RingMatrix> blocks_;
};

/// Left multiplication operator L_a.
LinOp left_mul_op(const AlgebraElem& a);

/// Quadratic operator Q_a = 2 L_a^2 - L_{a^2}, materialized as a matrix so
/// invertibility is an exact linear-algebra question.
LinOp quad_op(const AlgebraElem& a);

/// Q_a applied to x, evaluated directly as 2 a(ax) - (a a)x.
AlgebraElem quad(const AlgebraElem& a, const AlgebraElem& x);

/// The linearization b -> (Q_{a+b} - Q_a - Q_b)(x), materialized columnwise
/// from that polarization identity.
LinOp dop(const AlgebraElem& a, const AlgebraElem& x);

/// Per-shape invertibility test (ring unit / matrix determinant unit /
/// lambda^2 - q(w) unit). Agrees with invertibility of Q_a.
bool jis_invertible(const AlgebraElem& a);

/// a^{-1} = Q_a^{-1}(a), computed by per-shape formulas and post-verified
/// against the defining equation Q_a(z) = a.
std::optional<AlgebraElem> try_jordan_inverse(const AlgebraElem& a);
AlgebraElem jordan_inverse(const AlgebraElem& a); // throws NotInvertible

/// The definitional route: materialize Q_a and solve Q_a z = a. Kept as an
/// independent cross-check of try_jordan_inverse.
std::optional<AlgebraElem> jordan_inverse_via_quad_solve(const AlgebraElem& a);

/// Membership in the symmetric cone: ring positivity / leading principal
/// minors / lambda > 0 and lambda^2 - q(w) > 0, componentwise on products.
bool cone_contains(const AlgebraElem& a); // throws NoOrder

/// The point symmetry s_x(y) = Q_x(y^{-1}).
AlgebraElem point_symmetry(const AlgebraElem& x, const AlgebraElem& y);

// eps / i coordinate splits between an algebra and its extension.
AlgebraElem dual_join(const AlgebraElem& base, const AlgebraElem& eps);
AlgebraElem dual_base(const AlgebraElem& a);
AlgebraElem dual_eps(const AlgebraElem& a);
AlgebraElem complex_join(const AlgebraElem& re, const AlgebraElem& im);
AlgebraElem complex_re(const AlgebraElem& a);
AlgebraElem complex_im(const AlgebraElem& a);

// Deterministic samplers.
AlgebraElem sample_elem(Rng& rng, const AlgebraDescriptor& d, long bound);
AlgebraElem sample_invertible(Rng& rng, const AlgebraDescriptor& d, long bound);
/// Element of the symmetric cone (square of an invertible element, with a
/// rejection-sampled raw element mixed in when one shows up).
AlgebraElem sample_cone_elem(Rng& rng, const AlgebraDescriptor& d, long bound);

/// (J1)(J2)(U)(FF)(CF) plus the operator-vs-direct evaluation of Q and the
/// matrix sandwich cross-check on Sym leaves; all equalities exact.
AxiomReport check_jordan_axioms(const AlgebraDescriptor& d, const SampleSpec& spec);

/// Order axioms: e > 0, positives invertible, Q_b preserves the cone, plus
/// cone salience/additivity and stability facts (inverses, squares, point
/// symmetries).
AxiomReport check_ordered_algebra_axioms(const AlgebraDescriptor& d, const SampleSpec& spec);

/// Formal reality: a^2 + b^2 > 0 for sampled a and invertible b.
AxiomReport check_formal_reality(const AlgebraDescriptor& d, const SampleSpec& spec);

} // namespace jorder
