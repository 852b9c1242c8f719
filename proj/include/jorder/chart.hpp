#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jorder/jordan.hpp"

namespace jorder {

/// Point of the geometry in the two-point chart model V + {infinity}.
class ChartPoint {
public:
    static ChartPoint infinity(const AlgebraDescriptor& d) { return ChartPoint(d); }
    static ChartPoint finite(AlgebraElem v) { return ChartPoint(std::move(v)); }
    static ChartPoint origin(const AlgebraDescriptor& d) {
        return finite(AlgebraElem::zero(d));
    }

    bool is_infinity() const { return inf_; }
    const AlgebraElem& value() const;
    const AlgebraDescriptor& descriptor() const { return desc_; }

    bool operator==(const ChartPoint& o) const;
    bool operator!=(const ChartPoint& o) const { return !(*this == o); }

    std::string str() const;

private:
    explicit ChartPoint(const AlgebraDescriptor& d)
        : desc_(d), inf_(true), v_(AlgebraElem::zero(d)) {}
    explicit ChartPoint(AlgebraElem v)
        : desc_(v.descriptor()), inf_(false), v_(std::move(v)) {}

    AlgebraDescriptor desc_;
    bool inf_;
    AlgebraElem v_;
};

enum class GenKind { Trans, TildeTrans, Quad, Neg, Jinv };

/// One generator of the conformal group action: a translation t_v, its
/// j-conjugate, an invertible quadratic operator, the negation inversion or
/// the Jordan inversion j itself.
class Generator {
public:
    static Generator trans(AlgebraElem v) { return Generator(GenKind::Trans, std::move(v)); }
    static Generator tilde_trans(AlgebraElem v) {
        return Generator(GenKind::TildeTrans, std::move(v));
    }
    static Generator quad(AlgebraElem y); // y must be invertible
    static Generator neg() { return Generator(GenKind::Neg); }
    static Generator jinv() { return Generator(GenKind::Jinv); }

    GenKind kind() const { return kind_; }
    const AlgebraElem& arg() const;
    bool is_inversion() const { return kind_ == GenKind::Neg || kind_ == GenKind::Jinv; }

    std::string str() const;

private:
    explicit Generator(GenKind k) : kind_(k) {}
    Generator(GenKind k, AlgebraElem v) : kind_(k), arg_(std::move(v)) {}
    GenKind kind_;
    std::optional<AlgebraElem> arg_;
};

/// A word in the generators, applied left to right. Words of parity 0 act
/// as elements of the projective elementary group G0; parity 1 words are
/// inversion-like (G1 minus G0).
struct GroupWord {
    std::vector<Generator> gens;

    int parity() const {
        int p = 0;
        for (const auto& g : gens)
            if (g.is_inversion()) p ^= 1;
        return p;
    }

    GroupWord then(const GroupWord& next) const {
        GroupWord w = *this;
        w.gens.insert(w.gens.end(), next.gens.begin(), next.gens.end());
        return w;
    }

    std::string str() const;
};

/// Formal inverse word (reversed, with each generator inverted).
GroupWord word_inverse(const GroupWord& w);

/// Transversality: infinity is transversal to every finite point, and two
/// finite points are transversal iff their difference is invertible.
bool transversal(const ChartPoint& p, const ChartPoint& q);

ChartPoint apply_generator(const Generator& g, const ChartPoint& p); // throws LeavesChart
std::optional<ChartPoint> try_apply_generator(const Generator& g, const ChartPoint& p);

ChartPoint apply_word(const GroupWord& w, const ChartPoint& p); // throws LeavesChart
std::optional<ChartPoint> try_apply_word(const GroupWord& w, const ChartPoint& p);

/// x -> -x^{-1}, a fixed parity-0 word; swaps the origin and infinity.
ChartPoint neg_inv(const ChartPoint& p);

/// The word [Trans(-b), Neg, Jinv] sending b to infinity (parity 0).
GroupWord carry_to_infinity(const AlgebraElem& b);

// Deterministic samplers.
ChartPoint sample_chart_point(Rng& rng, const AlgebraDescriptor& d, long bound,
                              long infinity_one_in = 8);
GroupWord sample_word(Rng& rng, const AlgebraDescriptor& d, long bound, long max_len = 6);

} // namespace jorder
