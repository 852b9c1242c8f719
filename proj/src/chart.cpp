#include "jorder/chart.hpp"

#include "jorder/errors.hpp"

namespace jorder {

const AlgebraElem& ChartPoint::value() const {
    if (inf_) throw Error("infinity has no chart value");
    return v_;
}

bool ChartPoint::operator==(const ChartPoint& o) const {
    if (desc_ != o.desc_) return false;
    if (inf_ || o.inf_) return inf_ == o.inf_;
    return v_ == o.v_;
}

std::string ChartPoint::str() const {
    return inf_ ? "inf" : v_.str();
}

Generator Generator::quad(AlgebraElem y) {
    if (!jis_invertible(y))
        throw NotInvertible("Quad generator needs an invertible element, got " + y.str());
    return Generator(GenKind::Quad, std::move(y));
}

const AlgebraElem& Generator::arg() const {
    if (!arg_) throw Error("generator carries no argument");
    return *arg_;
}

std::string Generator::str() const {
    switch (kind_) {
        case GenKind::Trans: return "t(" + arg_->str() + ")";
        case GenKind::TildeTrans: return "~t(" + arg_->str() + ")";
        case GenKind::Quad: return "Q(" + arg_->str() + ")";
        case GenKind::Neg: return "neg";
        case GenKind::Jinv: return "j";
    }
    return "?";
}

std::string GroupWord::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i) s += " ";
        s += gens[i].str();
    }
    return s + "]";
}

GroupWord word_inverse(const GroupWord& w) {
    GroupWord out;
    for (auto it = w.gens.rbegin(); it != w.gens.rend(); ++it) {
        switch (it->kind()) {
            case GenKind::Trans: out.gens.push_back(Generator::trans(jneg(it->arg()))); break;
            case GenKind::TildeTrans:
                out.gens.push_back(Generator::tilde_trans(jneg(it->arg())));
                break;
            case GenKind::Quad:
                out.gens.push_back(Generator::quad(jordan_inverse(it->arg())));
                break;
            case GenKind::Neg: out.gens.push_back(Generator::neg()); break;
            case GenKind::Jinv: out.gens.push_back(Generator::jinv()); break;
        }
    }
    return out;
}

bool transversal(const ChartPoint& p, const ChartPoint& q) {
    if (p.descriptor() != q.descriptor())
        throw DescriptorMismatch("transversality across algebras");
    if (p.is_infinity() || q.is_infinity()) return !(p.is_infinity() && q.is_infinity());
    return jis_invertible(jsub(p.value(), q.value()));
}

std::optional<ChartPoint> try_apply_generator(const Generator& g, const ChartPoint& p) {
    const AlgebraDescriptor& d = p.descriptor();
    switch (g.kind()) {
        case GenKind::Trans:
            if (p.is_infinity()) return p;
            return ChartPoint::finite(jadd(p.value(), g.arg()));
        case GenKind::Neg:
            if (p.is_infinity()) return p;
            return ChartPoint::finite(jneg(p.value()));
        case GenKind::Quad:
            if (p.is_infinity()) return p;
            return ChartPoint::finite(quad(g.arg(), p.value()));
        case GenKind::Jinv: {
            if (p.is_infinity()) return ChartPoint::origin(d);
            if (p.value().is_zero()) return ChartPoint::infinity(d);
            auto inv = try_jordan_inverse(p.value());
            if (!inv) return std::nullopt;
            return ChartPoint::finite(std::move(*inv));
        }
        case GenKind::TildeTrans: {
            // j . t_v . j, evaluated step by step; partiality is inherited
            auto q = try_apply_generator(Generator::jinv(), p);
            if (!q) return std::nullopt;
            q = try_apply_generator(Generator::trans(g.arg()), *q);
            if (!q) return std::nullopt;
            return try_apply_generator(Generator::jinv(), *q);
        }
    }
    return std::nullopt;
}

ChartPoint apply_generator(const Generator& g, const ChartPoint& p) {
    auto q = try_apply_generator(g, p);
    if (!q) throw LeavesChart("generator " + g.str() + " undefined at " + p.str());
    return *q;
}

std::optional<ChartPoint> try_apply_word(const GroupWord& w, const ChartPoint& p) {
    ChartPoint cur = p;
    for (const auto& g : w.gens) {
        auto next = try_apply_generator(g, cur);
        if (!next) return std::nullopt;
        cur = std::move(*next);
    }
    return cur;
}

ChartPoint apply_word(const GroupWord& w, const ChartPoint& p) {
    auto q = try_apply_word(w, p);
    if (!q) throw LeavesChart("word " + w.str() + " undefined at " + p.str());
    return *q;
}

ChartPoint neg_inv(const ChartPoint& p) {
    GroupWord w{{Generator::neg(), Generator::jinv()}};
    return apply_word(w, p);
}

GroupWord carry_to_infinity(const AlgebraElem& b) {
    return GroupWord{{Generator::trans(jneg(b)), Generator::neg(), Generator::jinv()}};
}

ChartPoint sample_chart_point(Rng& rng, const AlgebraDescriptor& d, long bound,
                              long infinity_one_in) {
    if (rng.chance(infinity_one_in)) return ChartPoint::infinity(d);
    return ChartPoint::finite(sample_elem(rng, d, bound));
}

GroupWord sample_word(Rng& rng, const AlgebraDescriptor& d, long bound, long max_len) {
    GroupWord w;
    long len = rng.range(0, max_len);
    for (long i = 0; i < len; ++i) {
        switch (rng.below(5)) {
            case 0: w.gens.push_back(Generator::trans(sample_elem(rng, d, bound))); break;
            case 1: w.gens.push_back(Generator::tilde_trans(sample_elem(rng, d, bound))); break;
            case 2: w.gens.push_back(Generator::quad(sample_invertible(rng, d, bound))); break;
            case 3: w.gens.push_back(Generator::neg()); break;
            default: w.gens.push_back(Generator::jinv()); break;
        }
    }
    return w;
}

} // namespace jorder
