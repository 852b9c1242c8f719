#include "jorder/poly.hpp"

#include "jorder/errors.hpp"

namespace jorder {

QPoly::QPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    trim();
}

void QPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational QPoly::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

QPoly QPoly::operator+(const QPoly& o) const {
    std::vector<Rational> out(std::max(c_.size(), o.c_.size()), Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) out[i] += o.c_[i];
    return QPoly(std::move(out));
}

QPoly QPoly::operator-(const QPoly& o) const {
    return *this + o.negated();
}

QPoly QPoly::operator*(const QPoly& o) const {
    if (is_zero() || o.is_zero()) return QPoly();
    std::vector<Rational> out(c_.size() + o.c_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < o.c_.size(); ++j) out[i + j] += c_[i] * o.c_[j];
    return QPoly(std::move(out));
}

QPoly QPoly::negated() const {
    std::vector<Rational> out(c_);
    for (auto& q : out) q = -q;
    return QPoly(std::move(out));
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return QPoly();
    std::vector<Rational> out(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) out[i - 1] = c_[i] * static_cast<long>(i);
    return QPoly(std::move(out));
}

QPoly QPoly::rem(const QPoly& divisor) const {
    if (divisor.is_zero()) throw Error("polynomial division by zero");
    std::vector<Rational> r(c_);
    long dd = divisor.degree();
    const Rational& lead = divisor.c_.back();
    while (static_cast<long>(r.size()) - 1 >= dd) {
        if (sgn(r.back()) == 0) {
            r.pop_back();
            continue;
        }
        Rational f = r.back() / lead;
        std::size_t shift = r.size() - 1 - static_cast<std::size_t>(dd);
        for (std::size_t i = 0; i < divisor.c_.size(); ++i)
            r[shift + i] -= f * divisor.c_[i];
        r.pop_back();
    }
    return QPoly(std::move(r));
}

QPoly poly_gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
        QPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    // monic normalization
    std::vector<Rational> c(a.coeffs());
    Rational lead = c.back();
    for (auto& q : c) q /= lead;
    return QPoly(std::move(c));
}

QPoly squarefree_part(const QPoly& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    QPoly g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p;
    // exact division p / g via repeated remainder-free long division
    std::vector<Rational> num(p.coeffs());
    std::vector<Rational> out(num.size() - g.coeffs().size() + 1, Rational(0));
    const auto& d = g.coeffs();
    for (long i = static_cast<long>(out.size()) - 1; i >= 0; --i) {
        Rational f = num[static_cast<std::size_t>(i) + d.size() - 1] / d.back();
        out[static_cast<std::size_t>(i)] = f;
        for (std::size_t j = 0; j < d.size(); ++j)
            num[static_cast<std::size_t>(i) + j] -= f * d[j];
    }
    return QPoly(std::move(out));
}

namespace {

int sturm_variations(const std::vector<QPoly>& chain, const Rational& x) {
    int variations = 0;
    int prev = 0;
    for (const auto& p : chain) {
        int s = sgn(p.eval(x));
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

} // namespace

long sturm_count(const QPoly& p, const Rational& lo, const Rational& hi) {
    if (p.is_zero()) throw Error("Sturm count of the zero polynomial");
    if (!(lo < hi)) throw Error("Sturm interval must satisfy lo < hi");
    std::vector<QPoly> chain;
    chain.push_back(p);
    QPoly d = p.derivative();
    if (!d.is_zero()) chain.push_back(d);
    while (chain.size() >= 2 && !chain.back().is_zero()) {
        QPoly r = chain[chain.size() - 2].rem(chain.back()).negated();
        if (r.is_zero()) break;
        chain.push_back(std::move(r));
    }
    return sturm_variations(chain, lo) - sturm_variations(chain, hi);
}

QPoly char_poly(const RingMatrix& m) {
    if (m.rows() != m.cols()) throw Error("characteristic polynomial of non-square matrix");
    if (m.ring() != RingDescriptor::q()) throw Error("char_poly over Q only");
    std::size_t n = m.rows();
    // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1), M_{k+1} = A(M_k + c I)
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RingMatrix mk = m;
    for (std::size_t k = 1; k <= n; ++k) {
        Rational tr(0);
        for (std::size_t i = 0; i < n; ++i) tr += mk.at(i, i).coord(0);
        Rational ck = -tr / static_cast<long>(k);
        coeffs[n - k] = ck;
        if (k < n) {
            RingMatrix shifted = mk;
            for (std::size_t i = 0; i < n; ++i)
                shifted.at(i, i) = ring_add(shifted.at(i, i),
                                            RingElem(RingDescriptor::q(), {ck}));
            mk = m * shifted;
        }
    }
    return QPoly(std::move(coeffs));
}

} // namespace jorder
