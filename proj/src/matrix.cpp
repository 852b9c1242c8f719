#include "jorder/matrix.hpp"

#include "jorder/errors.hpp"

namespace jorder {

RingMatrix::RingMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols),
      a_(rows * cols, RingElem::zero(ring_)) {}

RingMatrix RingMatrix::identity(const RingDescriptor& ring, std::size_t n) {
    RingMatrix m(ring, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElem::one(ring);
    return m;
}

RingMatrix RingMatrix::operator+(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_)
        throw DescriptorMismatch("matrix shape/ring mismatch in +");
    RingMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_add(a_[i], o.a_[i]);
    return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || ring_ != o.ring_)
        throw DescriptorMismatch("matrix shape/ring mismatch in -");
    RingMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_sub(a_[i], o.a_[i]);
    return r;
}

RingMatrix RingMatrix::operator*(const RingMatrix& o) const {
    if (cols_ != o.rows_ || ring_ != o.ring_)
        throw DescriptorMismatch("matrix shape/ring mismatch in *");
    RingMatrix r(ring_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const RingElem& aik = at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = ring_add(r.at(i, j), ring_mul(aik, o.at(k, j)));
        }
    return r;
}

RingMatrix RingMatrix::negated() const {
    RingMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_neg(a_[i]);
    return r;
}

RingMatrix RingMatrix::scaled(const Rational& t) const {
    RingMatrix r(ring_, rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_scale(a_[i], t);
    return r;
}

RingMatrix RingMatrix::transposed() const {
    RingMatrix r(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

bool RingMatrix::operator==(const RingMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && ring_ == o.ring_ && a_ == o.a_;
}

std::vector<RingElem> RingMatrix::apply(const std::vector<RingElem>& v) const {
    if (v.size() != cols_) throw Error("matrix apply: size mismatch");
    std::vector<RingElem> out(rows_, RingElem::zero(ring_));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) {
            if (at(i, j).is_zero()) continue;
            out[i] = ring_add(out[i], ring_mul(at(i, j), v[j]));
        }
    return out;
}

bool RingMatrix::is_zero() const {
    for (const auto& e : a_)
        if (!e.is_zero()) return false;
    return true;
}

namespace {

RingElem det_rec(const RingMatrix& m, std::vector<std::size_t>& cols, std::size_t row) {
    const RingDescriptor& ring = m.ring();
    if (cols.size() == 1) return m.at(row, cols[0]);
    RingElem acc = RingElem::zero(ring);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const RingElem& pivot = m.at(row, cols[k]);
        if (pivot.is_zero()) continue;
        std::size_t c = cols[k];
        cols.erase(cols.begin() + static_cast<long>(k));
        RingElem sub = det_rec(m, cols, row + 1);
        cols.insert(cols.begin() + static_cast<long>(k), c);
        RingElem term = ring_mul(pivot, sub);
        acc = (k % 2 == 0) ? ring_add(acc, term) : ring_sub(acc, term);
    }
    return acc;
}

} // namespace

RingElem RingMatrix::det() const {
    if (rows_ != cols_) throw Error("determinant of non-square matrix");
    if (rows_ == 0) return RingElem::one(ring_);
    std::vector<std::size_t> cols(cols_);
    for (std::size_t j = 0; j < cols_; ++j) cols[j] = j;
    return det_rec(*this, cols, 0);
}

bool RingMatrix::is_invertible() const {
    return inverse().has_value();
}

std::optional<std::vector<RingElem>> RingMatrix::solve(const std::vector<RingElem>& rhs) const {
    if (rows_ != cols_ || rhs.size() != rows_) throw Error("solve: shape mismatch");
    auto inv = inverse();
    if (!inv) return std::nullopt;
    return inv->apply(rhs);
}

std::optional<RingMatrix> RingMatrix::inverse() const {
    if (rows_ != cols_) throw Error("inverse of non-square matrix");
    std::size_t n = rows_;
    RingMatrix m(*this);
    RingMatrix inv = identity(ring_, n);
    // Gauss-Jordan with unit pivots. Over a field or a local ring (dual
    // numbers), failure to find a unit pivot in some column certifies the
    // matrix is not invertible.
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = n;
        for (std::size_t r = col; r < n; ++r)
            if (ring_is_unit(m.at(r, col))) {
                piv = r;
                break;
            }
        if (piv == n) return std::nullopt;
        if (piv != col)
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(m.at(piv, j), m.at(col, j));
                std::swap(inv.at(piv, j), inv.at(col, j));
            }
        RingElem pinv = ring_invert(m.at(col, col));
        for (std::size_t j = 0; j < n; ++j) {
            m.at(col, j) = ring_mul(pinv, m.at(col, j));
            inv.at(col, j) = ring_mul(pinv, inv.at(col, j));
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || m.at(r, col).is_zero()) continue;
            RingElem f = m.at(r, col);
            for (std::size_t j = 0; j < n; ++j) {
                m.at(r, j) = ring_sub(m.at(r, j), ring_mul(f, m.at(col, j)));
                inv.at(r, j) = ring_sub(inv.at(r, j), ring_mul(f, inv.at(col, j)));
            }
        }
    }
    return inv;
}

std::size_t RingMatrix::rank_over_field() const {
    RingKind k = ring_.kind();
    if (k != RingKind::Q && k != RingKind::GaussQ && k != RingKind::TrivialNOrder)
        throw Error("rank computed over fields only, got " + ring_.name());
    RingMatrix m(*this);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
        std::size_t piv = rows_;
        for (std::size_t r = rank; r < rows_; ++r)
            if (!m.at(r, col).is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows_) continue;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(m.at(piv, j), m.at(rank, j));
        RingElem pinv = ring_invert(m.at(rank, col));
        for (std::size_t j = 0; j < cols_; ++j) m.at(rank, j) = ring_mul(pinv, m.at(rank, j));
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == rank || m.at(r, col).is_zero()) continue;
            RingElem f = m.at(r, col);
            for (std::size_t j = 0; j < cols_; ++j)
                m.at(r, j) = ring_sub(m.at(r, j), ring_mul(f, m.at(rank, j)));
        }
        ++rank;
    }
    return rank;
}

std::string RingMatrix::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) s += "; ";
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j) s += ",";
            s += at(i, j).str();
        }
    }
    return s + "]";
}

} // namespace jorder
