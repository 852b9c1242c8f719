#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "jorder/ring.hpp"

namespace jorder {

/// Dense matrix over one base ring. Used for algebra operators, symmetric
/// matrix arithmetic and Lagrangian frames; dimensions stay small (<= ~21).
class RingMatrix {
public:
    RingMatrix(RingDescriptor ring, std::size_t rows, std::size_t cols);

    static RingMatrix identity(const RingDescriptor& ring, std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const RingDescriptor& ring() const { return ring_; }

    RingElem& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const RingElem& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    RingMatrix operator+(const RingMatrix& o) const;
    RingMatrix operator-(const RingMatrix& o) const;
    RingMatrix operator*(const RingMatrix& o) const;
    RingMatrix negated() const;
    RingMatrix scaled(const Rational& t) const;
    RingMatrix transposed() const;
    bool operator==(const RingMatrix& o) const;
    bool operator!=(const RingMatrix& o) const { return !(*this == o); }

    std::vector<RingElem> apply(const std::vector<RingElem>& v) const;

    bool is_zero() const;

    /// Exact determinant. Uses division-free Laplace expansion so it is
    /// valid over rings with zero divisors (dual numbers); keep n small.
    RingElem det() const;

    /// Invertibility over a field or local ring: Gauss-Jordan restricted to
    /// unit pivots decides bijectivity there.
    bool is_invertible() const;

    /// Solves A x = rhs for square A over a field or local ring. Returns
    /// nullopt when A is not invertible.
    std::optional<std::vector<RingElem>> solve(const std::vector<RingElem>& rhs) const;

    std::optional<RingMatrix> inverse() const;

    std::size_t rank_over_field() const; // Q-like rings only (exact rank)

    std::string str() const;

private:
    RingDescriptor ring_;
    std::size_t rows_, cols_;
    std::vector<RingElem> a_;
};

} // namespace jorder
