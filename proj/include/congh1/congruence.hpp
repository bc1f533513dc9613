/**
 * @file congruence.hpp
 * @brief Elements of SL_n(GF(p)[t]), the congruence filtration by powers of t,
 * and the graded coefficient maps onto traceless matrices.
 */
#pragma once

#include <cstddef>
#include <limits>
#include <stdexcept>

#include "poly.hpp"

namespace congh1 {

/// Level of the identity element.
inline constexpr int kInfiniteLevel = std::numeric_limits<int>::max();

/// A determinant-one polynomial matrix. Stored exactly, never truncated.
class GroupElement {
public:
    explicit GroupElement(PolyMatrix m) : m_(std::move(m)) {
        if (!det(m_).is_one()) throw std::invalid_argument("matrix does not have determinant 1");
    }

    static GroupElement identity(PrimeField field, std::size_t n) {
        return GroupElement(PolyMatrix::identity(field, n), Trusted{});
    }

    /// Constant matrix of determinant 1 viewed as a group element.
    static GroupElement from_constant(const DenseMatrix& s) {
        if (determinant(s) != 1) throw std::invalid_argument("constant matrix does not have determinant 1");
        return GroupElement(PolyMatrix::from_constant(s), Trusted{});
    }

    [[nodiscard]] const PolyMatrix& matrix() const noexcept { return m_; }
    [[nodiscard]] std::size_t n() const noexcept { return m_.n(); }
    [[nodiscard]] const PrimeField& field() const noexcept { return m_.field(); }

    friend GroupElement operator*(const GroupElement& a, const GroupElement& b) {
        return GroupElement(a.m_ * b.m_, Trusted{});
    }

    /// Adjugate, which is the inverse for determinant 1.
    [[nodiscard]] GroupElement inverse() const { return GroupElement(adjugate(m_), Trusted{}); }

    /// s * g * s^{-1} for a constant s.
    [[nodiscard]] GroupElement conjugated_by(const DenseMatrix& s) const {
        return GroupElement(PolyMatrix::from_constant(s) * m_ * PolyMatrix::from_constant(congh1::inverse(s)),
                            Trusted{});
    }

    friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

private:
    struct Trusted {};
    GroupElement(PolyMatrix m, Trusted) : m_(std::move(m)) {}
    PolyMatrix m_;
};

/// Element of sl_n(GF(p)).
class TracelessMatrix {
public:
    explicit TracelessMatrix(DenseMatrix m) : m_(std::move(m)) {
        if (m_.rows() != m_.cols()) throw std::invalid_argument("traceless matrix must be square");
        Residue tr = 0;
        for (std::size_t i = 0; i < m_.rows(); ++i) tr = m_.field().add(tr, m_(i, i));
        if (tr != 0) throw std::invalid_argument("matrix has nonzero trace");
    }

    [[nodiscard]] const DenseMatrix& matrix() const noexcept { return m_; }

    friend TracelessMatrix operator+(const TracelessMatrix& a, const TracelessMatrix& b) {
        require_same_field(a.m_.field(), b.m_.field());
        const auto& f = a.m_.field();
        DenseMatrix s(a.m_);
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j) s.set(i, j, f.add(a.m_(i, j), b.m_(i, j)));
        return TracelessMatrix(std::move(s));
    }

    /// xy - yx
    friend TracelessMatrix bracket(const TracelessMatrix& x, const TracelessMatrix& y) {
        const auto& f = x.m_.field();
        DenseMatrix xy = x.m_ * y.m_, yx = y.m_ * x.m_;
        for (std::size_t i = 0; i < xy.rows(); ++i)
            for (std::size_t j = 0; j < xy.cols(); ++j) xy.set(i, j, f.sub(xy(i, j), yx(i, j)));
        return TracelessMatrix(std::move(xy));
    }

    friend bool operator==(const TracelessMatrix&, const TracelessMatrix&) = default;

private:
    DenseMatrix m_;
};

/// I + a * E_ij (0-based indices).
[[nodiscard]] inline GroupElement elementary(std::size_t i, std::size_t j, const Poly& a, std::size_t n) {
    if (i == j) throw std::invalid_argument("elementary matrix needs i != j");
    if (i >= n || j >= n) throw std::out_of_range("elementary index outside matrix");
    PolyMatrix m = PolyMatrix::identity(a.field(), n);
    m(i, j) = a;
    return GroupElement(std::move(m));
}

/// Largest i with g = I mod t^i; kInfiniteLevel for the identity, 0 outside K.
[[nodiscard]] inline int level(const GroupElement& g) {
    const PolyMatrix diff = g.matrix() - PolyMatrix::identity(g.field(), g.n());
    int lvl = kInfiniteLevel;
    for (std::size_t i = 0; i < g.n(); ++i)
        for (std::size_t j = 0; j < g.n(); ++j)
            if (!diff(i, j).is_zero()) lvl = std::min(lvl, diff(i, j).valuation());
    return lvl;
}

/// The t^i coefficient matrix of g - I, for g of level at least i >= 1.
[[nodiscard]] inline TracelessMatrix rho(int i, const GroupElement& g) {
    if (i < 1) throw std::invalid_argument("rho is defined for i >= 1");
    if (level(g) < i) throw std::domain_error("element level is below the requested degree");
    return TracelessMatrix(g.matrix().coefficient_matrix(i));
}

/// g h g^{-1} h^{-1}
[[nodiscard]] inline GroupElement commutator(const GroupElement& g, const GroupElement& h) {
    return g * h * g.inverse() * h.inverse();
}

/// Image under t -> 0 in SL_n(GF(p)).
[[nodiscard]] inline DenseMatrix reduce_at_zero(const GroupElement& g) { return g.matrix().at_zero(); }

}  // namespace congh1
