/**
 * @file poly.hpp
 * @brief Polynomials over GF(p) and square polynomial matrices.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gf.hpp"

namespace congh1 {

/// Polynomial in t over GF(p). coeffs()[k] is the coefficient of t^k; no trailing zeros.
class Poly {
public:
    explicit Poly(PrimeField field) : field_(field) {}

    Poly(PrimeField field, std::vector<Residue> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
        for (auto& c : coeffs_) c %= field_.p();
        trim();
    }

    static Poly constant(PrimeField field, Residue c) { return Poly(field, {c}); }

    /// c * t^k
    static Poly monomial(PrimeField field, Residue c, int k) {
        if (k < 0) throw std::invalid_argument("negative exponent");
        std::vector<Residue> v(static_cast<std::size_t>(k) + 1, 0);
        v.back() = c;
        return Poly(field, std::move(v));
    }

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::span<const Residue> coeffs() const noexcept { return coeffs_; }
    [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    [[nodiscard]] Residue leading() const noexcept { return coeffs_.empty() ? 0 : coeffs_.back(); }
    [[nodiscard]] bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    [[nodiscard]] Residue coefficient(int k) const {
        if (k < 0) throw std::out_of_range("negative coefficient index");
        return static_cast<std::size_t>(k) < coeffs_.size() ? coeffs_[static_cast<std::size_t>(k)] : 0;
    }

    /// Largest k with t^k dividing this polynomial; throws on zero.
    [[nodiscard]] int valuation() const {
        if (is_zero()) throw std::domain_error("valuation of zero polynomial");
        int k = 0;
        while (coeffs_[static_cast<std::size_t>(k)] == 0) ++k;
        return k;
    }

    [[nodiscard]] Poly shifted(int k) const {
        if (k < 0) throw std::invalid_argument("negative shift");
        if (is_zero()) return *this;
        std::vector<Residue> v(static_cast<std::size_t>(k), 0);
        v.insert(v.end(), coeffs_.begin(), coeffs_.end());
        return Poly(field_, std::move(v));
    }

    /// Exact division by t^k; throws if not divisible.
    [[nodiscard]] Poly unshifted(int k) const {
        if (is_zero()) return *this;
        if (valuation() < k) throw std::domain_error("polynomial not divisible by the requested power of t");
        return Poly(field_, std::vector<Residue>(coeffs_.begin() + k, coeffs_.end()));
    }

    /// Reduction modulo t^m.
    [[nodiscard]] Poly truncated(int m) const {
        if (static_cast<int>(coeffs_.size()) <= m) return *this;
        return Poly(field_, std::vector<Residue>(coeffs_.begin(), coeffs_.begin() + std::max(m, 0)));
    }

    [[nodiscard]] Poly scaled(Residue c) const {
        std::vector<Residue> v(coeffs_);
        for (auto& x : v) x = field_.mul(x, c);
        return Poly(field_, std::move(v));
    }

    [[nodiscard]] Poly monic() const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading()));
    }

    Poly operator-() const { return scaled(field_.neg(1)); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        require_same_field(a.field_, b.field_);
        std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.field_.add(i < a.coeffs_.size() ? a.coeffs_[i] : 0, i < b.coeffs_.size() ? b.coeffs_[i] : 0);
        return Poly(a.field_, std::move(v));
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        require_same_field(a.field_, b.field_);
        std::vector<Residue> v(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.field_.sub(i < a.coeffs_.size() ? a.coeffs_[i] : 0, i < b.coeffs_.size() ? b.coeffs_[i] : 0);
        return Poly(a.field_, std::move(v));
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        require_same_field(a.field_, b.field_);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        const auto& f = a.field_;
        std::vector<Residue> v(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
                v[i + j] = f.add(v[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
        }
        return Poly(f, std::move(v));
    }

    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& a) {
        if (a.is_zero()) return os << "0";
        bool first = true;
        for (std::size_t k = 0; k < a.coeffs_.size(); ++k) {
            Residue c = a.coeffs_[k];
            if (c == 0) continue;
            if (!first) os << " + ";
            first = false;
            if (k == 0) os << c;
            else {
                if (c != 1) os << c;
                os << "t";
                if (k > 1) os << "^" << k;
            }
        }
        return os;
    }

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
    }

    PrimeField field_;
    std::vector<Residue> coeffs_;
};

struct PolyDivision {
    Poly quotient;
    Poly remainder;
};

[[nodiscard]] inline PolyDivision divmod(const Poly& a, const Poly& b) {
    require_same_field(a.field(), b.field());
    if (b.is_zero()) throw ArithmeticError("division by zero polynomial");
    const auto& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Residue> rem(a.coeffs().begin(), a.coeffs().end());
    std::vector<Residue> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
    const Residue lead_inv = f.inv(b.leading());
    const auto bc = b.coeffs();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Residue c = f.mul(rem[static_cast<std::size_t>(k + b.degree())], lead_inv);
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (std::size_t i = 0; i < bc.size(); ++i)
            rem[static_cast<std::size_t>(k) + i] = f.sub(rem[static_cast<std::size_t>(k) + i], f.mul(c, bc[i]));
    }
    return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

[[nodiscard]] inline Poly exact_quotient(const Poly& a, const Poly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw ArithmeticError("inexact polynomial division");
    return q;
}

// ---------------------------------------------------------------------------

/// Square n x n matrix of polynomials.
class PolyMatrix {
public:
    PolyMatrix(PrimeField field, std::size_t n) : field_(field), n_(n), entries_(n * n, Poly(field)) {}

    static PolyMatrix identity(PrimeField field, std::size_t n) {
        PolyMatrix m(field, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = Poly::constant(field, 1);
        return m;
    }

    static PolyMatrix from_constant(const DenseMatrix& c) {
        if (c.rows() != c.cols()) throw std::invalid_argument("constant matrix must be square");
        PolyMatrix m(c.field(), c.rows());
        for (std::size_t i = 0; i < c.rows(); ++i)
            for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) = Poly::constant(c.field(), c(i, j));
        return m;
    }

    /// diag(t^{e_0}, ..., t^{e_{n-1}})
    static PolyMatrix diagonal_powers(PrimeField field, std::span<const int> exponents) {
        PolyMatrix m(field, exponents.size());
        for (std::size_t i = 0; i < exponents.size(); ++i) m(i, i) = Poly::monomial(field, 1, exponents[i]);
        return m;
    }

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }

    Poly& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
    const Poly& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }

    [[nodiscard]] int max_degree() const noexcept {
        int d = -1;
        for (const auto& e : entries_) d = std::max(d, e.degree());
        return d;
    }

    /// Constant terms of all entries.
    [[nodiscard]] DenseMatrix at_zero() const {
        DenseMatrix c(field_, n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) c.set(i, j, (*this)(i, j).coefficient(0));
        return c;
    }

    /// Matrix of t^k coefficients.
    [[nodiscard]] DenseMatrix coefficient_matrix(int k) const {
        DenseMatrix c(field_, n_, n_);
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j) c.set(i, j, (*this)(i, j).coefficient(k));
        return c;
    }

    [[nodiscard]] PolyMatrix truncated(int m) const {
        PolyMatrix out(*this);
        for (auto& e : out.entries_) e = e.truncated(m);
        return out;
    }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
        require_same_field(a.field_, b.field_);
        if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch in polynomial matrix product");
        PolyMatrix c(a.field_, a.n_);
        for (std::size_t i = 0; i < a.n_; ++i)
            for (std::size_t k = 0; k < a.n_; ++k) {
                if (a(i, k).is_zero()) continue;
                for (std::size_t j = 0; j < a.n_; ++j)
                    if (!b(k, j).is_zero()) c(i, j) += a(i, k) * b(k, j);
            }
        return c;
    }

    friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
        require_same_field(a.field_, b.field_);
        if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
        PolyMatrix c(a);
        for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] += b.entries_[k];
        return c;
    }

    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
        require_same_field(a.field_, b.field_);
        if (a.n_ != b.n_) throw std::invalid_argument("dimension mismatch");
        PolyMatrix c(a);
        for (std::size_t k = 0; k < c.entries_.size(); ++k) c.entries_[k] -= b.entries_[k];
        return c;
    }

    friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
        return a.field_ == b.field_ && a.n_ == b.n_ && a.entries_ == b.entries_;
    }

    friend std::ostream& operator<<(std::ostream& os, const PolyMatrix& m) {
        os << "[";
        for (std::size_t i = 0; i < m.n_; ++i) {
            os << (i ? "; " : "");
            for (std::size_t j = 0; j < m.n_; ++j) os << (j ? ", " : "") << m(i, j);
        }
        return os << "]";
    }

private:
    PrimeField field_;
    std::size_t n_;
    std::vector<Poly> entries_;
};

/// Determinant by Bareiss fraction-free elimination (exact polynomial divisions).
[[nodiscard]] inline Poly det(const PolyMatrix& a) {
    const auto& f = a.field();
    const std::size_t n = a.n();
    if (n == 0) return Poly::constant(f, 1);
    PolyMatrix m(a);
    Poly prev = Poly::constant(f, 1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t sel = k + 1;
            while (sel < n && m(sel, k).is_zero()) ++sel;
            if (sel == n) return Poly(f);
            for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(sel, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                m(i, j) = exact_quotient(m(k, k) * m(i, j) - m(i, k) * m(k, j), prev);
            m(i, k) = Poly(f);
        }
        prev = m(k, k);
    }
    Poly d = m(n - 1, n - 1);
    return negate ? -d : d;
}

/// Classical adjugate: adj(A) * A = det(A) * I.
[[nodiscard]] inline PolyMatrix adjugate(const PolyMatrix& a) {
    const auto& f = a.field();
    const std::size_t n = a.n();
    PolyMatrix adj(f, n);
    if (n == 1) {
        adj(0, 0) = Poly::constant(f, 1);
        return adj;
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            PolyMatrix minor(f, n - 1);
            for (std::size_t r = 0, mr = 0; r < n; ++r) {
                if (r == i) continue;
                for (std::size_t c = 0, mc = 0; c < n; ++c) {
                    if (c == j) continue;
                    minor(mr, mc++) = a(r, c);
                }
                ++mr;
            }
            Poly cof = det(minor);
            adj(j, i) = ((i + j) % 2) ? -cof : cof;
        }
    return adj;
}

/**
 * Column Hermite normal form over GF(p)[t]: the result equals A*U for a
 * unimodular U, is upper triangular with monic diagonal, and every entry to
 * the right of a diagonal entry has degree below that diagonal entry's degree.
 * Unique for the column span of A.
 */
[[nodiscard]] inline PolyMatrix column_hnf(const PolyMatrix& a) {
    const auto& f = a.field();
    const std::size_t n = a.n();
    PolyMatrix h(a);
    auto swap_cols = [&](std::size_t x, std::size_t y) {
        for (std::size_t r = 0; r < n; ++r) std::swap(h(r, x), h(r, y));
    };
    // col_x -= q * col_y
    auto sub_col = [&](std::size_t x, std::size_t y, const Poly& q) {
        for (std::size_t r = 0; r < n; ++r)
            if (!h(r, y).is_zero()) h(r, x) -= q * h(r, y);
    };

    for (std::size_t row = n; row-- > 0;) {
        // Euclid across columns 0..row on this row, gathering the gcd in column `row`.
        for (;;) {
            std::size_t best = n;
            for (std::size_t c = 0; c <= row; ++c)
                if (!h(row, c).is_zero() && (best == n || h(row, c).degree() < h(row, best).degree())) best = c;
            if (best == n) throw ArithmeticError("singular matrix has no Hermite normal form");
            bool done = true;
            for (std::size_t c = 0; c <= row; ++c) {
                if (c == best || h(row, c).is_zero()) continue;
                sub_col(c, best, divmod(h(row, c), h(row, best)).quotient);
                if (!h(row, c).is_zero()) done = false;
            }
            if (done) {
                if (best != row) swap_cols(best, row);
                break;
            }
        }
        Residue scale = f.inv(h(row, row).leading());
        for (std::size_t r = 0; r < n; ++r) h(r, row) = h(r, row).scaled(scale);
    }
    for (std::size_t row = n; row-- > 0;)
        for (std::size_t c = row + 1; c < n; ++c) {
            Poly q = divmod(h(row, c), h(row, row)).quotient;
            if (!q.is_zero()) sub_col(c, row, q);
        }
    return h;
}

}  // namespace congh1
