/**
 * @file gf.hpp
 * @brief Prime field arithmetic and exact dense/sparse linear algebra over GF(p).
 *
 * Residues are plain integers in [0, p). The modulus lives in a PrimeField
 * context value which every matrix carries; binary operations on matrices
 * built over different fields throw FieldMismatch.
 */
#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace congh1 {

using Residue = std::uint32_t;

class ArithmeticError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class FieldMismatch : public std::logic_error {
public:
    FieldMismatch() : std::logic_error("operands belong to different prime fields") {}
};

[[nodiscard]] constexpr bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

/// Field context for GF(p). Primality is checked once, here.
class PrimeField {
public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
        if (p > (1u << 31)) throw std::invalid_argument("modulus too large");
    }

    [[nodiscard]] std::uint32_t p() const noexcept { return p_; }

    [[nodiscard]] Residue reduce(std::int64_t x) const noexcept {
        auto r = x % static_cast<std::int64_t>(p_);
        return static_cast<Residue>(r < 0 ? r + p_ : r);
    }

    [[nodiscard]] Residue add(Residue a, Residue b) const noexcept {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Residue>(s >= p_ ? s - p_ : s);
    }
    [[nodiscard]] Residue sub(Residue a, Residue b) const noexcept {
        return a >= b ? a - b : static_cast<Residue>(std::uint64_t{a} + p_ - b);
    }
    [[nodiscard]] Residue neg(Residue a) const noexcept { return a == 0 ? 0 : p_ - a; }
    [[nodiscard]] Residue mul(Residue a, Residue b) const noexcept {
        return static_cast<Residue>((std::uint64_t{a} * b) % p_);
    }
    [[nodiscard]] Residue pow(Residue a, std::uint64_t e) const noexcept {
        Residue result = 1 % p_;
        while (e) {
            if (e & 1) result = mul(result, a);
            a = mul(a, a);
            e >>= 1;
        }
        return result;
    }
    [[nodiscard]] Residue inv(Residue a) const {
        if (a % p_ == 0) throw ArithmeticError("division by zero in GF(p)");
        return pow(a, p_ - 2);
    }
    [[nodiscard]] Residue div(Residue a, Residue b) const { return mul(a, inv(b)); }

    friend bool operator==(const PrimeField&, const PrimeField&) = default;

private:
    std::uint32_t p_;
};

inline void require_same_field(const PrimeField& a, const PrimeField& b) {
    if (!(a == b)) throw FieldMismatch();
}

// ---------------------------------------------------------------------------
// Dense matrices

class DenseMatrix {
public:
    DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    DenseMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<Residue> entries)
        : field_(field), rows_(rows), cols_(cols), data_(std::move(entries)) {
        if (data_.size() != rows * cols) throw std::invalid_argument("entry count does not match shape");
        for (auto& x : data_) x %= field_.p();
    }

    static DenseMatrix identity(PrimeField field, std::size_t n) {
        DenseMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
        return m;
    }

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::span<const Residue> entries() const noexcept { return data_; }

    [[nodiscard]] Residue operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    void set(std::size_t r, std::size_t c, Residue v) { data_[r * cols_ + c] = v % field_.p(); }

    [[nodiscard]] std::span<const Residue> row(std::size_t r) const {
        return std::span<const Residue>(data_).subspan(r * cols_, cols_);
    }

    friend DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
        require_same_field(a.field_, b.field_);
        if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
        const auto& f = a.field_;
        DenseMatrix c(f, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                Residue x = a(i, k);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j)
                    c.data_[i * c.cols_ + j] = f.add(c.data_[i * c.cols_ + j], f.mul(x, b(k, j)));
            }
        return c;
    }

    [[nodiscard]] DenseMatrix transpose() const {
        DenseMatrix t(field_, cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t.data_[j * rows_ + i] = (*this)(i, j);
        return t;
    }

    [[nodiscard]] bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](Residue x) { return x == 0; });
    }

    friend bool operator==(const DenseMatrix& a, const DenseMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }
    /// Lexicographic on the row-major entries; shape first.
    friend bool operator<(const DenseMatrix& a, const DenseMatrix& b) {
        return std::tie(a.rows_, a.cols_, a.data_) < std::tie(b.rows_, b.cols_, b.data_);
    }

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Residue> data_;
};

struct RrefResult {
    std::size_t rank;
    DenseMatrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row echelon form by Gauss-Jordan elimination.
[[nodiscard]] inline RrefResult rref(const DenseMatrix& m) {
    const auto& f = m.field();
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Residue> a(m.entries().begin(), m.entries().end());
    auto at = [&](std::size_t r, std::size_t c) -> Residue& { return a[r * cols + c]; };

    std::vector<std::size_t> pivots;
    std::size_t prow = 0;
    for (std::size_t c = 0; c < cols && prow < rows; ++c) {
        std::size_t sel = prow;
        while (sel < rows && at(sel, c) == 0) ++sel;
        if (sel == rows) continue;
        if (sel != prow)
            for (std::size_t k = 0; k < cols; ++k) std::swap(at(sel, k), at(prow, k));
        Residue inv = f.inv(at(prow, c));
        for (std::size_t k = c; k < cols; ++k) at(prow, k) = f.mul(at(prow, k), inv);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == prow || at(r, c) == 0) continue;
            Residue factor = at(r, c);
            for (std::size_t k = c; k < cols; ++k) at(r, k) = f.sub(at(r, k), f.mul(factor, at(prow, k)));
        }
        pivots.push_back(c);
        ++prow;
    }
    return {pivots.size(), DenseMatrix(f, rows, cols, std::move(a)), std::move(pivots)};
}

[[nodiscard]] inline std::size_t rank(const DenseMatrix& m) { return rref(m).rank; }

/// Determinant of a square matrix by elimination.
[[nodiscard]] inline Residue determinant(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    const auto& f = m.field();
    const std::size_t n = m.rows();
    std::vector<Residue> a(m.entries().begin(), m.entries().end());
    Residue det = 1 % f.p();
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t sel = c;
        while (sel < n && a[sel * n + c] == 0) ++sel;
        if (sel == n) return 0;
        if (sel != c) {
            for (std::size_t k = 0; k < n; ++k) std::swap(a[sel * n + k], a[c * n + k]);
            det = f.neg(det);
        }
        det = f.mul(det, a[c * n + c]);
        Residue inv = f.inv(a[c * n + c]);
        for (std::size_t r = c + 1; r < n; ++r) {
            Residue factor = f.mul(a[r * n + c], inv);
            if (factor == 0) continue;
            for (std::size_t k = c; k < n; ++k) a[r * n + k] = f.sub(a[r * n + k], f.mul(factor, a[c * n + k]));
        }
    }
    return det;
}

[[nodiscard]] inline DenseMatrix inverse(const DenseMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
    const std::size_t n = m.rows();
    DenseMatrix aug(m.field(), n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug.set(i, j, m(i, j));
        aug.set(i, n + i, 1);
    }
    auto red = rref(aug);
    if (red.rank < n || red.pivot_cols[n - 1] != n - 1) throw ArithmeticError("matrix is singular");
    DenseMatrix out(m.field(), n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out.set(i, j, red.reduced(i, n + j));
    return out;
}

// ---------------------------------------------------------------------------
// Sparse matrices

struct Triple {
    std::size_t row;
    std::size_t col;
    Residue value;

    friend bool operator==(const Triple&, const Triple&) = default;
};

class SparseMatrix {
public:
    SparseMatrix(PrimeField field, std::size_t rows, std::size_t cols) : field_(field), rows_(rows), cols_(cols) {}

    /// Duplicate positions are summed; zero results are dropped.
    static SparseMatrix from_triples(PrimeField field, std::size_t rows, std::size_t cols,
                                     std::span<const Triple> triples) {
        std::map<std::pair<std::size_t, std::size_t>, Residue> acc;
        for (const auto& t : triples) {
            if (t.row >= rows || t.col >= cols) throw std::out_of_range("sparse entry outside matrix bounds");
            auto& slot = acc[{t.row, t.col}];
            slot = field.add(slot, t.value % field.p());
        }
        SparseMatrix m(field, rows, cols);
        for (const auto& [pos, v] : acc)
            if (v != 0) m.triples_.push_back({pos.first, pos.second, v});
        return m;
    }

    static SparseMatrix from_dense(const DenseMatrix& d) {
        SparseMatrix m(d.field(), d.rows(), d.cols());
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                if (d(i, j) != 0) m.triples_.push_back({i, j, d(i, j)});
        return m;
    }

    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
    [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
    [[nodiscard]] std::size_t nnz() const noexcept { return triples_.size(); }
    /// Sorted by (row, col).
    [[nodiscard]] std::span<const Triple> triples() const noexcept { return triples_; }

    [[nodiscard]] DenseMatrix densify() const {
        DenseMatrix d(field_, rows_, cols_);
        for (const auto& t : triples_) d.set(t.row, t.col, t.value);
        return d;
    }

    friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
        return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.triples_ == b.triples_;
    }

private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Triple> triples_;
};

/**
 * Rank by sparse Gaussian elimination with Markowitz pivoting: each step takes
 * the nonzero minimizing (row_count - 1) * (col_count - 1), ties broken by
 * smallest (row, col) so the elimination order is deterministic.
 */
[[nodiscard]] inline std::size_t sparse_rank(const SparseMatrix& m) {
    const auto& f = m.field();
    std::vector<std::map<std::size_t, Residue>> rows(m.rows());
    std::vector<std::set<std::size_t>> col_rows(m.cols());
    for (const auto& t : m.triples()) {
        rows[t.row][t.col] = t.value;
        col_rows[t.col].insert(t.row);
    }
    std::set<std::size_t> active;
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (!rows[r].empty()) active.insert(r);

    std::size_t rank = 0;
    while (!active.empty()) {
        std::size_t best_row = 0, best_col = 0;
        std::size_t best_cost = std::numeric_limits<std::size_t>::max();
        for (std::size_t r : active) {
            const std::size_t rc = rows[r].size() - 1;
            for (const auto& [c, v] : rows[r]) {
                std::size_t cost = rc * (col_rows[c].size() - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_row = r;
                    best_col = c;
                }
            }
            if (best_cost == 0) break;
        }
        ++rank;

        const auto pivot_row = rows[best_row];
        const Residue inv = f.inv(pivot_row.at(best_col));
        std::vector<std::size_t> targets;
        for (std::size_t r : col_rows[best_col])
            if (r != best_row) targets.push_back(r);

        for (std::size_t r : targets) {
            auto& row = rows[r];
            const Residue factor = f.mul(row.at(best_col), inv);
            for (const auto& [c, v] : pivot_row) {
                auto it = row.find(c);
                Residue updated = f.sub(it == row.end() ? 0 : it->second, f.mul(factor, v));
                if (updated == 0) {
                    if (it != row.end()) {
                        row.erase(it);
                        col_rows[c].erase(r);
                    }
                } else if (it == row.end()) {
                    row.emplace(c, updated);
                    col_rows[c].insert(r);
                } else {
                    it->second = updated;
                }
            }
            if (row.empty()) active.erase(r);
        }
        for (const auto& [c, v] : pivot_row) col_rows[c].erase(best_row);
        rows[best_row].clear();
        active.erase(best_row);
    }
    return rank;
}

}  // namespace congh1
