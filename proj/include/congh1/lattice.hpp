/**
 * @file lattice.hpp
 * @brief Full-rank GF(p)[t]-lattices in their column Hermite normal form, and
 * canonical labels for lattice classes up to scaling by powers of t.
 *
 * A lattice whose basis has determinant c * t^k is determined by its image
 * modulo t^k, so GF(p)[t]-spans and spans over the local ring at t = 0 agree;
 * the HNF therefore labels vertices of the building at that place.
 */
#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "poly.hpp"

namespace congh1 {

class Lattice {
public:
    /// Throws ArithmeticError for a singular basis.
    static Lattice from_basis(const PolyMatrix& basis) { return Lattice(column_hnf(basis)); }

    [[nodiscard]] const PolyMatrix& hnf() const noexcept { return hnf_; }
    [[nodiscard]] std::size_t n() const noexcept { return hnf_.n(); }

    /// Sum of the diagonal degrees: the GF(p)-dimension of L0 / L when L is inside L0.
    [[nodiscard]] int index_degree() const noexcept {
        int d = 0;
        for (std::size_t i = 0; i < n(); ++i) d += hnf_(i, i).degree();
        return d;
    }

    /// t^k * L
    [[nodiscard]] Lattice scaled(int k) const {
        PolyMatrix m(hnf_);
        for (std::size_t i = 0; i < n(); ++i)
            for (std::size_t j = 0; j < n(); ++j) m(i, j) = m(i, j).shifted(k);
        return Lattice(m);
    }

    /// True iff `inner` is a sublattice, solved by back-substitution against the triangular HNF.
    [[nodiscard]] bool contains(const Lattice& inner) const {
        require_same_field(hnf_.field(), inner.hnf_.field());
        if (inner.n() != n()) throw std::invalid_argument("lattice dimension mismatch");
        for (std::size_t col = 0; col < n(); ++col) {
            std::vector<Poly> v;
            for (std::size_t r = 0; r < n(); ++r) v.push_back(inner.hnf_(r, col));
            for (std::size_t r = n(); r-- > 0;) {
                if (v[r].is_zero()) continue;
                auto [q, rem] = divmod(v[r], hnf_(r, r));
                if (!rem.is_zero()) return false;
                for (std::size_t k = 0; k <= r; ++k)
                    if (!hnf_(k, r).is_zero()) v[k] -= q * hnf_(k, r);
            }
        }
        return true;
    }

    /// Flattened entry encoding: for each entry, its length then its coefficients.
    [[nodiscard]] std::vector<std::uint32_t> key() const {
        std::vector<std::uint32_t> k;
        for (std::size_t i = 0; i < n(); ++i)
            for (std::size_t j = 0; j < n(); ++j) {
                const auto c = hnf_(i, j).coeffs();
                k.push_back(static_cast<std::uint32_t>(c.size()));
                k.insert(k.end(), c.begin(), c.end());
            }
        return k;
    }

    friend bool operator==(const Lattice& a, const Lattice& b) { return a.hnf_ == b.hnf_; }

private:
    explicit Lattice(PolyMatrix hnf) : hnf_(std::move(hnf)) {}
    PolyMatrix hnf_;
};

[[nodiscard]] inline bool lattice_contains(const Lattice& outer, const Lattice& inner) { return outer.contains(inner); }

/**
 * Unique representative of a lattice class: the scaled lattice L with
 * L inside L0 but not inside t*L0, in column HNF.
 */
class CanonicalLabel {
public:
    [[nodiscard]] const Lattice& lattice() const noexcept { return lattice_; }
    [[nodiscard]] const PolyMatrix& hnf() const noexcept { return lattice_.hnf(); }
    [[nodiscard]] std::size_t n() const noexcept { return lattice_.n(); }
    [[nodiscard]] const std::vector<std::uint32_t>& key() const noexcept { return key_; }

    /// Lowercase hex of the key, two bytes per word (residues and lengths stay below 2^16 at desk scale).
    [[nodiscard]] std::string hex() const {
        static constexpr char digits[] = "0123456789abcdef";
        std::string s;
        for (auto w : key_)
            for (int shift = 12; shift >= 0; shift -= 4) s.push_back(digits[(w >> shift) & 0xf]);
        return s;
    }

    friend bool operator==(const CanonicalLabel& a, const CanonicalLabel& b) { return a.key_ == b.key_; }
    friend std::strong_ordering operator<=>(const CanonicalLabel& a, const CanonicalLabel& b) {
        return a.key_ <=> b.key_;
    }

private:
    friend CanonicalLabel lattice_label(const PolyMatrix& basis);
    explicit CanonicalLabel(Lattice l) : lattice_(std::move(l)), key_(lattice_.key()) {}

    Lattice lattice_;
    std::vector<std::uint32_t> key_;
};

/**
 * Label of the lattice spanned by the columns of `basis`. The basis
 * determinant must be a unit times a power of t.
 */
[[nodiscard]] inline CanonicalLabel lattice_label(const PolyMatrix& basis) {
    const Poly d = det(basis);
    if (d.is_zero() || d.valuation() != d.degree())
        throw std::invalid_argument("columns do not span a lattice commensurable with the standard lattice");
    int shift = -1;
    for (std::size_t i = 0; i < basis.n(); ++i)
        for (std::size_t j = 0; j < basis.n(); ++j)
            if (!basis(i, j).is_zero()) {
                int v = basis(i, j).valuation();
                shift = shift < 0 ? v : std::min(shift, v);
            }
    PolyMatrix normalized(basis);
    for (std::size_t i = 0; i < basis.n(); ++i)
        for (std::size_t j = 0; j < basis.n(); ++j) normalized(i, j) = normalized(i, j).unshifted(shift);
    return CanonicalLabel(Lattice::from_basis(normalized));
}

}  // namespace congh1
