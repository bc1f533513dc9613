/**
 * @file oracle.hpp
 * @brief Brute-force certification of the slot model: enumerate a stabilizer
 * kernel inside SL_n(GF(p)[t]/(t^m)), compute its commutator subgroup and the
 * order of the abelianization. Also a lattice-chain adjacency test.
 *
 * The enumeration never consults the slot model; only verify_h1_formula
 * compares against it.
 */
#pragma once

#include <cstdint>
#include <deque>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "building.hpp"
#include "congruence.hpp"
#include "homology.hpp"
#include "lattice.hpp"

namespace congh1 {

class GroupTooLarge : public std::runtime_error {
public:
    GroupTooLarge() : std::runtime_error("group too large for oracle") {}
};

class NonElementaryQuotient : public std::runtime_error {
public:
    explicit NonElementaryQuotient(std::string witness_hex)
        : std::runtime_error("abelianization is not elementary abelian; witness " + witness_hex),
          witness(std::move(witness_hex)) {}
    std::string witness;
};

inline constexpr std::size_t kDefaultOracleLimit = std::size_t{1} << 20;

/**
 * Truncated matrices mod t^m serialized as n*n*m bytes (entry-major, then
 * degree), so equality and hashing act directly on the string.
 */
class TruncatedArithmetic {
public:
    TruncatedArithmetic(PrimeField field, std::size_t n, std::size_t m) : field_(field), n_(n), m_(m) {
        if (field.p() > 255) throw std::invalid_argument("oracle supports p < 256");
        if (m == 0) throw std::invalid_argument("truncation modulus must be positive");
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] std::size_t m() const noexcept { return m_; }
    [[nodiscard]] const PrimeField& field() const noexcept { return field_; }

    [[nodiscard]] std::string identity() const {
        std::string s(n_ * n_ * m_, '\0');
        for (std::size_t i = 0; i < n_; ++i) s[(i * n_ + i) * m_] = 1;
        return s;
    }

    [[nodiscard]] std::string encode(const PolyMatrix& a) const {
        std::string s(n_ * n_ * m_, '\0');
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t d = 0; d < m_; ++d)
                    s[(i * n_ + j) * m_ + d] = static_cast<char>(a(i, j).coefficient(static_cast<int>(d)));
        return s;
    }

    [[nodiscard]] Residue at(const std::string& s, std::size_t i, std::size_t j, std::size_t d) const {
        return static_cast<unsigned char>(s[(i * n_ + j) * m_ + d]);
    }

    [[nodiscard]] std::string multiply(const std::string& a, const std::string& b) const {
        std::vector<std::uint32_t> acc(n_ * n_ * m_, 0);
        const std::uint32_t p = field_.p();
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = 0; k < n_; ++k)
                for (std::size_t da = 0; da < m_; ++da) {
                    std::uint32_t x = at(a, i, k, da);
                    if (!x) continue;
                    for (std::size_t j = 0; j < n_; ++j)
                        for (std::size_t db = 0; da + db < m_; ++db) {
                            std::uint32_t y = at(b, k, j, db);
                            if (y) acc[(i * n_ + j) * m_ + da + db] = (acc[(i * n_ + j) * m_ + da + db] + x * y) % p;
                        }
                }
        std::string s(acc.size(), '\0');
        for (std::size_t k = 0; k < acc.size(); ++k) s[k] = static_cast<char>(acc[k]);
        return s;
    }

    /// Inverse of an element whose difference from I is nilpotent in the truncated ring.
    [[nodiscard]] std::string inverse(const std::string& a) const {
        const std::string id = identity();
        std::string nil(a);  // I - a
        for (std::size_t k = 0; k < nil.size(); ++k)
            nil[k] = static_cast<char>(field_.sub(static_cast<unsigned char>(id[k]), static_cast<unsigned char>(a[k])));
        // (I - N)^{-1} = I + N + N^2 + ...
        std::string sum = id, power = id;
        for (std::size_t k = 0; k < n_ * m_ + 1; ++k) {
            power = multiply(power, nil);
            for (std::size_t x = 0; x < sum.size(); ++x)
                sum[x] = static_cast<char>(field_.add(static_cast<unsigned char>(sum[x]), static_cast<unsigned char>(power[x])));
        }
        if (multiply(a, sum) != id) throw std::domain_error("element is not unipotent modulo t^m");
        return sum;
    }

    [[nodiscard]] std::string commutator(const std::string& g, const std::string& h) const {
        return multiply(multiply(g, h), multiply(inverse(g), inverse(h)));
    }

    [[nodiscard]] std::string power(const std::string& g, std::uint64_t e) const {
        std::string result = identity(), base = g;
        while (e) {
            if (e & 1) result = multiply(result, base);
            base = multiply(base, base);
            e >>= 1;
        }
        return result;
    }

    [[nodiscard]] static std::string hex(const std::string& s) {
        static constexpr char digits[] = "0123456789abcdef";
        std::string out;
        for (unsigned char c : s) {
            out.push_back(digits[c >> 4]);
            out.push_back(digits[c & 0xf]);
        }
        return out;
    }

private:
    PrimeField field_;
    std::size_t n_;
    std::size_t m_;
};

/// A finite matrix group, closed under products, with elements in BFS discovery order.
class FiniteGroupTable {
public:
    FiniteGroupTable(TruncatedArithmetic arith, std::vector<std::string> generators)
        : arith_(std::move(arith)), generators_(std::move(generators)) {}

    [[nodiscard]] const TruncatedArithmetic& arithmetic() const noexcept { return arith_; }
    [[nodiscard]] const std::vector<std::string>& generators() const noexcept { return generators_; }
    [[nodiscard]] const std::vector<std::string>& elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t order() const noexcept { return elements_.size(); }
    [[nodiscard]] bool contains(const std::string& g) const { return index_.count(g) > 0; }

    /// Right-multiplication closure of the identity under the generators.
    void close(std::size_t limit) {
        elements_.clear();
        index_.clear();
        std::deque<std::string> queue;
        auto visit = [&](std::string g) {
            if (index_.insert(g).second) {
                if (index_.size() > limit) throw GroupTooLarge();
                elements_.push_back(g);
                queue.push_back(std::move(g));
            }
        };
        visit(arith_.identity());
        while (!queue.empty()) {
            std::string g = std::move(queue.front());
            queue.pop_front();
            for (const auto& s : generators_) visit(arith_.multiply(g, s));
        }
    }

private:
    TruncatedArithmetic arith_;
    std::vector<std::string> generators_;
    std::vector<std::string> elements_;
    std::unordered_set<std::string> index_;
};

[[nodiscard]] inline FiniteGroupTable generate_group(std::span<const GroupElement> generators, PrimeField field,
                                                     std::size_t n, std::size_t m,
                                                     std::size_t limit = kDefaultOracleLimit) {
    TruncatedArithmetic arith(field, n, m);
    std::vector<std::string> gens;
    for (const auto& g : generators) {
        if (g.n() != n) throw std::invalid_argument("generator dimension mismatch");
        gens.push_back(arith.encode(g.matrix()));
    }
    FiniteGroupTable table(arith, std::move(gens));
    table.close(limit);
    return table;
}

/// Normal closure of the generator commutators, i.e. [G, G]. Normality is verified.
[[nodiscard]] inline FiniteGroupTable commutator_subgroup(const FiniteGroupTable& g) {
    const auto& arith = g.arithmetic();
    std::vector<std::string> gens;
    std::unordered_set<std::string> seen;
    auto add_gen = [&](std::string x) {
        if (x != arith.identity() && seen.insert(x).second) gens.push_back(std::move(x));
    };
    for (const auto& x : g.generators())
        for (const auto& y : g.generators()) add_gen(arith.commutator(x, y));

    for (;;) {
        FiniteGroupTable h(arith, gens);
        h.close(g.order());
        bool grew = false;
        const std::vector<std::string> current = gens;
        for (const auto& x : g.generators()) {
            const std::string xinv = arith.inverse(x);
            for (const auto& c : current) {
                std::string conj = arith.multiply(arith.multiply(x, c), xinv);
                if (!h.contains(conj)) {
                    add_gen(std::move(conj));
                    grew = true;
                }
            }
        }
        if (!grew) {
            for (const auto& x : g.elements()) {
                const std::string xinv = arith.inverse(x);
                for (const auto& c : h.generators())
                    if (!h.contains(arith.multiply(arith.multiply(x, c), xinv)))
                        throw std::logic_error("commutator subgroup failed the normality check");
            }
            return h;
        }
    }
}

struct Abelianization {
    std::size_t group_order;
    std::size_t commutator_order;
    int dim;  ///< log_p of the quotient order
};

/// |G / [G, G]| = p^dim, after checking the quotient is elementary abelian.
[[nodiscard]] inline Abelianization abelianize(const FiniteGroupTable& g) {
    const auto h = commutator_subgroup(g);
    const auto& arith = g.arithmetic();
    const std::uint32_t p = arith.field().p();
    if (g.order() % h.order() != 0) throw std::logic_error("subgroup order does not divide group order");
    std::size_t quotient = g.order() / h.order();
    int dim = 0;
    while (quotient % p == 0) {
        quotient /= p;
        ++dim;
    }
    if (quotient != 1) throw std::logic_error("abelianization order is not a power of p");
    for (const auto& x : g.elements())
        if (!h.contains(arith.power(x, p))) throw NonElementaryQuotient(TruncatedArithmetic::hex(x));
    return {g.order(), h.order(), dim};
}

[[nodiscard]] inline int abelianization_dim(const FiniteGroupTable& g) { return abelianize(g).dim; }

/// Generators I + E_ij(t^r), 1 <= r <= b_ij, of the stabilizer kernel for a profile.
[[nodiscard]] inline std::vector<GroupElement> profile_generators(const BoundProfile& b, PrimeField field) {
    std::vector<GroupElement> gens;
    for (std::size_t i = 0; i < b.n(); ++i)
        for (std::size_t j = i + 1; j < b.n(); ++j)
            for (int r = 1; r <= b(i, j); ++r) gens.push_back(elementary(i, j, Poly::monomial(field, 1, r), b.n()));
    return gens;
}

/// Truncation modulus making reduction injective on the stabilizer kernel.
[[nodiscard]] inline std::size_t profile_modulus(const BoundProfile& b) {
    return static_cast<std::size_t>(1 + b.max_bound());
}

[[nodiscard]] inline FiniteGroupTable profile_group(const BoundProfile& b, PrimeField field,
                                                    std::size_t limit = kDefaultOracleLimit) {
    const auto gens = profile_generators(b, field);
    return generate_group(gens, field, b.n(), profile_modulus(b), limit);
}

struct ProfileCertificate {
    std::size_t order;
    std::size_t expected_order;  ///< p^(sum of positive bounds)
    int oracle_dim;
    int model_dim;

    [[nodiscard]] bool agrees() const noexcept { return order == expected_order && oracle_dim == model_dim; }
};

/**
 * Brute-force abelianization of the stabilizer kernel versus `model_dim`, the
 * slot count to be certified. Throws GroupTooLarge past `limit`.
 */
[[nodiscard]] inline ProfileCertificate certify_profile(const BoundProfile& b, PrimeField field, int model_dim,
                                                        std::size_t limit = kDefaultOracleLimit) {
    std::size_t expected = 1;
    for (int k = 0; k < b.exponent_sum(); ++k) {
        expected *= field.p();
        if (expected > limit) throw GroupTooLarge();
    }
    const auto table = profile_group(b, field, limit);
    const auto ab = abelianize(table);
    return {table.order(), expected, ab.dim, model_dim};
}

/// Brute force agrees with the slot model for this profile (order and abelianization dimension).
[[nodiscard]] inline bool verify_h1_formula(const BoundProfile& b, PrimeField field,
                                            std::size_t limit = kDefaultOracleLimit) {
    return certify_profile(b, field, static_cast<int>(h1_basis(b).dim()), limit).agrees();
}

/**
 * Whether extracting the full t^k coefficient matrix is a homomorphism on the
 * enumerated group, checked on all pairs.
 */
[[nodiscard]] inline bool phi_homomorphism_oracle(const BoundProfile& b, PrimeField field, int k,
                                                  std::size_t limit = kDefaultOracleLimit) {
    const std::size_t m = std::max<std::size_t>(profile_modulus(b), static_cast<std::size_t>(k) + 1);
    const auto gens = profile_generators(b, field);
    const auto table = generate_group(gens, field, b.n(), m, limit);
    const auto& arith = table.arithmetic();
    const std::size_t n = b.n();
    const auto d = static_cast<std::size_t>(k);
    for (const auto& x : table.elements())
        for (const auto& y : table.elements()) {
            const std::string xy = arith.multiply(x, y);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    if (arith.at(xy, i, j, d) != field.add(arith.at(x, i, j, d), arith.at(y, i, j, d))) return false;
        }
    return true;
}

/**
 * Lattice-chain adjacency for standard vertices: some t-power scalings A of
 * one label and B of the other satisfy tA < B < A with both inclusions proper.
 */
[[nodiscard]] inline bool adjacency_oracle(const StandardVertex& a, const StandardVertex& b) {
    if (a.n() != b.n()) throw std::invalid_argument("vertices of different dimension");
    const auto field = PrimeField(2);
    const auto id = DenseMatrix::identity(field, a.n());
    const Lattice la = vertex_label(id, a).lattice();
    const Lattice lb = vertex_label(id, b).lattice();
    const int span = std::max(a.distance(), b.distance()) + 2;
    for (int x = 0; x <= span; ++x)
        for (int y = 0; y <= span; ++y) {
            const Lattice big = la.scaled(x), mid = lb.scaled(y), small = la.scaled(x + 1);
            if (big.contains(mid) && !mid.contains(big) && mid.contains(small) && !small.contains(mid)) return true;
        }
    return false;
}

}  // namespace congh1
