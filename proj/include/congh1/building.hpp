/**
 * @file building.hpp
 * @brief The standard wedge of the building, its radius-R truncation, coset
 * representatives for SL_n(GF(p))/B, and the union of flag translates of the
 * truncated wedge, deduplicated by canonical lattice label.
 *
 * Standard vertex r = (r_1 >= ... >= r_{n-1} >= 0) is the class of the lattice
 * with basis (t^{r_1} e_1, ..., t^{r_{n-1}} e_{n-1}, e_n) over the valuation
 * ring at infinity. Its stabilizer entries obey deg x_ij <= r_i - r_j. Under
 * t -> 1/t this class corresponds to diag(t^{r_1 - r_i}) over the ring at 0,
 * which is what the labels are computed from.
 */
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "congruence.hpp"
#include "lattice.hpp"
#include "parallel.hpp"

namespace congh1 {

class StandardVertex {
public:
    /// `r` has n - 1 entries; the implicit last coordinate is 0.
    explicit StandardVertex(std::vector<int> r) : r_(std::move(r)) {
        for (std::size_t i = 0; i < r_.size(); ++i) {
            if (r_[i] < 0) throw std::invalid_argument("vertex coordinates must be non-negative");
            if (i > 0 && r_[i] > r_[i - 1]) throw std::invalid_argument("vertex coordinates must be weakly decreasing");
        }
    }

    static StandardVertex origin(std::size_t n) { return StandardVertex(std::vector<int>(n - 1, 0)); }

    [[nodiscard]] std::size_t n() const noexcept { return r_.size() + 1; }
    [[nodiscard]] std::span<const int> r() const noexcept { return r_; }
    /// r_i for 0 <= i < n, with r_{n-1} = 0.
    [[nodiscard]] int coordinate(std::size_t i) const { return i < r_.size() ? r_[i] : 0; }
    /// Distance from v0 in the building.
    [[nodiscard]] int distance() const noexcept { return r_.empty() ? 0 : r_[0]; }
    [[nodiscard]] bool is_origin() const noexcept { return distance() == 0; }

    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < r_.size(); ++i) s += (i ? "," : "") + std::to_string(r_[i]);
        return s + ")";
    }

    friend bool operator==(const StandardVertex&, const StandardVertex&) = default;
    friend auto operator<=>(const StandardVertex&, const StandardVertex&) = default;

private:
    std::vector<int> r_;
};

/// Adjacency in the wedge: the coordinate difference (last coordinate 0) lies in {0,1}^n or {-1,0}^n and is nonzero.
[[nodiscard]] inline bool adjacent(const StandardVertex& a, const StandardVertex& b) {
    if (a.n() != b.n()) throw std::invalid_argument("vertices of different dimension");
    bool nonneg = true, nonpos = true, nonzero = false;
    for (std::size_t i = 0; i < a.n(); ++i) {
        int d = a.coordinate(i) - b.coordinate(i);
        if (d != 0) nonzero = true;
        if (d != 0 && d != 1) nonneg = false;
        if (d != 0 && d != -1) nonpos = false;
    }
    return nonzero && (nonneg || nonpos);
}

struct StandardEdge {
    StandardVertex a;  ///< a < b
    StandardVertex b;

    StandardEdge(StandardVertex x, StandardVertex y) : a(std::move(x)), b(std::move(y)) {
        if (!adjacent(a, b)) throw std::invalid_argument("edge endpoints are not adjacent");
        if (b < a) std::swap(a, b);
    }

    friend bool operator==(const StandardEdge&, const StandardEdge&) = default;
    friend auto operator<=>(const StandardEdge&, const StandardEdge&) = default;
};

// ---------------------------------------------------------------------------

/// Degree bounds b_ij for the entries of a simplex stabilizer (0-based indices).
class BoundProfile {
public:
    BoundProfile(std::size_t n, std::vector<int> bounds) : n_(n), b_(std::move(bounds)) {
        if (b_.size() != n * n) throw std::invalid_argument("profile needs n*n entries");
        for (std::size_t i = 0; i < n; ++i) b_[i * n + i] = 0;
    }

    /**
     * Profile from the strictly upper entries listed by diagonal offset: for
     * n = 3 the order is b12, b23, b13. Lower entries are set to -b_ji.
     */
    static BoundProfile from_upper(std::size_t n, std::span<const int> upper) {
        if (upper.size() != n * (n - 1) / 2)
            throw std::invalid_argument("expected " + std::to_string(n * (n - 1) / 2) + " bounds for n = " +
                                        std::to_string(n));
        std::vector<int> b(n * n, 0);
        std::size_t k = 0;
        for (std::size_t offset = 1; offset < n; ++offset)
            for (std::size_t i = 0; i + offset < n; ++i) {
                b[i * n + i + offset] = upper[k];
                b[(i + offset) * n + i] = -upper[k];
                ++k;
            }
        return BoundProfile(n, std::move(b));
    }

    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] int operator()(std::size_t i, std::size_t j) const { return b_[i * n_ + j]; }

    /// b_ij >= b_ik + b_kj for all i < k < j.
    [[nodiscard]] bool is_superadditive() const {
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t k = i + 1; k < n_; ++k)
                for (std::size_t j = k + 1; j < n_; ++j)
                    if ((*this)(i, j) < (*this)(i, k) + (*this)(k, j)) return false;
        return true;
    }

    /// sum over i < j of max(0, b_ij): log_p of the stabilizer order.
    [[nodiscard]] int exponent_sum() const {
        int s = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) s += std::max(0, (*this)(i, j));
        return s;
    }

    [[nodiscard]] int max_bound() const {
        int m = 0;
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j) m = std::max(m, (*this)(i, j));
        return m;
    }

    friend bool operator==(const BoundProfile&, const BoundProfile&) = default;

private:
    std::size_t n_;
    std::vector<int> b_;
};

/// b_ij = min over vertices of (r_i - r_j). Vertices must be pairwise adjacent.
[[nodiscard]] inline BoundProfile bound_profile(std::span<const StandardVertex> simplex) {
    if (simplex.empty()) throw std::invalid_argument("empty simplex");
    const std::size_t n = simplex.front().n();
    for (std::size_t x = 0; x < simplex.size(); ++x)
        for (std::size_t y = x + 1; y < simplex.size(); ++y)
            if (!adjacent(simplex[x], simplex[y])) throw std::invalid_argument("vertices do not form a simplex");
    std::vector<int> b(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            int m = std::numeric_limits<int>::max();
            for (const auto& v : simplex) m = std::min(m, v.coordinate(i) - v.coordinate(j));
            b[i * n + j] = m;
        }
    return BoundProfile(n, std::move(b));
}

[[nodiscard]] inline BoundProfile bound_profile(const StandardVertex& v) { return bound_profile(std::span(&v, 1)); }

[[nodiscard]] inline BoundProfile bound_profile(const StandardEdge& e) {
    const StandardVertex vs[] = {e.a, e.b};
    return bound_profile(std::span<const StandardVertex>(vs));
}

// ---------------------------------------------------------------------------

struct StandardBall {
    std::vector<StandardVertex> vertices;  ///< lexicographic
    std::vector<StandardEdge> edges;       ///< lexicographic
};

/// Weakly decreasing tuples with r_1 <= radius, in lexicographic order.
[[nodiscard]] inline std::vector<StandardVertex> standard_vertices(std::size_t n, int radius) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    std::vector<StandardVertex> out;
    std::vector<int> r(n - 1, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int cap) {
        if (pos == r.size()) {
            out.emplace_back(r);
            return;
        }
        for (int v = 0; v <= cap; ++v) {
            r[pos] = v;
            rec(pos + 1, v);
        }
    };
    if (radius >= 0) rec(0, radius);
    std::sort(out.begin(), out.end());
    return out;
}

[[nodiscard]] inline StandardBall standard_ball(std::size_t n, int radius) {
    StandardBall ball{standard_vertices(n, radius), {}};
    for (std::size_t x = 0; x < ball.vertices.size(); ++x)
        for (std::size_t y = x + 1; y < ball.vertices.size(); ++y)
            if (adjacent(ball.vertices[x], ball.vertices[y])) ball.edges.emplace_back(ball.vertices[x], ball.vertices[y]);
    std::sort(ball.edges.begin(), ball.edges.end());
    return ball;
}

/// All simplices (pairwise adjacent vertex sets) of the truncated wedge.
[[nodiscard]] inline std::vector<std::vector<StandardVertex>> standard_simplices(std::size_t n, int radius) {
    const auto verts = standard_vertices(n, radius);
    std::vector<std::vector<StandardVertex>> out;
    std::vector<StandardVertex> current;
    std::function<void(std::size_t)> rec = [&](std::size_t start) {
        for (std::size_t k = start; k < verts.size(); ++k) {
            bool ok = std::all_of(current.begin(), current.end(), [&](const auto& v) { return adjacent(v, verts[k]); });
            if (!ok) continue;
            current.push_back(verts[k]);
            out.push_back(current);
            rec(k + 1);
            current.pop_back();
        }
    };
    rec(0);
    return out;
}

// ---------------------------------------------------------------------------

/**
 * One determinant-1 representative per coset of the upper triangular group B,
 * i.e. per complete flag <s e_1> < <s e_1, s e_2> < ... . Each representative is
 * in column echelon form: column k has a 1 in its pivot row, zeros in earlier
 * pivot rows and above its pivot; the last column is scaled to make det = 1.
 * Returned in lexicographic order of the row-major entries.
 */
[[nodiscard]] inline std::vector<DenseMatrix> enumerate_flag_reps(PrimeField field, std::size_t n) {
    const Residue q = field.p();
    std::vector<DenseMatrix> reps;
    DenseMatrix s(field, n, n);
    std::vector<bool> used(n, false);

    std::function<void(std::size_t)> place_column;
    std::function<void(std::size_t, std::size_t, std::vector<std::size_t>&, std::size_t)> fill_free;

    fill_free = [&](std::size_t col, std::size_t pivot, std::vector<std::size_t>& free_rows, std::size_t idx) {
        if (idx == free_rows.size()) {
            used[pivot] = true;
            place_column(col + 1);
            used[pivot] = false;
            return;
        }
        for (Residue v = 0; v < q; ++v) {
            s.set(free_rows[idx], col, v);
            fill_free(col, pivot, free_rows, idx + 1);
        }
        s.set(free_rows[idx], col, 0);
    };

    place_column = [&](std::size_t col) {
        if (col == n) {
            DenseMatrix rep(s);
            Residue d = determinant(rep);
            // only the last column's pivot entry is rescaled
            for (std::size_t r = 0; r < n; ++r)
                if (rep(r, n - 1) != 0) rep.set(r, n - 1, field.div(rep(r, n - 1), d));
            reps.push_back(std::move(rep));
            return;
        }
        for (std::size_t pivot = 0; pivot < n; ++pivot) {
            if (used[pivot]) continue;
            for (std::size_t r = 0; r < n; ++r) s.set(r, col, 0);
            s.set(pivot, col, 1);
            std::vector<std::size_t> free_rows;
            for (std::size_t r = pivot + 1; r < n; ++r)
                if (!used[r]) free_rows.push_back(r);
            fill_free(col, pivot, free_rows, 0);
            for (std::size_t r = 0; r < n; ++r) s.set(r, col, 0);
        }
    };
    place_column(0);
    std::sort(reps.begin(), reps.end());
    return reps;
}

/// Label of the translated vertex s . r.
[[nodiscard]] inline CanonicalLabel vertex_label(const DenseMatrix& s, const StandardVertex& r) {
    std::vector<int> exps(r.n());
    for (std::size_t i = 0; i < r.n(); ++i) exps[i] = r.distance() - r.coordinate(i);
    return lattice_label(PolyMatrix::from_constant(s) * PolyMatrix::diagonal_powers(s.field(), exps));
}

// ---------------------------------------------------------------------------

struct VertexRecord {
    CanonicalLabel label;
    DenseMatrix flag;         ///< lexicographically first representative
    StandardVertex standard;
};

struct EdgeRecord {
    std::size_t first;   ///< vertex index; vertices[first].label < vertices[second].label
    std::size_t second;
    DenseMatrix flag;
    StandardEdge standard;
    StandardVertex standard_first;  ///< the endpoint of `standard` that lands on `first`
    StandardVertex standard_second;

    [[nodiscard]] bool touches(std::size_t v) const noexcept { return first == v || second == v; }
};

/// The 1-skeleton of the union of flag translates of the radius-R wedge.
struct ComplexZ {
    std::size_t n;
    PrimeField field;
    int radius;
    std::vector<VertexRecord> vertices;  ///< sorted by label
    std::vector<EdgeRecord> edges;       ///< sorted by (first, second)
    std::size_t origin;                  ///< index of v0

    [[nodiscard]] std::optional<std::size_t> find(const CanonicalLabel& label) const {
        auto it = std::lower_bound(vertices.begin(), vertices.end(), label,
                                   [](const VertexRecord& v, const CanonicalLabel& l) { return v.label < l; });
        if (it == vertices.end() || !(it->label == label)) return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }
};

struct BuildOptions {
    unsigned threads = 1;
    /// Process flag representatives in a shuffled order (the result must not change).
    std::optional<std::uint64_t> shuffle_seed;
};

namespace detail {

struct VertexCandidate {
    DenseMatrix flag;
    StandardVertex standard;
    bool better_than(const VertexCandidate& o) const {
        if (flag < o.flag) return true;
        if (o.flag < flag) return false;
        return standard < o.standard;
    }
};

struct EdgeCandidate {
    DenseMatrix flag;
    StandardEdge standard;
    CanonicalLabel label_a;  // label of standard.a
    bool better_than(const EdgeCandidate& o) const {
        if (flag < o.flag) return true;
        if (o.flag < flag) return false;
        return standard < o.standard;
    }
};

struct PartialComplex {
    std::map<CanonicalLabel, VertexCandidate> vertices;
    std::map<std::pair<CanonicalLabel, CanonicalLabel>, EdgeCandidate> edges;

    void offer(const CanonicalLabel& l, VertexCandidate c) {
        auto it = vertices.find(l);
        if (it == vertices.end()) vertices.emplace(l, std::move(c));
        else if (c.better_than(it->second)) it->second = std::move(c);
    }
    void offer(const std::pair<CanonicalLabel, CanonicalLabel>& key, EdgeCandidate c) {
        auto it = edges.find(key);
        if (it == edges.end()) edges.emplace(key, std::move(c));
        else if (c.better_than(it->second)) it->second = std::move(c);
    }
    void merge(PartialComplex&& other) {
        for (auto& [l, c] : other.vertices) offer(l, std::move(c));
        for (auto& [k, c] : other.edges) offer(k, std::move(c));
    }
};

inline PartialComplex translate_ball(std::span<const DenseMatrix> flags, const StandardBall& ball) {
    PartialComplex part;
    for (const auto& s : flags) {
        std::map<StandardVertex, CanonicalLabel> labels;
        for (const auto& r : ball.vertices) {
            auto l = vertex_label(s, r);
            labels.emplace(r, l);
            part.offer(l, VertexCandidate{s, r});
        }
        for (const auto& e : ball.edges) {
            const auto& la = labels.at(e.a);
            const auto& lb = labels.at(e.b);
            auto key = la < lb ? std::pair{la, lb} : std::pair{lb, la};
            part.offer(key, EdgeCandidate{s, e, la});
        }
    }
    return part;
}

}  // namespace detail

/**
 * Union over all flag representatives s of s . (radius-R wedge), deduplicated by
 * label. Each vertex and edge keeps its lexicographically first (s, standard
 * simplex) representative, so the result does not depend on processing order.
 */
[[nodiscard]] inline ComplexZ build_complex(std::size_t n, PrimeField field, int radius, BuildOptions options = {}) {
    if (n < 2) throw std::invalid_argument("n must be at least 2");
    if (radius < 0) throw std::invalid_argument("radius must be non-negative");
    auto flags = enumerate_flag_reps(field, n);
    if (options.shuffle_seed) {
        std::mt19937_64 rng(*options.shuffle_seed);
        std::shuffle(flags.begin(), flags.end(), rng);
    }
    const StandardBall ball = standard_ball(n, radius);

    std::vector<detail::PartialComplex> parts(std::max(1u, options.threads));
    detail::parallel_chunks(flags.size(), options.threads, [&](unsigned w, std::size_t lo, std::size_t hi) {
        parts[w] = detail::translate_ball(std::span<const DenseMatrix>(flags).subspan(lo, hi - lo), ball);
    });
    detail::PartialComplex all;
    for (auto& p : parts) all.merge(std::move(p));

    ComplexZ z{n, field, radius, {}, {}, 0};
    for (auto& [label, c] : all.vertices) z.vertices.push_back({label, std::move(c.flag), std::move(c.standard)});
    z.origin = *z.find(vertex_label(DenseMatrix::identity(field, n), StandardVertex::origin(n)));
    for (auto& [key, c] : all.edges) {
        const std::size_t i = *z.find(key.first), j = *z.find(key.second);
        const bool a_first = c.label_a == key.first;
        StandardVertex sf = a_first ? c.standard.a : c.standard.b;
        StandardVertex ss = a_first ? c.standard.b : c.standard.a;
        z.edges.push_back({i, j, std::move(c.flag), std::move(c.standard), std::move(sf), std::move(ss)});
    }
    return z;
}

}  // namespace congh1
