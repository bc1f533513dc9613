/**
 * @file homology.hpp
 * @brief Weight-graded model of H_1 of the unipotent simplex stabilizers, the
 * inclusion-induced maps along edges, and the boundary map whose cokernel is
 * H_0 of the complex with coefficients in H_1.
 *
 * For a stabilizer with degree bounds b_ij, H_1 has one GF(p) coordinate per
 * slot (i, j, r) with 1 <= r <= b_ij such that r cannot be split as l + m with
 * 1 <= l <= b_ik and 1 <= m <= b_kj through an intermediate index k. The
 * coordinate is the t^r coefficient of entry (i, j).
 */
#pragma once

#include <algorithm>
#include <chrono>
#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "building.hpp"
#include "congruence.hpp"
#include "parallel.hpp"

namespace congh1 {

class UnrealizableProfile : public std::invalid_argument {
public:
    UnrealizableProfile() : std::invalid_argument("unrealizable profile") {}
};

class RepresentativeInconsistency : public std::logic_error {
public:
    RepresentativeInconsistency() : std::logic_error("representative inconsistency") {}
};

/// Slot (i, j, degree) with 0-based i < j.
struct WeightSlot {
    std::size_t i;
    std::size_t j;
    int degree;

    friend bool operator==(const WeightSlot&, const WeightSlot&) = default;
    friend auto operator<=>(const WeightSlot&, const WeightSlot&) = default;
};

/// Root (i, j) -> sorted surviving degrees; roots with nothing surviving are absent.
using SurvivingDegrees = std::map<std::pair<std::size_t, std::size_t>, std::vector<int>>;

[[nodiscard]] inline bool degree_splits(const BoundProfile& b, std::size_t i, std::size_t j, int r) {
    for (std::size_t k = 0; k < b.n(); ++k) {
        if (k == i || k == j) continue;
        if (b(i, k) >= 1 && b(k, j) >= 1 && r >= 2 && r <= b(i, k) + b(k, j)) return true;
    }
    return false;
}

[[nodiscard]] inline SurvivingDegrees surviving_degrees(const BoundProfile& b) {
    if (!b.is_superadditive()) throw UnrealizableProfile();
    SurvivingDegrees out;
    for (std::size_t i = 0; i < b.n(); ++i)
        for (std::size_t j = i + 1; j < b.n(); ++j)
            for (int r = 1; r <= b(i, j); ++r)
                if (!degree_splits(b, i, j, r)) out[{i, j}].push_back(r);
    return out;
}

class H1Basis {
public:
    explicit H1Basis(BoundProfile profile) : profile_(std::move(profile)) {
        for (const auto& [root, degrees] : surviving_degrees(profile_))
            for (int r : degrees) slots_.push_back({root.first, root.second, r});
        std::sort(slots_.begin(), slots_.end());
    }

    [[nodiscard]] const BoundProfile& profile() const noexcept { return profile_; }
    [[nodiscard]] const std::vector<WeightSlot>& slots() const noexcept { return slots_; }
    [[nodiscard]] std::size_t dim() const noexcept { return slots_.size(); }

    [[nodiscard]] std::optional<std::size_t> index_of(const WeightSlot& s) const {
        auto it = std::lower_bound(slots_.begin(), slots_.end(), s);
        if (it == slots_.end() || !(*it == s)) return std::nullopt;
        return static_cast<std::size_t>(it - slots_.begin());
    }

private:
    BoundProfile profile_;
    std::vector<WeightSlot> slots_;
};

[[nodiscard]] inline H1Basis h1_basis(const BoundProfile& profile) { return H1Basis(profile); }

/// Whether u lies in the unipotent stabilizer kernel for this profile.
[[nodiscard]] inline bool membership(const BoundProfile& b, const GroupElement& u) {
    if (u.n() != b.n()) return false;
    const auto& m = u.matrix();
    for (std::size_t i = 0; i < b.n(); ++i)
        for (std::size_t j = 0; j < b.n(); ++j) {
            const Poly& e = m(i, j);
            if (i == j) {
                if (!e.is_one()) return false;
            } else if (i > j) {
                if (!e.is_zero()) return false;
            } else if (!e.is_zero() && (e.coefficient(0) != 0 || e.degree() > b(i, j))) {
                return false;
            }
        }
    return true;
}

/// Coordinates of u in H_1, in slot order. Throws for non-members.
[[nodiscard]] inline std::vector<Residue> class_vector(const H1Basis& basis, const GroupElement& u) {
    if (!membership(basis.profile(), u)) throw std::invalid_argument("element is not in the stabilizer subgroup");
    std::vector<Residue> v;
    v.reserve(basis.dim());
    for (const auto& s : basis.slots()) v.push_back(u.matrix()(s.i, s.j).coefficient(s.degree));
    return v;
}

/// Generator I + E_ij(t^r) of a slot.
[[nodiscard]] inline GroupElement slot_generator(PrimeField field, std::size_t n, const WeightSlot& s) {
    return elementary(s.i, s.j, Poly::monomial(field, 1, s.degree), n);
}

/**
 * Matrix of H_1(K_edge) -> H_1(K_vertex) for the edge s_e . edge and the
 * vertex s_v . vertex, which must be one of its endpoints. Column for edge
 * slot (i, j, r) is the class of s_v^{-1} s_e (I + E_ij(t^r)) s_e^{-1} s_v.
 */
[[nodiscard]] inline DenseMatrix edge_inclusion(const DenseMatrix& edge_flag, const StandardEdge& edge,
                                                const DenseMatrix& vertex_flag, const StandardVertex& vertex) {
    if (!(vertex == edge.a) && !(vertex == edge.b)) throw RepresentativeInconsistency();
    const auto& field = edge_flag.field();
    const std::size_t n = vertex.n();
    const H1Basis eb = h1_basis(bound_profile(edge));
    const H1Basis vb = h1_basis(bound_profile(vertex));
    const DenseMatrix change = inverse(vertex_flag) * edge_flag;
    DenseMatrix out(field, vb.dim(), eb.dim());
    for (std::size_t c = 0; c < eb.dim(); ++c) {
        GroupElement g = slot_generator(field, n, eb.slots()[c]).conjugated_by(change);
        if (!membership(vb.profile(), g)) throw RepresentativeInconsistency();
        auto col = class_vector(vb, g);
        for (std::size_t r = 0; r < col.size(); ++r) out.set(r, c, col[r]);
    }
    return out;
}

struct BasisBlock {
    std::size_t index;   ///< vertex or edge index in the complex
    std::size_t offset;  ///< first row/column
    std::size_t dim;
};

struct BoundaryAssembly {
    SparseMatrix matrix;                ///< rows: vertex slots; columns: edge slots
    std::vector<BasisBlock> row_blocks;  ///< one per vertex, label order
    std::vector<BasisBlock> col_blocks;  ///< one per edge, including empty v0 blocks
};

struct AssemblyOptions {
    unsigned threads = 1;
    /// Use (second - first) instead of (first - second) for every edge column.
    bool reverse_orientation = false;
};

/**
 * The boundary C_1 -> C_0 with coefficients in H_1. Edge column block is
 * incl_first - incl_second, where first/second is the label order of the endpoints.
 */
[[nodiscard]] inline BoundaryAssembly assemble_boundary(const ComplexZ& z, AssemblyOptions options = {}) {
    const auto& f = z.field;
    BoundaryAssembly out{SparseMatrix(f, 0, 0), {}, {}};
    std::size_t rows = 0, cols = 0;
    for (std::size_t v = 0; v < z.vertices.size(); ++v) {
        std::size_t d = h1_basis(bound_profile(z.vertices[v].standard)).dim();
        out.row_blocks.push_back({v, rows, d});
        rows += d;
    }
    for (std::size_t e = 0; e < z.edges.size(); ++e) {
        std::size_t d = h1_basis(bound_profile(z.edges[e].standard)).dim();
        out.col_blocks.push_back({e, cols, d});
        cols += d;
    }

    std::vector<std::vector<Triple>> per_edge(z.edges.size());
    detail::parallel_chunks(z.edges.size(), options.threads, [&](unsigned, std::size_t lo, std::size_t hi) {
        for (std::size_t e = lo; e < hi; ++e) {
            const auto& rec = z.edges[e];
            const auto& cb = out.col_blocks[e];
            if (cb.dim == 0) continue;
            const std::pair<std::size_t, const StandardVertex*> ends[] = {{rec.first, &rec.standard_first},
                                                                         {rec.second, &rec.standard_second}};
            for (int side = 0; side < 2; ++side) {
                const auto& vrec = z.vertices[ends[side].first];
                if (!(vrec.standard == *ends[side].second)) throw RepresentativeInconsistency();
                DenseMatrix inc = edge_inclusion(rec.flag, rec.standard, vrec.flag, vrec.standard);
                const bool negate = (side == 1) != options.reverse_orientation;
                const auto& rb = out.row_blocks[ends[side].first];
                for (std::size_t r = 0; r < inc.rows(); ++r)
                    for (std::size_t c = 0; c < inc.cols(); ++c)
                        if (inc(r, c) != 0)
                            per_edge[e].push_back({rb.offset + r, cb.offset + c, negate ? f.neg(inc(r, c)) : inc(r, c)});
            }
        }
    });
    std::vector<Triple> all;
    for (auto& t : per_edge) all.insert(all.end(), t.begin(), t.end());
    out.matrix = SparseMatrix::from_triples(f, rows, cols, all);
    return out;
}

struct HomologyReport {
    std::size_t n;
    std::uint32_t q;
    int radius;
    std::size_t num_vertices;  ///< vertices with nonzero coefficient group
    std::size_t num_edges;     ///< edges with nonzero coefficient group
    std::size_t dim_c0;
    std::size_t dim_c1;
    std::size_t rank_boundary;
    std::size_t dim_h0;
    std::size_t target;        ///< n^2 - 1
    bool meets_conjecture;
    std::optional<std::string> counts_note;
};

/// Known published structural count for (n, q, R) = (3, 3, 1).
inline constexpr std::size_t kPublishedF3Vertices = 25;
inline constexpr std::size_t kPublishedF3Edges = 42;

[[nodiscard]] inline HomologyReport h0_dimension(const ComplexZ& z, AssemblyOptions options = {}) {
    const auto assembly = assemble_boundary(z, options);
    HomologyReport rep{};
    rep.n = z.n;
    rep.q = z.field.p();
    rep.radius = z.radius;
    rep.num_vertices = static_cast<std::size_t>(std::count_if(assembly.row_blocks.begin(), assembly.row_blocks.end(),
                                                              [](const BasisBlock& b) { return b.dim > 0; }));
    rep.num_edges = static_cast<std::size_t>(std::count_if(assembly.col_blocks.begin(), assembly.col_blocks.end(),
                                                           [](const BasisBlock& b) { return b.dim > 0; }));
    rep.dim_c0 = assembly.matrix.rows();
    rep.dim_c1 = assembly.matrix.cols();
    rep.rank_boundary = sparse_rank(assembly.matrix);
    rep.dim_h0 = rep.dim_c0 - rep.rank_boundary;
    rep.target = z.n * z.n - 1;
    rep.meets_conjecture = rep.dim_h0 == rep.target;
    if (z.n == 3 && rep.q == 3 && z.radius == 1) {
        rep.counts_note = "computed " + std::to_string(rep.num_vertices) + " coefficient-bearing vertices and " +
                          std::to_string(rep.num_edges) + " edges; published count is " +
                          std::to_string(kPublishedF3Vertices) + " vertices and " +
                          std::to_string(kPublishedF3Edges) + " edges";
    }
    return rep;
}

/**
 * Whether extracting the full t^k coefficient matrix is a homomorphism on the
 * stabilizer kernel: no entry with b_ij >= k admits a split k = l + m through
 * an intermediate index within bounds.
 */
[[nodiscard]] inline bool phi_check(const BoundProfile& b, int k) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (!b.is_superadditive()) throw UnrealizableProfile();
    for (std::size_t i = 0; i < b.n(); ++i)
        for (std::size_t j = i + 1; j < b.n(); ++j)
            if (b(i, j) >= k && degree_splits(b, i, j, k)) return false;
    return true;
}

}  // namespace congh1
