/**
 * @file report.hpp
 * @brief Serialization: homology reports (JSON/CSV), Graphviz DOT export of
 * the complex, and the plain-text triple format for sparse matrices.
 *
 * Triple format: header "rows cols p", then one "r c v" line per nonzero,
 * 0-based, sorted by (r, c).
 */
#pragma once

#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "homology.hpp"

namespace congh1 {

/// Key order is fixed. timing_ms is null when not supplied.
[[nodiscard]] inline nlohmann::ordered_json report_to_json(const HomologyReport& r,
                                                           std::optional<double> timing_ms = std::nullopt) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    j["q"] = r.q;
    j["radius"] = r.radius;
    j["num_vertices"] = r.num_vertices;
    j["num_edges"] = r.num_edges;
    j["dim_c0"] = r.dim_c0;
    j["dim_c1"] = r.dim_c1;
    j["rank_boundary"] = r.rank_boundary;
    j["dim_h0"] = r.dim_h0;
    j["target"] = r.target;
    j["meets_conjecture"] = r.meets_conjecture;
    j["counts_note"] = r.counts_note ? nlohmann::ordered_json(*r.counts_note) : nlohmann::ordered_json(nullptr);
    j["timing_ms"] = timing_ms ? nlohmann::ordered_json(*timing_ms) : nlohmann::ordered_json(nullptr);
    return j;
}

[[nodiscard]] inline std::string report_to_csv(const HomologyReport& r, std::optional<double> timing_ms = std::nullopt) {
    const auto j = report_to_json(r, timing_ms);
    std::ostringstream head, row;
    bool first = true;
    for (const auto& [key, value] : j.items()) {
        head << (first ? "" : ",") << key;
        row << (first ? "" : ",");
        if (value.is_null()) {
        } else if (value.is_string()) {
            std::string s = value.get<std::string>();
            row << '"';
            for (char c : s) row << (c == '"' ? std::string("\"\"") : std::string(1, c));
            row << '"';
        } else {
            row << value.dump();
        }
        first = false;
    }
    return head.str() + "\n" + row.str() + "\n";
}

inline void write_triples(std::ostream& os, const SparseMatrix& m) {
    os << m.rows() << ' ' << m.cols() << ' ' << m.field().p() << '\n';
    for (const auto& t : m.triples()) os << t.row << ' ' << t.col << ' ' << t.value << '\n';
}

/// Parses the triple format written by write_triples.
[[nodiscard]] inline SparseMatrix read_triples(std::istream& is) {
    std::size_t rows = 0, cols = 0;
    std::uint32_t p = 0;
    if (!(is >> rows >> cols >> p)) throw std::runtime_error("malformed matrix header");
    PrimeField field(p);
    std::vector<Triple> triples;
    std::size_t r = 0, c = 0;
    Residue v = 0;
    while (is >> r >> c >> v) triples.push_back({r, c, v});
    if (!is.eof()) throw std::runtime_error("malformed matrix entry");
    return SparseMatrix::from_triples(field, rows, cols, triples);
}

/**
 * Undirected Graphviz graph. Nodes are named by hex label; v0 is drawn as a
 * double circle with label "v0". Edges appear in label order.
 */
inline void write_dot(std::ostream& os, const ComplexZ& z) {
    os << "graph Z {\n";
    os << "  // n=" << z.n << " q=" << z.field.p() << " radius=" << z.radius << "\n";
    for (std::size_t v = 0; v < z.vertices.size(); ++v) {
        const auto& rec = z.vertices[v];
        os << "  \"" << rec.label.hex() << "\"";
        if (v == z.origin) os << " [label=\"v0\", shape=doublecircle]";
        else os << " [label=\"" << rec.standard.to_string() << "\"]";
        os << ";\n";
    }
    for (const auto& e : z.edges)
        os << "  \"" << z.vertices[e.first].label.hex() << "\" -- \"" << z.vertices[e.second].label.hex() << "\";\n";
    os << "}\n";
}

/// "(1,2):[1] (2,3):[1] (1,3):[1,3]" with 1-based roots ordered by diagonal offset, then row.
[[nodiscard]] inline std::string format_surviving(const SurvivingDegrees& s) {
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::vector<int>>> items(s.begin(), s.end());
    std::stable_sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
        return std::pair(a.first.second - a.first.first, a.first.first) <
               std::pair(b.first.second - b.first.first, b.first.first);
    });
    std::ostringstream os;
    bool first = true;
    for (const auto& [root, degrees] : items) {
        os << (first ? "" : " ") << "(" << root.first + 1 << "," << root.second + 1 << "):[";
        for (std::size_t k = 0; k < degrees.size(); ++k) os << (k ? "," : "") << degrees[k];
        os << "]";
        first = false;
    }
    return os.str();
}

}  // namespace congh1
