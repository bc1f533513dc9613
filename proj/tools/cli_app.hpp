// Command-line front end. Kept in a header so the tests can drive it in-process.
#pragma once

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "congh1/congh1.hpp"
#include "congh1/report.hpp"

namespace congh1::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 2,
    kFinding = 3,
    kInvariant = 4,
};

enum class Command { compute, survive, oracle, exportgraph };

struct RunConfig {
    Command command = Command::compute;
    std::size_t n = 3;
    std::uint32_t q = 2;
    int radius = 1;
    std::string format = "json";
    std::optional<std::string> out;
    std::optional<std::string> dot_path;
    std::optional<std::string> matrix_path;
    std::string bounds;
    std::size_t limit = kDefaultOracleLimit;
    unsigned threads = 1;
    std::optional<std::uint64_t> shuffle_seed;
    bool reverse_orientation = false;
    bool timing = true;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline void validate(const RunConfig& c) {
    if (c.n < 2) throw UsageError("n must be at least 2");
    if (c.command == Command::survive) return;
    if (!is_prime(c.q)) throw UsageError("q must be prime");
    if (c.radius < 1) throw UsageError("radius must be at least 1");
    if (c.threads < 1) throw UsageError("threads must be at least 1");
    if (c.command == Command::oracle && c.q >= 256) throw UsageError("oracle requires q < 256");
}

/// Writes to `path`, or to `fallback` when no path is given.
inline void emit(const std::optional<std::string>& path, const std::string& text, std::ostream& fallback) {
    if (!path) {
        fallback << text;
        return;
    }
    std::ofstream f(*path, std::ios::binary);
    if (!f) throw UsageError("cannot write " + *path);
    f << text;
    if (!f.flush()) throw UsageError("cannot write " + *path);
}

inline int cmd_compute(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const auto start = std::chrono::steady_clock::now();
    BuildOptions bopt{c.threads, c.shuffle_seed};
    const auto z = build_complex(c.n, PrimeField(c.q), c.radius, bopt);
    const auto rep = h0_dimension(z, AssemblyOptions{c.threads, c.reverse_orientation});
    std::optional<double> ms;
    if (c.timing)
        ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    std::string text = c.format == "csv" ? report_to_csv(rep, ms) : report_to_json(rep, ms).dump(2) + "\n";
    emit(c.out, text, out);

    if (rep.dim_h0 < rep.target) {
        err << "invariant violated: dim_h0 " << rep.dim_h0 << " below lower bound " << rep.target << "\n";
        return kInvariant;
    }
    if (rep.dim_h0 > rep.target) {
        err << "finding: dim_h0 " << rep.dim_h0 << " exceeds " << rep.target << "\n";
        return kFinding;
    }
    return kOk;
}

[[nodiscard]] inline std::vector<int> parse_bounds(const std::string& s) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("malformed bounds list: " + s);
        }
    }
    return v;
}

inline int cmd_survive(const RunConfig& c, std::ostream& out, std::ostream&) {
    const auto values = parse_bounds(c.bounds);
    if (values.size() != c.n * (c.n - 1) / 2)
        throw UsageError("expected " + std::to_string(c.n * (c.n - 1) / 2) + " bounds for n = " + std::to_string(c.n));
    const auto profile = BoundProfile::from_upper(c.n, values);
    if (!profile.is_superadditive()) throw UsageError("unrealizable profile: bounds violate superadditivity");
    const auto s = surviving_degrees(profile);
    out << format_surviving(s) << "\n";
    return kOk;
}

[[nodiscard]] inline std::string simplex_name(const std::vector<StandardVertex>& s) {
    std::string name;
    for (std::size_t k = 0; k < s.size(); ++k) name += (k ? "-" : "") + s[k].to_string();
    return name;
}

inline int cmd_oracle(const RunConfig& c, std::ostream& out, std::ostream& err) {
    const PrimeField field(c.q);
    const auto simplices = standard_simplices(c.n, c.radius);

    struct Row {
        std::optional<ProfileCertificate> cert;
        std::string error;
    };
    std::vector<Row> rows(simplices.size());
    detail::parallel_chunks(simplices.size(), c.threads, [&](unsigned, std::size_t lo, std::size_t hi) {
        for (std::size_t k = lo; k < hi; ++k) {
            const auto b = bound_profile(simplices[k]);
            try {
                rows[k].cert = certify_profile(b, field, static_cast<int>(h1_basis(b).dim()), c.limit);
            } catch (const GroupTooLarge&) {
                rows[k].error = "skipped";
            } catch (const NonElementaryQuotient& e) {
                rows[k].error = std::string("FAIL ") + e.what();
            }
        }
    });

    std::size_t pass = 0, fail = 0, skipped = 0;
    out << std::left << std::setw(28) << "simplex" << std::setw(10) << "order" << std::setw(10) << "expected"
        << std::setw(8) << "oracle" << std::setw(8) << "model" << "status\n";
    for (std::size_t k = 0; k < simplices.size(); ++k) {
        out << std::setw(28) << simplex_name(simplices[k]);
        const auto& r = rows[k];
        if (!r.cert) {
            out << std::setw(36) << "-" << r.error << "\n";
            (r.error == "skipped" ? skipped : fail)++;
            continue;
        }
        const bool ok = r.cert->agrees();
        out << std::setw(10) << r.cert->order << std::setw(10) << r.cert->expected_order << std::setw(8)
            << r.cert->oracle_dim << std::setw(8) << r.cert->model_dim << (ok ? "ok" : "FAIL") << "\n";
        (ok ? pass : fail)++;
    }

    const auto verts = standard_vertices(c.n, c.radius);
    std::size_t adj_pairs = 0, adj_fail = 0;
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            ++adj_pairs;
            if (adjacency_oracle(verts[i], verts[j]) != adjacent(verts[i], verts[j])) {
                ++adj_fail;
                out << "adjacency mismatch " << verts[i].to_string() << " " << verts[j].to_string() << "\n";
            }
        }

    out << "simplices: " << pass << " ok, " << fail << " failed, " << skipped << " skipped\n";
    out << "adjacency: " << adj_pairs - adj_fail << "/" << adj_pairs << " pairs agree\n";
    if (skipped > 0) err << "notice: " << skipped << " simplices skipped (group order above limit " << c.limit << ")\n";
    return fail == 0 && adj_fail == 0 ? kOk : kInvariant;
}

inline int cmd_export(const RunConfig& c, std::ostream& out, std::ostream&) {
    if (!c.dot_path && !c.matrix_path) throw UsageError("export needs --dot and/or --matrix");
    const auto z = build_complex(c.n, PrimeField(c.q), c.radius, BuildOptions{c.threads, c.shuffle_seed});
    if (c.dot_path) {
        std::ostringstream os;
        write_dot(os, z);
        emit(*c.dot_path == "-" ? std::nullopt : c.dot_path, os.str(), out);
    }
    if (c.matrix_path) {
        const auto a = assemble_boundary(z, AssemblyOptions{c.threads, c.reverse_orientation});
        std::ostringstream os;
        write_triples(os, a.matrix);
        emit(*c.matrix_path == "-" ? std::nullopt : c.matrix_path, os.str(), out);
    }
    return kOk;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"H1 of level-t congruence subgroups via the coefficient-system complex", "congh1"};
    app.require_subcommand(1);
    RunConfig c;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "matrix size")->capture_default_str();
        sub->add_option("--q", c.q, "field size (prime)")->capture_default_str();
        sub->add_option("--radius", c.radius, "wedge radius R")->capture_default_str();
        sub->add_option("--threads", c.threads, "worker threads")->capture_default_str();
    };

    auto* compute = app.add_subcommand("compute", "build the complex and report dim H0");
    add_common(compute);
    compute->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    compute->add_option("--out", c.out, "report path (default stdout)");
    compute->add_option("--shuffle-seed", c.shuffle_seed, "shuffle flag enumeration order");
    compute->add_flag("--reverse-orientation", c.reverse_orientation, "negate every edge orientation");
    compute->add_flag("!--no-timing", c.timing, "emit timing_ms as null");

    auto* survive = app.add_subcommand("survive", "print surviving degrees of a bound profile");
    survive->add_option("--n", c.n, "matrix size")->capture_default_str();
    survive->add_option("--bounds", c.bounds, "comma list b12,b23,...,b1n by diagonal offset")->required();

    auto* oracle = app.add_subcommand("oracle", "brute-force certification sweep");
    add_common(oracle);
    oracle->add_option("--limit", c.limit, "maximum group order to enumerate")->capture_default_str();

    auto* exp = app.add_subcommand("export", "write the graph (DOT) and boundary matrix (triples)");
    add_common(exp);
    exp->add_option("--dot", c.dot_path, "DOT output path, - for stdout");
    exp->add_option("--matrix", c.matrix_path, "matrix output path, - for stdout");
    exp->add_option("--shuffle-seed", c.shuffle_seed, "shuffle flag enumeration order");
    exp->add_flag("--reverse-orientation", c.reverse_orientation, "negate every edge orientation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }

    if (compute->parsed()) c.command = Command::compute;
    else if (survive->parsed()) c.command = Command::survive;
    else if (oracle->parsed()) c.command = Command::oracle;
    else c.command = Command::exportgraph;

    try {
        validate(c);
        switch (c.command) {
            case Command::compute: return cmd_compute(c, out, err);
            case Command::survive: return cmd_survive(c, out, err);
            case Command::oracle: return cmd_oracle(c, out, err);
            case Command::exportgraph: return cmd_export(c, out, err);
        }
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kInvariant;
    }
    return kInvariant;
}

}  // namespace congh1::cli
