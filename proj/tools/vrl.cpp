// Batch front end: builds complexes, runs verification suites, emits JSON
// reports and human-readable summaries.
//
// Exit codes: 0 = pass, 1 = verification failure, 2 = usage error,
// 3 = resource cap exceeded.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vrlattice/classify.hpp"
#include "vrlattice/json_io.hpp"

using namespace vrl;

namespace {

constexpr const char* kToolVersion = "1.0.0";

// inclusive "a..b" ranges; single values allowed
std::vector<std::int64_t> parse_range(const std::string& s) {
    auto pos = s.find("..");
    std::vector<std::int64_t> out;
    if (pos == std::string::npos) {
        out.push_back(std::stoll(s));
        return out;
    }
    std::int64_t a = std::stoll(s.substr(0, pos));
    std::int64_t b = std::stoll(s.substr(pos + 2));
    if (b < a) throw CLI::ValidationError("range", "descending range " + s);
    for (std::int64_t v = a; v <= b; ++v) out.push_back(v);
    return out;
}

Caps parse_caps(const std::string& s) {
    Caps caps;
    if (s.empty()) return caps;
    auto pos = s.find(',');
    if (pos == std::string::npos) {
        caps.max_vertices = std::stoll(s);
    } else {
        caps.max_vertices = std::stoll(s.substr(0, pos));
        caps.max_simplices = std::stoll(s.substr(pos + 1));
    }
    return caps;
}

void emit(const Json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        out << j.dump(2) << "\n";
    }
}

struct SuiteResult {
    Json cases = Json::array();
    bool pass = true;

    void add(Json c, bool ok) {
        c["pass"] = ok;
        cases.push_back(std::move(c));
        pass = pass && ok;
    }
};

// ---------------------------------------------------------------------------
// verification suites
// ---------------------------------------------------------------------------

SuiteResult suite_distance_lemmas(int max_n, int max_r) {
    SuiteResult res;
    std::mt19937 rng(2024);
    auto draw = [&](int min_n, Point& x, Point& z, int& n, int& r) {
        std::uniform_int_distribution<int> dn(min_n, max_n), dr(2, max_r);
        n = dn(rng);
        r = std::max(dr(rng), min_n);
        std::uniform_int_distribution<int> dc(-r, r);
        x.assign(n, 0);
        z.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            x[i] = dc(rng);
            z[i] = dc(rng);
        }
    };
    auto toward_zero = [](const Point& x, const std::vector<int>& coords) {
        Point y = x;
        for (int i : coords) y[i] = x[i] > 0 ? x[i] - 1 : x[i] + 1;
        return y;
    };
    auto lower = [](const Point& z, const Point& x, int t) {
        return std::abs(z[t]) < std::abs(x[t]);
    };
    auto opposite = [](const Point& z, const Point& x, int t) {
        return std::abs(z[t]) >= std::abs(x[t]) && z[t] != 0 && (z[t] > 0) != (x[t] > 0);
    };

    for (int variant = 1; variant <= 4; ++variant) {
        std::int64_t violations = 0, samples = 0;
        while (samples < 10000) {
            int n, r;
            Point x, z;
            draw(std::max(variant, 1), x, z, n, r);
            std::uniform_int_distribution<int> di(0, n - 1);
            std::vector<int> coords;
            while (static_cast<int>(coords.size()) < variant) {
                int c = di(rng);
                if (std::find(coords.begin(), coords.end(), c) == coords.end())
                    coords.push_back(c);
            }
            bool ok_input = l1_distance(x, z) <= r;
            for (int c : coords)
                if (x[c] == 0) ok_input = false;
            if (!ok_input) continue;
            Point y = toward_zero(x, coords);
            bool hyp;
            std::int64_t bound;
            if (variant == 1) {
                hyp = lower(z, x, coords[0]) || opposite(z, x, coords[0]);
                bound = r - 1;
            } else if (variant == 2) {
                hyp = lower(z, x, coords[0]) || lower(z, x, coords[1]) ||
                      opposite(z, x, coords[0]) || opposite(z, x, coords[1]);
                bound = r;
            } else {
                int low = 0;
                for (int c : coords)
                    if (lower(z, x, c)) ++low;
                hyp = low >= 2;
                bound = variant == 3 ? r - 1 : r;
            }
            if (!hyp) continue;
            ++samples;
            if (l1_distance(z, y) > bound) ++violations;
        }
        res.add(Json{{"lemma-variant", variant},
                     {"samples", samples},
                     {"violations", violations}},
                violations == 0);
    }
    return res;
}

SuiteResult suite_maximal_class(const std::vector<std::int64_t>& ns,
                                const std::vector<std::int64_t>& ms, const Caps& caps) {
    SuiteResult res;
    for (auto n : ns)
        for (auto m : ms) {
            auto k = build_complex(grid_vertices({(int)n, (int)m, 2}, caps), 2, "grid", caps);
            std::int64_t unclassified = 0, total = 0;
            for (const auto& tau : maximal_simplices(k)) {
                ++total;
                if (classify_maximal_r2(k, tau).kind == MaxSimplexKind::Unclassified)
                    ++unclassified;
            }
            res.add(Json{{"n", n}, {"m", m}, {"r", 2}, {"maximal", total},
                         {"unclassified", unclassified}},
                    unclassified == 0);
        }
    return res;
}

SuiteResult suite_dismantle(const std::vector<std::int64_t>& ns,
                            const std::vector<std::int64_t>& ms,
                            const std::vector<std::int64_t>& rs, const Caps& caps) {
    SuiteResult res;
    for (auto n : ns)
        for (auto m : ms)
            for (auto r : rs) {
                if (r < n) continue;
                auto out = prove_grid_contractible({(int)n, (int)m, (int)r}, caps);
                bool verified = out.ok &&
                                verify_certificate(build_grid_complex({(int)n, (int)m, (int)r}, caps),
                                                   out.direct_cert)
                                    .ok;
                res.add(Json{{"n", n}, {"m", m}, {"r", r},
                             {"gamma_cases", out.gamma_certs.size()},
                             {"failed_alpha", out.failed_alpha},
                             {"direct_residual", out.direct_cert.residual.size()}},
                        verified);
            }
    return res;
}

SuiteResult suite_stages(const std::vector<std::int64_t>& ns,
                         const std::vector<std::int64_t>& ms,
                         const std::vector<std::int64_t>& rs, const Caps& caps) {
    SuiteResult res;
    for (auto n : ns)
        for (auto m : ms)
            for (auto r : rs) {
                if (r < n || n < 2) continue;
                GridSpec gs{(int)n, (int)m, (int)r};
                auto schedule = reduction_schedule((int)n, (int)r);
                std::int64_t total = gs.vertex_count();
                std::int64_t checked = 0, failures = 0;
                for (std::int64_t alpha = 1; alpha < total; ++alpha)
                    for (const auto& stage : schedule) {
                        ++checked;
                        if (!verify_stage_reduction({gs, alpha}, stage, caps).ok) ++failures;
                    }
                res.add(Json{{"n", n}, {"m", m}, {"r", r}, {"stage_runs", checked},
                             {"failures", failures}},
                        failures == 0);
            }
    return res;
}

SuiteResult suite_morse(const std::vector<std::int64_t>& ns,
                        const std::vector<std::int64_t>& ms,
                        const std::vector<std::int64_t>& rs, int dmax_flag,
                        const Caps& caps) {
    SuiteResult res;
    for (auto n : ns)
        for (auto m : ms)
            for (auto r : rs) {
                auto k = build_complex(grid_vertices({(int)n, (int)m, (int)r}, caps),
                                       (int)r, "grid", caps);
                int dmax = dmax_flag > 0 ? dmax_flag
                                         : (r == 2 ? 2 * (int)n
                                                   : static_cast<int>(k.size()) - 1);
                auto mm = build_matching_mu(k, dmax, caps);
                bool acyclic = verify_acyclic(mm);
                auto rep = homotopy_report(mm);
                Json counts = Json::object();
                for (const auto& [d, cnt] : rep.census.counts)
                    if (cnt > 0) counts[std::to_string(d)] = cnt;
                res.add(Json{{"n", n}, {"m", m}, {"r", r}, {"acyclic", acyclic},
                             {"critical", counts},
                             {"single_dimension", rep.single_dimension}},
                        acyclic && rep.single_dimension);
            }
    return res;
}

SuiteResult suite_homology(const std::vector<std::int64_t>& ns,
                           const std::vector<std::int64_t>& ms,
                           const std::vector<std::int64_t>& rs, int dmax_flag,
                           const Caps& caps) {
    SuiteResult res;
    for (auto n : ns)
        for (auto m : ms)
            for (auto r : rs) {
                auto k = build_complex(grid_vertices({(int)n, (int)m, (int)r}, caps),
                                       (int)r, "grid", caps);
                int dmax = dmax_flag > 0 ? dmax_flag : 4;
                auto b = betti_z2(k, dmax, caps);
                bool ok = true;
                if (k.size() <= 14) ok = b.betti == betti_z2_bruteforce(k, dmax).betti;
                res.add(Json{{"n", n}, {"m", m}, {"r", r}, {"betti", b.betti},
                             {"cross_validated", k.size() <= 14}},
                        ok);
            }
    return res;
}

SuiteResult suite_conjecture(const std::vector<std::int64_t>& ns,
                             const std::vector<std::int64_t>& ms,
                             const std::vector<std::int64_t>& rs,
                             const std::vector<std::int64_t>& alphas, const Caps& caps) {
    SuiteResult res;
    for (auto n : ns)
        for (auto m : ms)
            for (auto r : rs) {
                if (r < n || n < 2) continue;
                for (auto alpha : alphas) {
                    auto rep = explore_conjecture_5_1((int)n, (int)m, (int)r, alpha, caps);
                    // evidence is recorded, never asserted
                    res.add(to_json(rep), true);
                }
            }
    return res;
}

int run_report(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        std::cerr << "invalid JSON: " << e.what() << "\n";
        return 2;
    }
    if (j.value("schema_version", -1) != kSchemaVersion) {
        std::cerr << "schema version mismatch\n";
        return 2;
    }
    std::cout << "suite: " << j.value("suite", "(none)") << "\n";
    std::cout << "verdict: " << j.value("verdict", "(none)") << "\n";
    auto cases = j.value("cases", Json::array());
    if (cases.empty()) {
        std::cout << "no cases\n";
        return 0;
    }
    std::cout << "cases: " << cases.size() << "\n";
    for (const auto& c : cases) {
        std::cout << "  ";
        for (auto it = c.begin(); it != c.end(); ++it)
            std::cout << it.key() << "=" << it.value().dump() << " ";
        std::cout << "\n";
    }
    if (j.contains("digest") && j.contains("complex")) {
        FlagComplex k = complex_from_json(j["complex"]);
        if (complex_digest(k) != j["digest"].get<std::string>())
            std::cout << "WARNING: digest mismatch — report integrity suspect\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rips complexes of integer lattice boxes: builders and verifiers"};
    app.require_subcommand(1);

    std::string n_range = "2", m_range = "1", r_range = "2", alpha_range = "1";
    std::string caps_str, json_path, suite_name, strategy = "greedy";
    int dmax = -1;
    bool gamma = false, witnesses = false;

    auto add_common = [&](CLI::App* cmd, bool with_alpha) {
        cmd->add_option("--n", n_range, "ambient dimension (a..b allowed)");
        cmd->add_option("--m", m_range, "box side (a..b allowed)");
        cmd->add_option("--r", r_range, "scale (a..b allowed)");
        if (with_alpha) cmd->add_option("--alpha", alpha_range, "truncation count");
        cmd->add_option("--caps", caps_str, "max vertices[,max simplices]");
        cmd->add_option("--json", json_path, "write output JSON to this path");
    };

    auto* cmd_build = app.add_subcommand("build", "build a complex and emit JSON");
    add_common(cmd_build, true);
    cmd_build->add_flag("--gamma", gamma, "build the truncated link instead of the grid");

    auto* cmd_verify = app.add_subcommand("verify", "run a named verification suite");
    cmd_verify->add_option("suite_name,--suite", suite_name, "suite name")->required();
    add_common(cmd_verify, true);
    cmd_verify->add_option("--dmax", dmax, "homology/morse dimension limit");

    auto* cmd_dismantle = app.add_subcommand("dismantle", "emit a dismantling certificate");
    add_common(cmd_dismantle, true);
    cmd_dismantle->add_flag("--gamma", gamma, "dismantle the truncated link");
    cmd_dismantle->add_option("--strategy", strategy, "greedy | paper-guided");

    auto* cmd_morse = app.add_subcommand("morse", "matching, acyclicity, census");
    add_common(cmd_morse, false);
    cmd_morse->add_option("--dmax", dmax, "face poset dimension limit");
    cmd_morse->add_flag("--witnesses", witnesses, "include critical simplices");

    auto* cmd_homology = app.add_subcommand("homology", "Betti numbers over Z/2");
    add_common(cmd_homology, false);
    cmd_homology->add_option("--dmax", dmax, "top reported dimension");

    auto* cmd_conj = app.add_subcommand("conjecture", "target-set reduction evidence");
    add_common(cmd_conj, true);

    auto* cmd_report = app.add_subcommand("report", "render a report JSON");
    std::string report_path;
    cmd_report->add_option("input", report_path, "report JSON path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Caps caps = parse_caps(caps_str);
        auto one = [](const std::vector<std::int64_t>& v, const char* what) {
            if (v.size() != 1)
                throw CLI::ValidationError(what, "expects a single value here");
            return v[0];
        };
        if (app.got_subcommand(cmd_build)) {
            auto n = (int)one(parse_range(n_range), "--n");
            auto m = (int)one(parse_range(m_range), "--m");
            auto r = (int)one(parse_range(r_range), "--r");
            FlagComplex k =
                gamma ? build_gamma_complex({{n, m, r}, one(parse_range(alpha_range), "--alpha")},
                                            caps)
                      : build_grid_complex({n, m, r}, caps);
            emit(to_json(k), json_path);
            return 0;
        }
        if (app.got_subcommand(cmd_dismantle)) {
            auto n = (int)one(parse_range(n_range), "--n");
            auto m = (int)one(parse_range(m_range), "--m");
            auto r = (int)one(parse_range(r_range), "--r");
            FlagComplex k =
                gamma ? build_gamma_complex({{n, m, r}, one(parse_range(alpha_range), "--alpha")},
                                            caps)
                      : build_grid_complex({n, m, r}, caps);
            auto strat = strategy == "paper-guided" ? DismantleStrategy::PaperGuided
                                                    : DismantleStrategy::GreedyAntilexMaxFirst;
            auto cert = dismantle(k, strat);
            if (!verify_certificate(k, cert).ok) return 1;
            emit(to_json(cert, k), json_path);
            return 0;
        }
        if (app.got_subcommand(cmd_morse)) {
            auto n = (int)one(parse_range(n_range), "--n");
            auto m = (int)one(parse_range(m_range), "--m");
            auto r = (int)one(parse_range(r_range), "--r");
            auto k = build_grid_complex({n, m, r}, caps);
            int d = dmax > 0 ? dmax : (r == 2 ? 2 * n : (int)k.size() - 1);
            auto mm = build_matching_mu(k, d, caps);
            bool acyclic = verify_acyclic(mm);
            emit(to_json(critical_census(mm, witnesses), k, acyclic, witnesses), json_path);
            return acyclic ? 0 : 1;
        }
        if (app.got_subcommand(cmd_homology)) {
            auto n = (int)one(parse_range(n_range), "--n");
            auto m = (int)one(parse_range(m_range), "--m");
            auto r = (int)one(parse_range(r_range), "--r");
            auto k = build_grid_complex({n, m, r}, caps);
            emit(to_json(betti_z2(k, dmax > 0 ? dmax : 4, caps), k, dmax > 0 ? dmax : 4),
                 json_path);
            return 0;
        }
        if (app.got_subcommand(cmd_conj)) {
            auto n = (int)one(parse_range(n_range), "--n");
            auto m = (int)one(parse_range(m_range), "--m");
            auto r = (int)one(parse_range(r_range), "--r");
            auto a = one(parse_range(alpha_range), "--alpha");
            emit(to_json(explore_conjecture_5_1(n, m, r, a, caps)), json_path);
            return 0;
        }
        if (app.got_subcommand(cmd_report)) return run_report(report_path);

        // verify
        auto ns = parse_range(n_range);
        auto ms = parse_range(m_range);
        auto rs = parse_range(r_range);
        auto alphas = parse_range(alpha_range);
        auto t0 = std::chrono::steady_clock::now();
        SuiteResult res;
        if (suite_name == "distance-lemmas")
            res = suite_distance_lemmas((int)ns.back(), (int)rs.back());
        else if (suite_name == "maximal-class")
            res = suite_maximal_class(ns, ms, caps);
        else if (suite_name == "dismantle")
            res = suite_dismantle(ns, ms, rs, caps);
        else if (suite_name == "stages")
            res = suite_stages(ns, ms, rs, caps);
        else if (suite_name == "morse")
            res = suite_morse(ns, ms, rs, dmax, caps);
        else if (suite_name == "homology")
            res = suite_homology(ns, ms, rs, dmax, caps);
        else if (suite_name == "conjecture")
            res = suite_conjecture(ns, ms, rs, alphas, caps);
        else {
            std::cerr << "unknown suite: " << suite_name << "\n";
            return 2;
        }
        auto ms_elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
        Json report{{"schema_version", kSchemaVersion},
                    {"tool_version", kToolVersion},
                    {"suite", suite_name},
                    {"parameters",
                     {{"n", n_range}, {"m", m_range}, {"r", r_range}, {"alpha", alpha_range}}},
                    {"cases", res.cases},
                    {"verdict", res.pass ? "pass" : "fail"},
                    {"wall_clock_ms", ms_elapsed}};
        emit(report, json_path);
        return res.pass ? 0 : 1;
    } catch (const CLI::ValidationError& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const cap_exceeded& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
}
