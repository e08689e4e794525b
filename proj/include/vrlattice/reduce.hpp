#pragma once

// Dismantling machinery: domination tests, certificate construction and
// replay, the staged reduction schedules with their lambda-based dominator
// candidates, and the conjecture exploration harness.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vrlattice/flag_complex.hpp"

namespace vrl {

// Domination inside the induced subcomplex on `alive`: N[a] subseteq N[b].
inline bool is_dominated_alive(const FlagComplex& k, const Bitset& alive, int a, int b) {
    if (a == b) throw std::invalid_argument("is_dominated: identical vertices");
    if (!alive.test(static_cast<std::size_t>(a)) || !alive.test(static_cast<std::size_t>(b)))
        throw std::invalid_argument("is_dominated: vertex not present");
    if (!k.adjacent(a, b)) return false;  // a itself must lie in N[b]
    const auto& wa = k.adj[static_cast<std::size_t>(a)].words();
    const auto& wb = k.adj[static_cast<std::size_t>(b)].words();
    const auto& wl = alive.words();
    for (std::size_t w = 0; w < wa.size(); ++w) {
        std::uint64_t need = wa[w] & wl[w] & ~wb[w];
        // b itself is allowed (b is in N[b])
        if ((static_cast<std::size_t>(b) >> 6) == w)
            need &= ~(std::uint64_t{1} << (b & 63));
        if (need) return false;
    }
    return true;
}

inline bool is_dominated(const FlagComplex& k, int a, int b) {
    Bitset alive(k.size());
    for (std::size_t v = 0; v < k.size(); ++v) alive.set(v);
    return is_dominated_alive(k, alive, a, b);
}

struct DismantleStep {
    Point removed;
    Point dominator;
    bool operator==(const DismantleStep&) const = default;
};

struct DismantleCertificate {
    std::string strategy;
    std::vector<DismantleStep> steps;
    std::vector<Point> residual;  // anti-lex ascending

    bool proves_contractible() const { return residual.size() == 1; }
};

namespace detail {

inline std::vector<Point> alive_points(const FlagComplex& k, const Bitset& alive) {
    std::vector<Point> out;
    for (std::size_t v = 0; v < k.size(); ++v)
        if (alive.test(v)) out.push_back(k.vertices[v]);
    return out;
}

// First alive dominator for a, preferring the given candidate points, then an
// anti-lex ascending full scan.
inline int find_dominator(const FlagComplex& k, const Bitset& alive, int a,
                          const std::vector<Point>& preferred) {
    for (const Point& p : preferred) {
        int b = k.index_of(p);
        if (b < 0 || b == a || !alive.test(static_cast<std::size_t>(b))) continue;
        if (is_dominated_alive(k, alive, a, b)) return b;
    }
    for (int b = 0; b < static_cast<int>(k.size()); ++b) {
        if (b == a || !alive.test(static_cast<std::size_t>(b))) continue;
        if (is_dominated_alive(k, alive, a, b)) return b;
    }
    return -1;
}

}  // namespace detail

enum class DismantleStrategy { GreedyAntilexMaxFirst, PaperGuided };

// Greedy core: scan candidates anti-lex descending, dominators anti-lex
// ascending; repeat until no removal happens in a full pass.
inline void dismantle_greedy(const FlagComplex& k, Bitset& alive,
                             std::vector<DismantleStep>& steps) {
    bool progress = true;
    while (progress && alive.count() > 1) {
        progress = false;
        for (int a = static_cast<int>(k.size()) - 1; a >= 0; --a) {
            if (!alive.test(static_cast<std::size_t>(a))) continue;
            int b = detail::find_dominator(k, alive, a, {});
            if (b < 0) continue;
            steps.push_back({k.vertices[static_cast<std::size_t>(a)],
                             k.vertices[static_cast<std::size_t>(b)]});
            alive.reset(static_cast<std::size_t>(a));
            progress = true;
            if (alive.count() == 1) break;
        }
    }
}

// ---------------------------------------------------------------------------
// Staged reduction schedule
// ---------------------------------------------------------------------------

enum class StageId { S32, S34, S35, S37, S39, S310 };

inline const char* to_string(StageId s) {
    switch (s) {
        case StageId::S32: return "stage-3.2";
        case StageId::S34: return "stage-3.4";
        case StageId::S35: return "stage-3.5";
        case StageId::S37: return "stage-3.7";
        case StageId::S39: return "stage-3.9";
        default: return "stage-3.10";
    }
}

namespace detail {

// Individual keep-conditions; stages conjoin them cumulatively so that each
// stage's target vertex set contains the next one's.
inline bool cond_floor_le(const Point& x, int r) {
    for (Coord c : x)
        if (std::abs(c) > r / 2) return false;
    return true;
}
inline bool cond_pair_sum(const Point& x, int r) {
    const int cap = (r + 1) / 2;
    int m1 = 0, m2 = 0;  // two largest |x_i|
    for (Coord c : x) {
        int a = std::abs(c);
        if (a >= m1) { m2 = m1; m1 = a; }
        else if (a > m2) m2 = a;
    }
    return x.size() < 2 || m1 + m2 <= cap;
}
inline bool cond_floor_lt(const Point& x, int r) {
    for (Coord c : x)
        if (std::abs(c) >= r / 2) return false;
    return true;
}
inline bool cond_triple_sum(const Point& x, int r) {
    if (x.size() < 3) return true;
    int m1 = 0, m2 = 0, m3 = 0;
    for (Coord c : x) {
        int a = std::abs(c);
        if (a >= m1) { m3 = m2; m2 = m1; m1 = a; }
        else if (a >= m2) { m3 = m2; m2 = a; }
        else if (a > m3) m3 = a;
    }
    return m1 + m2 + m3 < r - 1;
}
inline bool cond_quad_sum(const Point& x, int r) {
    if (x.size() < 4) return true;
    std::vector<int> a;
    for (Coord c : x) a.push_back(std::abs(c));
    std::sort(a.rbegin(), a.rend());
    return a[0] + a[1] + a[2] + a[3] <= r - 1;
}
// No four coordinates summing to >= r-1 with every other coordinate zero.
inline bool cond_no_supported_quad(const Point& x, int r) {
    if (x.size() < 5) return true;
    int nonzero = 0;
    std::int64_t sum = 0;
    for (Coord c : x) {
        if (c != 0) ++nonzero;
        sum += std::abs(c);
    }
    return !(nonzero <= 4 && sum >= r - 1);
}

}  // namespace detail

struct ReductionStage {
    StageId id;
    std::string name;
    std::string description;

    bool keeps(const Point& x, int r) const {
        using namespace detail;
        switch (id) {
            case StageId::S32: return cond_floor_le(x, r);
            case StageId::S34: return cond_floor_le(x, r) && cond_pair_sum(x, r);
            case StageId::S35: return cond_floor_lt(x, r) && cond_pair_sum(x, r);
            case StageId::S37:
                return cond_floor_lt(x, r) && cond_pair_sum(x, r) && cond_triple_sum(x, r);
            case StageId::S39:
                return cond_floor_lt(x, r) && cond_pair_sum(x, r) && cond_triple_sum(x, r) &&
                       cond_quad_sum(x, r);
            default:
                return cond_floor_lt(x, r) && cond_pair_sum(x, r) &&
                       detail::cond_no_supported_quad(x, r);
        }
    }
};

// Stages in pipeline order, gated by their hypotheses. Outside the r >= n
// regime the schedule is undefined.
inline std::vector<ReductionStage> reduction_schedule(int n, int r) {
    if (n < 2) throw std::invalid_argument("reduction_schedule: n must be >= 2");
    if (r < n) throw std::invalid_argument("reduction_schedule: requires r >= n");
    std::vector<ReductionStage> out;
    if (r >= 2)
        out.push_back({StageId::S32, "stage-3.2", "coordinates bounded by floor(r/2)"});
    if (r >= 3)
        out.push_back({StageId::S34, "stage-3.4", "pair sums bounded by ceil(r/2)"});
    if (r >= 4)
        out.push_back({StageId::S35, "stage-3.5", "coordinates strictly below floor(r/2)"});
    if (r >= 4 && n >= 4) {
        out.push_back({StageId::S37, "stage-3.7", "triple sums below r-1"});
        out.push_back({StageId::S39, "stage-3.9", "quadruple sums at most r-1"});
    }
    if (n >= 5 && r >= 10)
        out.push_back({StageId::S310, "stage-3.10",
                       "no near-maximal quadruple supported on four coordinates"});
    return out;
}

namespace detail {

// Dominator candidates for a stage violator, mirroring the lambda choices in
// the corresponding removal arguments.
inline std::vector<Point> stage_candidates(const Point& x, int r, StageId id) {
    const int n = static_cast<int>(x.size());
    std::vector<int> abs_desc(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) abs_desc[static_cast<std::size_t>(i)] = i + 1;
    std::sort(abs_desc.begin(), abs_desc.end(),
              [&](int a, int b) { return std::abs(x[static_cast<std::size_t>(a - 1)]) >
                                         std::abs(x[static_cast<std::size_t>(b - 1)]); });
    std::vector<Point> out;
    auto add = [&](const std::vector<int>& idx) {
        std::vector<int> s;
        for (int i : idx)
            if (x[static_cast<std::size_t>(i - 1)] != 0) s.push_back(i);
        if (!s.empty()) out.push_back(lambda_op(x, s));
    };
    switch (id) {
        case StageId::S32:
            for (int i : abs_desc) add({i});
            break;
        case StageId::S34:
            for (std::size_t a = 0; a < abs_desc.size(); ++a)
                for (std::size_t b = a + 1; b < abs_desc.size(); ++b)
                    add({abs_desc[a], abs_desc[b]});
            for (int i : abs_desc) add({i});
            break;
        case StageId::S35:
            for (int i : abs_desc) add({i});
            for (std::size_t a = 0; a < abs_desc.size(); ++a)
                for (std::size_t b = a + 1; b < abs_desc.size(); ++b)
                    add({abs_desc[a], abs_desc[b]});
            break;
        case StageId::S37:
            add({abs_desc[0], abs_desc[1], abs_desc[2]});
            // r = 4 case cones onto a unit vector
            for (int i = n; i >= 1; --i) {
                Point e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i - 1)] = 1;
                out.push_back(e);
            }
            break;
        case StageId::S39:
            add({abs_desc[0], abs_desc[1], abs_desc[2], abs_desc[3]});
            break;
        default:  // S310: four-step then three-step lambda
            add({abs_desc[0], abs_desc[1], abs_desc[2], abs_desc[3]});
            add({abs_desc[0], abs_desc[1], abs_desc[2]});
            break;
    }
    return out;
}

}  // namespace detail

struct StageReductionResult {
    bool ok = false;
    std::vector<DismantleStep> steps;  // evidence fragment
    std::optional<Point> stuck;        // first vertex that could not be removed
};

// Remove every vertex violating `stage` from the live set, each step justified
// by a domination witness. Violators are scanned anti-lex descending; the pass
// repeats until the stage predicate holds everywhere or no removal succeeds.
inline StageReductionResult run_stage(const FlagComplex& k, Bitset& alive,
                                      const ReductionStage& stage) {
    StageReductionResult res;
    bool progress = true;
    while (progress) {
        progress = false;
        std::optional<Point> first_stuck;
        for (int a = static_cast<int>(k.size()) - 1; a >= 0; --a) {
            if (!alive.test(static_cast<std::size_t>(a))) continue;
            const Point& x = k.vertices[static_cast<std::size_t>(a)];
            if (stage.keeps(x, k.scale)) continue;
            int b = detail::find_dominator(k, alive, a,
                                           detail::stage_candidates(x, k.scale, stage.id));
            if (b < 0) {
                if (!first_stuck) first_stuck = x;
                continue;
            }
            res.steps.push_back({x, k.vertices[static_cast<std::size_t>(b)]});
            alive.reset(static_cast<std::size_t>(a));
            progress = true;
        }
        if (!progress && first_stuck) {
            res.stuck = first_stuck;
            return res;
        }
    }
    res.ok = true;
    return res;
}

// Builds Gamma restricted to the previous stages' target set, then checks the
// given stage clears all its violators by domination.
inline StageReductionResult verify_stage_reduction(const GammaSpec& spec,
                                                   const ReductionStage& stage,
                                                   const Caps& caps = Caps{}) {
    auto schedule = reduction_schedule(spec.grid.n, spec.grid.r);
    std::vector<Point> pts;
    for (const Point& p : gamma_vertices(spec, caps)) {
        bool keep = true;
        for (const auto& st : schedule) {
            if (st.id == stage.id) break;
            if (!st.keeps(p, spec.grid.r)) { keep = false; break; }
        }
        if (keep) pts.push_back(p);
    }
    FlagComplex k = build_complex(std::move(pts), spec.grid.r, "gamma", caps);
    Bitset alive(k.size());
    for (std::size_t v = 0; v < k.size(); ++v) alive.set(v);
    return run_stage(k, alive, stage);
}

// ---------------------------------------------------------------------------
// Certificates
// ---------------------------------------------------------------------------

inline DismantleCertificate dismantle(const FlagComplex& k,
                                      DismantleStrategy strategy =
                                          DismantleStrategy::GreedyAntilexMaxFirst) {
    if (k.size() == 0) throw std::invalid_argument("dismantle: empty complex");
    DismantleCertificate cert;
    Bitset alive(k.size());
    for (std::size_t v = 0; v < k.size(); ++v) alive.set(v);
    if (strategy == DismantleStrategy::PaperGuided) {
        cert.strategy = "paper-guided";
        const int n = k.dim_ambient();
        const int r = k.scale;
        if (n >= 2 && r >= n) {
            for (const auto& stage : reduction_schedule(n, r)) {
                auto res = run_stage(k, alive, stage);
                cert.steps.insert(cert.steps.end(), res.steps.begin(), res.steps.end());
                if (!res.ok) break;  // fall through to the generic finish
            }
            // cone off the residual onto the theorem apexes when possible
            std::vector<Point> apexes;
            if (n == 6) {
                Point w(static_cast<std::size_t>(n), 0);
                w[4] = 1;
                w[5] = 1;
                apexes.push_back(w);
            }
            for (int i = n; i >= 1; --i) {
                Point e(static_cast<std::size_t>(n), 0);
                e[static_cast<std::size_t>(i - 1)] = 1;
                apexes.push_back(e);
            }
            for (const Point& apex : apexes) {
                int b = k.index_of(apex);
                if (b < 0 || !alive.test(static_cast<std::size_t>(b))) continue;
                bool progress = true;
                while (progress && alive.count() > 1) {
                    progress = false;
                    for (int a = static_cast<int>(k.size()) - 1; a >= 0; --a) {
                        if (a == b || !alive.test(static_cast<std::size_t>(a))) continue;
                        if (!is_dominated_alive(k, alive, a, b)) continue;
                        cert.steps.push_back({k.vertices[static_cast<std::size_t>(a)], apex});
                        alive.reset(static_cast<std::size_t>(a));
                        progress = true;
                    }
                }
                if (alive.count() == 1) break;
            }
        }
        dismantle_greedy(k, alive, cert.steps);  // finish whatever remains
    } else {
        cert.strategy = "greedy-antilex-max-first";
        dismantle_greedy(k, alive, cert.steps);
    }
    cert.residual = detail::alive_points(k, alive);
    return cert;
}

struct CertificateCheck {
    bool ok = false;
    std::int64_t failed_step = -1;  // -1 when ok or when the residual mismatches
    std::string detail;
};

// Replays a certificate against a fresh copy of K, re-testing domination at
// every step.
inline CertificateCheck verify_certificate(const FlagComplex& k,
                                           const DismantleCertificate& cert) {
    CertificateCheck out;
    Bitset alive(k.size());
    for (std::size_t v = 0; v < k.size(); ++v) alive.set(v);
    for (std::size_t i = 0; i < cert.steps.size(); ++i) {
        const auto& step = cert.steps[i];
        int a = k.index_of(step.removed);
        int b = k.index_of(step.dominator);
        if (a < 0 || b < 0 || a == b || !alive.test(static_cast<std::size_t>(a)) ||
            !alive.test(static_cast<std::size_t>(b)) || !is_dominated_alive(k, alive, a, b)) {
            out.failed_step = static_cast<std::int64_t>(i);
            out.detail = "invalid step " + std::to_string(i);
            return out;
        }
        alive.reset(static_cast<std::size_t>(a));
    }
    if (detail::alive_points(k, alive) != cert.residual) {
        out.detail = "residual mismatch";
        return out;
    }
    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------
// Contractibility drivers
// ---------------------------------------------------------------------------

inline FlagComplex build_gamma_complex(const GammaSpec& spec, const Caps& caps = Caps{}) {
    return build_complex(gamma_vertices(spec, caps), spec.grid.r, "gamma", caps);
}

inline FlagComplex build_grid_complex(const GridSpec& spec, const Caps& caps = Caps{}) {
    return build_complex(grid_vertices(spec, caps), spec.r, "grid", caps);
}

inline DismantleCertificate prove_gamma_contractible(const GammaSpec& spec,
                                                     const Caps& caps = Caps{}) {
    spec.validate();
    if (spec.grid.n < 2 || spec.grid.n > 6)
        throw std::invalid_argument("prove_gamma_contractible: requires 2 <= n <= 6");
    if (spec.grid.r < spec.grid.n)
        throw std::invalid_argument("prove_gamma_contractible: requires r >= n");
    FlagComplex k = build_gamma_complex(spec, caps);
    if (k.size() == 0) {
        DismantleCertificate cert;
        cert.strategy = "paper-guided";
        return cert;  // empty gamma: nothing to prove (vacuous residual)
    }
    return dismantle(k, DismantleStrategy::PaperGuided);
}

struct GridContractibilityResult {
    bool ok = false;
    std::vector<std::pair<std::int64_t, DismantleCertificate>> gamma_certs;  // (alpha, cert)
    DismantleCertificate direct_cert;
    std::int64_t failed_alpha = -1;
};

inline GridContractibilityResult prove_grid_contractible(const GridSpec& spec,
                                                         const Caps& caps = Caps{}) {
    spec.validate();
    if (spec.r < spec.n)
        throw std::invalid_argument("prove_grid_contractible: requires r >= n");
    GridContractibilityResult out;
    const std::int64_t total = spec.vertex_count();
    for (std::int64_t alpha = 1; alpha <= total - 1; ++alpha) {
        GammaSpec gs{spec, alpha};
        auto cert = prove_gamma_contractible(gs, caps);
        bool good = cert.residual.size() <= 1;
        out.gamma_certs.emplace_back(alpha, std::move(cert));
        if (!good) {
            out.failed_alpha = alpha;
            return out;
        }
    }
    // success is carried by the full alpha sweep; the direct certificate is
    // supplementary evidence (some boxes, e.g. n=3 m=3 r=3, have no dominated
    // vertex at all and cannot dismantle directly despite being contractible)
    out.direct_cert = dismantle(build_grid_complex(spec, caps),
                                DismantleStrategy::GreedyAntilexMaxFirst);
    out.ok = true;
    return out;
}

// ---------------------------------------------------------------------------
// Conjecture harness
// ---------------------------------------------------------------------------

enum class ConjectureVerdict { ReducedAndContractible, ReducedNotDismantlable, DominationChainBroken };

inline const char* to_string(ConjectureVerdict v) {
    switch (v) {
        case ConjectureVerdict::ReducedAndContractible: return "reduced-and-contractible";
        case ConjectureVerdict::ReducedNotDismantlable: return "reduced-not-dismantlable";
        default: return "domination-chain-broken";
    }
}

struct ConjectureReport {
    int n = 0, m = 0, r = 0;
    std::int64_t alpha = 0;
    std::int64_t target_size = 0;
    ConjectureVerdict verdict = ConjectureVerdict::DominationChainBroken;
    std::vector<DismantleStep> reduction_steps;
    std::vector<Point> core;  // stuck core or final residual
};

// Conjectured target: all coordinates strictly below floor(r/2) and every
// (n-2)-subset of coordinates summing to at most r-2.
inline bool in_conjecture_target(const Point& x, int r) {
    const int n = static_cast<int>(x.size());
    std::vector<int> a;
    for (Coord c : x) {
        if (std::abs(c) >= r / 2) return false;
        a.push_back(std::abs(c));
    }
    if (n < 2) return true;
    std::sort(a.rbegin(), a.rend());
    std::int64_t worst = 0;  // largest (n-2)-subset sum
    for (int i = 0; i < n - 2; ++i) worst += a[static_cast<std::size_t>(i)];
    return worst <= r - 2;
}

inline ConjectureReport explore_conjecture_5_1(int n, int m, int r, std::int64_t alpha,
                                               const Caps& caps = Caps{}) {
    if (n < 2) throw std::invalid_argument("explore_conjecture_5_1: n must be >= 2");
    if (r < n) throw std::invalid_argument("explore_conjecture_5_1: requires r >= n");
    GammaSpec spec{{n, m, r}, alpha};
    spec.validate();
    ConjectureReport rep;
    rep.n = n;
    rep.m = m;
    rep.r = r;
    rep.alpha = alpha;
    FlagComplex k = build_gamma_complex(spec, caps);
    Bitset alive(k.size());
    for (std::size_t v = 0; v < k.size(); ++v) alive.set(v);
    for (std::size_t v = 0; v < k.size(); ++v)
        if (in_conjecture_target(k.vertices[v], r)) ++rep.target_size;

    // reduce onto the target set by domination
    bool progress = true;
    while (progress) {
        progress = false;
        for (int a = static_cast<int>(k.size()) - 1; a >= 0; --a) {
            if (!alive.test(static_cast<std::size_t>(a))) continue;
            if (in_conjecture_target(k.vertices[static_cast<std::size_t>(a)], r)) continue;
            int b = detail::find_dominator(k, alive, a, {});
            if (b < 0) continue;
            rep.reduction_steps.push_back({k.vertices[static_cast<std::size_t>(a)],
                                           k.vertices[static_cast<std::size_t>(b)]});
            alive.reset(static_cast<std::size_t>(a));
            progress = true;
        }
    }
    // a single leftover vertex is itself a contractibility witness
    if (alive.count() > 1)
        for (std::size_t v = 0; v < k.size(); ++v)
            if (alive.test(v) && !in_conjecture_target(k.vertices[v], r)) {
                rep.verdict = ConjectureVerdict::DominationChainBroken;
                rep.core = detail::alive_points(k, alive);
                return rep;
            }

    std::vector<DismantleStep> tail;
    dismantle_greedy(k, alive, tail);
    rep.reduction_steps.insert(rep.reduction_steps.end(), tail.begin(), tail.end());
    rep.core = detail::alive_points(k, alive);
    rep.verdict = rep.core.size() <= 1 ? ConjectureVerdict::ReducedAndContractible
                                       : ConjectureVerdict::ReducedNotDismantlable;
    return rep;
}

}  // namespace vrl
