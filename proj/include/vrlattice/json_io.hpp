#pragma once

// JSON serialization for complexes, certificates, censuses, and reports, plus
// the content digest binding certificates to the complex they were produced
// from.

#include <cstdint>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "vrlattice/flag_complex.hpp"
#include "vrlattice/homology.hpp"
#include "vrlattice/morse.hpp"
#include "vrlattice/reduce.hpp"

namespace vrl {

inline constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

// FNV-1a over the ambient dimension, scale, and sorted vertex coordinates.
inline std::string complex_digest(const FlagComplex& k) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::int64_t v) {
        for (int b = 0; b < 8; ++b) {
            h ^= static_cast<std::uint64_t>(v >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    mix(k.dim_ambient());
    mix(k.scale);
    for (const Point& p : k.vertices)
        for (Coord c : p) mix(c);
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

inline Json to_json(const FlagComplex& k) {
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["n"] = k.dim_ambient();
    j["r"] = k.scale;
    j["provenance"] = k.provenance;
    j["vertices"] = k.vertices;
    j["edge_count"] = edge_count(k);
    j["digest"] = complex_digest(k);
    return j;
}

inline FlagComplex complex_from_json(const Json& j, const Caps& caps = Caps{}) {
    if (j.value("schema_version", -1) != kSchemaVersion)
        throw std::invalid_argument("complex_from_json: schema version mismatch");
    auto points = j.at("vertices").get<std::vector<Point>>();
    FlagComplex k = build_complex(std::move(points), j.at("r").get<int>(),
                                  j.value("provenance", "external"), caps);
    if (j.contains("edge_count") && j["edge_count"].get<std::int64_t>() != edge_count(k))
        throw std::invalid_argument("complex_from_json: edge count mismatch");
    if (j.contains("digest") && j["digest"].get<std::string>() != complex_digest(k))
        throw std::invalid_argument("complex_from_json: digest mismatch");
    return k;
}

inline Json to_json(const DismantleCertificate& cert, const FlagComplex& k) {
    Json steps = Json::array();
    for (const auto& s : cert.steps)
        steps.push_back({{"removed", s.removed}, {"dominator", s.dominator}});
    return Json{{"schema_version", kSchemaVersion},
                {"digest", complex_digest(k)},
                {"strategy", cert.strategy},
                {"steps", steps},
                {"residual", cert.residual}};
}

inline DismantleCertificate certificate_from_json(const Json& j) {
    if (j.value("schema_version", -1) != kSchemaVersion)
        throw std::invalid_argument("certificate_from_json: schema version mismatch");
    DismantleCertificate cert;
    cert.strategy = j.value("strategy", "");
    for (const auto& s : j.at("steps")) {
        cert.steps.push_back({s.at("removed").get<Point>(), s.at("dominator").get<Point>()});
    }
    cert.residual = j.at("residual").get<std::vector<Point>>();
    return cert;
}

inline Json to_json(const CriticalCensus& c, const FlagComplex& k, bool acyclic,
                    bool witnesses = false) {
    Json counts = Json::object();
    for (const auto& [d, cnt] : c.counts) counts[std::to_string(d)] = cnt;
    Json j{{"schema_version", kSchemaVersion},
           {"digest", complex_digest(k)},
           {"counts", counts},
           {"acyclic", acyclic}};
    if (witnesses) {
        Json w = Json::object();
        for (const auto& [d, list] : c.witness) w[std::to_string(d)] = list;
        j["witnesses"] = w;
    }
    return j;
}

inline Json to_json(const BettiVector& b, const FlagComplex& k, int dmax) {
    return Json{{"schema_version", kSchemaVersion},
                {"digest", complex_digest(k)},
                {"dmax", dmax},
                {"betti", b.betti},
                {"reduced", b.reduced}};
}

inline Json to_json(const ConjectureReport& rep) {
    return Json{{"schema_version", kSchemaVersion},
                {"n", rep.n},
                {"m", rep.m},
                {"r", rep.r},
                {"alpha", rep.alpha},
                {"target_size", rep.target_size},
                {"verdict", to_string(rep.verdict)},
                {"reduction_steps", rep.reduction_steps.size()},
                {"core_size", rep.core.size()}};
}

}  // namespace vrl
