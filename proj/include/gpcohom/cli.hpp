#pragma once

#include "gpcohom/products.hpp"
#include "gpcohom/weighted.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gpcohom {

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "gpcohom 0.1.0";

struct PjoinOptions {
    PjoinContext context;
    std::optional<std::vector<std::string>> simplex;  // all simplices of the join when absent
    PjoinRoute route = PjoinRoute::Auto;
};

struct JobOptions {
    int max_length = 12;
    std::size_t max_elements = 100000;
    ForcedRegime force = ForcedRegime::None;
    std::optional<int> census_length;  // descent census for the group-ring task
    DualityContext duality = DualityContext::Raag;
    bool bestvina_brady = false;
    std::map<std::string, std::pair<Rational, Rational>> oct_weights;
    std::optional<PjoinOptions> pjoin;
};

struct JobConfig {
    int version = kSchemaVersion;
    std::vector<std::string> vertices;
    std::vector<std::tuple<std::string, std::string, int>> edges;  // Coxeter label per edge
    std::map<std::string, VertexGroupDescriptor> vertex_groups;
    std::map<std::string, Rational> weights;  // generator, class "t_s", or "*" for all
    std::vector<std::string> tasks;
    JobOptions options;
    nlohmann::json source;  // the parsed input, for the digest

    static JobConfig from_json(const nlohmann::json& j);
    SimplicialComplex flag() const;    // flag complex of the graph
    CoxeterSystem coxeter() const;     // edge labels, infinity across non-edges
    Limits limits() const;
    std::map<std::string, VertexGroupDescriptor> groups() const;  // "Z" where unspecified
};

struct Report {
    nlohmann::json body;
    bool checks_failed = false;
};

Report run(const JobConfig& config, bool timing = false);

enum class Format { Json, Markdown };
std::string emit(const Report& report, Format format);

// 64-bit FNV-1a of the canonical dump, as 16 hex digits
std::string digest(const nlohmann::json& j);

}  // namespace gpcohom
