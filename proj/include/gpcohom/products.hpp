#pragma once

#include "gpcohom/coxeter.hpp"
#include "gpcohom/groups.hpp"
#include "gpcohom/simplicial.hpp"
#include "gpcohom/weighted.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gpcohom {

struct VertexGroupDescriptor {
    enum class Kind { FiniteOfOrder, Coxeter, InfiniteGeneric, IntegerGroup };
    Kind kind = Kind::IntegerGroup;
    Integer order = 0;                     // FiniteOfOrder
    std::optional<CoxeterSystem> system;   // Coxeter
    std::optional<MultiParameter> q;       // Coxeter; unweighted when absent
    Profile l2;                            // InfiniteGeneric
    std::optional<int> duality_dimension;  // InfiniteGeneric

    static VertexGroupDescriptor finite(const Integer& n);
    static VertexGroupDescriptor coxeter(CoxeterSystem sys, std::optional<MultiParameter> q = std::nullopt);
    static VertexGroupDescriptor generic(Profile l2, std::optional<int> duality_dimension = std::nullopt);
    static VertexGroupDescriptor integer();
    // "Z", "Z/n", or an object with a "kind" field
    static VertexGroupDescriptor from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    bool is_finite() const;
};

struct ModuleTerm {
    std::vector<std::string> j;
    int degree = 0;
    FgAbelianGroup coefficient;
    std::string tag;
    std::string description;
    nlohmann::json detail;  // extra bookkeeping, e.g. the (i, j) split
};

// associated graded groups, as a sorted list of terms
struct GradedModuleExpr {
    std::vector<ModuleTerm> terms;
    bool graded_only = true;

    void add(ModuleTerm t);  // zero coefficients are dropped
    void sort();
    std::vector<ModuleTerm> in_degree(int n) const;
    std::map<int, int> ranks() const;
    std::vector<int> degrees() const;
    nlohmann::json to_json() const;
};

Profile l2_salvetti(const CoxeterSystem& sys);

struct BBProfile {
    Profile l2;
    bool acyclic = false;
    nlohmann::json to_json() const;
};
BBProfile l2_bb(const SimplicialComplex& l);

// vertex groups must all be infinite
Profile l2_graphproduct(const SimplicialComplex& l, const std::map<std::string, VertexGroupDescriptor>& v);

GradedModuleExpr groupring_graphproduct(const SimplicialComplex& l,
                                        const std::map<std::string, VertexGroupDescriptor>& v);
GradedModuleExpr groupring_salvetti(const CoxeterSystem& sys);

struct BBGroupRing {
    GradedModuleExpr expr;
    bool acyclic = false;
    nlohmann::json to_json() const;
};
BBGroupRing groupring_bb(const SimplicialComplex& l);

// elements up to a length bound tabulated by right descent set
struct DescentCensus {
    int max_length = 0;
    bool complete = false;
    std::map<std::vector<std::string>, std::vector<std::size_t>> equal;     // descent set equals J
    std::map<std::vector<std::string>, std::vector<std::size_t>> contains;  // descent set contains J
    nlohmann::json to_json() const;
};

struct CoxeterGroupRing {
    GradedModuleExpr expr;
    std::optional<DescentCensus> census;
    nlohmann::json to_json() const;
};
CoxeterGroupRing groupring_coxeter(const CoxeterSystem& sys, std::optional<int> census_length = std::nullopt);

enum class PjoinRoute { Auto, OrderComplex, NerveModel };
// number of simplices in the Davis chamber of a nerve, saturating
std::size_t chamber_size(const SimplicialComplex& nerve);

struct PjoinReport {
    std::vector<std::string> i;
    GradedModuleExpr graded;
    GradedGroups direct;
    std::string route;
    bool ranks_agree = true;
    std::vector<int> torsion_differs;  // degrees where graded and direct torsion disagree
    nlohmann::json to_json() const;
};

PjoinReport pjoin_cohomology(const PjoinContext& ctx, const std::vector<std::string>& i,
                             PjoinRoute route = PjoinRoute::Auto);
// every simplex I of the join, sharing one chamber
std::vector<PjoinReport> pjoin_cohomology_all(const PjoinContext& ctx, PjoinRoute route = PjoinRoute::Auto);

enum class DualityContext { Raag, Octahedral, Salvetti, BestvinaBrady, GraphProductFinite };
DualityContext duality_context_from(const std::string& name);
const char* duality_context_name(DualityContext c);

struct DualityVerdict {
    DualityContext context = DualityContext::Raag;
    std::string condition;  // "Cohen-Macaulay" or "PH^m"
    int m = 0;              // dimension of L
    bool holds = false;
    bool acyclic = true;    // only meaningful for Bestvina-Brady
    bool duality_group = false;
    std::optional<int> duality_dimension;
    nlohmann::json witness;  // null on success
    nlohmann::json to_json() const;
};

DualityVerdict cohen_macaulay(const SimplicialComplex& l);
DualityVerdict punctured_homology(const SimplicialComplex& l);
DualityVerdict duality_report(const SimplicialComplex& l, DualityContext context);
DualityVerdict duality_report(const CoxeterSystem& sys);  // Salvetti context on the nerve


}  // namespace gpcohom
