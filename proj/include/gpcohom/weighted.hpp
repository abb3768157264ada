#pragma once

#include "gpcohom/coxeter.hpp"
#include "gpcohom/simplicial.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gpcohom {

using Profile = std::map<int, Rational>;  // degree -> exact value, zeros omitted

nlohmann::json to_json(const Profile& p);
Profile kunneth(const std::vector<Profile>& factors);  // sum over compositions of products

enum class ForcedRegime { None, Small, Large };

// dim D^J for every spherical J, parallel to sp.subsets
std::vector<Rational> dims_D(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q);
Rational dim_D(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q,
               const std::vector<int>& j);

// a finite complex with one mirror subcomplex per generator
struct MirroredComplex {
    SimplicialComplex complex;
    std::map<std::string, SimplicialComplex> mirrors;
    SimplicialComplex mirror_union(const std::vector<std::string>& outside) const;
};

enum class BettiSource {
    NerveShortcut,  // b^j(K, K^{S-J}) read off the nerve
    Chamber,        // computed on the Davis chamber itself
};

struct WeightedResult {
    Profile betti;
    RegimeCertificate certificate;
    std::string regime;       // "small" or "large"
    bool unverified = false;  // a forced regime was not certified
    nlohmann::json to_json() const;
};

WeightedResult weighted_betti(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q,
                              ForcedRegime force = ForcedRegime::None,
                              BettiSource source = BettiSource::NerveShortcut);
WeightedResult weighted_betti(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q,
                              const MirroredComplex& m, ForcedRegime force = ForcedRegime::None);

// graph product of finite groups of the given orders, through the right-angled system on L
WeightedResult l2_graphproduct_finite(const SimplicialComplex& l, const std::map<std::string, Integer>& orders,
                                      ForcedRegime force = ForcedRegime::None);

// graph product of Coxeter systems over a flag complex L; generator labels become (s,t)
CoxeterSystem graph_product_system(const SimplicialComplex& l, const std::map<std::string, CoxeterSystem>& v);
// per-vertex weights collected into a multiparameter of the product
MultiParameter graph_product_weights(const SimplicialComplex& l, const std::map<std::string, CoxeterSystem>& v,
                                     const std::map<std::string, MultiParameter>& q, const CoxeterSystem& product);

struct GraphProductResult {
    Profile betti;
    std::string branch;  // "small" or "large"
    std::map<std::string, Rational> p;  // small branch only
    std::map<std::string, RegimeCertificate> vertex_certificates;
    std::optional<RegimeCertificate> base_certificate;
    bool unverified = false;
    nlohmann::json to_json() const;
};

GraphProductResult weighted_graphproduct(const SimplicialComplex& l, const std::map<std::string, CoxeterSystem>& v,
                                         const std::map<std::string, MultiParameter>& q,
                                         ForcedRegime force = ForcedRegime::None);

// Octahedralization: graph product of infinite dihedral groups over L
struct OctLimit {
    int degree = 0;
    std::optional<Rational> from_below;  // (q+1)/(1-q) L2 b^n as q -> 1-
    std::optional<Rational> from_above;  // (q+1)/(q-1) L2 b^{n+1} as q -> 1+
    Rational link_sum;                   // sum_s b^n(K_s, dK_s)
};

struct OctReport {
    std::map<std::string, Rational> p;
    std::optional<WeightedResult> small;  // all weights below 1
    std::optional<Profile> large;         // all weights above 1
    std::optional<Profile> at_one;        // all weights equal to 1
    std::vector<OctLimit> limits;
    nlohmann::json to_json() const;
};

// q maps each vertex s of L to (q_{s+}, q_{s-})
OctReport oct_weighted(const SimplicialComplex& l, const std::map<std::string, std::pair<Rational, Rational>>& q,
                       ForcedRegime force = ForcedRegime::None);
Rational oct_p(const Rational& a, const Rational& b);
// the large-weight sum over simplices of L with per-vertex factors
Profile oct_large(const SimplicialComplex& l, const std::map<std::string, std::pair<Rational, Rational>>& q);
std::vector<OctLimit> oct_limits(const SimplicialComplex& l);

}  // namespace gpcohom
