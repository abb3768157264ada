#pragma once

#include "gpcohom/polynomial.hpp"
#include "gpcohom/simplicial.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gpcohom {

constexpr int kInf = 0;  // Coxeter label m(s,t) = infinity

class CoxeterSystem {
public:
    CoxeterSystem() = default;
    // m is symmetric with ones on the diagonal; kInf marks infinite labels
    CoxeterSystem(std::vector<std::string> generators, std::vector<std::vector<int>> m);
    // right-angled system: m = 2 across edges of the graph, infinity otherwise
    static CoxeterSystem right_angled(const SimplicialComplex& graph);
    static CoxeterSystem from_json(const nlohmann::json& j);

    int size() const { return static_cast<int>(gens_.size()); }
    const std::vector<std::string>& generators() const { return gens_; }
    int m(int s, int t) const { return m_[s][t]; }
    int index(const std::string& label) const;  // throws on unknown labels
    std::vector<int> indices(const std::vector<std::string>& labels) const;
    std::vector<std::string> labels(const std::vector<int>& j) const;
    CoxeterSystem subsystem(const std::vector<int>& j) const;
    bool is_right_angled() const;

    // conjugacy classes of generators: components of the odd-label graph, ordered by first member
    const std::vector<int>& class_of() const { return class_of_; }
    int num_classes() const { return num_classes_; }
    std::vector<std::string> class_names() const;  // "t_<first generator>"

    nlohmann::json to_json() const;

private:
    std::vector<std::string> gens_;
    std::vector<std::vector<int>> m_;
    std::vector<int> class_of_;
    int num_classes_ = 0;
};

struct FiniteType {
    std::string name;  // "A3", "B4", "I2(7)", ...
    std::vector<int> degrees;
    Integer order() const;
};

struct Classification {
    bool finite = true;
    std::vector<std::vector<int>> components;  // generator indices, ascending
    std::vector<FiniteType> types;             // parallel to components when finite
    Integer order;                             // |W_J| when finite
};

Classification classify_finite(const CoxeterSystem& sys, const std::vector<int>& j);
std::optional<FiniteType> classify_component(const CoxeterSystem& sys, const std::vector<int>& comp);
// rank <= 8 catalogue entries; used to drive validation
std::vector<std::pair<FiniteType, CoxeterSystem>> finite_catalogue(int max_rank, int max_dihedral);
// single-class growth polynomial prod (1 + t + ... + t^(d-1))
std::vector<Integer> degree_product(const std::vector<int>& degrees);

// Multiparameter: one exact positive rational per generator class
struct MultiParameter {
    std::vector<Rational> values;

    static MultiParameter uniform(const CoxeterSystem& sys, const Rational& q);
    // keys may name generators or classes ("t_s"); conflicting values are rejected
    static MultiParameter from_map(const CoxeterSystem& sys, const std::map<std::string, Rational>& q);
    const Rational& of(const CoxeterSystem& sys, int s) const { return values[sys.class_of()[s]]; }
    bool is_uniform() const;
    Rational min() const;
    Rational max() const;
};

struct SphericalSubset {
    std::vector<int> gens;
    Polynomial growth;  // W_J(t) in the class variables
    Exponent longest;   // class exponents of t_{w0(J)}
};

struct SphericalPoset {
    std::vector<SphericalSubset> subsets;  // sorted by (size, lex); subsets[0] is empty
    SimplicialComplex nerve;
    std::map<std::vector<int>, int> index;

    Poset poset(const CoxeterSystem& sys) const;  // ordered by inclusion, labels "{s,t}"
    bool finite_group() const;                      // S itself is spherical
};

struct Limits {
    std::size_t element_cap = 100000;
    int length_bound = 1000000;
};

SphericalPoset spherical_poset(const CoxeterSystem& sys, const Limits& limits = {});

struct CensusEntry {
    std::vector<int> word;  // lexicographically least reduced word
    int length = 0;
    Exponent monomial;
    std::vector<int> descents;  // right descent set
};

struct WordCensus {
    std::vector<CensusEntry> entries;  // kept only on request
    std::vector<std::size_t> length_profile;
    std::map<Exponent, Integer> monomial_counts;
    bool complete = false;  // the group was exhausted
    std::size_t braid_checked = 0;
    std::size_t braid_truncated = 0;

    Polynomial growth_polynomial(int nvars) const;
};

class CensusCapError : public Error {
public:
    CensusCapError(const std::string& what, WordCensus partial)
        : Error(ErrorKind::ResourceCap, what), partial_(std::move(partial)) {}
    const WordCensus& partial() const { return partial_; }

private:
    WordCensus partial_;
};

struct CensusOptions {
    Limits limits;
    bool keep_entries = false;
    bool check_braid_orbits = false;  // diagnostic; orbit sizes capped at 10^4 words
};

WordCensus enumerate_words(const CoxeterSystem& sys, const CensusOptions& options);

// all reduced words reachable by braid moves, at most cap of them
std::vector<std::vector<int>> braid_orbit(const CoxeterSystem& sys, const std::vector<int>& word,
                                          std::size_t cap = 10000);
// exact element identity through the faithful representation
bool same_element(const CoxeterSystem& sys, const std::vector<int>& a, const std::vector<int>& b);
bool is_reduced(const CoxeterSystem& sys, const std::vector<int>& word);

// growth series in the class variables
RationalFunction growth_series(const CoxeterSystem& sys, const Limits& limits = {});
RationalFunction growth_series(const CoxeterSystem& sys, const SphericalPoset& sp);
// all class variables tied to one t, in lowest terms
std::pair<UPoly, UPoly> growth_univariate(const CoxeterSystem& sys, const SphericalPoset& sp);
// W(q) through the reciprocity sum; pole error when 1/W(q) = 0
Rational growth_value(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q);
Rational inverse_growth_value(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q);

enum class Regime { InClosureR, InverseInClosureR, Both, Unknown };
const char* regime_name(Regime r);

struct RegimeCertificate {
    Regime regime = Regime::Unknown;
    bool finite_group = false;
    RootInterval rho;  // radius of convergence of the single-parameter series
    std::string evidence;
    nlohmann::json to_json() const;
};

RegimeCertificate regime_test(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q);

}  // namespace gpcohom
