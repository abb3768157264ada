#pragma once

#include "gpcohom/numeric.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

namespace gpcohom {

using Simplex = std::vector<int>;  // sorted vertex indices

struct SimplexHash {
    std::size_t operator()(const Simplex& s) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (int v : s) h = (h ^ static_cast<std::size_t>(v + 1)) * 1099511628211ull;
        return h;
    }
};

constexpr std::size_t kSimplexCap = std::size_t(1) << 20;

// Face-closed family of vertex sets, always containing the empty simplex.
// Vertices are kept in lexicographic label order; every vertex is a 0-simplex.
class SimplicialComplex {
public:
    SimplicialComplex();  // the empty complex: only the empty simplex

    static SimplicialComplex from_facets(const std::vector<std::string>& vertices,
                                         const std::vector<std::vector<std::string>>& facets);
    // facets given as indices into `vertices` (which need not be sorted)
    static SimplicialComplex from_index_facets(const std::vector<std::string>& vertices,
                                               const std::vector<Simplex>& facets);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<Simplex>& simplices() const { return simplices_; }
    std::size_t size() const { return simplices_.size(); }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int dimension() const;
    int count(int dim) const;

    int vertex_index(const std::string& label) const;  // -1 when absent
    bool has_vertex(const std::string& label) const { return vertex_index(label) >= 0; }
    int index_of(const Simplex& s) const;
    bool contains(const Simplex& s) const { return index_of(s) >= 0; }
    bool contains_labels(const std::vector<std::string>& labels) const;
    Simplex simplex_of(const std::vector<std::string>& labels) const;  // throws when not a simplex
    std::vector<std::string> labels(const Simplex& s) const;

    std::vector<Simplex> facets() const;
    bool is_full_simplex() const;  // all vertices span a simplex (false for the empty complex)
    bool is_flag() const;

    bool operator==(const SimplicialComplex& o) const;
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }
    bool is_subcomplex_of(const SimplicialComplex& o) const;

private:
    void build(std::vector<std::string> vertices, std::vector<std::vector<std::string>> facets);

    std::vector<std::string> vertices_;
    std::unordered_map<std::string, int> vindex_;
    std::vector<Simplex> simplices_;  // ordered by (size, lex); simplices_[0] is empty
    std::unordered_map<Simplex, int, SimplexHash> index_;
};

SimplicialComplex flag_complex(const std::vector<std::string>& vertices,
                               const std::vector<std::pair<std::string, std::string>>& edges);
SimplicialComplex link(const SimplicialComplex& k, const std::vector<std::string>& j);
SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<std::string>& a);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex);
SimplicialComplex simplex(const std::vector<std::string>& vertices);
SimplicialComplex sphere0(const std::string& a, const std::string& b);
std::vector<std::pair<std::string, std::string>> edges(const SimplicialComplex& k);

// finite poset given by a strict order relation
struct Poset {
    std::vector<std::string> labels;
    std::vector<std::vector<bool>> less;  // less[a][b] means a < b

    Poset() = default;
    Poset(std::vector<std::string> labels, const std::vector<std::pair<int, int>>& relations);
    int size() const { return static_cast<int>(labels.size()); }
};

SimplicialComplex order_complex(const Poset& p);
std::size_t count_chains(const Poset& p);

std::string set_label(const std::vector<std::string>& members);  // "{a,b}", "{}"

// Davis chamber: order complex of the poset of simplices of a nerve (empty simplex included)
class MirroredChamber {
public:
    explicit MirroredChamber(const SimplicialComplex& nerve);

    const SimplicialComplex& complex() const { return k_; }
    const SimplicialComplex& nerve() const { return nerve_; }
    const std::vector<std::string>& generators() const { return nerve_.vertices(); }

    // vertex subsets of the chamber; J is given by generator labels
    SimplicialComplex mirror(const std::string& s) const;
    SimplicialComplex face(const std::vector<std::string>& j) const;           // K_J
    SimplicialComplex face_boundary(const std::vector<std::string>& j) const;  // dK_J
    SimplicialComplex mirror_union(const std::vector<std::string>& j) const;   // K^{S-J}, union over s outside J
    SimplicialComplex boundary() const { return face_boundary({}); }          // dK = K^S

private:
    SimplicialComplex select(const std::function<bool(const Simplex&)>& keep) const;
    Simplex gens(const std::vector<std::string>& j) const;

    SimplicialComplex nerve_;
    SimplicialComplex k_;
    std::vector<Simplex> element_;  // chamber vertex index -> nerve simplex
};

MirroredChamber davis_chamber(const Poset& spherical_poset);

// Polyhedral join data: a base complex and a complex for each base vertex.
struct PjoinContext {
    SimplicialComplex base;
    std::map<std::string, SimplicialComplex> factor;  // keyed by base vertex label

    PjoinContext() = default;
    PjoinContext(SimplicialComplex base, std::map<std::string, SimplicialComplex> factor);

    static std::string join_label(const std::string& s, const std::string& t);  // "(s,t)"
    // split a join simplex into its parts I_s
    std::map<std::string, std::vector<std::string>> parts(const std::vector<std::string>& i) const;

    std::set<std::string> full_simplex_vertices() const;  // F
    std::vector<std::string> g_of(const std::vector<std::string>& i) const;
    SimplicialComplex restricted_base(const std::vector<std::string>& i) const;  // ^I L
    SimplicialComplex punctured_factor(const std::vector<std::string>& i, const std::string& s) const;
    SimplicialComplex punctured_join(const std::vector<std::string>& i, const std::vector<std::string>& j) const;
    SimplicialComplex factor_join(const std::vector<std::string>& j) const;  // L(J) with (s,t) labels
};

SimplicialComplex polyhedral_join(const PjoinContext& ctx);
SimplicialComplex octahedralization(const SimplicialComplex& l);
PjoinContext octahedral_context(const SimplicialComplex& l);

nlohmann::json to_json(const SimplicialComplex& k);
SimplicialComplex complex_from_json(const nlohmann::json& j);

}  // namespace gpcohom
