#include "gpcohom/simplicial.hpp"

#include <algorithm>
#include <unordered_set>

namespace gpcohom {

namespace {

bool simplex_order(const Simplex& a, const Simplex& b)
{
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<std::string> sorted_unique(std::vector<std::string> v)
{
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

}  // namespace

SimplicialComplex::SimplicialComplex()
{
    simplices_.push_back({});
    index_[{}] = 0;
}

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::string>& vertices,
                                                 const std::vector<std::vector<std::string>>& facets)
{
    SimplicialComplex k;
    k.build(vertices, facets);
    return k;
}

SimplicialComplex SimplicialComplex::from_index_facets(const std::vector<std::string>& vertices,
                                                       const std::vector<Simplex>& facets)
{
    std::vector<std::vector<std::string>> named;
    named.reserve(facets.size());
    for (auto& f : facets) {
        std::vector<std::string> n;
        for (int v : f) n.push_back(vertices.at(v));
        named.push_back(std::move(n));
    }
    return from_facets(vertices, named);
}

void SimplicialComplex::build(std::vector<std::string> vertices, std::vector<std::vector<std::string>> facets)
{
    std::vector<std::string> sorted = vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        invalid("duplicate vertex label");
    for (auto& f : facets)
        for (auto& v : f) sorted.push_back(v);
    vertices_ = sorted_unique(sorted);
    for (std::size_t i = 0; i < vertices_.size(); ++i) vindex_[vertices_[i]] = static_cast<int>(i);

    std::unordered_set<Simplex, SimplexHash> all;
    std::vector<Simplex> frontier;
    for (int v = 0; v < num_vertices(); ++v) frontier.push_back({v});
    for (auto& f : facets) {
        Simplex s;
        for (auto& v : f) s.push_back(vindex_.at(v));
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) invalid("facet repeats a vertex");
        if (s.size() > 24) resource_cap("facet of dimension " + std::to_string(s.size() - 1));
        frontier.push_back(std::move(s));
    }
    // close downward, one vertex at a time
    all.insert(Simplex{});
    while (!frontier.empty()) {
        std::vector<Simplex> next;
        for (auto& s : frontier) {
            if (!all.insert(s).second) continue;
            if (all.size() > kSimplexCap) resource_cap("simplicial complex exceeds 2^20 simplices");
            if (s.size() <= 1) continue;
            for (std::size_t i = 0; i < s.size(); ++i) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(i));
                if (!all.count(f)) next.push_back(std::move(f));
            }
        }
        frontier.swap(next);
    }
    simplices_.assign(all.begin(), all.end());
    std::sort(simplices_.begin(), simplices_.end(), simplex_order);
    index_.clear();
    index_.reserve(simplices_.size());
    for (std::size_t i = 0; i < simplices_.size(); ++i) index_[simplices_[i]] = static_cast<int>(i);
}

int SimplicialComplex::dimension() const { return static_cast<int>(simplices_.back().size()) - 1; }

int SimplicialComplex::count(int dim) const
{
    int n = 0;
    for (auto& s : simplices_)
        if (static_cast<int>(s.size()) == dim + 1) ++n;
    return n;
}

int SimplicialComplex::vertex_index(const std::string& label) const
{
    auto it = vindex_.find(label);
    return it == vindex_.end() ? -1 : it->second;
}

int SimplicialComplex::index_of(const Simplex& s) const
{
    auto it = index_.find(s);
    return it == index_.end() ? -1 : it->second;
}

bool SimplicialComplex::contains_labels(const std::vector<std::string>& labels) const
{
    Simplex s;
    for (auto& l : labels) {
        int v = vertex_index(l);
        if (v < 0) return false;
        s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    return contains(s);
}

Simplex SimplicialComplex::simplex_of(const std::vector<std::string>& labels) const
{
    Simplex s;
    for (auto& l : labels) {
        int v = vertex_index(l);
        if (v < 0) invalid("unknown vertex '" + l + "'");
        s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    if (!contains(s)) invalid(set_label(labels) + " is not a simplex");
    return s;
}

std::vector<std::string> SimplicialComplex::labels(const Simplex& s) const
{
    std::vector<std::string> out;
    for (int v : s) out.push_back(vertices_[v]);
    return out;
}

std::vector<Simplex> SimplicialComplex::facets() const
{
    // a simplex is maximal when no vertex can be added
    std::vector<Simplex> out;
    for (auto& s : simplices_) {
        if (s.empty() && simplices_.size() > 1) continue;
        bool maximal = true;
        for (int v = 0; v < num_vertices() && maximal; ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            Simplex t = s;
            t.insert(std::upper_bound(t.begin(), t.end(), v), v);
            if (contains(t)) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool SimplicialComplex::is_full_simplex() const
{
    if (vertices_.empty()) return false;
    Simplex all(vertices_.size());
    for (int i = 0; i < num_vertices(); ++i) all[i] = i;
    return contains(all);
}

bool SimplicialComplex::is_flag() const
{
    std::vector<std::pair<std::string, std::string>> es = edges(*this);
    return flag_complex(vertices_, es) == *this;
}

bool SimplicialComplex::operator==(const SimplicialComplex& o) const
{
    return vertices_ == o.vertices_ && simplices_ == o.simplices_;
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& o) const
{
    for (auto& s : simplices_)
        if (!o.contains_labels(labels(s))) return false;
    return true;
}

std::vector<std::pair<std::string, std::string>> edges(const SimplicialComplex& k)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& s : k.simplices())
        if (s.size() == 2) out.emplace_back(k.vertices()[s[0]], k.vertices()[s[1]]);
    return out;
}

SimplicialComplex flag_complex(const std::vector<std::string>& vertices,
                               const std::vector<std::pair<std::string, std::string>>& edge_list)
{
    std::vector<std::string> vs = vertices;
    std::sort(vs.begin(), vs.end());
    if (std::adjacent_find(vs.begin(), vs.end()) != vs.end()) invalid("duplicate vertex label");
    std::map<std::string, int> idx;
    for (std::size_t i = 0; i < vs.size(); ++i) idx[vs[i]] = static_cast<int>(i);
    const int n = static_cast<int>(vs.size());
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto& [a, b] : edge_list) {
        if (!idx.count(a) || !idx.count(b)) invalid("edge uses unknown vertex");
        if (a == b) invalid("self-loop at '" + a + "'");
        adj[idx[a]][idx[b]] = adj[idx[b]][idx[a]] = true;
    }
    // maximal cliques by Bron-Kerbosch with pivoting
    std::vector<Simplex> cliques;
    std::function<void(Simplex, std::vector<int>, std::vector<int>)> bk = [&](Simplex r, std::vector<int> p,
                                                                             std::vector<int> x) {
        if (p.empty() && x.empty()) {
            cliques.push_back(r);
            return;
        }
        int pivot = p.empty() ? x.front() : p.front();
        std::vector<int> cand;
        for (int v : p)
            if (!adj[pivot][v]) cand.push_back(v);
        for (int v : cand) {
            Simplex r2 = r;
            r2.push_back(v);
            std::vector<int> p2, x2;
            for (int u : p)
                if (adj[v][u]) p2.push_back(u);
            for (int u : x)
                if (adj[v][u]) x2.push_back(u);
            bk(r2, p2, x2);
            p.erase(std::find(p.begin(), p.end(), v));
            x.push_back(v);
        }
    };
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    if (n > 0) bk({}, all, {});
    for (auto& c : cliques) std::sort(c.begin(), c.end());
    return SimplicialComplex::from_index_facets(vs, cliques);
}

SimplicialComplex link(const SimplicialComplex& k, const std::vector<std::string>& j)
{
    Simplex js = k.simplex_of(j);
    std::vector<std::vector<std::string>> facets;
    std::set<std::string> verts;
    for (auto& s : k.simplices()) {
        if (!std::includes(s.begin(), s.end(), js.begin(), js.end())) continue;
        Simplex rest;
        std::set_difference(s.begin(), s.end(), js.begin(), js.end(), std::back_inserter(rest));
        auto l = k.labels(rest);
        for (auto& v : l) verts.insert(v);
        facets.push_back(std::move(l));
    }
    return SimplicialComplex::from_facets({verts.begin(), verts.end()}, facets);
}

SimplicialComplex full_subcomplex(const SimplicialComplex& k, const std::vector<std::string>& a)
{
    std::vector<bool> keep(k.num_vertices(), false);
    std::vector<std::string> verts;
    for (auto& l : a) {
        int v = k.vertex_index(l);
        if (v >= 0 && !keep[v]) {
            keep[v] = true;
            verts.push_back(l);
        }
    }
    std::vector<std::vector<std::string>> facets;
    for (auto& s : k.simplices()) {
        bool ok = true;
        for (int v : s) ok = ok && keep[v];
        if (ok && s.size() > 1) facets.push_back(k.labels(s));
    }
    return SimplicialComplex::from_facets(verts, facets);
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    for (auto& v : a.vertices())
        if (b.has_vertex(v)) invalid("join: vertex label '" + v + "' occurs in both factors");
    std::vector<std::string> verts = a.vertices();
    verts.insert(verts.end(), b.vertices().begin(), b.vertices().end());
    std::vector<std::vector<std::string>> facets;
    auto fa = a.facets(), fb = b.facets();
    for (auto& x : fa)
        for (auto& y : fb) {
            auto l = a.labels(x);
            auto r = b.labels(y);
            l.insert(l.end(), r.begin(), r.end());
            facets.push_back(std::move(l));
        }
    return SimplicialComplex::from_facets(verts, facets);
}

SimplicialComplex cone(const SimplicialComplex& k, const std::string& apex)
{
    return join(k, simplex({apex}));
}

SimplicialComplex simplex(const std::vector<std::string>& vertices)
{
    return SimplicialComplex::from_facets(vertices, {vertices});
}

SimplicialComplex sphere0(const std::string& a, const std::string& b)
{
    return SimplicialComplex::from_facets({a, b}, {});
}

Poset::Poset(std::vector<std::string> l, const std::vector<std::pair<int, int>>& relations)
    : labels(std::move(l)), less(labels.size(), std::vector<bool>(labels.size(), false))
{
    const int n = size();
    for (auto& [a, b] : relations) {
        if (a < 0 || b < 0 || a >= n || b >= n) invalid("poset relation out of range");
        less[a][b] = true;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (less[i][k])
                for (int j = 0; j < n; ++j)
                    if (less[k][j]) less[i][j] = true;
    for (int i = 0; i < n; ++i)
        if (less[i][i]) invalid("poset relation has a cycle through '" + labels[i] + "'");
}

std::size_t count_chains(const Poset& p)
{
    const int n = p.size();
    // process elements in an order compatible with <
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::vector<int> below(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (p.less[j][i]) ++below[i];
    std::sort(order.begin(), order.end(), [&](int a, int b) { return below[a] < below[b]; });
    std::vector<double> ending(n, 0);
    double total = 1;
    for (int x : order) {
        double c = 1;
        for (int y = 0; y < n; ++y)
            if (p.less[y][x]) c += ending[y];
        ending[x] = c;
        total += c;
    }
    return total > 1e18 ? static_cast<std::size_t>(-1) : static_cast<std::size_t>(total);
}

SimplicialComplex order_complex(const Poset& p)
{
    if (count_chains(p) > kSimplexCap) resource_cap("order complex exceeds 2^20 simplices");
    const int n = p.size();
    std::vector<Simplex> maximal;
    // maximal chains: extend upward until nothing is above
    std::function<void(Simplex&)> grow = [&](Simplex& chain) {
        bool extended = false;
        int top = chain.back();
        for (int y = 0; y < n; ++y) {
            if (!p.less[top][y]) continue;
            bool cover = true;
            for (int z = 0; z < n && cover; ++z)
                if (p.less[top][z] && p.less[z][y]) cover = false;
            if (!cover) continue;
            extended = true;
            chain.push_back(y);
            grow(chain);
            chain.pop_back();
        }
        if (!extended) {
            Simplex s = chain;
            std::sort(s.begin(), s.end());
            maximal.push_back(s);
        }
    };
    for (int x = 0; x < n; ++x) {
        bool minimal = true;
        for (int y = 0; y < n; ++y)
            if (p.less[y][x]) minimal = false;
        if (!minimal) continue;
        Simplex chain{x};
        grow(chain);
    }
    return SimplicialComplex::from_index_facets(p.labels, maximal);
}

std::string set_label(const std::vector<std::string>& members)
{
    std::vector<std::string> m = members;
    std::sort(m.begin(), m.end());
    std::string out = "{";
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (i) out += ",";
        out += m[i];
    }
    return out + "}";
}

MirroredChamber::MirroredChamber(const SimplicialComplex& nerve) : nerve_(nerve)
{
    const auto& sims = nerve_.simplices();
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (auto& s : sims) labels.push_back(set_label(nerve_.labels(s)));
    for (std::size_t a = 0; a < sims.size(); ++a)
        for (std::size_t b = 0; b < sims.size(); ++b)
            if (sims[a].size() < sims[b].size() &&
                std::includes(sims[b].begin(), sims[b].end(), sims[a].begin(), sims[a].end()))
                rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    k_ = order_complex(Poset(labels, rel));
    element_.resize(k_.num_vertices());
    for (std::size_t a = 0; a < sims.size(); ++a) element_[k_.vertex_index(labels[a])] = sims[a];
}

Simplex MirroredChamber::gens(const std::vector<std::string>& j) const
{
    Simplex s;
    for (auto& l : j) {
        int v = nerve_.vertex_index(l);
        if (v < 0) invalid("unknown generator '" + l + "'");
        s.push_back(v);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

SimplicialComplex MirroredChamber::select(const std::function<bool(const Simplex&)>& keep) const
{
    std::vector<std::string> verts;
    for (int v = 0; v < k_.num_vertices(); ++v)
        if (keep(element_[v])) verts.push_back(k_.vertices()[v]);
    return full_subcomplex(k_, verts);
}

SimplicialComplex MirroredChamber::mirror(const std::string& s) const { return face({s}); }

SimplicialComplex MirroredChamber::face(const std::vector<std::string>& j) const
{
    Simplex js = gens(j);
    return select([&](const Simplex& e) { return std::includes(e.begin(), e.end(), js.begin(), js.end()); });
}

SimplicialComplex MirroredChamber::face_boundary(const std::vector<std::string>& j) const
{
    Simplex js = gens(j);
    return select([&](const Simplex& e) {
        return e.size() > js.size() && std::includes(e.begin(), e.end(), js.begin(), js.end());
    });
}

SimplicialComplex MirroredChamber::mirror_union(const std::vector<std::string>& j) const
{
    Simplex js = gens(j);
    // a chain lies in some K_s with s outside J iff its minimum does; chains are totally ordered,
    // so this is the full subcomplex on elements not contained in J
    return select([&](const Simplex& e) { return !std::includes(js.begin(), js.end(), e.begin(), e.end()); });
}

MirroredChamber davis_chamber(const Poset& p)
{
    // elements must be set labels; the nerve is read off from them
    int empty = -1;
    std::vector<std::vector<std::string>> members(p.size());
    std::set<std::string> gens;
    for (int i = 0; i < p.size(); ++i) {
        const std::string& l = p.labels[i];
        if (l.size() < 2 || l.front() != '{' || l.back() != '}') invalid("poset element '" + l + "' is not a set");
        std::string body = l.substr(1, l.size() - 2);
        if (body.empty()) {
            empty = i;
            continue;
        }
        std::size_t start = 0;
        while (true) {
            auto comma = body.find(',', start);
            members[i].push_back(body.substr(start, comma - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        for (auto& m : members[i]) gens.insert(m);
    }
    if (empty < 0) invalid("spherical poset lacks the empty set");
    std::vector<std::vector<std::string>> facets;
    for (auto& m : members)
        if (!m.empty()) facets.push_back(m);
    SimplicialComplex nerve = SimplicialComplex::from_facets({gens.begin(), gens.end()}, facets);
    if (static_cast<int>(nerve.size()) != p.size()) invalid("poset is not closed under taking subsets");
    return MirroredChamber(nerve);
}

PjoinContext::PjoinContext(SimplicialComplex b, std::map<std::string, SimplicialComplex> f)
    : base(std::move(b)), factor(std::move(f))
{
    for (auto& v : base.vertices())
        if (!factor.count(v)) invalid("no factor complex for base vertex '" + v + "'");
    for (auto& [s, k] : factor) {
        if (!base.has_vertex(s)) invalid("factor given for unknown base vertex '" + s + "'");
        if (k.num_vertices() == 0) invalid("factor complex for '" + s + "' has no vertices");
    }
}

std::string PjoinContext::join_label(const std::string& s, const std::string& t) { return "(" + s + "," + t + ")"; }

std::map<std::string, std::vector<std::string>> PjoinContext::parts(const std::vector<std::string>& i) const
{
    std::map<std::string, std::vector<std::string>> out;
    for (auto& l : i) {
        bool found = false;
        for (auto& [s, k] : factor) {
            for (auto& t : k.vertices())
                if (join_label(s, t) == l) {
                    out[s].push_back(t);
                    found = true;
                    break;
                }
            if (found) break;
        }
        if (!found) invalid("'" + l + "' is not a vertex of the polyhedral join");
    }
    for (auto& [s, v] : out) std::sort(v.begin(), v.end());
    return out;
}

std::set<std::string> PjoinContext::full_simplex_vertices() const
{
    std::set<std::string> f;
    for (auto& [s, k] : factor)
        if (k.is_full_simplex()) f.insert(s);
    return f;
}

std::vector<std::string> PjoinContext::g_of(const std::vector<std::string>& i) const
{
    auto p = parts(i);
    auto f = full_simplex_vertices();
    std::vector<std::string> out;
    for (auto& [s, is] : p)
        if (f.count(s) && is.size() == factor.at(s).vertices().size()) out.push_back(s);
    return out;
}

SimplicialComplex PjoinContext::restricted_base(const std::vector<std::string>& i) const
{
    auto g = g_of(i);
    std::vector<std::string> keep;
    for (auto& v : base.vertices())
        if (std::find(g.begin(), g.end(), v) == g.end()) keep.push_back(v);
    return full_subcomplex(base, keep);
}

namespace {

SimplicialComplex relabel(const SimplicialComplex& k, const std::string& s)
{
    std::vector<std::string> verts;
    for (auto& v : k.vertices()) verts.push_back(PjoinContext::join_label(s, v));
    std::vector<Simplex> facets = k.facets();
    return SimplicialComplex::from_index_facets(verts, facets);
}

}  // namespace

SimplicialComplex PjoinContext::punctured_factor(const std::vector<std::string>& i, const std::string& s) const
{
    auto p = parts(i);
    const auto& k = factor.at(s);
    std::vector<std::string> keep;
    for (auto& t : k.vertices())
        if (!p.count(s) || !std::binary_search(p[s].begin(), p[s].end(), t)) keep.push_back(t);
    return relabel(full_subcomplex(k, keep), s);
}

SimplicialComplex PjoinContext::punctured_join(const std::vector<std::string>& i,
                                               const std::vector<std::string>& j) const
{
    SimplicialComplex out;
    for (auto& s : j) out = join(out, punctured_factor(i, s));
    return out;
}

SimplicialComplex PjoinContext::factor_join(const std::vector<std::string>& j) const
{
    SimplicialComplex out;
    for (auto& s : j) out = join(out, relabel(factor.at(s), s));
    return out;
}

SimplicialComplex polyhedral_join(const PjoinContext& ctx)
{
    std::vector<std::string> verts;
    std::vector<std::vector<std::string>> facets;
    std::map<std::string, std::vector<std::vector<std::string>>> factor_facets;
    for (auto& [s, k] : ctx.factor) {
        for (auto& t : k.vertices()) verts.push_back(PjoinContext::join_label(s, t));
        for (auto& f : k.facets()) {
            std::vector<std::string> l;
            for (auto& t : k.labels(f)) l.push_back(PjoinContext::join_label(s, t));
            factor_facets[s].push_back(l);
        }
    }
    for (auto& bf : ctx.base.facets()) {
        std::vector<std::vector<std::string>> acc{{}};
        for (auto& s : ctx.base.labels(bf)) {
            std::vector<std::vector<std::string>> next;
            for (auto& a : acc)
                for (auto& f : factor_facets[s]) {
                    auto c = a;
                    c.insert(c.end(), f.begin(), f.end());
                    next.push_back(std::move(c));
                }
            acc.swap(next);
            if (acc.size() > kSimplexCap) resource_cap("polyhedral join has too many facets");
        }
        for (auto& a : acc) facets.push_back(std::move(a));
    }
    return SimplicialComplex::from_facets(verts, facets);
}

PjoinContext octahedral_context(const SimplicialComplex& l)
{
    std::map<std::string, SimplicialComplex> f;
    for (auto& v : l.vertices()) f[v] = sphere0("+", "-");
    return PjoinContext(l, f);
}

SimplicialComplex octahedralization(const SimplicialComplex& l) { return polyhedral_join(octahedral_context(l)); }

nlohmann::json to_json(const SimplicialComplex& k)
{
    nlohmann::json facets = nlohmann::json::array();
    std::vector<std::vector<std::string>> named;
    for (auto& f : k.facets())
        if (!f.empty()) named.push_back(k.labels(f));
    std::sort(named.begin(), named.end());
    for (auto& f : named) facets.push_back(f);
    return {{"vertices", k.vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("vertices")) invalid("complex must be {\"vertices\", \"facets\"}");
    std::vector<std::string> verts;
    for (auto& v : j["vertices"]) {
        if (!v.is_string()) invalid("vertex labels must be strings");
        verts.push_back(v.get<std::string>());
    }
    std::vector<std::vector<std::string>> facets;
    if (j.contains("facets"))
        for (auto& f : j["facets"]) {
            std::vector<std::string> l;
            for (auto& v : f) l.push_back(v.get<std::string>());
            for (auto& v : l)
                if (std::find(verts.begin(), verts.end(), v) == verts.end())
                    invalid("facet uses undeclared vertex '" + v + "'");
            facets.push_back(l);
        }
    return SimplicialComplex::from_facets(verts, facets);
}

}  // namespace gpcohom
