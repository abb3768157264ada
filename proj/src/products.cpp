#include "gpcohom/products.hpp"

#include "gpcohom/homology.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace gpcohom {

namespace {

std::string set_text(const std::vector<std::string>& j) { return set_label(j); }

// H^i(K_J, dK_J) = reduced H^{i-1}(Lk J), integrally
GradedGroups face_pair_cohomology(const SimplicialComplex& l, const std::vector<std::string>& j)
{
    GradedGroups out;
    for (auto& [d, g] : homology_groups(link(l, j), Variant::Reduced, Theory::Cohomology).degrees())
        out.set(d + 1, g);
    return out;
}

// H^n(K, K^{S-J}) = reduced H^{n-1} of the full subcomplex on S - J
GradedGroups complement_pair_cohomology(const SimplicialComplex& l, const std::vector<std::string>& j)
{
    std::vector<std::string> outside;
    for (auto& v : l.vertices())
        if (std::find(j.begin(), j.end(), v) == j.end()) outside.push_back(v);
    GradedGroups out;
    for (auto& [d, g] : homology_groups(full_subcomplex(l, outside), Variant::Reduced, Theory::Cohomology).degrees())
        out.set(d + 1, g);
    return out;
}

std::vector<std::vector<std::string>> simplex_labels(const SimplicialComplex& k)
{
    std::vector<std::vector<std::string>> out;
    for (auto& s : k.simplices()) out.push_back(k.labels(s));
    return out;
}

SimplicialComplex flag_of(const SimplicialComplex& l) { return flag_complex(l.vertices(), edges(l)); }

void require_flag(const SimplicialComplex& l)
{
    if (!l.is_flag()) invalid("the complex is not flag");
}

void accumulate(Profile& p, int degree, const Rational& v)
{
    if (v == 0) return;
    Rational& slot = p[degree];
    slot += v;
    if (slot == 0) p.erase(degree);
}

}  // namespace

// ---------------------------------------------------------------------------

VertexGroupDescriptor VertexGroupDescriptor::finite(const Integer& n)
{
    if (n < 2) invalid("a finite vertex group needs order at least 2");
    VertexGroupDescriptor d;
    d.kind = Kind::FiniteOfOrder;
    d.order = n;
    return d;
}

VertexGroupDescriptor VertexGroupDescriptor::coxeter(CoxeterSystem sys, std::optional<MultiParameter> q)
{
    VertexGroupDescriptor d;
    d.kind = Kind::Coxeter;
    if (q && static_cast<int>(q->values.size()) != sys.num_classes()) invalid("weights do not match the system");
    d.system = std::move(sys);
    d.q = std::move(q);
    return d;
}

VertexGroupDescriptor VertexGroupDescriptor::generic(Profile l2, std::optional<int> duality_dimension)
{
    for (auto& [deg, v] : l2)
        if (v < 0 || deg < 0) invalid("L2 Betti numbers must be nonnegative");
    VertexGroupDescriptor d;
    d.kind = Kind::InfiniteGeneric;
    d.l2 = std::move(l2);
    d.duality_dimension = duality_dimension;
    return d;
}

VertexGroupDescriptor VertexGroupDescriptor::integer() { return VertexGroupDescriptor{}; }

VertexGroupDescriptor VertexGroupDescriptor::from_json(const nlohmann::json& j)
{
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        if (s == "Z") return integer();
        if (s.rfind("Z/", 0) == 0) {
            try {
                return finite(Integer(s.substr(2)));
            } catch (const std::runtime_error&) {
                invalid("bad vertex group '" + s + "'");
            }
        }
        invalid("unknown vertex group '" + s + "'");
    }
    if (!j.is_object() || !j.contains("kind")) invalid("vertex group needs a kind");
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "integer") return integer();
    if (kind == "finite") {
        const auto& o = j.at("order");
        return finite(o.is_string() ? Integer(o.get<std::string>()) : Integer(o.get<long long>()));
    }
    if (kind == "coxeter") {
        auto sys = CoxeterSystem::from_json(j.at("system"));
        std::optional<MultiParameter> q;
        if (j.contains("weights")) {
            std::map<std::string, Rational> m;
            for (auto& [k, v] : j.at("weights").items()) {
                if (!v.is_string()) invalid("weights must be exact rational strings");
                m[k] = parse_rational(v.get<std::string>());
            }
            q = MultiParameter::from_map(sys, m);
        }
        return coxeter(std::move(sys), q);
    }
    if (kind == "generic") {
        Profile l2;
        if (j.contains("l2"))
            for (auto& [k, v] : j.at("l2").items()) {
                if (!v.is_string()) invalid("L2 Betti numbers must be exact rational strings");
                l2[std::stoi(k)] = parse_rational(v.get<std::string>());
            }
        std::optional<int> dd;
        if (j.contains("duality_dimension")) dd = j.at("duality_dimension").get<int>();
        return generic(l2, dd);
    }
    invalid("unknown vertex group kind '" + kind + "'");
}

nlohmann::json VertexGroupDescriptor::to_json() const
{
    switch (kind) {
    case Kind::IntegerGroup: return {{"kind", "integer"}};
    case Kind::FiniteOfOrder: return {{"kind", "finite"}, {"order", gpcohom::to_string(order)}};
    case Kind::Coxeter: {
        nlohmann::json j{{"kind", "coxeter"}, {"system", system->to_json()}};
        if (q) {
            nlohmann::json w = nlohmann::json::object();
            auto names = system->class_names();
            for (std::size_t c = 0; c < q->values.size(); ++c) w[names[c]] = gpcohom::to_string(q->values[c]);
            j["weights"] = w;
        }
        return j;
    }
    case Kind::InfiniteGeneric: {
        nlohmann::json j{{"kind", "generic"}, {"l2", gpcohom::to_json(l2)}};
        if (duality_dimension) j["duality_dimension"] = *duality_dimension;
        return j;
    }
    }
    return nullptr;
}

bool VertexGroupDescriptor::is_finite() const
{
    if (kind == Kind::FiniteOfOrder) return true;
    if (kind == Kind::Coxeter) {
        std::vector<int> all(system->size());
        for (int s = 0; s < system->size(); ++s) all[s] = s;
        return classify_finite(*system, all).finite;
    }
    return false;
}

// ---------------------------------------------------------------------------

void GradedModuleExpr::add(ModuleTerm t)
{
    if (!t.coefficient.is_zero()) terms.push_back(std::move(t));
}

void GradedModuleExpr::sort()
{
    std::stable_sort(terms.begin(), terms.end(), [](const ModuleTerm& a, const ModuleTerm& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        if (a.j.size() != b.j.size()) return a.j.size() < b.j.size();
        return a.j < b.j;
    });
}

std::vector<ModuleTerm> GradedModuleExpr::in_degree(int n) const
{
    std::vector<ModuleTerm> out;
    for (auto& t : terms)
        if (t.degree == n) out.push_back(t);
    return out;
}

std::map<int, int> GradedModuleExpr::ranks() const
{
    std::map<int, int> out;
    for (auto& t : terms)
        if (t.coefficient.rank) out[t.degree] += t.coefficient.rank;
    return out;
}

std::vector<int> GradedModuleExpr::degrees() const
{
    std::vector<int> out;
    for (auto& t : terms)
        if (out.empty() || out.back() != t.degree) out.push_back(t.degree);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

nlohmann::json GradedModuleExpr::to_json() const
{
    nlohmann::json arr = nlohmann::json::array();
    for (auto& t : terms) {
        nlohmann::json j{{"J", t.j},
                         {"degree", t.degree},
                         {"coefficient", gpcohom::to_json(t.coefficient)},
                         {"base_module", {{"tag", t.tag}, {"description", t.description}}}};
        if (!t.detail.is_null()) j["detail"] = t.detail;
        arr.push_back(j);
    }
    return {{"graded_only", graded_only}, {"terms", arr}};
}

// ---------------------------------------------------------------------------
// L2 Betti numbers

Profile l2_salvetti(const CoxeterSystem& sys)
{
    auto sp = spherical_poset(sys);
    Profile out;
    for (auto& [d, b] : betti_numbers(sp.nerve, Variant::Reduced)) accumulate(out, d + 1, Rational(b));
    return out;
}

nlohmann::json BBProfile::to_json() const { return {{"l2", gpcohom::to_json(l2)}, {"acyclic", acyclic}}; }

BBProfile l2_bb(const SimplicialComplex& l)
{
    require_flag(l);
    BBProfile r;
    r.acyclic = homology_groups(l, Variant::Reduced).is_zero();
    for (auto& v : l.vertices())
        for (auto& [d, b] : betti_numbers(link(l, {v}), Variant::Reduced)) accumulate(r.l2, d + 1, Rational(b));
    return r;
}

namespace {

Profile vertex_l2(const VertexGroupDescriptor& d)
{
    switch (d.kind) {
    case VertexGroupDescriptor::Kind::IntegerGroup: return {};
    case VertexGroupDescriptor::Kind::InfiniteGeneric: return d.l2;
    case VertexGroupDescriptor::Kind::Coxeter: {
        auto sp = spherical_poset(*d.system);
        auto q = d.q ? *d.q : MultiParameter::uniform(*d.system, Rational(1));
        return weighted_betti(*d.system, sp, q).betti;
    }
    case VertexGroupDescriptor::Kind::FiniteOfOrder: break;
    }
    throw Error(ErrorKind::ProvisoViolation, "finite vertex group");
}

void check_vertices(const SimplicialComplex& l, const std::map<std::string, VertexGroupDescriptor>& v)
{
    for (auto& s : l.vertices())
        if (!v.count(s)) invalid("no vertex group for '" + s + "'");
    for (auto& [s, d] : v)
        if (!l.has_vertex(s)) invalid("vertex group given for unknown vertex '" + s + "'");
}

}  // namespace

Profile l2_graphproduct(const SimplicialComplex& l0, const std::map<std::string, VertexGroupDescriptor>& v)
{
    auto l = flag_of(l0);
    check_vertices(l, v);
    for (auto& [s, d] : v)
        if (d.is_finite())
            throw Error(ErrorKind::ProvisoViolation,
                        "vertex '" + s + "' is finite; graph products of finite groups go through the weighted route");
    std::map<std::string, Profile> vb;
    for (auto& s : l.vertices()) vb[s] = vertex_l2(v.at(s));
    Profile out;
    for (auto& j : simplex_labels(l)) {
        std::vector<Profile> factors;
        for (auto& s : j) factors.push_back(vb[s]);
        Profile kj = kunneth(factors);
        for (auto& [d, b] : betti_numbers(link(l, j), Variant::Reduced))
            for (auto& [k, x] : kj) accumulate(out, d + 1 + k, x * b);
    }
    return out;
}

// ---------------------------------------------------------------------------
// group ring cohomology

CoxeterGroupRing groupring_coxeter(const CoxeterSystem& sys, std::optional<int> census_length)
{
    auto sp = spherical_poset(sys);
    CoxeterGroupRing r;
    for (auto& sub : sp.subsets) {
        auto j = sys.labels(sub.gens);
        for (auto& [n, g] : complement_pair_cohomology(sp.nerve, j).degrees())
            r.expr.add({j, n, g, "Â(W)^J", "Â(W)^" + set_text(j), nullptr});
    }
    r.expr.sort();
    if (census_length) {
        if (*census_length < 0) invalid("census length must be nonnegative");
        CensusOptions opt;
        opt.limits.length_bound = *census_length;
        opt.keep_entries = true;
        WordCensus c;
        try {
            c = enumerate_words(sys, opt);
        } catch (const CensusCapError& e) {
            c = e.partial();
        }
        DescentCensus d;
        d.max_length = *census_length;
        d.complete = c.complete;
        for (auto& sub : sp.subsets) {
            auto j = sys.labels(sub.gens);
            d.equal[j].assign(*census_length + 1, 0);
            d.contains[j].assign(*census_length + 1, 0);
        }
        for (auto& e : c.entries) {
            if (e.length > *census_length) continue;
            for (auto& sub : sp.subsets) {
                auto j = sys.labels(sub.gens);
                if (e.descents == sub.gens) ++d.equal[j][e.length];
                if (std::includes(e.descents.begin(), e.descents.end(), sub.gens.begin(), sub.gens.end()))
                    ++d.contains[j][e.length];
            }
        }
        r.census = d;
    }
    return r;
}

nlohmann::json DescentCensus::to_json() const
{
    auto table = [](const std::map<std::vector<std::string>, std::vector<std::size_t>>& m) {
        nlohmann::json j = nlohmann::json::object();
        for (auto& [k, v] : m) j[set_label(k)] = v;
        return j;
    };
    return {{"max_length", max_length},
            {"complete", complete},
            {"descent_set_equals_J", table(equal)},
            {"descent_set_contains_J", table(contains)}};
}

nlohmann::json CoxeterGroupRing::to_json() const
{
    nlohmann::json j{{"expression", expr.to_json()}};
    if (census) j["descent_census"] = census->to_json();
    return j;
}

namespace {

// duality dimension of an infinite vertex group, when its group ring cohomology is free in one degree
int vertex_duality_dimension(const std::string& s, const VertexGroupDescriptor& d)
{
    switch (d.kind) {
    case VertexGroupDescriptor::Kind::IntegerGroup: return 1;
    case VertexGroupDescriptor::Kind::InfiniteGeneric:
        if (!d.duality_dimension)
            throw Error(ErrorKind::InsufficientData,
                        "vertex '" + s + "' has no duality data; only the L2 branch accepts it");
        return *d.duality_dimension;
    case VertexGroupDescriptor::Kind::Coxeter: {
        auto e = groupring_coxeter(*d.system).expr;
        auto degs = e.degrees();
        bool free = std::all_of(e.terms.begin(), e.terms.end(),
                                [](const ModuleTerm& t) { return t.coefficient.torsion_free(); });
        if (degs.size() != 1 || !free)
            throw Error(ErrorKind::InsufficientData,
                        "Coxeter vertex '" + s + "' is not a virtual duality group; its cohomology is not in one degree");
        return degs[0];
    }
    case VertexGroupDescriptor::Kind::FiniteOfOrder: break;
    }
    return 0;
}

}  // namespace

GradedModuleExpr groupring_graphproduct(const SimplicialComplex& l0,
                                        const std::map<std::string, VertexGroupDescriptor>& v)
{
    auto l = flag_of(l0);
    check_vertices(l, v);
    int finite = 0;
    for (auto& [s, d] : v) finite += d.is_finite();
    if (finite && finite != static_cast<int>(v.size()))
        throw Error(ErrorKind::ProvisoViolation,
                    "either all vertex groups are infinite or all are finite; this graph mixes them");
    GradedModuleExpr e;
    if (finite) {
        for (auto& j : simplex_labels(l))
            for (auto& [n, g] : complement_pair_cohomology(l, j).degrees())
                e.add({j, n, g, "Â(J)", "Â(" + set_text(j) + ")", nullptr});
        e.sort();
        return e;
    }
    bool raag = true;
    std::map<std::string, int> dims;
    for (auto& [s, d] : v) {
        dims[s] = vertex_duality_dimension(s, d);
        raag = raag && d.kind == VertexGroupDescriptor::Kind::IntegerGroup;
    }
    for (auto& j : simplex_labels(l)) {
        int dj = 0;
        for (auto& s : j) dj += dims[s];
        std::string tag = raag ? "Z[A/A_J]" : "Z[G/G_J]";
        std::string desc;
        if (raag)
            desc = j.empty() ? "Z[A]" : "Z[A/A_" + set_text(j) + "]";
        else
            desc = (j.empty() ? std::string("Z[G]") : "Z[G/G_" + set_text(j) + "]") + " tensor H^" +
                   std::to_string(dj) + "(G_J; Z G_J)";
        for (auto& [i, g] : face_pair_cohomology(l, j).degrees())
            e.add({j, i + dj, g, tag, desc, nlohmann::json{{"pair_degree", i}}});
    }
    e.sort();
    return e;
}

GradedModuleExpr groupring_salvetti(const CoxeterSystem& sys)
{
    auto sp = spherical_poset(sys);
    bool ra = sys.is_right_angled();
    GradedModuleExpr e;
    for (auto& sub : sp.subsets) {
        auto j = sys.labels(sub.gens);
        std::string desc = "F_" + set_text(j) + " tensor_{A_J} Z[A]";
        if (ra) desc += j.empty() ? "; right-angled, F_J = Z, Z[A]" : "; right-angled, F_J = Z, Z[A/A_" + set_text(j) + "]";
        for (auto& [i, g] : face_pair_cohomology(sp.nerve, j).degrees())
            e.add({j, i + static_cast<int>(j.size()), g, "F_J ⊗_{A_J} Z[A]", desc, nlohmann::json{{"pair_degree", i}}});
    }
    e.sort();
    return e;
}

nlohmann::json BBGroupRing::to_json() const { return {{"expression", expr.to_json()}, {"acyclic", acyclic}}; }

BBGroupRing groupring_bb(const SimplicialComplex& l)
{
    require_flag(l);
    BBGroupRing r;
    r.acyclic = homology_groups(l, Variant::Reduced).is_zero();
    for (auto& j : simplex_labels(l)) {
        if (j.empty()) continue;
        for (auto& [i, g] : face_pair_cohomology(l, j).degrees())
            r.expr.add({j, i + static_cast<int>(j.size()) - 1, g, "Z[BB/(BB∩A_J)]",
                        "Z[BB/(BB∩A_" + set_text(j) + ")]", nlohmann::json{{"pair_degree", i}}});
    }
    r.expr.sort();
    return r;
}

// ---------------------------------------------------------------------------
// polyhedral joins

namespace {

constexpr std::size_t kChamberLimit = 5000;

FgAbelianGroup with_coefficients(const GradedGroups& c, int i, const FgAbelianGroup& m)
{
    // universal coefficients for a cochain complex of finitely generated free groups
    return direct_sum(tensor(c[i], m), tor(c[i + 1], m));
}

}  // namespace

std::size_t chamber_size(const SimplicialComplex& nerve)
{
    // chains ending at a simplex of size n are ordered set partitions, with or without the empty simplex
    std::vector<double> fubini{1};
    std::size_t total = 1;
    for (auto& s : nerve.simplices()) {
        if (s.empty()) continue;
        while (fubini.size() <= s.size()) {
            std::size_t n = fubini.size();
            double a = 0, binom = 1;
            for (std::size_t k = 1; k <= n; ++k) {
                binom = binom * double(n - k + 1) / double(k);
                a += binom * fubini[n - k];
            }
            fubini.push_back(a);
        }
        double add = 2 * fubini[s.size()];
        if (add > 1e15 || total > std::size_t(1e15)) return std::numeric_limits<std::size_t>::max();
        total += static_cast<std::size_t>(add);
    }
    return total;
}

namespace {

PjoinReport pjoin_one(const PjoinContext& ctx, const SimplicialComplex& big, const std::vector<std::string>& i0,
                      PjoinRoute route, const MirroredChamber* chamber)
{
    auto i = i0;
    std::sort(i.begin(), i.end());
    if (!big.contains_labels(i)) invalid("I is not a simplex of the polyhedral join");
    PjoinReport r;
    r.i = i;

    auto f = ctx.full_simplex_vertices();
    auto base_i = ctx.restricted_base(i);
    for (auto& j : simplex_labels(base_i)) {
        if (std::any_of(j.begin(), j.end(), [&](const std::string& s) { return f.count(s) > 0; })) continue;
        auto pair = face_pair_cohomology(base_i, j);
        auto coeffs = homology_groups(ctx.punctured_join(i, j), Variant::Reduced, Theory::Cohomology);
        int top = 0;
        for (auto& [d, g] : pair.degrees()) top = std::max(top, d);
        for (auto& [jd, m] : coeffs.degrees())
            for (int a = 0; a <= top; ++a) {
                auto g = with_coefficients(pair, a, m);
                r.graded.add({j, a + jd + 1, g, "Z",
                              "H^" + std::to_string(a) + "(^I K_J, d ^I K_J; H^" + std::to_string(jd) + "(L^I(J)))",
                              nlohmann::json{{"i", a}, {"j", jd}}});
            }
    }
    r.graded.sort();

    if (route == PjoinRoute::Auto)
        route = chamber_size(big) <= kChamberLimit ? PjoinRoute::OrderComplex : PjoinRoute::NerveModel;
    if (route == PjoinRoute::OrderComplex) {
        r.route = "order-complex";
        std::optional<MirroredChamber> own;
        if (!chamber) chamber = &own.emplace(big);
        r.direct = homology_groups(chamber->complex(), chamber->mirror_union(i), Variant::Absolute, Theory::Cohomology);
    } else {
        r.route = "nerve-model";
        r.direct = complement_pair_cohomology(big, i);
    }

    std::map<int, std::vector<FgAbelianGroup>> by_degree;
    for (auto& t : r.graded.terms) by_degree[t.degree].push_back(t.coefficient);
    std::set<int> degs;
    for (auto& [d, g] : by_degree) degs.insert(d);
    for (auto& [d, g] : r.direct.degrees()) degs.insert(d);
    for (int d : degs) {
        FgAbelianGroup sum;
        for (auto& g : by_degree[d]) sum = direct_sum(sum, g);
        if (sum.rank != r.direct[d].rank) r.ranks_agree = false;
        if (sum.torsion != r.direct[d].torsion) r.torsion_differs.push_back(d);
    }
    return r;
}

}  // namespace

PjoinReport pjoin_cohomology(const PjoinContext& ctx, const std::vector<std::string>& i, PjoinRoute route)
{
    return pjoin_one(ctx, polyhedral_join(ctx), i, route, nullptr);
}

std::vector<PjoinReport> pjoin_cohomology_all(const PjoinContext& ctx, PjoinRoute route)
{
    auto big = polyhedral_join(ctx);
    if (route == PjoinRoute::Auto)
        route = chamber_size(big) <= kChamberLimit ? PjoinRoute::OrderComplex : PjoinRoute::NerveModel;
    std::optional<MirroredChamber> chamber;
    if (route == PjoinRoute::OrderComplex) chamber.emplace(big);
    std::vector<PjoinReport> out;
    for (auto& s : big.simplices()) out.push_back(pjoin_one(ctx, big, big.labels(s), route, chamber ? &*chamber : nullptr));
    return out;
}

nlohmann::json PjoinReport::to_json() const
{
    nlohmann::json ranks = nlohmann::json::object();
    auto gr = graded.ranks();
    std::set<int> degs;
    for (auto& [d, x] : gr) degs.insert(d);
    for (auto& [d, g] : direct.degrees()) degs.insert(d);
    for (int d : degs) {
        int a = gr.count(d) ? gr.at(d) : 0;
        ranks[std::to_string(d)] = {{"graded", a}, {"direct", direct[d].rank}};
    }
    return {{"I", i},
            {"graded", graded.to_json()},
            {"direct", gpcohom::to_json(direct)},
            {"direct_route", route},
            {"ranks", ranks},
            {"ranks_agree", ranks_agree},
            {"torsion_differs_in_degrees", torsion_differs}};
}

// ---------------------------------------------------------------------------
// duality

DualityContext duality_context_from(const std::string& name)
{
    if (name == "raag") return DualityContext::Raag;
    if (name == "octahedral") return DualityContext::Octahedral;
    if (name == "salvetti") return DualityContext::Salvetti;
    if (name == "bestvina-brady") return DualityContext::BestvinaBrady;
    if (name == "graphproduct-finite") return DualityContext::GraphProductFinite;
    invalid("unknown duality context '" + name + "'");
}

const char* duality_context_name(DualityContext c)
{
    switch (c) {
    case DualityContext::Raag: return "raag";
    case DualityContext::Octahedral: return "octahedral";
    case DualityContext::Salvetti: return "salvetti";
    case DualityContext::BestvinaBrady: return "bestvina-brady";
    case DualityContext::GraphProductFinite: return "graphproduct-finite";
    }
    return "";
}

namespace {

// first degree where the groups are nonzero away from `target` or carry torsion
std::optional<std::pair<int, std::string>> concentration_failure(const GradedGroups& g, int target)
{
    for (auto& [d, x] : g.degrees()) {
        if (d != target) return std::pair{d, std::string("nonzero away from degree ") + std::to_string(target)};
        if (!x.torsion_free()) return std::pair{d, std::string("torsion")};
    }
    return std::nullopt;
}

}  // namespace

DualityVerdict cohen_macaulay(const SimplicialComplex& l)
{
    DualityVerdict v;
    v.condition = "Cohen-Macaulay";
    v.m = l.dimension();
    v.holds = true;
    for (auto& j : simplex_labels(l)) {
        auto g = homology_groups(link(l, j), Variant::Reduced, Theory::Cohomology);
        int target = v.m - static_cast<int>(j.size());
        if (auto bad = concentration_failure(g, target)) {
            v.holds = false;
            v.witness = {{"J", j}, {"degree", bad->first}, {"reason", bad->second}};
            break;
        }
    }
    return v;
}

DualityVerdict punctured_homology(const SimplicialComplex& l)
{
    DualityVerdict v;
    v.condition = "PH^m";
    v.m = l.dimension();
    v.holds = true;
    for (auto& sigma : simplex_labels(l)) {
        std::vector<std::string> rest;
        for (auto& x : l.vertices())
            if (std::find(sigma.begin(), sigma.end(), x) == sigma.end()) rest.push_back(x);
        auto g = homology_groups(full_subcomplex(l, rest), Variant::Reduced, Theory::Homology);
        if (auto bad = concentration_failure(g, v.m)) {
            v.holds = false;
            v.witness = {{"sigma", sigma}, {"degree", bad->first}, {"reason", bad->second}};
            break;
        }
    }
    return v;
}

DualityVerdict duality_report(const SimplicialComplex& l, DualityContext context)
{
    if (context != DualityContext::Salvetti) require_flag(l);
    DualityVerdict v = context == DualityContext::GraphProductFinite ? punctured_homology(l) : cohen_macaulay(l);
    v.context = context;
    if (context == DualityContext::BestvinaBrady) {
        v.acyclic = homology_groups(l, Variant::Reduced).is_zero();
        v.duality_group = v.acyclic && v.holds;
        if (v.duality_group) v.duality_dimension = v.m;
    } else {
        v.duality_group = v.holds;
        if (v.holds) v.duality_dimension = v.m + 1;
    }
    return v;
}

DualityVerdict duality_report(const CoxeterSystem& sys)
{
    return duality_report(spherical_poset(sys).nerve, DualityContext::Salvetti);
}

nlohmann::json DualityVerdict::to_json() const
{
    nlohmann::json j{{"context", duality_context_name(context)},
                     {"condition", condition},
                     {"dimension_of_L", m},
                     {"condition_holds", holds},
                     {"duality_group", duality_group},
                     {"duality_dimension", duality_dimension ? nlohmann::json(*duality_dimension) : nullptr},
                     {"witness", witness}};
    if (context == DualityContext::BestvinaBrady) j["acyclic"] = acyclic;
    return j;
}

}  // namespace gpcohom
