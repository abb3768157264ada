// Acceptance suite: one PASS/FAIL line per criterion on stdout, notes on stderr.
#include "gpcohom/homology.hpp"
#include "gpcohom/mvss.hpp"
#include "gpcohom/products.hpp"
#include "gpcohom/weighted.hpp"
#include "oracle.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace gpcohom;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

using Edges = std::vector<std::pair<std::string, std::string>>;

std::vector<std::string> names(int n, const std::string& prefix = "v")
{
    std::vector<std::string> v;
    for (int i = 0; i < n; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

SimplicialComplex random_flag(std::mt19937& rng, int n, double density)
{
    auto v = names(n);
    Edges e;
    std::bernoulli_distribution coin(density);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) e.emplace_back(v[i], v[j]);
    return flag_complex(v, e);
}

std::vector<std::vector<int>> matrix_of(const CoxeterSystem& sys)
{
    std::vector<std::vector<int>> m(sys.size(), std::vector<int>(sys.size()));
    for (int s = 0; s < sys.size(); ++s)
        for (int t = 0; t < sys.size(); ++t) m[s][t] = sys.m(s, t);
    return m;
}

CoxeterSystem system_of(const std::vector<std::vector<int>>& m, const std::string& prefix = "s")
{
    return CoxeterSystem(names(static_cast<int>(m.size()), prefix), m);
}

Rational random_rational(std::mt19937& rng)
{
    std::uniform_int_distribution<int> d(1, 9);
    return Rational(Integer(d(rng)), Integer(d(rng)));
}

Rational at(const Profile& p, int d)
{
    auto it = p.find(d);
    return it == p.end() ? Rational(0) : it->second;
}

std::string profile_str(const Profile& p)
{
    std::ostringstream s;
    s << "{";
    bool first = true;
    for (auto& [d, v] : p) {
        if (v == 0) continue;
        s << (first ? "" : ", ") << d << ": " << to_string(v);
        first = false;
    }
    return s.str() + "}";
}

// oracle side: the set of faces of a complex, via labels
std::set<oracle::Face> faces_of(const SimplicialComplex& k)
{
    std::vector<std::vector<std::string>> facets;
    for (auto& f : k.facets()) facets.push_back(k.labels(f));
    auto out = oracle::closure(facets);
    if (k.num_vertices() == 0) out = {oracle::Face{}};
    return out;
}

bool oracle_acyclic(const SimplicialComplex& k)
{
    auto f = faces_of(k);
    for (int d = -1; d <= k.dimension(); ++d)
        if (oracle::betti(f, {}, d, true) != 0) return false;
    return true;
}

// ---------------------------------------------------------------------------

Outcome criterion1()
{
    std::mt19937 rng(101);
    const int labels[] = {2, 3, 4, kInf};
    int cases = 0;
    for (int trial = 0; trial < 25; ++trial) {
        int n = std::uniform_int_distribution<int>(1, 6)(rng);
        std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m[i][j] = m[j][i] = labels[std::uniform_int_distribution<int>(0, 3)(rng)];
        auto sys = system_of(m);
        auto sp = spherical_poset(sys);
        for (int k = 0; k < 3; ++k) {
            MultiParameter q;
            for (int c = 0; c < sys.num_classes(); ++c) q.values.push_back(random_rational(rng));
            Rational sum = 0;
            for (auto& d : dims_D(sys, sp, q)) sum += d;
            ++cases;
            if (sum != 1) return {false, "sum " + to_string(sum) + " on trial " + std::to_string(trial)};
        }
    }
    return {true, std::to_string(cases) + " (system, q) pairs sum to 1"};
}

std::vector<int> degree_table(const std::string& name)
{
    auto rank = [&](std::size_t pos) { return std::stoi(name.substr(pos)); };
    std::vector<int> d;
    if (name.rfind("I2(", 0) == 0) return {2, std::stoi(name.substr(3))};
    if (name == "F4") return {2, 6, 8, 12};
    if (name == "H3") return {2, 6, 10};
    if (name == "H4") return {2, 12, 20, 30};
    int n = rank(1);
    if (name[0] == 'A')
        for (int i = 2; i <= n + 1; ++i) d.push_back(i);
    if (name[0] == 'B')
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
    if (name[0] == 'D') {
        for (int i = 1; i < n; ++i) d.push_back(2 * i);
        d.push_back(n);
    }
    return d;
}

std::vector<long long> product_of_q_integers(const std::vector<int>& degrees)
{
    std::vector<long long> p{1};
    for (int d : degrees) {
        std::vector<long long> q(p.size() + d - 1, 0);
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int k = 0; k < d; ++k) q[i + k] += p[i];
        p = q;
    }
    return p;
}

Outcome criterion2()
{
    int finite = 0;
    for (auto& [type, sys] : finite_catalogue(4, 8)) {
        CensusOptions co;
        co.limits.element_cap = 200000;
        auto census = enumerate_words(sys, co);
        auto expect = product_of_q_integers(degree_table(type.name));
        std::vector<long long> got(census.length_profile.begin(), census.length_profile.end());
        long long order = 0;
        for (auto x : expect) order += x;
        auto size = oracle::reflection_group_size(matrix_of(sys), 200000);
        auto sp = spherical_poset(sys);
        auto [num, den] = growth_univariate(sys, sp);
        Rational at_one = evaluate(num, 1) / evaluate(den, 1);
        if (!census.complete || got != expect || static_cast<long long>(size) != order || at_one != Rational(order))
            return {false, type.name + " growth polynomial disagrees"};
        ++finite;
    }
    const int I = kInf;
    std::vector<std::pair<std::string, std::vector<std::vector<int>>>> infinite{
        {"D_inf", {{1, I}, {I, 1}}},
        {"A~2", {{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}},
        {"B~2", {{1, 4, 2}, {4, 1, 4}, {2, 4, 1}}},
        {"G~2", {{1, 6, 2}, {6, 1, 3}, {2, 3, 1}}},
        {"(3,3,4)", {{1, 3, 4}, {3, 1, 3}, {4, 3, 1}}},
        {"(2,4,inf)", {{1, 2, 4}, {2, 1, I}, {4, I, 1}}},
        {"(3,inf,inf)", {{1, 3, I}, {3, 1, I}, {I, I, 1}}},
        {"free3", {{1, I, I}, {I, 1, I}, {I, I, 1}}},
        {"A~3", {{1, 3, 2, 3}, {3, 1, 3, 2}, {2, 3, 1, 3}, {3, 2, 3, 1}}},
        {"pentagon", {{1, 2, I, I, 2}, {2, 1, 2, I, I}, {I, 2, 1, 2, I}, {I, I, 2, 1, 2}, {2, I, I, 2, 1}}},
    };
    const int len = 12;
    for (auto& [name, m] : infinite) {
        auto sys = system_of(m);
        auto sp = spherical_poset(sys);
        auto [num, den] = growth_univariate(sys, sp);
        CensusOptions co;
        co.limits.element_cap = 2000000;
        co.limits.length_bound = len;
        auto census = enumerate_words(sys, co);
        auto bfs = oracle::reflection_length_profile(m, 2000000, len);
        std::vector<Rational> series(len + 1);
        for (int k = 0; k <= len; ++k) {
            Rational x = k < static_cast<int>(num.size()) ? num[k] : Rational(0);
            for (int i = 1; i <= k && i < static_cast<int>(den.size()); ++i) x -= den[i] * series[k - i];
            series[k] = x / den[0];
        }
        if (census.length_profile.size() != static_cast<std::size_t>(len + 1) || bfs.size() != census.length_profile.size())
            return {false, name + ": census length mismatch"};
        for (int k = 0; k <= len; ++k)
            if (series[k] != Rational(census.length_profile[k]) || bfs[k] != census.length_profile[k])
                return {false, name + ": coefficient " + std::to_string(k) + " disagrees"};
    }
    return {true, std::to_string(finite) + " finite types and " + std::to_string(infinite.size()) +
                      " infinite systems through length 12"};
}

Outcome criterion3()
{
    auto sys = CoxeterSystem({"s", "t"}, {{1, kInf}, {kInf, 1}});
    auto sp = spherical_poset(sys);
    for (auto q : {Rational(2), Rational(3), rat(7, 2), rat(1, 2), rat(1, 3)}) {
        auto r = weighted_betti(sys, sp, MultiParameter::uniform(sys, q));
        Profile expect;
        if (q > 1)
            expect[1] = (q - 1) / (q + 1);
        else
            expect[0] = (1 - q) / (1 + q);
        Profile got;
        for (auto& [d, v] : r.betti)
            if (v != 0) got[d] = v;
        if (got != expect) return {false, "q = " + to_string(q) + " gives " + profile_str(got)};
    }
    return {true, "q in {2, 3, 7/2, 1/2, 1/3}"};
}

Outcome criterion4()
{
    std::mt19937 rng(404);
    // finite Coxeter groups of order at most 8
    std::vector<CoxeterSystem> vertex{
        CoxeterSystem({"x"}, {{1}}),
        CoxeterSystem({"x", "y"}, {{1, 2}, {2, 1}}),
        CoxeterSystem({"x", "y"}, {{1, 3}, {3, 1}}),
        CoxeterSystem({"x", "y"}, {{1, 4}, {4, 1}}),
        CoxeterSystem({"x", "y", "z"}, {{1, 2, 2}, {2, 1, 2}, {2, 2, 1}}),
    };
    const Rational qs[] = {rat(1, 3), rat(1, 5), rat(1, 9), rat(1, 17)};
    int found = 0, attempts = 0;
    std::vector<int> orders_seen;
    while (found < 10 && attempts < 200) {
        ++attempts;
        int n = std::uniform_int_distribution<int>(2, 5)(rng);
        auto l = random_flag(rng, n, 0.5);
        std::map<std::string, CoxeterSystem> v;
        for (auto& s : l.vertices()) v.emplace(s, vertex[std::uniform_int_distribution<int>(0, 4)(rng)]);
        auto product = graph_product_system(l, v);
        auto psp = spherical_poset(product);
        for (auto& q0 : qs) {
            std::map<std::string, MultiParameter> q;
            for (auto& [s, sys] : v) q.emplace(s, MultiParameter::uniform(sys, q0));
            auto pq = graph_product_weights(l, v, q, product);
            WeightedResult direct;
            GraphProductResult gp;
            try {
                direct = weighted_betti(product, psp, pq);
                gp = weighted_graphproduct(l, v, q);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::RegimeUncertifiable) continue;
                throw;
            }
            if (gp.branch != "small" || !gp.base_certificate || direct.unverified) continue;
            if (direct.betti != gp.betti) return {false, "Betti numbers differ on attempt " + std::to_string(attempts)};
            auto base = CoxeterSystem::right_angled(l);
            auto bsp = spherical_poset(base);
            Rational vq = growth_value(product, psp, pq);
            Rational wp = growth_value(base, bsp, MultiParameter::from_map(base, gp.p));
            if (vq != wp) return {false, "V(q) = " + to_string(vq) + " but W(p) = " + to_string(wp)};
            ++found;
            break;
        }
    }
    if (found < 10) return {false, "only " + std::to_string(found) + " certifiable graph products found"};
    return {true, "10 graph products, per-degree equality and V(q) = W(p)"};
}

SimplicialComplex graph(const std::vector<std::string>& v, const Edges& e) { return flag_complex(v, e); }

Outcome criterion5()
{
    std::vector<std::pair<std::string, SimplicialComplex>> bases{
        {"path", graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}})},
        {"square", graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})},
        {"triangle", graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}})},
        {"two edges", graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}})},
        {"star", graph({"o", "a", "b", "c"}, {{"o", "a"}, {"o", "b"}, {"o", "c"}})},
    };
    int certified = 0, total = 0;
    for (auto& [name, l] : bases) {
        auto osys = CoxeterSystem::right_angled(octahedralization(l));
        auto osp = spherical_poset(osys);
        for (auto q : {Rational(2), Rational(3)}) {
            std::map<std::string, std::pair<Rational, Rational>> qq;
            for (auto& s : l.vertices()) qq[s] = {q, q};
            auto rep = oct_weighted(l, qq);
            auto direct = weighted_betti(osys, osp, MultiParameter::uniform(osys, q), ForcedRegime::Large);
            ++total;
            if (!direct.unverified) ++certified;
            if (!rep.large || *rep.large != direct.betti)
                return {false, name + " at q = " + to_string(q) + ": " + profile_str(rep.large.value_or(Profile{})) +
                                   " vs " + profile_str(direct.betti)};
        }
    }
    return {true, "5 octahedralizations at q in {2, 3} (" + std::to_string(certified) + "/" + std::to_string(total) +
                      " with certified large regime)"};
}

SimplicialComplex random_factor(std::mt19937& rng, bool want_simplex)
{
    std::vector<std::string> v{"x", "y", "z", "w"};
    if (want_simplex) {
        int k = std::uniform_int_distribution<int>(1, 3)(rng);
        return simplex(std::vector<std::string>(v.begin(), v.begin() + k));
    }
    for (;;) {
        int k = std::uniform_int_distribution<int>(2, 4)(rng);
        std::vector<std::string> u(v.begin(), v.begin() + k);
        std::vector<std::vector<std::string>> facets;
        std::bernoulli_distribution coin(0.5);
        for (std::size_t mask = 1; mask < (std::size_t(1) << k); ++mask) {
            std::vector<std::string> f;
            for (int i = 0; i < k; ++i)
                if (mask >> i & 1) f.push_back(u[i]);
            if (f.size() <= 2 && coin(rng)) facets.push_back(f);
        }
        for (auto& x : u) facets.push_back({x});
        auto c = SimplicialComplex::from_facets(u, facets);
        if (!c.is_full_simplex()) return c;
    }
}

std::vector<PjoinContext> pjoin_corpus()
{
    std::mt19937 rng(606);
    std::vector<PjoinContext> out;
    while (out.size() < 30) {
        int n = std::uniform_int_distribution<int>(1, 4)(rng);
        auto l = random_flag(rng, n, 0.5);
        std::map<std::string, SimplicialComplex> f;
        int k = 0;
        for (auto& s : l.vertices()) {
            // alternate so that every context with two or more vertices mixes both kinds
            bool simplex_factor = (k++ + static_cast<int>(out.size())) % 2 == 0;
            f.emplace(s, random_factor(rng, simplex_factor));
        }
        out.emplace_back(l, f);
    }
    return out;
}

Outcome criterion6(const std::vector<PjoinContext>& corpus)
{
    int simplices = 0, torsion_cases = 0, nerve_route = 0;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        for (auto& r : pjoin_cohomology_all(corpus[c])) {
            ++simplices;
            if (r.route != "order-complex") ++nerve_route;
            if (!r.ranks_agree) return {false, "context " + std::to_string(c) + " disagrees in rank"};
            if (!r.torsion_differs.empty()) {
                ++torsion_cases;
                std::cerr << "  note: context " << c << " torsion differs in " << r.torsion_differs.size()
                          << " degree(s)\n";
            }
        }
    }
    std::cerr << "  note: torsion comparison logged for " << simplices << " simplices, " << torsion_cases
              << " with differing torsion\n";
    return {true, "30 contexts, " + std::to_string(simplices) + " simplices I (" + std::to_string(nerve_route) +
                      " through the nerve model)"};
}

Outcome criterion7(const std::vector<PjoinContext>& corpus)
{
    int degenerate = 0;
    std::size_t largest = 0, nonzero_maps = 0;
    for (std::size_t c = 0; c < corpus.size(); ++c) {
        auto cover = join_cover(corpus[c]);
        largest = std::max(largest, cover.ambient.size());
        auto r = build_pages(cover);
        for (auto& v : r.conditions.z) nonzero_maps += v.vacuous ? 0 : 1;
        std::string where = "context " + std::to_string(c);
        if (!r.conditions.z_holds || !r.conditions.z_prime_holds) return {false, where + ": a map is not zero"};
        if (!r.rows_exact) return {false, where + ": rows of E0 not exact"};
        if (!r.total_matches_direct) return {false, where + ": total complex differs from the space"};
        if (!r.degenerates || !r.e2_matches_summands) return {false, where + ": no degeneration at E2"};
        ++degenerate;
    }
    std::cerr << "  note: largest ambient join has " << largest << " simplices; " << nonzero_maps
              << " non-vacuous (Z) maps checked\n";
    return {true, std::to_string(degenerate) + " join covers: zero maps, exact rows, degeneration at E2"};
}

Outcome criterion8()
{
    auto two = graph({"a", "b"}, {});
    std::map<std::string, VertexGroupDescriptor> z2{{"a", VertexGroupDescriptor::integer()},
                                                     {"b", VertexGroupDescriptor::integer()}};
    auto f2 = l2_graphproduct(two, z2);
    if (f2 != Profile{{1, 1}}) return {false, "F2 gives " + profile_str(f2)};

    auto square = graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    std::map<std::string, VertexGroupDescriptor> z4;
    for (auto& s : square.vertices()) z4.emplace(s, VertexGroupDescriptor::integer());
    auto ff = l2_graphproduct(square, z4);
    if (ff != Profile{{2, 1}}) return {false, "F2 x F2 gives " + profile_str(ff)};

    auto z3 = l2_graphproduct_finite(two, {{"a", Integer(3)}, {"b", Integer(3)}});
    Profile nz;
    Rational alternating = 0;
    for (auto& [d, v] : z3.betti)
        if (v != 0) {
            nz[d] = v;
            alternating += d % 2 ? -v : v;
        }
    // orbifold Euler characteristic of a graph product of finite groups, summed over simplices
    Rational chi = 0;
    for (auto& f : faces_of(two)) {
        Rational term = 1;
        for (std::size_t i = 0; i < f.size(); ++i) term *= rat(1, 3) - 1;
        chi += term;
    }
    if (nz != Profile{{1, rat(1, 3)}}) return {false, "Z/3 * Z/3 gives " + profile_str(nz)};
    if (at(nz, 1) != -chi || alternating != chi) return {false, "Euler characteristic mismatch"};

    auto path = graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    auto bb = l2_bb(path);
    if (bb.l2 != Profile{{1, 1}}) return {false, "BB of the path gives " + profile_str(bb.l2)};
    return {true, "F2, F2 x F2, Z/3 * Z/3 (b1 = -chi_orb = 1/3), BB of the path"};
}

std::vector<SimplicialComplex> acyclic_corpus(const std::vector<PjoinContext>& pj)
{
    std::vector<SimplicialComplex> out;
    for (auto& c : pj)
        if (oracle_acyclic(c.base)) out.push_back(c.base);
    auto v = names(7);
    out.push_back(graph(v, {{v[0], v[1]}, {v[1], v[2]}, {v[2], v[3]}, {v[3], v[4]}, {v[4], v[5]}, {v[5], v[6]}}));
    out.push_back(graph(v, {{v[0], v[1]}, {v[0], v[2]}, {v[0], v[3]}, {v[0], v[4]}, {v[0], v[5]}, {v[0], v[6]}}));
    // cone over a pentagon
    out.push_back(graph({v[0], v[1], v[2], v[3], v[4], v[5]},
                        {{v[1], v[2]}, {v[2], v[3]}, {v[3], v[4]}, {v[4], v[5]}, {v[5], v[1]}, {v[0], v[1]},
                         {v[0], v[2]}, {v[0], v[3]}, {v[0], v[4]}, {v[0], v[5]}}));
    std::mt19937 rng(909);
    int added = 0;
    while (added < 20) {
        auto l = random_flag(rng, std::uniform_int_distribution<int>(5, 7)(rng), 0.45);
        if (!oracle_acyclic(l)) continue;
        out.push_back(l);
        ++added;
    }
    return out;
}

using TermKey = std::tuple<std::vector<std::string>, int, std::string>;

std::multiset<TermKey> term_keys(const GradedModuleExpr& e, int shift)
{
    std::multiset<TermKey> out;
    for (auto& t : e.terms) out.emplace(t.j, t.degree + shift, t.coefficient.str());
    return out;
}

Outcome criterion9(const std::vector<PjoinContext>& pj)
{
    auto corpus = acyclic_corpus(pj);
    for (std::size_t k = 0; k < corpus.size(); ++k) {
        auto& l = corpus[k];
        std::map<std::string, VertexGroupDescriptor> z;
        for (auto& s : l.vertices()) z.emplace(s, VertexGroupDescriptor::integer());
        auto raag = groupring_graphproduct(l, z);
        auto bb = groupring_bb(l);
        if (!bb.acyclic) return {false, "complex " + std::to_string(k) + " not recognised as acyclic"};
        if (term_keys(raag, -1) != term_keys(bb.expr, 0))
            return {false, "shift identity fails on complex " + std::to_string(k)};
    }
    auto square = graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}});
    auto two_edges = graph({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    std::vector<std::string> o{"a", "A", "b", "B", "c", "C"};
    Edges oe;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (i / 2 != j / 2) oe.emplace_back(o[i], o[j]);
    auto octahedron = graph(o, oe);
    bool ok = cohen_macaulay(square).holds && !cohen_macaulay(two_edges).holds && cohen_macaulay(octahedron).holds &&
              punctured_homology(square).holds;
    if (!ok) return {false, "duality verdicts differ from {true, false, true} and PH^1 true"};
    return {true, std::to_string(corpus.size()) + " acyclic complexes term by term; CM {true, false, true}; PH^1 true"};
}

Outcome criterion10()
{
    auto v = names(5);
    std::vector<SimplicialComplex> bases{
        graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}),
        graph({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c"}, {"c", "d"}}),
        graph({"o", "a", "b", "c"}, {{"o", "a"}, {"o", "b"}, {"o", "c"}}),
        graph({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}}),
        graph(v, {{v[0], v[1]}, {v[0], v[2]}, {v[0], v[3]}, {v[1], v[2]}, {v[2], v[3]}, {v[3], v[4]}}),
    };
    for (std::size_t k = 0; k < bases.size(); ++k) {
        auto& l = bases[k];
        if (!oracle_acyclic(l)) return {false, "base " + std::to_string(k) + " is not acyclic"};
        auto bb = l2_bb(l);
        auto limits = oct_limits(l);
        std::set<int> covered;
        for (auto& x : limits) {
            covered.insert(x.degree);
            Rational expect = at(bb.l2, x.degree);
            if (!x.from_below || !x.from_above || *x.from_below != expect || *x.from_above != expect ||
                x.link_sum != expect)
                return {false, "base " + std::to_string(k) + " degree " + std::to_string(x.degree)};
        }
        for (auto& [d, val] : bb.l2)
            if (val != 0 && !covered.count(d)) return {false, "base " + std::to_string(k) + " misses degree " + std::to_string(d)};
    }
    return {true, "5 acyclic flag complexes, limits from both sides equal the link sums"};
}

}  // namespace

int main()
{
    std::vector<PjoinContext> corpus = pjoin_corpus();
    std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"decomposition-dimension identity", criterion1},
        {"growth series cross-validation", criterion2},
        {"dihedral weighted Betti numbers", criterion3},
        {"graph products of finite Coxeter groups", criterion4},
        {"octahedralizations at large weights", criterion5},
        {"polyhedral join formula vs direct", [&] { return criterion6(corpus); }},
        {"spectral sequence oracle", [&] { return criterion7(corpus); }},
        {"L2 Betti numbers of known groups", criterion8},
        {"shift identity and duality verdicts", [&] { return criterion9(corpus); }},
        {"octahedral limits at q = 1", criterion10},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << o.detail
                  << std::endl;
        std::cerr << "  note: criterion " << i + 1 << " took " << secs << " s\n";
    }
    return failed == 0 ? 0 : 1;
}
