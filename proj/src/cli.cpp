#include "gpcohom/cli.hpp"

#include "gpcohom/homology.hpp"
#include "gpcohom/mvss.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <set>
#include <sstream>

namespace gpcohom {

namespace {

using json = nlohmann::json;

const std::vector<std::string> kTasks{"l2", "groupring", "weighted", "oct", "duality", "pjoin", "verify", "growth"};

void allow_keys(const json& j, const std::set<std::string>& keys, const std::string& where)
{
    for (auto& [k, v] : j.items())
        if (!keys.count(k)) invalid("schema violation: unknown key '" + k + "' in " + where);
}

Rational weight_of(const json& v, const std::string& key)
{
    if (!v.is_string()) invalid("schema violation: weight for '" + key + "' must be an exact rational string such as \"3/2\"");
    Rational q = parse_rational(v.get<std::string>());
    if (q <= 0) invalid("weight for '" + key + "' must be positive");
    return q;
}

int edge_label(const json& v)
{
    if (v.is_string()) {
        auto s = v.get<std::string>();
        if (s == "inf" || s == "infinity") return kInf;
    }
    if (!v.is_number_integer()) invalid("schema violation: edge label must be an integer >= 2 or \"infinity\"");
    long long m = v.get<long long>();
    if (m < 2) invalid("schema violation: edge label " + std::to_string(m) + " (labels must be >= 2)");
    if (m > 1000000) invalid("schema violation: edge label " + std::to_string(m) + " is too large");
    return static_cast<int>(m);
}

int positive_int(const json& v, const std::string& name, int lo)
{
    if (!v.is_number_integer() || v.get<long long>() < lo || v.get<long long>() > 1000000000)
        invalid("schema violation: option '" + name + "' must be an integer >= " + std::to_string(lo));
    return static_cast<int>(v.get<long long>());
}

}  // namespace

JobConfig JobConfig::from_json(const json& j)
{
    if (!j.is_object()) invalid("schema violation: the config must be a JSON object");
    allow_keys(j, {"version", "graph", "vertex_groups", "weights", "tasks", "options"}, "the config");
    JobConfig c;
    c.source = j;
    if (!j.contains("version") || !j["version"].is_number_integer()) invalid("schema violation: missing integer \"version\"");
    c.version = j["version"].get<int>();
    if (c.version != kSchemaVersion) invalid("unsupported config version " + std::to_string(c.version));

    if (!j.contains("graph") || !j["graph"].is_object()) invalid("schema violation: missing \"graph\" object");
    const json& g = j["graph"];
    allow_keys(g, {"vertices", "edges", "label_default"}, "graph");
    int def = g.contains("label_default") ? edge_label(g["label_default"]) : 2;
    std::set<std::string> seen;
    for (auto& v : g.value("vertices", json::array())) {
        if (!v.is_string()) invalid("schema violation: vertex names must be strings");
        auto s = v.get<std::string>();
        if (!seen.insert(s).second) invalid("duplicate vertex '" + s + "'");
        c.vertices.push_back(s);
    }
    std::set<std::pair<std::string, std::string>> pairs;
    for (auto& e : g.value("edges", json::array())) {
        if (!e.is_array() || e.size() < 2 || e.size() > 3 || !e[0].is_string() || !e[1].is_string())
            invalid("schema violation: each edge is [s, t] or [s, t, label]");
        auto s = e[0].get<std::string>(), t = e[1].get<std::string>();
        if (!seen.count(s) || !seen.count(t)) invalid("edge references an unknown vertex: " + e.dump());
        if (s == t) invalid("loop at vertex '" + s + "'");
        if (!pairs.insert(std::minmax(s, t)).second) invalid("repeated edge " + e.dump());
        c.edges.emplace_back(s, t, e.size() == 3 ? edge_label(e[2]) : def);
    }

    if (j.contains("vertex_groups")) {
        if (!j["vertex_groups"].is_object()) invalid("schema violation: \"vertex_groups\" must be an object");
        for (auto& [k, v] : j["vertex_groups"].items()) {
            if (!seen.count(k)) invalid("vertex group given for unknown vertex '" + k + "'");
            c.vertex_groups.emplace(k, VertexGroupDescriptor::from_json(v));
        }
    }
    if (j.contains("weights")) {
        if (!j["weights"].is_object()) invalid("schema violation: \"weights\" must be an object");
        for (auto& [k, v] : j["weights"].items()) {
            bool known = k == "*" || seen.count(k) || (k.rfind("t_", 0) == 0 && seen.count(k.substr(2)));
            if (!known) invalid("weight given for unknown generator or class '" + k + "'");
            c.weights[k] = weight_of(v, k);
        }
    }
    if (j.contains("tasks")) {
        if (!j["tasks"].is_array()) invalid("schema violation: \"tasks\" must be an array");
        for (auto& t : j["tasks"]) {
            if (!t.is_string() || std::find(kTasks.begin(), kTasks.end(), t.get<std::string>()) == kTasks.end())
                invalid("schema violation: unknown task " + t.dump());
            if (std::find(c.tasks.begin(), c.tasks.end(), t.get<std::string>()) != c.tasks.end())
                invalid("task " + t.dump() + " listed twice");
            c.tasks.push_back(t.get<std::string>());
        }
    }
    if (j.contains("options")) {
        const json& o = j["options"];
        if (!o.is_object()) invalid("schema violation: \"options\" must be an object");
        allow_keys(o,
                   {"max_length", "max_elements", "force_regime", "census_length", "duality_context", "bestvina_brady",
                    "oct_weights", "pjoin"},
                   "options");
        auto& opt = c.options;
        if (o.contains("max_length")) opt.max_length = positive_int(o["max_length"], "max_length", 0);
        if (o.contains("max_elements"))
            opt.max_elements = static_cast<std::size_t>(positive_int(o["max_elements"], "max_elements", 1));
        if (o.contains("census_length")) opt.census_length = positive_int(o["census_length"], "census_length", 0);
        if (o.contains("force_regime") && !o["force_regime"].is_null()) {
            auto f = o["force_regime"].is_string() ? o["force_regime"].get<std::string>() : std::string();
            if (f == "small")
                opt.force = ForcedRegime::Small;
            else if (f == "large")
                opt.force = ForcedRegime::Large;
            else
                invalid("schema violation: force_regime must be \"small\" or \"large\"");
        }
        if (o.contains("duality_context")) opt.duality = duality_context_from(o["duality_context"].get<std::string>());
        if (o.contains("bestvina_brady")) {
            if (!o["bestvina_brady"].is_boolean()) invalid("schema violation: bestvina_brady must be a boolean");
            opt.bestvina_brady = o["bestvina_brady"].get<bool>();
        }
        if (o.contains("oct_weights")) {
            for (auto& [k, v] : o["oct_weights"].items()) {
                if (!seen.count(k)) invalid("oct weight given for unknown vertex '" + k + "'");
                if (!v.is_array() || v.size() != 2) invalid("schema violation: oct weights are [q_plus, q_minus]");
                opt.oct_weights[k] = {weight_of(v[0], k), weight_of(v[1], k)};
            }
        }
        if (o.contains("pjoin")) {
            const json& p = o["pjoin"];
            allow_keys(p, {"factors", "simplex", "route"}, "options.pjoin");
            std::map<std::string, SimplicialComplex> factors;
            if (!p.contains("factors")) invalid("schema violation: pjoin needs \"factors\"");
            for (auto& [k, v] : p["factors"].items()) {
                if (!seen.count(k)) invalid("pjoin factor given for unknown vertex '" + k + "'");
                factors.emplace(k, complex_from_json(v));
            }
            PjoinOptions po{PjoinContext(c.flag(), factors), std::nullopt, PjoinRoute::Auto};
            if (p.contains("simplex")) po.simplex = p["simplex"].get<std::vector<std::string>>();
            std::string route = p.value("route", std::string("auto"));
            if (route == "order-complex")
                po.route = PjoinRoute::OrderComplex;
            else if (route == "nerve")
                po.route = PjoinRoute::NerveModel;
            else if (route != "auto")
                invalid("schema violation: pjoin route must be auto, order-complex or nerve");
            opt.pjoin = std::move(po);
        }
    }
    return c;
}

SimplicialComplex JobConfig::flag() const
{
    std::vector<std::pair<std::string, std::string>> e;
    for (auto& [s, t, m] : edges) e.emplace_back(s, t);
    return flag_complex(vertices, e);
}

CoxeterSystem JobConfig::coxeter() const
{
    const int n = static_cast<int>(vertices.size());
    std::vector<std::vector<int>> m(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    auto idx = [&](const std::string& s) { return static_cast<int>(std::find(vertices.begin(), vertices.end(), s) - vertices.begin()); };
    for (auto& [s, t, l] : edges) m[idx(s)][idx(t)] = m[idx(t)][idx(s)] = l;
    return CoxeterSystem(vertices, m);
}

Limits JobConfig::limits() const
{
    Limits l;
    l.element_cap = options.max_elements;
    return l;
}

std::map<std::string, VertexGroupDescriptor> JobConfig::groups() const
{
    std::map<std::string, VertexGroupDescriptor> out;
    for (auto& s : vertices) {
        auto it = vertex_groups.find(s);
        out.emplace(s, it == vertex_groups.end() ? VertexGroupDescriptor::integer() : it->second);
    }
    return out;
}

std::string digest(const json& j)
{
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : j.dump()) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

// ---------------------------------------------------------------------------

namespace {

MultiParameter weights_for(const JobConfig& c, const CoxeterSystem& sys)
{
    if (c.weights.empty())
        throw Error(ErrorKind::InsufficientData, "this task needs \"weights\"");
    std::map<std::string, Rational> m;
    for (auto& [k, v] : c.weights)
        if (k != "*") m[k] = v;
    auto star = c.weights.find("*");
    if (star != c.weights.end()) {
        auto names = sys.class_names();
        for (int s = 0; s < sys.size(); ++s)
            if (!m.count(sys.generators()[s]) && !m.count(names[sys.class_of()[s]])) m[sys.generators()[s]] = star->second;
    }
    return MultiParameter::from_map(sys, m);
}

std::map<std::string, std::pair<Rational, Rational>> oct_weights_for(const JobConfig& c)
{
    std::map<std::string, std::pair<Rational, Rational>> q;
    for (auto& s : c.vertices) {
        if (auto it = c.options.oct_weights.find(s); it != c.options.oct_weights.end())
            q[s] = it->second;
        else if (auto w = c.weights.find(s); w != c.weights.end())
            q[s] = {w->second, w->second};
        else if (auto star = c.weights.find("*"); star != c.weights.end())
            q[s] = {star->second, star->second};
        else
            throw Error(ErrorKind::InsufficientData, "no octahedral weight for vertex '" + s + "'");
    }
    return q;
}

bool all_coxeter(const JobConfig& c)
{
    if (c.vertex_groups.size() != c.vertices.size()) return false;
    return std::all_of(c.vertex_groups.begin(), c.vertex_groups.end(),
                       [](auto& kv) { return kv.second.kind == VertexGroupDescriptor::Kind::Coxeter; });
}

// vertex systems and weights of a graph product of Coxeter groups
std::pair<std::map<std::string, CoxeterSystem>, std::map<std::string, MultiParameter>> coxeter_vertices(const JobConfig& c)
{
    std::map<std::string, CoxeterSystem> v;
    std::map<std::string, MultiParameter> q;
    auto star = c.weights.find("*");
    for (auto& [s, d] : c.vertex_groups) {
        v.emplace(s, *d.system);
        if (d.q)
            q.emplace(s, *d.q);
        else if (star != c.weights.end())
            q.emplace(s, MultiParameter::uniform(*d.system, star->second));
        else
            throw Error(ErrorKind::InsufficientData, "vertex group '" + s + "' has no weight and no \"*\" weight is given");
    }
    return {v, q};
}

json task_l2(const JobConfig& c)
{
    auto l = c.flag();
    auto groups = c.groups();
    json out;
    bool finite = std::all_of(groups.begin(), groups.end(), [](auto& kv) {
        return kv.second.kind == VertexGroupDescriptor::Kind::FiniteOfOrder;
    });
    if (finite && !groups.empty()) {
        std::map<std::string, Integer> orders;
        for (auto& [s, d] : groups) orders[s] = d.order;
        out["graph_product"] = l2_graphproduct_finite(l, orders, c.options.force).to_json();
    } else {
        auto betti = l2_graphproduct(l, groups);
        out["graph_product"] = {{"betti", to_json(betti)}};
    }
    if (c.options.bestvina_brady) out["bestvina_brady"] = l2_bb(l).to_json();
    return out;
}

json task_groupring(const JobConfig& c)
{
    auto l = c.flag();
    json out;
    out["graph_product"] = groupring_graphproduct(l, c.groups()).to_json();
    if (c.options.bestvina_brady) out["bestvina_brady"] = groupring_bb(l).to_json();
    if (c.options.census_length) out["coxeter"] = groupring_coxeter(c.coxeter(), c.options.census_length).to_json();
    return out;
}

json task_weighted(const JobConfig& c)
{
    if (all_coxeter(c)) {
        auto [v, q] = coxeter_vertices(c);
        auto gp = weighted_graphproduct(c.flag(), v, q, c.options.force);
        return {{"graph_product", gp.to_json()}};
    }
    auto sys = c.coxeter();
    auto sp = spherical_poset(sys, c.limits());
    auto q = weights_for(c, sys);
    json w = json::array();
    for (auto& x : q.values) w.push_back(to_string(x));
    // computed first: a throw inside a braced json initializer leaks with gcc 11
    auto r = weighted_betti(sys, sp, q, c.options.force);
    return {{"coxeter", r.to_json()}, {"class_weights", w}, {"classes", sys.class_names()}};
}

json task_oct(const JobConfig& c) { return oct_weighted(c.flag(), oct_weights_for(c), c.options.force).to_json(); }

json task_duality(const JobConfig& c)
{
    if (c.options.duality == DualityContext::Salvetti) return duality_report(c.coxeter()).to_json();
    return duality_report(c.flag(), c.options.duality).to_json();
}

std::vector<PjoinReport> pjoin_reports(const PjoinOptions& p)
{
    if (p.simplex) return {pjoin_cohomology(p.context, *p.simplex, p.route)};
    return pjoin_cohomology_all(p.context, p.route);
}

const PjoinOptions& need_pjoin(const JobConfig& c)
{
    if (!c.options.pjoin) throw Error(ErrorKind::InsufficientData, "the pjoin task needs options.pjoin.factors");
    return *c.options.pjoin;
}

json task_pjoin(const JobConfig& c)
{
    json arr = json::array();
    bool agree = true;
    for (auto& r : pjoin_reports(need_pjoin(c))) {
        agree = agree && r.ranks_agree;
        arr.push_back(r.to_json());
    }
    return {{"reports", arr}, {"ranks_agree", agree}};
}

std::vector<Rational> expand(const UPoly& num, const UPoly& den, int n)
{
    std::vector<Rational> c(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational x = k < static_cast<int>(num.size()) ? num[k] : Rational(0);
        for (int i = 1; i <= k && i < static_cast<int>(den.size()); ++i) x -= den[i] * c[k - i];
        c[k] = x / den[0];
    }
    return c;
}

json upoly_json(const UPoly& p)
{
    json a = json::array();
    for (auto& x : p) a.push_back(to_string(x));
    return a;
}

struct GrowthData {
    json report;
    bool series_matches = true;
    std::optional<bool> order_matches;
};

GrowthData growth(const JobConfig& c)
{
    auto sys = c.coxeter();
    auto sp = spherical_poset(sys, c.limits());
    auto [num, den] = growth_univariate(sys, sp);
    CensusOptions co;
    co.limits = c.limits();
    co.limits.length_bound = c.options.max_length;
    auto census = enumerate_words(sys, co);
    GrowthData g;
    const int n = static_cast<int>(census.length_profile.size()) - 1;
    auto series = expand(num, den, std::max(n, 0));
    json prof = json::array(), ser = json::array();
    for (int k = 0; k <= n; ++k) {
        prof.push_back(census.length_profile[k]);
        ser.push_back(to_string(series[k]));
        if (series[k] != Rational(census.length_profile[k])) g.series_matches = false;
    }
    auto rf = growth_series(sys, sp);
    g.report = {{"series", to_json(rf)},
                {"univariate", {{"numerator", upoly_json(num)}, {"denominator", upoly_json(den)}}},
                {"classes", sys.class_names()},
                {"finite", sp.finite_group()},
                {"census", {{"max_length", c.options.max_length}, {"complete", census.complete}, {"length_profile", prof}}},
                {"series_coefficients", ser},
                {"series_matches_census", g.series_matches}};
    if (sp.finite_group() && census.complete) {
        std::size_t total = 0;
        for (auto x : census.length_profile) total += x;
        Rational at_one = evaluate(num, 1) / evaluate(den, 1);
        g.order_matches = at_one == Rational(total);
        g.report["order"] = total;
        g.report["value_at_one"] = to_string(at_one);
    }
    return g;
}

json check(const std::string& name, const std::string& status, json detail = nullptr)
{
    json j{{"check", name}, {"status", status}};
    if (!detail.is_null()) j["detail"] = detail;
    return j;
}

json pass_fail(const std::string& name, bool ok, json detail = nullptr)
{
    return check(name, ok ? "pass" : "fail", std::move(detail));
}

template <class F>
json guarded(const std::string& name, F&& f)
{
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::RegimeUncertifiable || e.kind() == ErrorKind::ResourceCap ||
            e.kind() == ErrorKind::Pole)
            return check(name, "skipped", {{"reason", kind_name(e.kind())}, {"message", e.what()}});
        throw;
    }
}

json task_verify(const JobConfig& c)
{
    json checks = json::array();
    auto sys = c.coxeter();

    checks.push_back(guarded("growth-vs-census", [&] {
        auto g = growth(c);
        bool ok = g.series_matches && g.order_matches.value_or(true);
        return pass_fail("growth-vs-census", ok, {{"length_profile", g.report["census"]["length_profile"]}});
    }));

    checks.push_back(guarded("dimension-sum", [&] {
        auto sp = spherical_poset(sys, c.limits());
        auto q = c.weights.empty() ? MultiParameter::uniform(sys, 2) : weights_for(c, sys);
        Rational sum = 0;
        for (auto& d : dims_D(sys, sp, q)) sum += d;
        return pass_fail("dimension-sum", sum == 1, {{"sum", to_string(sum)}, {"default_weight", c.weights.empty()}});
    }));

    if (!c.weights.empty() && !all_coxeter(c))
        checks.push_back(guarded("nerve-vs-chamber", [&] {
            auto sp = spherical_poset(sys, c.limits());
            if (chamber_size(sp.nerve) > 5000) return check("nerve-vs-chamber", "skipped", {{"reason", "chamber too large"}});
            auto q = weights_for(c, sys);
            auto a = weighted_betti(sys, sp, q, ForcedRegime::None, BettiSource::NerveShortcut);
            auto b = weighted_betti(sys, sp, q, ForcedRegime::None, BettiSource::Chamber);
            return pass_fail("nerve-vs-chamber", a.betti == b.betti, {{"betti", to_json(a.betti)}});
        }));

    if (all_coxeter(c))
        checks.push_back(guarded("graph-product-vs-flattened", [&] {
            auto l = c.flag();
            auto [v, q] = coxeter_vertices(c);
            auto gp = weighted_graphproduct(l, v, q);
            auto product = graph_product_system(l, v);
            auto psp = spherical_poset(product, c.limits());
            auto pq = graph_product_weights(l, v, q, product);
            auto flat = weighted_betti(product, psp, pq);
            json detail{{"branch", gp.branch}, {"betti", to_json(gp.betti)}};
            bool ok = flat.betti == gp.betti;
            if (gp.branch == "small") {
                auto base = CoxeterSystem::right_angled(l);
                auto bsp = spherical_poset(base, c.limits());
                std::map<std::string, Rational> p;
                for (auto& [s, x] : gp.p) p[s] = x;
                Rational vq = growth_value(product, psp, pq);
                Rational wp = growth_value(base, bsp, MultiParameter::from_map(base, p));
                detail["V(q)"] = to_string(vq);
                detail["W(p)"] = to_string(wp);
                ok = ok && vq == wp;
            }
            return pass_fail("graph-product-vs-flattened", ok, detail);
        }));

    bool all_large = false;
    std::map<std::string, std::pair<Rational, Rational>> oq;
    try {
        oq = oct_weights_for(c);
        all_large = !oq.empty() && std::all_of(oq.begin(), oq.end(), [](auto& kv) {
            return kv.second.first > 1 && kv.second.second > 1;
        });
    } catch (const Error&) {
    }
    if (all_large)
        checks.push_back(guarded("oct-large-vs-flattened", [&] {
            auto l = c.flag();
            auto osys = CoxeterSystem::right_angled(octahedralization(l));
            auto osp = spherical_poset(osys, c.limits());
            std::map<std::string, Rational> flat;
            for (auto& [s, ab] : oq) {
                flat["(" + s + ",+)"] = ab.first;
                flat["(" + s + ",-)"] = ab.second;
            }
            auto direct = weighted_betti(osys, osp, MultiParameter::from_map(osys, flat), ForcedRegime::Large);
            auto assembled = oct_large(l, oq);
            return pass_fail("oct-large-vs-flattened", assembled == direct.betti,
                             {{"betti", to_json(assembled)}, {"regime_certified", !direct.unverified}});
        }));

    if (c.options.pjoin) {
        const auto& p = *c.options.pjoin;
        checks.push_back(guarded("pjoin-direct-vs-formula", [&] {
            bool ok = true;
            json torsion = json::array();
            for (auto& r : pjoin_reports(p)) {
                ok = ok && r.ranks_agree;
                if (!r.torsion_differs.empty()) torsion.push_back({{"I", r.i}, {"degrees", r.torsion_differs}});
            }
            return pass_fail("pjoin-direct-vs-formula", ok, {{"torsion_differs", torsion}});
        }));
        checks.push_back(guarded("mvss-degeneration", [&] {
            auto r = build_pages(join_cover(p.context));
            bool ok = r.rows_exact && r.total_matches_direct;
            if (r.conditions.z_holds) ok = ok && r.degenerates && r.e2_matches_summands;
            return pass_fail("mvss-degeneration", ok,
                             {{"rows_exact", r.rows_exact},
                              {"total_matches_direct", r.total_matches_direct},
                              {"Z", r.conditions.z_holds},
                              {"Z_prime", r.conditions.z_prime_holds},
                              {"degenerates", r.degenerates}});
        }));
    }

    bool failed = false;
    for (auto& ch : checks) failed = failed || ch["status"] == "fail";
    return {{"checks", checks}, {"passed", !failed}};
}

}  // namespace

Report run(const JobConfig& c, bool timing)
{
    Report rep;
    json& b = rep.body;
    b["version"] = kSchemaVersion;
    b["tool"] = kToolVersion;
    b["input_digest"] = digest(c.source);
    b["results"] = json::object();
    b["warnings"] = json::array();
    b["unverified"] = c.options.force != ForcedRegime::None;
    if (c.tasks.empty()) b["warnings"].push_back("no tasks requested");
    if (c.options.force != ForcedRegime::None)
        b["warnings"].push_back("regime forced by override; results carry the unverified-hypothesis marker");
    json times = json::object();
    for (auto& t : c.tasks) {
        auto start = std::chrono::steady_clock::now();
        json r;
        if (t == "l2")
            r = task_l2(c);
        else if (t == "groupring")
            r = task_groupring(c);
        else if (t == "weighted")
            r = task_weighted(c);
        else if (t == "oct")
            r = task_oct(c);
        else if (t == "duality")
            r = task_duality(c);
        else if (t == "pjoin")
            r = task_pjoin(c);
        else if (t == "growth")
            r = growth(c).report;
        else if (t == "verify") {
            r = task_verify(c);
            rep.checks_failed = rep.checks_failed || !r["passed"].get<bool>();
        }
        if (c.options.force != ForcedRegime::None) r["markers"] = {"unverified-hypothesis"};
        b["results"][t] = r;
        times[t] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    if (timing) b["timing_ms"] = times;
    return rep;
}

// ---------------------------------------------------------------------------

namespace {

std::string group_text(const json& g)
{
    std::ostringstream s;
    int r = g.value("rank", 0);
    bool first = true;
    if (r > 0) {
        s << "Z";
        if (r > 1) s << "^" << r;
        first = false;
    }
    for (auto& t : g.value("torsion", json::array())) {
        s << (first ? "" : " + ") << "Z/" << (t.is_string() ? t.get<std::string>() : t.dump());
        first = false;
    }
    return first ? "0" : s.str();
}

std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_profile(const json& j)
{
    if (!j.is_object() || j.empty()) return false;
    for (auto& [k, v] : j.items()) {
        if (!v.is_string() && !v.is_number()) return false;
        if (k.empty() || k.find_first_not_of("-0123456789") != std::string::npos) return false;
    }
    return true;
}

void render(std::ostringstream& out, const std::string& key, const json& j, int level)
{
    std::string hashes(std::min(level, 6), '#');
    if (j.is_object() && j.contains("terms") && j["terms"].is_array()) {
        out << hashes << " " << key << "\n\n| degree | J | base module | coefficient |\n|---|---|---|---|\n";
        for (auto& t : j["terms"]) {
            std::string jj = "{";
            for (std::size_t i = 0; i < t["J"].size(); ++i) jj += (i ? "," : "") + t["J"][i].get<std::string>();
            jj += "}";
            out << "| " << t["degree"].dump() << " | " << jj << " | " << t["base_module"]["description"].get<std::string>()
                << " | " << group_text(t["coefficient"]) << " |\n";
        }
        out << "\n";
        return;
    }
    if (is_profile(j)) {
        out << hashes << " " << key << "\n\n| degree | value |\n|---|---|\n";
        std::vector<std::pair<long long, std::string>> rows;
        for (auto& [k, v] : j.items()) rows.emplace_back(std::stoll(k), scalar(v));
        std::sort(rows.begin(), rows.end());
        for (auto& [d, v] : rows) out << "| " << d << " | " << v << " |\n";
        out << "\n";
        return;
    }
    if (j.is_object()) {
        out << hashes << " " << key << "\n\n";
        std::vector<std::string> nested;
        for (auto& [k, v] : j.items()) {
            if (v.is_object() || (v.is_array() && !v.empty() && v.front().is_object()))
                nested.push_back(k);
            else
                out << "- " << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
        }
        out << "\n";
        for (auto& k : nested) render(out, k, j[k], level + 1);
        return;
    }
    if (j.is_array()) {
        for (std::size_t i = 0; i < j.size(); ++i) render(out, key + " [" + std::to_string(i) + "]", j[i], level);
        return;
    }
    out << "- " << key << ": " << scalar(j) << "\n\n";
}

}  // namespace

std::string emit(const Report& report, Format format)
{
    if (format == Format::Json) return report.body.dump(2) + "\n";
    std::ostringstream out;
    const json& b = report.body;
    out << "# " << b["tool"].get<std::string>() << " report\n\n";
    out << "- version: " << b["version"].dump() << "\n- input digest: " << b["input_digest"].get<std::string>() << "\n";
    if (b["unverified"].get<bool>()) out << "- unverified-hypothesis: regime forced\n";
    for (auto& w : b["warnings"]) out << "- warning: " << w.get<std::string>() << "\n";
    out << "\n";
    for (auto& [task, r] : b["results"].items()) render(out, task, r, 2);
    if (b.contains("timing_ms")) render(out, "timing (ms)", b["timing_ms"], 2);
    return out.str();
}

}  // namespace gpcohom
