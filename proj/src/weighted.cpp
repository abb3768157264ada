#include "gpcohom/weighted.hpp"

#include "gpcohom/homology.hpp"

#include <algorithm>
#include <functional>

namespace gpcohom {

nlohmann::json to_json(const Profile& p)
{
    nlohmann::json j = nlohmann::json::object();
    for (auto& [d, v] : p)
        if (v != 0) j[std::to_string(d)] = to_string(v);
    return j;
}

namespace {

void accumulate(Profile& p, int degree, const Rational& v)
{
    if (v == 0) return;
    Rational& slot = p[degree];
    slot += v;
    if (slot == 0) p.erase(degree);
}

}  // namespace

Profile kunneth(const std::vector<Profile>& factors)
{
    Profile acc{{0, Rational(1)}};
    for (auto& f : factors) {
        Profile next;
        for (auto& [i, a] : acc)
            for (auto& [j, b] : f) accumulate(next, i + j, a * b);
        acc = std::move(next);
    }
    return acc;
}

std::vector<Rational> dims_D(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q)
{
    const std::size_t count = sp.subsets.size();
    std::vector<Rational> w(count);
    for (std::size_t i = 0; i < count; ++i) w[i] = 1 / sp.subsets[i].growth.evaluate(q.values);
    std::vector<Rational> out(count, Rational(0));
    const int n = sys.size();
    if (n <= 22) {
        // signed superset sums by the subset transform
        std::vector<Rational> f(std::size_t(1) << n, Rational(0));
        std::vector<std::size_t> mask(count, 0);
        for (std::size_t i = 0; i < count; ++i) {
            for (int s : sp.subsets[i].gens) mask[i] |= std::size_t(1) << s;
            f[mask[i]] = w[i];
        }
        for (int b = 0; b < n; ++b)
            for (std::size_t x = 0; x < f.size(); ++x)
                if (!(x >> b & 1) && f[x | (std::size_t(1) << b)] != 0) f[x] -= f[x | (std::size_t(1) << b)];
        for (std::size_t i = 0; i < count; ++i) out[i] = f[mask[i]];
        return out;
    }
    for (std::size_t j = 0; j < count; ++j) {
        const auto& jg = sp.subsets[j].gens;
        for (std::size_t i = j; i < count; ++i) {
            const auto& ig = sp.subsets[i].gens;
            if (!std::includes(ig.begin(), ig.end(), jg.begin(), jg.end())) continue;
            out[j] += (ig.size() - jg.size()) % 2 ? -w[i] : w[i];
        }
    }
    return out;
}

Rational dim_D(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q, const std::vector<int>& j)
{
    auto it = sp.index.find(j);
    if (it == sp.index.end()) invalid("dim D^J needs a spherical J");
    Rational out = 0;
    for (auto& i : sp.subsets) {
        if (!std::includes(i.gens.begin(), i.gens.end(), j.begin(), j.end())) continue;
        Rational t = 1 / i.growth.evaluate(q.values);
        out += (i.gens.size() - j.size()) % 2 ? -t : t;
    }
    (void)sys;
    return out;
}

SimplicialComplex MirroredComplex::mirror_union(const std::vector<std::string>& outside) const
{
    std::vector<std::vector<std::string>> facets;
    for (auto& s : outside) {
        auto it = mirrors.find(s);
        if (it == mirrors.end()) invalid("no mirror for generator '" + s + "'");
        for (auto& f : it->second.facets()) facets.push_back(it->second.labels(f));
    }
    std::vector<std::string> verts;
    for (auto& f : facets)
        for (auto& v : f) verts.push_back(v);
    std::sort(verts.begin(), verts.end());
    verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
    return SimplicialComplex::from_facets(verts, facets);
}

nlohmann::json WeightedResult::to_json() const
{
    return {{"betti", gpcohom::to_json(betti)},
            {"certificate", certificate.to_json()},
            {"regime", regime},
            {"unverified_hypothesis", unverified}};
}

namespace {

bool supports_small(const RegimeCertificate& c) { return c.regime == Regime::InClosureR || c.regime == Regime::Both; }
bool supports_large(const RegimeCertificate& c)
{
    return c.regime == Regime::InverseInClosureR || c.regime == Regime::Both;
}

std::string choose_regime(const RegimeCertificate& cert, ForcedRegime force, bool& unverified)
{
    unverified = false;
    if (force == ForcedRegime::Small) {
        unverified = !supports_small(cert);
        return "small";
    }
    if (force == ForcedRegime::Large) {
        unverified = !supports_large(cert);
        return "large";
    }
    if (supports_small(cert)) return "small";
    if (supports_large(cert)) return "large";
    throw Error(ErrorKind::RegimeUncertifiable,
                "weights are in neither closed regime (" + cert.evidence + "); pass a forced regime to override");
}

std::vector<std::string> complement_labels(const CoxeterSystem& sys, const std::vector<int>& j)
{
    std::vector<std::string> out;
    for (int s = 0; s < sys.size(); ++s)
        if (!std::binary_search(j.begin(), j.end(), s)) out.push_back(sys.generators()[s]);
    return out;
}

WeightedResult weighted_core(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q,
                             ForcedRegime force,
                             const std::function<std::map<int, int>(const std::vector<int>&)>& pair_betti)
{
    if (static_cast<int>(q.values.size()) != sys.num_classes()) invalid("multiparameter has the wrong number of classes");
    WeightedResult r;
    r.certificate = regime_test(sys, sp, q);
    r.regime = choose_regime(r.certificate, force, r.unverified);
    if (r.regime == "small") {
        accumulate(r.betti, 0, inverse_growth_value(sys, sp, q));
        return r;
    }
    auto dims = dims_D(sys, sp, q);
    for (std::size_t i = 0; i < sp.subsets.size(); ++i) {
        if (dims[i] == 0) continue;
        for (auto& [deg, b] : pair_betti(sp.subsets[i].gens)) accumulate(r.betti, deg, dims[i] * b);
    }
    return r;
}

}  // namespace

WeightedResult weighted_betti(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q,
                              ForcedRegime force, BettiSource source)
{
    std::map<std::vector<std::string>, std::map<int, int>> memo;
    std::optional<MirroredChamber> chamber;
    auto pair_betti = [&](const std::vector<int>& j) -> std::map<int, int> {
        auto outside = complement_labels(sys, j);
        auto it = memo.find(outside);
        if (it != memo.end()) return it->second;
        std::map<int, int> b;
        if (source == BettiSource::NerveShortcut) {
            // K is a cone and K^{S-J} is covered by mirrors with nerve the full subcomplex on S - J
            for (auto& [d, x] : betti_numbers(full_subcomplex(sp.nerve, outside), Variant::Reduced)) b[d + 1] = x;
        } else {
            if (!chamber) chamber.emplace(sp.nerve);
            b = betti_numbers(chamber->complex(), chamber->mirror_union(j.empty() ? std::vector<std::string>{}
                                                                                    : sys.labels(j)));
        }
        memo[outside] = b;
        return b;
    };
    return weighted_core(sys, sp, q, force, pair_betti);
}

WeightedResult weighted_betti(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q,
                              const MirroredComplex& m, ForcedRegime force)
{
    for (auto& g : sys.generators())
        if (!m.mirrors.count(g)) invalid("mirrored complex lacks a mirror for '" + g + "'");
    auto pair_betti = [&](const std::vector<int>& j) {
        return betti_numbers(m.complex, m.mirror_union(complement_labels(sys, j)));
    };
    return weighted_core(sys, sp, q, force, pair_betti);
}

WeightedResult l2_graphproduct_finite(const SimplicialComplex& l, const std::map<std::string, Integer>& orders,
                                      ForcedRegime force)
{
    auto sys = CoxeterSystem::right_angled(flag_complex(l.vertices(), edges(l)));
    std::map<std::string, Rational> p;
    for (auto& v : l.vertices()) {
        auto it = orders.find(v);
        if (it == orders.end()) invalid("no order given for vertex '" + v + "'");
        if (it->second < 2) invalid("vertex group orders must be at least 2");
        p[v] = Rational(it->second - 1);
    }
    auto sp = spherical_poset(sys);
    return weighted_betti(sys, sp, MultiParameter::from_map(sys, p), force);
}

CoxeterSystem graph_product_system(const SimplicialComplex& l, const std::map<std::string, CoxeterSystem>& v)
{
    std::vector<std::string> gens;
    std::vector<std::pair<std::string, int>> owner;
    for (auto& s : l.vertices()) {
        auto it = v.find(s);
        if (it == v.end()) invalid("no vertex group for '" + s + "'");
        for (int t = 0; t < it->second.size(); ++t) {
            gens.push_back(PjoinContext::join_label(s, it->second.generators()[t]));
            owner.emplace_back(s, t);
        }
    }
    const int n = static_cast<int>(gens.size());
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 1));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (a == b) continue;
            auto& [sa, ta] = owner[a];
            auto& [sb, tb] = owner[b];
            if (sa == sb)
                m[a][b] = v.at(sa).m(ta, tb);
            else
                m[a][b] = l.contains_labels({sa, sb}) ? 2 : kInf;
        }
    return CoxeterSystem(gens, m);
}

MultiParameter graph_product_weights(const SimplicialComplex& l, const std::map<std::string, CoxeterSystem>& v,
                                     const std::map<std::string, MultiParameter>& q, const CoxeterSystem& product)
{
    std::map<std::string, Rational> flat;
    for (auto& s : l.vertices()) {
        auto& sys = v.at(s);
        auto it = q.find(s);
        if (it == q.end()) invalid("no weights for vertex '" + s + "'");
        for (int t = 0; t < sys.size(); ++t)
            flat[PjoinContext::join_label(s, sys.generators()[t])] = it->second.of(sys, t);
    }
    return MultiParameter::from_map(product, flat);
}

nlohmann::json GraphProductResult::to_json() const
{
    nlohmann::json pj = nlohmann::json::object();
    for (auto& [s, x] : p) pj[s] = gpcohom::to_string(x);
    nlohmann::json certs = nlohmann::json::object();
    for (auto& [s, c] : vertex_certificates) certs[s] = c.to_json();
    nlohmann::json j{{"betti", gpcohom::to_json(betti)},
                     {"branch", branch},
                     {"p", pj},
                     {"vertex_certificates", certs},
                     {"unverified_hypothesis", unverified}};
    if (base_certificate) j["base_certificate"] = base_certificate->to_json();
    return j;
}

GraphProductResult weighted_graphproduct(const SimplicialComplex& l0, const std::map<std::string, CoxeterSystem>& v,
                                         const std::map<std::string, MultiParameter>& q, ForcedRegime force)
{
    auto l = flag_complex(l0.vertices(), edges(l0));
    GraphProductResult r;
    std::map<std::string, SphericalPoset> sps;
    bool all_small = true, all_large = true, any_unknown = false, any_finite = false;
    for (auto& s : l.vertices()) {
        auto it = v.find(s);
        if (it == v.end()) invalid("no vertex group for '" + s + "'");
        auto qt = q.find(s);
        if (qt == q.end()) invalid("no weights for vertex '" + s + "'");
        auto& sp = sps.emplace(s, spherical_poset(it->second)).first->second;
        auto cert = regime_test(it->second, sp, qt->second);
        all_small = all_small && supports_small(cert);
        all_large = all_large && cert.regime == Regime::InverseInClosureR;
        any_unknown = any_unknown || cert.regime == Regime::Unknown;
        any_finite = any_finite || cert.finite_group;
        r.vertex_certificates[s] = cert;
    }
    if (force == ForcedRegime::Large && any_finite)
        throw Error(ErrorKind::ProvisoViolation,
                    "large weights need every vertex group infinite; a finite vertex group has q in its region");
    if (force == ForcedRegime::None) {
        if (all_small)
            r.branch = "small";
        else if (all_large)
            r.branch = "large";
        else if (any_unknown)
            throw Error(ErrorKind::RegimeUncertifiable, "a vertex group's weights are in neither closed regime");
        else
            throw Error(ErrorKind::ProvisoViolation,
                        "vertex groups mix small and large weights; either all or none must lie in the region");
    } else {
        r.branch = force == ForcedRegime::Small ? "small" : "large";
        r.unverified = r.branch == "small" ? !all_small : !all_large;
    }

    if (r.branch == "small") {
        auto w = CoxeterSystem::right_angled(l);
        std::map<std::string, Rational> p;
        for (auto& s : l.vertices()) {
            p[s] = growth_value(v.at(s), sps.at(s), q.at(s)) - 1;
            r.p[s] = p[s];
        }
        auto spw = spherical_poset(w);
        auto res = weighted_betti(w, spw, MultiParameter::from_map(w, p), force);
        r.base_certificate = res.certificate;
        r.unverified = r.unverified || res.unverified;
        r.betti = res.betti;
        return r;
    }
    std::map<std::string, Profile> vertex_betti;
    for (auto& s : l.vertices()) {
        auto res = weighted_betti(v.at(s), sps.at(s), q.at(s), force == ForcedRegime::None ? force : ForcedRegime::Large);
        r.unverified = r.unverified || res.unverified;
        vertex_betti[s] = res.betti;
    }
    for (auto& simplex : l.simplices()) {
        auto j = l.labels(simplex);
        std::vector<Profile> factors;
        for (auto& s : j) factors.push_back(vertex_betti[s]);
        Profile kj = kunneth(factors);
        // b^i(K_J, dK_J) is the reduced Betti number of the link in degree i - 1
        for (auto& [d, b] : betti_numbers(link(l, j), Variant::Reduced))
            for (auto& [k, x] : kj) accumulate(r.betti, d + 1 + k, x * b);
    }
    return r;
}

// ---------------------------------------------------------------------------
// octahedralization

Rational oct_p(const Rational& a, const Rational& b)
{
    if (a * b == 1) throw Error(ErrorKind::Pole, "q_{s+} q_{s-} = 1 is a pole of the change of variables");
    return (a + b + 2 * a * b) / (1 - a * b);
}

Profile oct_large(const SimplicialComplex& l0, const std::map<std::string, std::pair<Rational, Rational>>& q)
{
    auto l = flag_complex(l0.vertices(), edges(l0));
    Profile out;
    for (auto& simplex : l.simplices()) {
        auto j = l.labels(simplex);
        Rational factor = 1;
        for (auto& s : j) {
            auto [a, b] = q.at(s);
            factor *= (a * b - 1) / ((1 + a) * (1 + b));
        }
        for (auto& [d, x] : betti_numbers(link(l, j), Variant::Reduced))
            accumulate(out, d + 1 + static_cast<int>(j.size()), factor * x);
    }
    return out;
}

namespace {

// univariate rational functions in q
struct RF {
    UPoly num{Rational(0)}, den{Rational(1)};
};

UPoly times(const UPoly& a, const UPoly& b)
{
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly plus(UPoly a, const UPoly& b)
{
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    trim(a);
    return a;
}

RF reduce(RF f)
{
    trim(f.num);
    if (f.num.empty()) return RF{{}, {Rational(1)}};
    UPoly g = gcd(f.num, f.den);
    if (degree(g) > 0) {
        f.num = quotient(f.num, g);
        f.den = quotient(f.den, g);
    }
    return f;
}

RF add(const RF& a, const RF& b) { return reduce({plus(times(a.num, b.den), times(b.num, a.den)), times(a.den, b.den)}); }
RF mul(const RF& a, const RF& b) { return reduce({times(a.num, b.num), times(a.den, b.den)}); }
RF constant(const Rational& c) { return RF{{c}, {Rational(1)}}; }
RF power(const RF& a, int k)
{
    RF r = constant(1);
    for (int i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

std::optional<Rational> value_at_one(const RF& f)
{
    RF r = reduce(f);
    Rational d = evaluate(r.den, 1);
    if (d == 0) return std::nullopt;
    return evaluate(r.num, 1) / d;
}

}  // namespace

std::vector<OctLimit> oct_limits(const SimplicialComplex& l0)
{
    auto l = flag_complex(l0.vertices(), edges(l0));
    const int top = std::max(l.dimension(), 0) + 2;
    const RF x{{Rational(1), Rational(-1)}, {Rational(1), Rational(1)}};  // (1-q)/(1+q)
    const RF y{{Rational(-1), Rational(1)}, {Rational(1), Rational(1)}};  // (q-1)/(q+1)
    const RF below_scale{{Rational(1), Rational(1)}, {Rational(1), Rational(-1)}};
    const RF above_scale{{Rational(1), Rational(1)}, {Rational(-1), Rational(1)}};

    // b^n(K, K^{S-J}) from the nerve, and b^i(K_J, dK_J) from links
    std::map<std::vector<std::string>, std::map<int, int>> pair_b, link_b;
    std::vector<std::vector<std::string>> simplices;
    for (auto& s : l.simplices()) {
        auto j = l.labels(s);
        simplices.push_back(j);
        std::vector<std::string> outside;
        for (auto& v : l.vertices())
            if (std::find(j.begin(), j.end(), v) == j.end()) outside.push_back(v);
        for (auto& [d, b] : betti_numbers(full_subcomplex(l, outside), Variant::Reduced)) pair_b[j][d + 1] = b;
        for (auto& [d, b] : betti_numbers(link(l, j), Variant::Reduced)) link_b[j][d + 1] = b;
    }
    auto get = [](const std::map<int, int>& m, int d) {
        auto it = m.find(d);
        return it == m.end() ? 0 : it->second;
    };
    std::vector<OctLimit> out;
    for (int n = 0; n <= top; ++n) {
        OctLimit lim;
        lim.degree = n;
        // below: p = 2q/(1-q), so 1/W_I(p) = x^{|I|}
        RF below = constant(0);
        for (auto& j : simplices) {
            int b = get(pair_b[j], n);
            if (!b) continue;
            RF dim = constant(0);
            for (auto& i : simplices) {
                if (!std::includes(i.begin(), i.end(), j.begin(), j.end())) continue;
                RF t = power(x, static_cast<int>(i.size()));
                if ((i.size() - j.size()) % 2) t.num = times(t.num, {Rational(-1)});
                dim = add(dim, t);
            }
            below = add(below, mul(constant(b), dim));
        }
        lim.from_below = value_at_one(mul(below_scale, below));
        RF above = constant(0);
        for (auto& j : simplices) {
            int b = get(link_b[j], n + 1 - static_cast<int>(j.size()));
            if (b) above = add(above, mul(constant(b), power(y, static_cast<int>(j.size()))));
        }
        lim.from_above = value_at_one(mul(above_scale, above));
        lim.link_sum = 0;
        for (auto& v : l.vertices()) lim.link_sum += get(link_b[{v}], n);
        out.push_back(lim);
    }
    return out;
}

OctReport oct_weighted(const SimplicialComplex& l0, const std::map<std::string, std::pair<Rational, Rational>>& q,
                       ForcedRegime force)
{
    auto l = flag_complex(l0.vertices(), edges(l0));
    OctReport r;
    bool all_below = true, all_above = true, all_one = true;
    std::map<std::string, Rational> p;
    for (auto& s : l.vertices()) {
        auto it = q.find(s);
        if (it == q.end()) invalid("no weights for vertex '" + s + "'");
        auto [a, b] = it->second;
        if (a <= 0 || b <= 0) invalid("weights must be positive");
        if (a * b != 1) p[s] = oct_p(a, b);
        all_below = all_below && a < 1 && b < 1;
        all_above = all_above && a > 1 && b > 1;
        all_one = all_one && a == 1 && b == 1;
    }
    r.p = p;
    if (all_below) {
        auto w = CoxeterSystem::right_angled(l);
        auto sp = spherical_poset(w);
        r.small = weighted_betti(w, sp, MultiParameter::from_map(w, p), force);
    }
    if (all_above) r.large = oct_large(l, q);
    if (all_one) {
        Profile one;
        for (auto& [d, b] : betti_numbers(l, Variant::Reduced)) accumulate(one, d + 1, Rational(b));
        r.at_one = one;
    }
    r.limits = oct_limits(l);
    return r;
}

nlohmann::json OctReport::to_json() const
{
    nlohmann::json pj = nlohmann::json::object();
    for (auto& [s, x] : p) pj[s] = gpcohom::to_string(x);
    nlohmann::json lims = nlohmann::json::array();
    for (auto& lim : limits) {
        lims.push_back({{"degree", lim.degree},
                        {"from_below", lim.from_below ? nlohmann::json(gpcohom::to_string(*lim.from_below)) : nullptr},
                        {"from_above", lim.from_above ? nlohmann::json(gpcohom::to_string(*lim.from_above)) : nullptr},
                        {"link_sum", gpcohom::to_string(lim.link_sum)}});
    }
    nlohmann::json j{{"p", pj}, {"limits", lims}};
    j["small_weights"] = small ? small->to_json() : nlohmann::json(nullptr);
    j["large_weights"] = large ? gpcohom::to_json(*large) : nlohmann::json(nullptr);
    j["unit_weights"] = at_one ? gpcohom::to_json(*at_one) : nlohmann::json(nullptr);
    return j;
}

}  // namespace gpcohom
