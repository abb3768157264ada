#include "gpcohom/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>
#include <unordered_map>

namespace gpcohom {

CoxeterSystem::CoxeterSystem(std::vector<std::string> generators, std::vector<std::vector<int>> m)
    : gens_(std::move(generators)), m_(std::move(m))
{
    const int n = size();
    std::set<std::string> seen(gens_.begin(), gens_.end());
    if (static_cast<int>(seen.size()) != n) invalid("duplicate generator label");
    if (static_cast<int>(m_.size()) != n) invalid("Coxeter matrix has the wrong size");
    for (int s = 0; s < n; ++s) {
        if (static_cast<int>(m_[s].size()) != n) invalid("Coxeter matrix has the wrong size");
        if (m_[s][s] != 1) invalid("Coxeter matrix needs m(s,s) = 1");
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            if (m_[s][t] != m_[t][s]) invalid("Coxeter matrix is not symmetric");
            if (m_[s][t] != kInf && m_[s][t] < 2)
                invalid("label m(" + gens_[s] + "," + gens_[t] + ") = " + std::to_string(m_[s][t]) + " is below 2");
        }
    }
    // classes: components of the graph of odd labels
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
    for (int s = 0; s < n; ++s)
        for (int t = s + 1; t < n; ++t)
            if (m_[s][t] != kInf && m_[s][t] % 2 == 1) parent[find(s)] = find(t);
    class_of_.assign(n, -1);
    std::map<int, int> root_class;
    for (int s = 0; s < n; ++s) {
        int r = find(s);
        if (!root_class.count(r)) root_class[r] = num_classes_++;
        class_of_[s] = root_class[r];
    }
}

CoxeterSystem CoxeterSystem::right_angled(const SimplicialComplex& graph)
{
    const int n = graph.num_vertices();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (auto& s : graph.simplices())
        if (s.size() == 2) m[s[0]][s[1]] = m[s[1]][s[0]] = 2;
    return CoxeterSystem(graph.vertices(), m);
}

namespace {

int parse_label(const nlohmann::json& v)
{
    if (v.is_number_integer()) {
        long long x = v.get<long long>();
        if (x < 2 || x > 1000000) invalid("Coxeter label " + std::to_string(x) + " out of range (need m >= 2)");
        return static_cast<int>(x);
    }
    if (v.is_string()) {
        std::string s = v.get<std::string>();
        if (s == "inf" || s == "infinity" || s == "oo") return kInf;
    }
    invalid("Coxeter label must be an integer >= 2 or \"infinity\"");
}

}  // namespace

CoxeterSystem CoxeterSystem::from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("generators")) invalid("Coxeter system needs \"generators\"");
    if (!j.contains("default")) invalid("Coxeter system needs an explicit \"default\" of \"2\" or \"infinity\"");
    std::string def = j["default"].is_string() ? j["default"].get<std::string>() : j["default"].dump();
    int fill;
    if (def == "2")
        fill = 2;
    else if (def == "infinity" || def == "inf")
        fill = kInf;
    else
        invalid("\"default\" must be \"2\" or \"infinity\"");
    std::vector<std::string> gens;
    for (auto& g : j["generators"]) {
        if (!g.is_string()) invalid("generator labels must be strings");
        gens.push_back(g.get<std::string>());
    }
    const int n = static_cast<int>(gens.size());
    std::map<std::string, int> idx;
    for (int i = 0; i < n; ++i) idx[gens[i]] = i;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, fill));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    if (j.contains("m"))
        for (auto& e : j["m"]) {
            if (!e.is_array() || e.size() != 3) invalid("each \"m\" entry is [s, t, label]");
            std::string s = e[0].get<std::string>(), t = e[1].get<std::string>();
            if (!idx.count(s) || !idx.count(t)) invalid("label entry names an unknown generator");
            if (s == t) invalid("label entry for a generator with itself");
            m[idx[s]][idx[t]] = m[idx[t]][idx[s]] = parse_label(e[2]);
        }
    return CoxeterSystem(gens, m);
}

int CoxeterSystem::index(const std::string& label) const
{
    auto it = std::find(gens_.begin(), gens_.end(), label);
    if (it == gens_.end()) invalid("unknown generator '" + label + "'");
    return static_cast<int>(it - gens_.begin());
}

std::vector<int> CoxeterSystem::indices(const std::vector<std::string>& labels) const
{
    std::vector<int> out;
    for (auto& l : labels) out.push_back(index(l));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::string> CoxeterSystem::labels(const std::vector<int>& j) const
{
    std::vector<std::string> out;
    for (int s : j) out.push_back(gens_.at(s));
    return out;
}

CoxeterSystem CoxeterSystem::subsystem(const std::vector<int>& j) const
{
    std::vector<std::string> g;
    std::vector<std::vector<int>> m(j.size(), std::vector<int>(j.size()));
    for (std::size_t a = 0; a < j.size(); ++a) {
        g.push_back(gens_[j[a]]);
        for (std::size_t b = 0; b < j.size(); ++b) m[a][b] = m_[j[a]][j[b]];
    }
    return CoxeterSystem(g, m);
}

bool CoxeterSystem::is_right_angled() const
{
    for (int s = 0; s < size(); ++s)
        for (int t = 0; t < size(); ++t)
            if (s != t && m_[s][t] != 2 && m_[s][t] != kInf) return false;
    return true;
}

std::vector<std::string> CoxeterSystem::class_names() const
{
    std::vector<std::string> out(num_classes_);
    for (int s = size() - 1; s >= 0; --s) out[class_of_[s]] = "t_" + gens_[s];
    return out;
}

nlohmann::json CoxeterSystem::to_json() const
{
    nlohmann::json m = nlohmann::json::array();
    for (int s = 0; s < size(); ++s)
        for (int t = s + 1; t < size(); ++t) {
            if (m_[s][t] == 2) continue;
            nlohmann::json label = m_[s][t] == kInf ? nlohmann::json("infinity") : nlohmann::json(m_[s][t]);
            m.push_back({gens_[s], gens_[t], label});
        }
    return {{"generators", gens_}, {"m", m}, {"default", "2"}};
}

// ---------------------------------------------------------------------------
// finite types

Integer FiniteType::order() const
{
    Integer o = 1;
    for (int d : degrees) o *= d;
    return o;
}

namespace {

FiniteType type_A(int n)
{
    FiniteType t{"A" + std::to_string(n), {}};
    for (int d = 2; d <= n + 1; ++d) t.degrees.push_back(d);
    return t;
}

FiniteType type_B(int n)
{
    FiniteType t{"B" + std::to_string(n), {}};
    for (int i = 1; i <= n; ++i) t.degrees.push_back(2 * i);
    return t;
}

FiniteType type_D(int n)
{
    FiniteType t{"D" + std::to_string(n), {}};
    for (int i = 1; i < n; ++i) t.degrees.push_back(2 * i);
    t.degrees.push_back(n);
    std::sort(t.degrees.begin(), t.degrees.end());
    return t;
}

FiniteType type_I2(int m)
{
    if (m == 3) return FiniteType{"A2", {2, 3}};
    if (m == 4) return FiniteType{"B2", {2, 4}};
    return FiniteType{"I2(" + std::to_string(m) + ")", {2, m}};
}

}  // namespace

std::optional<FiniteType> classify_component(const CoxeterSystem& sys, const std::vector<int>& comp)
{
    const int n = static_cast<int>(comp.size());
    if (n == 1) return type_A(1);
    std::vector<int> deg(n, 0);
    int edge_count = 0, big = 0;
    std::pair<int, int> big_edge{-1, -1};
    int big_label = 0;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            int m = sys.m(comp[a], comp[b]);
            if (m == 2) continue;
            if (m == kInf) return std::nullopt;
            ++edge_count;
            ++deg[a];
            ++deg[b];
            if (m >= 4) {
                ++big;
                big_edge = {a, b};
                big_label = m;
            }
        }
    if (edge_count != n - 1) return std::nullopt;  // components are connected, so this means a tree
    if (n == 2) return type_I2(sys.m(comp[0], comp[1]));
    int maxdeg = *std::max_element(deg.begin(), deg.end());
    if (big == 0) {
        if (maxdeg <= 2) return type_A(n);
        if (maxdeg > 3 || std::count(deg.begin(), deg.end(), 3) != 1) return std::nullopt;
        int centre = static_cast<int>(std::find(deg.begin(), deg.end(), 3) - deg.begin());
        // arm lengths from the branch vertex
        std::vector<int> arms;
        for (int nb = 0; nb < n; ++nb) {
            if (nb == centre || sys.m(comp[centre], comp[nb]) == 2) continue;
            int len = 1, prev = centre, cur = nb;
            while (true) {
                int next = -1;
                for (int x = 0; x < n; ++x)
                    if (x != prev && x != cur && sys.m(comp[cur], comp[x]) != 2) next = x;
                if (next < 0) break;
                prev = cur;
                cur = next;
                ++len;
            }
            arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1) return type_D(n);
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 2) return FiniteType{"E6", {2, 5, 6, 8, 9, 12}};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 3) return FiniteType{"E7", {2, 6, 8, 10, 12, 14, 18}};
        if (arms[0] == 1 && arms[1] == 2 && arms[2] == 4)
            return FiniteType{"E8", {2, 8, 12, 14, 18, 20, 24, 30}};
        return std::nullopt;
    }
    if (big > 1 || maxdeg > 2) return std::nullopt;
    bool at_end = deg[big_edge.first] == 1 || deg[big_edge.second] == 1;
    if (big_label == 4) {
        if (at_end) return type_B(n);
        if (n == 4) return FiniteType{"F4", {2, 6, 8, 12}};
        return std::nullopt;
    }
    if (big_label == 5 && at_end) {
        if (n == 3) return FiniteType{"H3", {2, 6, 10}};
        if (n == 4) return FiniteType{"H4", {2, 12, 20, 30}};
    }
    return std::nullopt;
}

Classification classify_finite(const CoxeterSystem& sys, const std::vector<int>& j)
{
    Classification c;
    std::vector<bool> done(j.size(), false);
    for (std::size_t a = 0; a < j.size(); ++a) {
        if (done[a]) continue;
        std::vector<int> comp{j[a]};
        done[a] = true;
        for (std::size_t k = 0; k < comp.size(); ++k)
            for (std::size_t b = 0; b < j.size(); ++b)
                if (!done[b] && sys.m(comp[k], j[b]) != 2) {
                    done[b] = true;
                    comp.push_back(j[b]);
                }
        std::sort(comp.begin(), comp.end());
        c.components.push_back(comp);
    }
    std::sort(c.components.begin(), c.components.end());
    c.order = 1;
    for (auto& comp : c.components) {
        auto t = classify_component(sys, comp);
        if (!t) {
            c.finite = false;
            c.types.clear();
            c.order = 0;
            return c;
        }
        c.order *= t->order();
        c.types.push_back(*t);
    }
    return c;
}

namespace {

CoxeterSystem path_system(int n, const std::vector<int>& labels)
{
    std::vector<std::string> g;
    for (int i = 1; i <= n; ++i) g.push_back("s" + std::to_string(i));
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = labels[i];
    return CoxeterSystem(g, m);
}

CoxeterSystem branched_system(int a, int b, int c)
{
    // branch vertex s1 with arms of a, b, c further vertices
    int n = 1 + a + b + c;
    std::vector<std::string> g;
    for (int i = 1; i <= n; ++i) g.push_back("s" + std::to_string(i));
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    int next = 1;
    for (int len : {a, b, c}) {
        int prev = 0;
        for (int k = 0; k < len; ++k) {
            m[prev][next] = m[next][prev] = 3;
            prev = next++;
        }
    }
    return CoxeterSystem(g, m);
}

}  // namespace

std::vector<std::pair<FiniteType, CoxeterSystem>> finite_catalogue(int max_rank, int max_dihedral)
{
    std::vector<std::pair<FiniteType, CoxeterSystem>> out;
    for (int n = 1; n <= max_rank; ++n) out.emplace_back(type_A(n), path_system(n, std::vector<int>(n, 3)));
    for (int n = 3; n <= max_rank; ++n) {
        std::vector<int> l(n - 1, 3);
        l.back() = 4;
        out.emplace_back(type_B(n), path_system(n, l));
    }
    for (int n = 4; n <= max_rank; ++n) out.emplace_back(type_D(n), branched_system(1, 1, n - 3));
    if (max_rank >= 3) out.emplace_back(FiniteType{"H3", {2, 6, 10}}, path_system(3, {5, 3}));
    if (max_rank >= 4) {
        out.emplace_back(FiniteType{"F4", {2, 6, 8, 12}}, path_system(4, {3, 4, 3}));
        out.emplace_back(FiniteType{"H4", {2, 12, 20, 30}}, path_system(4, {5, 3, 3}));
    }
    if (max_rank >= 6) out.emplace_back(FiniteType{"E6", {2, 5, 6, 8, 9, 12}}, branched_system(1, 2, 2));
    for (int m = 3; m <= max_dihedral; ++m) out.emplace_back(type_I2(m), path_system(2, {m}));
    return out;
}

std::vector<Integer> degree_product(const std::vector<int>& degrees)
{
    std::vector<Integer> p{1};
    for (int d : degrees) {
        std::vector<Integer> q(p.size() + d - 1, Integer(0));
        for (std::size_t i = 0; i < p.size(); ++i)
            for (int k = 0; k < d; ++k) q[i + k] += p[i];
        p = std::move(q);
    }
    return p;
}

// ---------------------------------------------------------------------------
// multiparameters

MultiParameter MultiParameter::uniform(const CoxeterSystem& sys, const Rational& q)
{
    if (q <= 0) invalid("weights must be positive");
    return MultiParameter{std::vector<Rational>(sys.num_classes(), q)};
}

MultiParameter MultiParameter::from_map(const CoxeterSystem& sys, const std::map<std::string, Rational>& q)
{
    std::vector<std::optional<Rational>> v(sys.num_classes());
    auto names = sys.class_names();
    for (auto& [key, value] : q) {
        if (value <= 0) invalid("weight for '" + key + "' must be positive");
        int c = -1;
        auto it = std::find(names.begin(), names.end(), key);
        if (it != names.end())
            c = static_cast<int>(it - names.begin());
        else
            c = sys.class_of()[sys.index(key)];
        if (v[c] && *v[c] != value) invalid("weights differ on the conjugacy class of '" + key + "'");
        v[c] = value;
    }
    MultiParameter out;
    for (int c = 0; c < sys.num_classes(); ++c) {
        if (!v[c]) invalid("no weight given for class " + names[c]);
        out.values.push_back(*v[c]);
    }
    return out;
}

bool MultiParameter::is_uniform() const
{
    return std::all_of(values.begin(), values.end(), [&](const Rational& x) { return x == values.front(); });
}

Rational MultiParameter::min() const { return *std::min_element(values.begin(), values.end()); }
Rational MultiParameter::max() const { return *std::max_element(values.begin(), values.end()); }

// ---------------------------------------------------------------------------
// exact contragredient representation over Z[zeta_2M]

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) resource_cap("coefficient overflow in the exact representation");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) resource_cap("coefficient overflow in the exact representation");
    return r;
}

std::vector<long long> cyclotomic(int n)
{
    // x^n - 1 divided by the cyclotomic polynomials of the proper divisors
    std::vector<long long> p(n + 1, 0);
    p[0] = -1;
    p[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d) continue;
        std::vector<long long> f = cyclotomic(d);
        const int df = static_cast<int>(f.size()) - 1;
        std::vector<long long> q(p.size() - df, 0);
        for (int k = static_cast<int>(p.size()) - 1; k >= df; --k) {
            long long c = p[k];
            q[k - df] = c;
            for (int i = 0; i <= df; ++i) p[k - df + i] -= c * f[i];
        }
        p = q;
    }
    return p;
}

class Representation {
public:
    explicit Representation(const CoxeterSystem& sys) : n_(sys.size())
    {
        long long m = 1;
        for (int s = 0; s < n_; ++s)
            for (int t = 0; t < n_; ++t)
                if (s != t && sys.m(s, t) != kInf && sys.m(s, t) >= 3) m = std::lcm(m, (long long)sys.m(s, t));
        big_m_ = static_cast<int>(m);
        phi_poly_ = cyclotomic(2 * big_m_);
        phi_ = static_cast<int>(phi_poly_.size()) - 1;
        cos_.resize(phi_);
        for (int k = 0; k < phi_; ++k) cos_[k] = std::cos(static_cast<long double>(k) * M_PIl / big_m_);
        coef_.assign(n_ * n_, {});
        for (int s = 0; s < n_; ++s)
            for (int t = 0; t < n_; ++t) {
                if (s == t) continue;
                int lab = sys.m(s, t);
                std::vector<std::int64_t> c(phi_, 0);
                if (lab == kInf) {
                    c[0] = 2;
                } else if (lab > 2) {
                    // zeta_2m + zeta_2m^{-1} with zeta_2m = zeta^{M/m}
                    std::vector<std::int64_t> raw(2 * big_m_, 0);
                    raw[big_m_ / lab] += 1;
                    raw[2 * big_m_ - big_m_ / lab] += 1;
                    c = reduce(raw);
                }
                coef_[s * n_ + t] = c;
            }
    }

    int phi() const { return phi_; }
    int n() const { return n_; }

    std::vector<std::int64_t> identity_state() const
    {
        std::vector<std::int64_t> f(static_cast<std::size_t>(n_) * phi_, 0);
        for (int u = 0; u < n_; ++u) f[static_cast<std::size_t>(u) * phi_] = 1;
        return f;
    }

    // f <- s . f
    void apply(std::vector<std::int64_t>& f, int s) const
    {
        const std::int64_t* fs = &f[static_cast<std::size_t>(s) * phi_];
        std::vector<std::int64_t> old(fs, fs + phi_);
        for (int u = 0; u < n_; ++u) {
            if (u == s) continue;
            const auto& c = coef_[s * n_ + u];
            if (c.empty()) continue;
            std::vector<std::int64_t> prod = multiply(c, old);
            std::int64_t* fu = &f[static_cast<std::size_t>(u) * phi_];
            for (int k = 0; k < phi_; ++k) fu[k] = checked_add(fu[k], prod[k]);
        }
        std::int64_t* w = &f[static_cast<std::size_t>(s) * phi_];
        for (int k = 0; k < phi_; ++k) w[k] = -old[k];
    }

    // sign of coordinate u, which is never zero for states of group elements
    int sign(const std::vector<std::int64_t>& f, int u) const
    {
        const std::int64_t* x = &f[static_cast<std::size_t>(u) * phi_];
        long double v = 0, scale = 0;
        for (int k = 0; k < phi_; ++k) {
            v += static_cast<long double>(x[k]) * cos_[k];
            scale += std::fabs(static_cast<long double>(x[k]));
        }
        if (std::fabs(v) <= scale * 1e-12L) resource_cap("root coordinate too close to zero to sign reliably");
        return v > 0 ? 1 : -1;
    }

private:
    std::vector<std::int64_t> reduce(std::vector<std::int64_t> r) const
    {
        for (int k = static_cast<int>(r.size()) - 1; k >= phi_; --k) {
            std::int64_t c = r[k];
            if (!c) continue;
            for (int i = 0; i <= phi_; ++i)
                r[k - phi_ + i] = checked_add(r[k - phi_ + i], -checked_mul(c, phi_poly_[i]));
        }
        r.resize(phi_);
        return r;
    }

    std::vector<std::int64_t> multiply(const std::vector<std::int64_t>& a, const std::vector<std::int64_t>& b) const
    {
        if (phi_ == 1) return {checked_mul(a[0], b[0])};
        std::vector<std::int64_t> r(2 * phi_ - 1, 0);
        for (int i = 0; i < phi_; ++i) {
            if (!a[i]) continue;
            for (int j = 0; j < phi_; ++j)
                if (b[j]) r[i + j] = checked_add(r[i + j], checked_mul(a[i], b[j]));
        }
        return reduce(r);
    }

    int n_;
    int big_m_ = 1;
    int phi_ = 1;
    std::vector<long long> phi_poly_;
    std::vector<long double> cos_;
    std::vector<std::vector<std::int64_t>> coef_;  // empty where m = 2
};

struct StateHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept
    {
        std::size_t h = 1469598103934665603ull;
        for (auto x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
        return h;
    }
};

std::vector<std::int64_t> state_of(const Representation& rep, const std::vector<int>& word)
{
    auto f = rep.identity_state();
    for (int s : word) rep.apply(f, s);
    return f;
}

}  // namespace

bool same_element(const CoxeterSystem& sys, const std::vector<int>& a, const std::vector<int>& b)
{
    Representation rep(sys);
    return state_of(rep, a) == state_of(rep, b);
}

bool is_reduced(const CoxeterSystem& sys, const std::vector<int>& word)
{
    Representation rep(sys);
    auto f = rep.identity_state();
    for (int s : word) {
        if (rep.sign(f, s) < 0) return false;
        rep.apply(f, s);
    }
    return true;
}

std::vector<std::vector<int>> braid_orbit(const CoxeterSystem& sys, const std::vector<int>& word, std::size_t cap)
{
    std::set<std::vector<int>> seen{word};
    std::vector<std::vector<int>> queue{word};
    for (std::size_t head = 0; head < queue.size() && seen.size() < cap; ++head) {
        const auto w = queue[head];
        for (std::size_t i = 0; i + 1 < w.size(); ++i) {
            int s = w[i], t = w[i + 1];
            if (s == t) continue;
            int m = sys.m(s, t);
            if (m == kInf || i + m > w.size()) continue;
            bool alternating = true;
            for (int k = 0; k < m && alternating; ++k) alternating = w[i + k] == (k % 2 ? t : s);
            if (!alternating) continue;
            auto v = w;
            for (int k = 0; k < m; ++k) v[i + k] = k % 2 ? s : t;
            if (seen.insert(v).second) {
                queue.push_back(v);
                if (seen.size() >= cap) break;
            }
        }
    }
    return {seen.begin(), seen.end()};
}

Polynomial WordCensus::growth_polynomial(int nvars) const
{
    Polynomial p(nvars);
    for (auto& [e, c] : monomial_counts) p.add_term(e, c);
    return p;
}

WordCensus enumerate_words(const CoxeterSystem& sys, const CensusOptions& options)
{
    struct Node {
        std::vector<std::int64_t> state;
        std::vector<int> word;
        Exponent mono;
    };
    const int n = sys.size();
    const int nc = sys.num_classes();
    Representation rep(sys);
    WordCensus census;
    std::size_t total = 0;
    auto descents_of = [&](const Node& x) {
        std::vector<int> d;
        for (int s = 0; s < n; ++s)
            if (rep.sign(x.state, s) < 0) d.push_back(s);
        return d;
    };
    auto record = [&](const Node& x, const std::vector<int>& desc) {
        ++total;
        census.monomial_counts[x.mono] += 1;
        if (options.check_braid_orbits) {
            auto orbit = braid_orbit(sys, x.word);
            if (orbit.size() >= 10000) ++census.braid_truncated;
            for (auto& w : orbit) {
                Exponent e(nc, 0);
                for (int s : w) ++e[sys.class_of()[s]];
                if (e != x.mono || state_of(rep, w) != x.state)
                    throw std::logic_error("braid-equivalent words disagree on element or monomial");
                ++census.braid_checked;
            }
        }
        if (options.keep_entries)
            census.entries.push_back({x.word, static_cast<int>(x.word.size()), x.mono, desc});
    };

    std::vector<Node> level{{rep.identity_state(), {}, Exponent(nc, 0)}};
    for (int len = 0;; ++len) {
        census.length_profile.push_back(level.size());
        std::vector<std::vector<int>> desc(level.size());
        for (std::size_t i = 0; i < level.size(); ++i) {
            desc[i] = descents_of(level[i]);
            record(level[i], desc[i]);
            if (total > options.limits.element_cap)
                throw CensusCapError("word enumeration exceeded the element cap of " +
                                         std::to_string(options.limits.element_cap),
                                     census);
        }
        if (len >= options.limits.length_bound) break;
        std::vector<Node> next;
        std::unordered_map<std::vector<std::int64_t>, std::size_t, StateHash> where;
        for (std::size_t i = 0; i < level.size(); ++i) {
            for (int s = 0; s < n; ++s) {
                if (std::binary_search(desc[i].begin(), desc[i].end(), s)) continue;
                Node y{level[i].state, level[i].word, level[i].mono};
                rep.apply(y.state, s);
                y.word.push_back(s);
                ++y.mono[sys.class_of()[s]];
                auto it = where.find(y.state);
                if (it == where.end()) {
                    where.emplace(y.state, next.size());
                    next.push_back(std::move(y));
                } else if (y.word < next[it->second].word) {
                    next[it->second].word = std::move(y.word);
                }
            }
            if (total + next.size() > options.limits.element_cap)
                throw CensusCapError("word enumeration exceeded the element cap of " +
                                         std::to_string(options.limits.element_cap),
                                     census);
        }
        if (next.empty()) {
            census.complete = true;
            break;
        }
        std::sort(next.begin(), next.end(), [](const Node& a, const Node& b) { return a.word < b.word; });
        level = std::move(next);
    }
    return census;
}

// ---------------------------------------------------------------------------
// spherical subsets and growth

namespace {

Polynomial class_polynomial(int nvars, int cls, const std::vector<Integer>& coeffs)
{
    Polynomial p(nvars);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        Exponent e(nvars, 0);
        e[cls] = static_cast<int>(k);
        p.add_term(e, coeffs[k]);
    }
    return p;
}

Exponent top_monomial(const Polynomial& p)
{
    Exponent best;
    int bestdeg = -1;
    for (auto& [e, c] : p.terms()) {
        int d = std::accumulate(e.begin(), e.end(), 0);
        if (d > bestdeg) {
            bestdeg = d;
            best = e;
        }
    }
    return best;
}

bool single_class(const CoxeterSystem& sys, const std::vector<int>& comp)
{
    for (int s : comp)
        if (sys.class_of()[s] != sys.class_of()[comp[0]]) return false;
    return true;
}

Polynomial component_growth(const CoxeterSystem& sys, const std::vector<int>& comp, const FiniteType& type,
                            const Limits& limits)
{
    const int nc = sys.num_classes();
    if (single_class(sys, comp)) return class_polynomial(nc, sys.class_of()[comp[0]], degree_product(type.degrees));
    CoxeterSystem sub = sys.subsystem(comp);
    CensusOptions opt;
    opt.limits.element_cap = limits.element_cap;
    WordCensus c = enumerate_words(sub, opt);
    // subsystem classes refine the classes of the whole system
    std::vector<int> up(sub.num_classes());
    for (std::size_t a = 0; a < comp.size(); ++a) up[sub.class_of()[a]] = sys.class_of()[comp[a]];
    Polynomial p(nc);
    for (auto& [e, k] : c.monomial_counts) {
        Exponent f(nc, 0);
        for (int i = 0; i < sub.num_classes(); ++i) f[up[i]] += e[i];
        p.add_term(f, k);
    }
    return p;
}

}  // namespace

SphericalPoset spherical_poset(const CoxeterSystem& sys, const Limits& limits)
{
    const int n = sys.size();
    const int nc = sys.num_classes();
    SphericalPoset sp;
    std::map<std::vector<int>, Polynomial> comp_cache;
    std::vector<std::vector<int>> found;
    std::function<void(std::vector<int>&)> grow = [&](std::vector<int>& j) {
        found.push_back(j);
        for (int s = j.empty() ? 0 : j.back() + 1; s < n; ++s) {
            j.push_back(s);
            if (classify_finite(sys, j).finite) grow(j);
            j.pop_back();
        }
    };
    std::vector<int> start;
    grow(start);
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::vector<std::string>> facets;
    for (auto& j : found) {
        Classification c = classify_finite(sys, j);
        SphericalSubset sub{j, Polynomial(nc, 1), Exponent(nc, 0)};
        for (std::size_t k = 0; k < c.components.size(); ++k) {
            auto& comp = c.components[k];
            auto it = comp_cache.find(comp);
            if (it == comp_cache.end()) it = comp_cache.emplace(comp, component_growth(sys, comp, c.types[k], limits)).first;
            sub.growth = sub.growth * it->second;
        }
        sub.longest = top_monomial(sub.growth);
        sp.index[j] = static_cast<int>(sp.subsets.size());
        sp.subsets.push_back(std::move(sub));
        if (!j.empty()) facets.push_back(sys.labels(j));
    }
    sp.nerve = SimplicialComplex::from_facets(sys.generators(), facets);
    return sp;
}

Poset SphericalPoset::poset(const CoxeterSystem& sys) const
{
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (auto& s : subsets) labels.push_back(set_label(sys.labels(s.gens)));
    for (std::size_t a = 0; a < subsets.size(); ++a)
        for (std::size_t b = 0; b < subsets.size(); ++b) {
            auto& x = subsets[a].gens;
            auto& y = subsets[b].gens;
            if (x.size() < y.size() && std::includes(y.begin(), y.end(), x.begin(), x.end()))
                rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    return Poset(labels, rel);
}

bool SphericalPoset::finite_group() const
{
    if (subsets.empty()) return false;
    const auto& top = subsets.back().gens;
    std::size_t n = nerve.vertices().size();
    return top.size() == n;
}

namespace {

// factorization of a finite parabolic's growth into reusable pieces
struct FactorKey {
    std::string key;
    Polynomial poly;
};

std::vector<FactorKey> factors_of(const CoxeterSystem& sys, const SphericalSubset& j)
{
    const int nc = sys.num_classes();
    std::vector<FactorKey> out;
    Classification c = classify_finite(sys, j.gens);
    for (std::size_t k = 0; k < c.components.size(); ++k) {
        const auto& comp = c.components[k];
        if (!single_class(sys, comp)) {
            // multi-class pieces are kept whole
            Polynomial p = component_growth(sys, comp, c.types[k], Limits{});
            out.push_back({"C" + p.str(), p});
            continue;
        }
        int cls = sys.class_of()[comp[0]];
        for (int d : c.types[k].degrees)
            for (int e = 2; e <= d; ++e)
                if (d % e == 0) {
                    auto cy = cyclotomic(e);
                    std::vector<Integer> coeffs(cy.begin(), cy.end());
                    out.push_back({"P" + std::to_string(e) + "_" + std::to_string(cls),
                                   class_polynomial(nc, cls, coeffs)});
                }
    }
    return out;
}

}  // namespace

RationalFunction growth_series(const CoxeterSystem& sys, const Limits& limits)
{
    return growth_series(sys, spherical_poset(sys, limits));
}

RationalFunction growth_series(const CoxeterSystem& sys, const SphericalPoset& sp)
{
    const int nc = sys.num_classes();
    if (sp.finite_group()) return RationalFunction(sp.subsets.back().growth);
    // 1/W = sum_J (-1)^|J| t_{w0(J)} / W_J over a common denominator built from shared factors
    std::map<std::string, std::pair<Polynomial, int>> lcm;
    std::vector<std::map<std::string, int>> mult(sp.subsets.size());
    for (std::size_t i = 0; i < sp.subsets.size(); ++i)
        for (auto& f : factors_of(sys, sp.subsets[i])) {
            int m = ++mult[i][f.key];
            auto& slot = lcm.try_emplace(f.key, f.poly, 0).first->second;
            slot.second = std::max(slot.second, m);
        }
    Polynomial den(nc, 1);
    for (auto& [k, pm] : lcm) den = den * pm.first.pow(pm.second);
    Polynomial num(nc);
    for (std::size_t i = 0; i < sp.subsets.size(); ++i) {
        Polynomial term = Polynomial::monomial(sp.subsets[i].longest, sp.subsets[i].gens.size() % 2 ? -1 : 1);
        for (auto& [k, pm] : lcm) {
            int have = mult[i].count(k) ? mult[i].at(k) : 0;
            if (pm.second > have) term = term * pm.first.pow(pm.second - have);
        }
        num += term;
    }
    // num/den is 1/W
    return RationalFunction(den, num);
}

std::pair<UPoly, UPoly> growth_univariate(const CoxeterSystem& sys, const SphericalPoset& sp)
{
    if (sp.finite_group()) return {upoly(sp.subsets.back().growth.univariate()), UPoly{Rational(1)}};
    auto times = [](const UPoly& a, const UPoly& b) {
        UPoly r(a.size() + b.size() - 1, Rational(0));
        for (std::size_t i = 0; i < a.size(); ++i)
            for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
        return r;
    };
    std::map<int, int> lcm;
    std::vector<std::map<int, int>> mult(sp.subsets.size());
    for (std::size_t i = 0; i < sp.subsets.size(); ++i) {
        Classification c = classify_finite(sys, sp.subsets[i].gens);
        for (auto& t : c.types)
            for (int d : t.degrees)
                for (int e = 2; e <= d; ++e)
                    if (d % e == 0) {
                        int m = ++mult[i][e];
                        lcm[e] = std::max(lcm[e], m);
                    }
    }
    std::map<int, UPoly> cyc;
    for (auto& [e, m] : lcm) {
        auto c = cyclotomic(e);
        cyc[e] = upoly(std::vector<Integer>(c.begin(), c.end()));
    }
    UPoly den{Rational(1)};
    for (auto& [e, m] : lcm)
        for (int k = 0; k < m; ++k) den = times(den, cyc[e]);
    UPoly num{Rational(0)};
    for (std::size_t i = 0; i < sp.subsets.size(); ++i) {
        int len = std::accumulate(sp.subsets[i].longest.begin(), sp.subsets[i].longest.end(), 0);
        UPoly term(len + 1, Rational(0));
        term[len] = sp.subsets[i].gens.size() % 2 ? -1 : 1;
        for (auto& [e, m] : lcm) {
            int have = mult[i].count(e) ? mult[i].at(e) : 0;
            for (int k = have; k < m; ++k) term = times(term, cyc[e]);
        }
        if (num.size() < term.size()) num.resize(term.size(), Rational(0));
        for (std::size_t k = 0; k < term.size(); ++k) num[k] += term[k];
    }
    trim(num);
    // W = den / num, reduced
    UPoly g = gcd(den, num);
    UPoly wn = quotient(den, g), wd = quotient(num, g);
    Rational c = wd.front();
    for (auto& x : wn) x /= c;
    for (auto& x : wd) x /= c;
    return {wn, wd};
}

Rational inverse_growth_value(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q)
{
    if (static_cast<int>(q.values.size()) != sys.num_classes()) invalid("multiparameter has the wrong number of classes");
    if (sp.finite_group()) return 1 / sp.subsets.back().growth.evaluate(q.values);
    Rational s = 0;
    for (auto& j : sp.subsets) {
        Rational mono = 1;
        for (int c = 0; c < sys.num_classes(); ++c)
            for (int k = 0; k < j.longest[c]; ++k) mono *= q.values[c];
        Rational term = mono / j.growth.evaluate(q.values);
        s += j.gens.size() % 2 ? -term : term;
    }
    return s;
}

Rational growth_value(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q)
{
    Rational inv = inverse_growth_value(sys, sp, q);
    if (inv == 0) throw Error(ErrorKind::Pole, "growth series has a pole at the given weights");
    return 1 / inv;
}

const char* regime_name(Regime r)
{
    switch (r) {
    case Regime::InClosureR: return "InClosureR";
    case Regime::InverseInClosureR: return "InverseInClosureR";
    case Regime::Both: return "Both";
    case Regime::Unknown: return "Unknown";
    }
    return "Unknown";
}

nlohmann::json RegimeCertificate::to_json() const
{
    nlohmann::json j{{"regime", regime_name(regime)}, {"finite_group", finite_group}, {"evidence", evidence}};
    if (rho.exists)
        j["rho"] = {{"lo", gpcohom::to_string(rho.lo)}, {"hi", gpcohom::to_string(rho.hi)}};
    else
        j["rho"] = nullptr;
    return j;
}

RegimeCertificate regime_test(const CoxeterSystem& sys, const SphericalPoset& sp, const MultiParameter& q)
{
    RegimeCertificate cert;
    for (auto& x : q.values)
        if (x <= 0) invalid("weights must be positive");
    if (sp.finite_group()) {
        cert.regime = Regime::Both;
        cert.finite_group = true;
        cert.evidence = "finite group: the growth series is a polynomial";
        return cert;
    }
    auto [num, den] = growth_univariate(sys, sp);
    cert.rho = smallest_positive_root(den);
    if (!cert.rho.exists) {
        cert.regime = Regime::InClosureR;
        cert.evidence = "denominator has no positive root";
        return cert;
    }
    SturmChain chain(den);
    // no root of the denominator in (0, x) means x <= rho
    auto below = [&](const Rational& x) { return chain.count(0, x) - (evaluate(den, x) == 0 ? 1 : 0) == 0; };
    bool small = below(q.max());
    bool large = below(1 / q.min());
    if (small && large)
        cert.regime = Regime::Both;
    else if (small)
        cert.regime = Regime::InClosureR;
    else if (large)
        cert.regime = Regime::InverseInClosureR;
    else
        cert.regime = Regime::Unknown;
    std::string rho = "rho in [" + gpcohom::to_string(cert.rho.lo) + ", " + gpcohom::to_string(cert.rho.hi) + "]";
    if (q.is_uniform())
        cert.evidence = rho + ", q = " + gpcohom::to_string(q.values.front());
    else
        cert.evidence = rho + ", max q = " + gpcohom::to_string(q.max()) + ", min q = " + gpcohom::to_string(q.min()) +
                        " (sufficient tests)";
    return cert;
}

}  // namespace gpcohom
