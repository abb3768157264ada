#include "gpcohom/groups.hpp"

#include <algorithm>
#include <sstream>

namespace gpcohom {

namespace {

std::vector<std::pair<Integer, int>> factorize(Integer n)
{
    std::vector<std::pair<Integer, int>> out;
    for (Integer p = 2; p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e) out.emplace_back(p, e);
    }
    if (n > 1) out.emplace_back(n, 1);
    return out;
}

// invariant factors from a bag of prime powers
std::vector<Integer> invariant_from_powers(const std::vector<Integer>& powers)
{
    std::map<Integer, std::vector<Integer>> byprime;
    for (auto& q : powers) {
        auto f = factorize(q);
        byprime[f.front().first].push_back(q);
    }
    std::size_t len = 0;
    for (auto& [p, v] : byprime) {
        std::sort(v.begin(), v.end());
        len = std::max(len, v.size());
    }
    std::vector<Integer> out(len, Integer(1));
    for (auto& [p, v] : byprime) {
        // largest powers go to the last factors
        for (std::size_t i = 0; i < v.size(); ++i) out[len - v.size() + i] *= v[i];
    }
    return out;
}

}  // namespace

FgAbelianGroup::FgAbelianGroup(int r, std::vector<Integer> t) : rank(r)
{
    *this = from_cyclic(t);
    rank += r;
}

FgAbelianGroup FgAbelianGroup::from_cyclic(const std::vector<Integer>& orders)
{
    FgAbelianGroup g;
    std::vector<Integer> powers;
    for (auto& d : orders) {
        Integer a = abs(d);
        if (a == 0) {
            ++g.rank;
            continue;
        }
        if (a == 1) continue;
        for (auto& [p, e] : factorize(a)) {
            Integer q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            powers.push_back(q);
        }
    }
    g.torsion = invariant_from_powers(powers);
    return g;
}

std::vector<Integer> FgAbelianGroup::elementary_cyclics() const
{
    std::vector<Integer> out;
    for (auto& d : torsion)
        for (auto& [p, e] : factorize(d)) {
            Integer q = 1;
            for (int i = 0; i < e; ++i) q *= p;
            out.push_back(q);
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::string FgAbelianGroup::str() const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    if (rank) {
        os << "Z";
        if (rank > 1) os << "^" << rank;
        first = false;
    }
    for (auto& d : torsion) {
        if (!first) os << " + ";
        os << "Z/" << d;
        first = false;
    }
    return os.str();
}

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b)
{
    std::vector<Integer> all = a.torsion;
    all.insert(all.end(), b.torsion.begin(), b.torsion.end());
    FgAbelianGroup g = FgAbelianGroup::from_cyclic(all);
    g.rank = a.rank + b.rank;
    return g;
}

FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b)
{
    // Z (x) Z = Z, Z (x) Z/n = Z/n, Z/m (x) Z/n = Z/gcd
    std::vector<Integer> cyc;
    for (int i = 0; i < a.rank * b.rank; ++i) cyc.push_back(0);
    for (int i = 0; i < a.rank; ++i) cyc.insert(cyc.end(), b.torsion.begin(), b.torsion.end());
    for (int i = 0; i < b.rank; ++i) cyc.insert(cyc.end(), a.torsion.begin(), a.torsion.end());
    for (auto& m : a.torsion)
        for (auto& n : b.torsion) cyc.push_back(gcd(m, n));
    return FgAbelianGroup::from_cyclic(cyc);
}

FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b)
{
    std::vector<Integer> cyc;
    for (auto& m : a.torsion)
        for (auto& n : b.torsion) cyc.push_back(gcd(m, n));
    return FgAbelianGroup::from_cyclic(cyc);
}

const FgAbelianGroup& GradedGroups::operator[](int degree) const
{
    static const FgAbelianGroup zero;
    auto it = groups_.find(degree);
    return it == groups_.end() ? zero : it->second;
}

void GradedGroups::set(int degree, FgAbelianGroup g)
{
    if (g.is_zero())
        groups_.erase(degree);
    else
        groups_[degree] = std::move(g);
}

bool GradedGroups::concentrated_in(int degree) const
{
    for (auto& [d, g] : groups_)
        if (d != degree || !g.torsion_free()) return false;
    return true;
}

bool GradedGroups::torsion_free() const
{
    for (auto& [d, g] : groups_)
        if (!g.torsion_free()) return false;
    return true;
}

std::string GradedGroups::str() const
{
    if (groups_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto& [d, g] : groups_) {
        if (!first) os << ", ";
        os << d << ": " << g.str();
        first = false;
    }
    return os.str();
}

nlohmann::json to_json(const FgAbelianGroup& g)
{
    nlohmann::json t = nlohmann::json::array();
    for (auto& d : g.torsion) {
        if (d <= Integer(INT64_MAX))
            t.push_back(d.convert_to<std::int64_t>());
        else
            t.push_back(d.str());
    }
    return {{"rank", g.rank}, {"torsion", t}};
}

nlohmann::json to_json(const GradedGroups& g)
{
    nlohmann::json out = nlohmann::json::object();
    for (auto& [d, grp] : g.degrees()) out[std::to_string(d)] = to_json(grp);
    return out;
}

FgAbelianGroup group_from_json(const nlohmann::json& j)
{
    if (!j.is_object() || !j.contains("rank")) invalid("group must be {\"rank\", \"torsion\"}");
    std::vector<Integer> tors;
    if (j.contains("torsion"))
        for (auto& d : j["torsion"]) {
            if (d.is_string())
                tors.emplace_back(d.get<std::string>());
            else
                tors.emplace_back(d.get<std::int64_t>());
        }
    int r = j["rank"].get<int>();
    if (r < 0) invalid("negative rank");
    return FgAbelianGroup(r, tors);
}

}  // namespace gpcohom
