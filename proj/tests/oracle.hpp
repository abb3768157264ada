#pragma once
// Brute-force reference computations used only by the tests.
// They share no code with the library beyond the scalar types.

#include "gpcohom/numeric.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using gpcohom::Integer;
using gpcohom::Rational;
using Face = std::set<std::string>;

inline std::set<Face> closure(const std::vector<std::vector<std::string>>& facets)
{
    std::set<Face> out{Face{}};
    for (auto& f : facets) {
        std::vector<std::string> v(f.begin(), f.end());
        const std::size_t n = v.size();
        for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
            Face s;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) s.insert(v[i]);
            out.insert(s);
        }
    }
    return out;
}

template <class T>
int rank_over(std::vector<std::vector<T>> a, T zero = T(0))
{
    int r = 0;
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    for (int c = 0; c < n && r < m; ++c) {
        int p = r;
        while (p < m && a[p][c] == zero) ++p;
        if (p == m) continue;
        std::swap(a[p], a[r]);
        for (int i = 0; i < m; ++i) {
            if (i == r || a[i][c] == zero) continue;
            T f = a[i][c] / a[r][c];
            for (int j = c; j < n; ++j) a[i][j] -= f * a[r][j];
        }
        ++r;
    }
    return r;
}

// integers mod a prime, enough for rank computations
struct ModP {
    long long v = 0;
    static inline long long p = 2;
    ModP(long long x = 0) : v(((x % p) + p) % p) {}
    bool operator==(const ModP& o) const { return v == o.v; }
    ModP operator*(const ModP& o) const { return ModP(v * o.v); }
    ModP& operator-=(const ModP& o) { v = (v - o.v + p) % p; return *this; }
    ModP operator/(const ModP& o) const
    {
        long long inv = 1, b = o.v, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return ModP(v * inv);
    }
};

// boundary matrix of the relative chain complex, rows = (k-1)-faces, cols = k-faces
inline std::vector<std::vector<long long>> boundary(const std::set<Face>& k, const std::set<Face>& a, int deg,
                                                     bool reduced)
{
    std::vector<Face> rows, cols;
    for (auto& f : k) {
        if (a.count(f)) continue;
        if (f.empty() && !reduced) continue;
        if (static_cast<int>(f.size()) == deg + 1) cols.push_back(f);
        if (static_cast<int>(f.size()) == deg) rows.push_back(f);
    }
    std::vector<std::vector<long long>> m(rows.size(), std::vector<long long>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int i = 0;
        for (auto& v : cols[j]) {
            Face f = cols[j];
            f.erase(v);
            auto it = std::find(rows.begin(), rows.end(), f);
            if (it != rows.end()) m[it - rows.begin()][j] = (i % 2) ? -1 : 1;
            ++i;
        }
    }
    return m;
}

inline int chain_dim(const std::set<Face>& k, const std::set<Face>& a, int deg, bool reduced)
{
    int n = 0;
    for (auto& f : k)
        if (!a.count(f) && static_cast<int>(f.size()) == deg + 1 && (reduced || !f.empty())) ++n;
    return n;
}

// Betti number over Q (p = 0) or over F_p
inline int betti(const std::set<Face>& k, const std::set<Face>& a, int deg, bool reduced, long long p = 0)
{
    auto rk = [&](int d) {
        auto m = boundary(k, a, d, reduced);
        if (m.empty() || m[0].empty()) return 0;
        if (p == 0) {
            std::vector<std::vector<Rational>> q(m.size(), std::vector<Rational>(m[0].size()));
            for (std::size_t i = 0; i < m.size(); ++i)
                for (std::size_t j = 0; j < m[0].size(); ++j) q[i][j] = Rational(m[i][j]);
            return rank_over(q);
        }
        ModP::p = p;
        std::vector<std::vector<ModP>> q(m.size(), std::vector<ModP>(m[0].size()));
        for (std::size_t i = 0; i < m.size(); ++i)
            for (std::size_t j = 0; j < m[0].size(); ++j) q[i][j] = ModP(m[i][j]);
        return rank_over(q);
    };
    return chain_dim(k, a, deg, reduced) - rk(deg) - rk(deg + 1);
}

}  // namespace oracle

#include <cmath>
#include <unordered_set>

namespace oracle {

// Number of elements of each length in the group generated by the reflection matrices of the
// standard real representation, by breadth-first search; elements are compared after rounding.
inline std::vector<std::size_t> reflection_length_profile(const std::vector<std::vector<int>>& m, std::size_t cap,
                                                          int max_length = 1 << 30)
{
    const int n = static_cast<int>(m.size());
    auto bilinear = [&](int s, int t) {
        if (s == t) return 1.0;
        if (m[s][t] == 0) return -1.0;  // infinite label
        return -std::cos(M_PI / m[s][t]);
    };
    using Mat = std::vector<double>;
    std::vector<Mat> gens;
    for (int s = 0; s < n; ++s) {
        Mat g(n * n, 0.0);
        for (int i = 0; i < n; ++i) g[i * n + i] = 1.0;
        // sigma_s(e_t) = e_t - 2 B(e_s, e_t) e_s, stored by columns
        for (int t = 0; t < n; ++t) g[t * n + s] -= 2 * bilinear(s, t);
        gens.push_back(g);
    }
    auto key = [&](const Mat& a) {
        std::string k;
        for (double x : a) k += std::to_string(std::llround(x * 1e6)) + ",";
        return k;
    };
    auto mul = [&](const Mat& a, const Mat& b) {
        Mat c(n * n, 0.0);
        for (int col = 0; col < n; ++col)
            for (int k = 0; k < n; ++k)
                for (int row = 0; row < n; ++row) c[col * n + row] += a[k * n + row] * b[col * n + k];
        return c;
    };
    Mat id(n * n, 0.0);
    for (int i = 0; i < n; ++i) id[i * n + i] = 1.0;
    std::unordered_set<std::string> seen{key(id)};
    std::vector<Mat> frontier{id};
    std::vector<std::size_t> profile{1};
    for (int len = 0; len < max_length && seen.size() < cap; ++len) {
        std::vector<Mat> next;
        for (auto& a : frontier)
            for (auto& g : gens) {
                Mat b = mul(a, g);
                if (seen.insert(key(b)).second) next.push_back(b);
            }
        if (next.empty()) break;
        profile.push_back(next.size());
        frontier.swap(next);
    }
    return profile;
}

// Size of the group, counting up to `cap`
inline std::size_t reflection_group_size(const std::vector<std::vector<int>>& m, std::size_t cap,
                                         int max_length = 1 << 30)
{
    std::size_t total = 0;
    for (auto x : reflection_length_profile(m, cap, max_length)) total += x;
    return std::min(total, cap);
}

}  // namespace oracle
