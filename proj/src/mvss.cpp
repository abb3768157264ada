#include "gpcohom/mvss.hpp"

#include "gpcohom/homology.hpp"
#include "gpcohom/linalg.hpp"

#include <algorithm>

namespace gpcohom {

int PosetOfSpaces::index(const std::string& label) const
{
    auto it = std::find(poset.labels.begin(), poset.labels.end(), label);
    if (it == poset.labels.end()) invalid("unknown poset element '" + label + "'");
    return static_cast<int>(it - poset.labels.begin());
}

namespace {

bool subcomplex_of(const SimplicialComplex& a, const SimplicialComplex& b)
{
    for (auto& f : a.facets())
        if (!b.contains_labels(a.labels(f))) return false;
    return true;
}

[[noreturn]] void bad_poset(const std::string& msg) { invalid("invalid-poset-of-spaces: " + msg); }

}  // namespace

void PosetOfSpaces::validate() const
{
    const int n = poset.size();
    if (static_cast<int>(spaces.size()) != n) bad_poset("one complex is needed per poset element");
    if (n == 0) bad_poset("the poset is empty");
    for (int a = 0; a < n; ++a)
        if (!subcomplex_of(spaces[a], ambient)) bad_poset("Y_" + poset.labels[a] + " is not inside the ambient complex");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (poset.less[a][b] && !subcomplex_of(spaces[a], spaces[b]))
                bad_poset(poset.labels[a] + " < " + poset.labels[b] + " but Y_" + poset.labels[a] + " is not inside Y_" +
                          poset.labels[b]);
    for (auto& f : ambient.facets()) {
        auto l = ambient.labels(f);
        bool covered = std::any_of(spaces.begin(), spaces.end(), [&](const SimplicialComplex& y) { return y.contains_labels(l); });
        if (!covered) bad_poset("the union of the Y_a misses an ambient simplex");
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            if (poset.less[a][b] || poset.less[b][a]) continue;
            std::vector<std::vector<std::string>> meet;
            for (auto& s : spaces[a].simplices()) {
                auto l = spaces[a].labels(s);
                if (!l.empty() && spaces[b].contains_labels(l)) meet.push_back(l);
            }
            if (meet.empty()) continue;
            std::vector<int> lower;
            for (int c = 0; c < n; ++c)
                if (poset.less[c][a] && poset.less[c][b]) lower.push_back(c);
            int glb = -1;
            for (int c : lower)
                if (std::all_of(lower.begin(), lower.end(), [&](int d) { return d == c || poset.less[d][c]; })) glb = c;
            std::string triple = "(" + poset.labels[a] + ", " + poset.labels[b];
            if (glb < 0) bad_poset(triple + ") intersect but have no greatest lower bound");
            for (auto& l : meet)
                if (!spaces[glb].contains_labels(l))
                    bad_poset(triple + ", " + poset.labels[glb] + "): the intersection is larger than Y of the meet");
        }
}

PosetOfSpaces PosetOfSpaces::from_json(const nlohmann::json& j)
{
    PosetOfSpaces ps;
    std::string mode = j.value("mode", std::string("absolute"));
    if (mode == "absolute")
        ps.mode = CochainMode::Absolute;
    else if (mode == "reduced")
        ps.mode = CochainMode::Reduced;
    else if (mode == "cone-pair")
        ps.mode = CochainMode::ConePair;
    else
        invalid("unknown cochain mode '" + mode + "'");
    ps.ambient = complex_from_json(j.at("ambient"));
    std::vector<std::string> labels;
    for (auto& e : j.at("elements")) {
        labels.push_back(e.at("name").get<std::string>());
        ps.spaces.push_back(complex_from_json(e.at("complex")));
    }
    std::vector<std::pair<int, int>> rel;
    auto find = [&](const std::string& s) {
        auto it = std::find(labels.begin(), labels.end(), s);
        if (it == labels.end()) invalid("relation names unknown element '" + s + "'");
        return static_cast<int>(it - labels.begin());
    };
    if (j.contains("relations"))
        for (auto& r : j.at("relations")) rel.emplace_back(find(r.at(0).get<std::string>()), find(r.at(1).get<std::string>()));
    ps.poset = Poset(labels, rel);
    ps.validate();
    return ps;
}

nlohmann::json PosetOfSpaces::to_json() const
{
    nlohmann::json el = nlohmann::json::array(), rel = nlohmann::json::array();
    for (int a = 0; a < poset.size(); ++a) el.push_back({{"name", poset.labels[a]}, {"complex", gpcohom::to_json(spaces[a])}});
    for (int a = 0; a < poset.size(); ++a)
        for (int b = 0; b < poset.size(); ++b)
            if (poset.less[a][b]) rel.push_back({poset.labels[a], poset.labels[b]});
    const char* m = mode == CochainMode::Absolute ? "absolute" : mode == CochainMode::Reduced ? "reduced" : "cone-pair";
    return {{"mode", m}, {"ambient", gpcohom::to_json(ambient)}, {"elements", el}, {"relations", rel}};
}

PosetOfSpaces join_cover(const PjoinContext& ctx)
{
    PosetOfSpaces ps;
    ps.mode = CochainMode::ConePair;
    ps.ambient = polyhedral_join(ctx);
    std::vector<std::vector<std::string>> js;
    for (auto& s : ctx.base.simplices()) js.push_back(ctx.base.labels(s));
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> rel;
    for (std::size_t a = 0; a < js.size(); ++a) {
        labels.push_back(set_label(js[a]));
        ps.spaces.push_back(ctx.factor_join(js[a]));
        for (std::size_t b = 0; b < js.size(); ++b)
            if (js[a].size() < js[b].size() && std::includes(js[b].begin(), js[b].end(), js[a].begin(), js[a].end()))
                rel.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    ps.poset = Poset(labels, rel);
    return ps;
}

// ---------------------------------------------------------------------------

namespace {

SparseMatrix zero(int r, int c) { return SparseMatrix(r, c); }

int rank_of(const SparseMatrix& m) { return m.rows == 0 || m.cols == 0 ? 0 : rank(m); }

// block [[a, 0], [b, c]]
SparseMatrix lower_block(const SparseMatrix& a, const SparseMatrix& b, const SparseMatrix& c)
{
    return vconcat(hconcat(a, zero(a.rows, c.cols)), hconcat(b, c));
}

class Model {
public:
    explicit Model(const PosetOfSpaces& ps)
        : ps_(ps), reduced_(ps.mode != CochainMode::Absolute), shift_(ps.mode == CochainMode::ConePair ? 1 : 0)
    {
        ps.validate();
        cc_ = chain_complex(ps.ambient, nullptr, reduced_ ? Variant::Reduced : Variant::Absolute);
        jmin_ = cc_.min_degree;
        jmax_ = cc_.max_degree();
        const int n = ps.poset.size();
        member_.assign(n, std::vector<char>(ps.ambient.size(), 0));
        for (int a = 0; a < n; ++a)
            for (std::size_t s = 0; s < ps.ambient.size(); ++s)
                member_[a][s] = ps.spaces[a].contains_labels(ps.ambient.labels(ps.ambient.simplices()[s]));
        // chains of the poset, increasing
        std::vector<std::vector<int>> frontier;
        for (int a = 0; a < n; ++a) frontier.push_back({a});
        while (!frontier.empty()) {
            std::vector<std::vector<int>> next;
            for (auto& c : frontier) {
                chains_.push_back(c);
                for (int b = 0; b < n; ++b)
                    if (ps.poset.less[c.back()][b]) {
                        auto d = c;
                        d.push_back(b);
                        next.push_back(d);
                    }
            }
            frontier = std::move(next);
        }
        std::sort(chains_.begin(), chains_.end(), [](const auto& x, const auto& y) {
            return x.size() != y.size() ? x.size() < y.size() : x < y;
        });
        imax_ = static_cast<int>(chains_.back().size()) - 1;
        by_dim_.assign(imax_ + 1, {});
        for (std::size_t k = 0; k < chains_.size(); ++k) {
            by_dim_[chains_[k].size() - 1].push_back(static_cast<int>(k));
            chain_index_[chains_[k]] = static_cast<int>(k);
        }
    }

    int jmin() const { return jmin_; }
    int jmax() const { return jmax_; }
    int imax() const { return imax_; }
    int shift() const { return shift_; }
    const PosetOfSpaces& ps() const { return ps_; }

    std::vector<char> mask_of(int a) const { return member_[a]; }
    std::vector<char> union_below(int a) const
    {
        std::vector<char> m(ps_.ambient.size(), 0);
        for (int b = 0; b < ps_.poset.size(); ++b)
            if (ps_.poset.less[b][a])
                for (std::size_t s = 0; s < m.size(); ++s) m[s] = m[s] || member_[b][s];
        return m;
    }

    // positions in cc_.cells[j] of the cells inside the mask
    std::vector<int> cells(const std::vector<char>& mask, int j) const
    {
        std::vector<int> out;
        if (j < jmin_ || j > jmax_) return out;
        const auto& c = cc_.cells[j - jmin_];
        for (std::size_t p = 0; p < c.size(); ++p)
            if (mask[c[p]]) out.push_back(static_cast<int>(p));
        return out;
    }

    // coboundary C^j -> C^{j+1} of the subcomplex given by the mask
    SparseMatrix coboundary(const std::vector<char>& mask, int j) const
    {
        auto cols = cells(mask, j), rows = cells(mask, j + 1);
        SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        if (rows.empty() || cols.empty()) return m;
        std::vector<int> col_of(cc_.dim(j), -1);
        for (std::size_t k = 0; k < cols.size(); ++k) col_of[cols[k]] = static_cast<int>(k);
        SparseMatrix d = cc_.d(j + 1);  // C_{j+1} -> C_j
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (auto& [row, v] : d.col[rows[r]])
                if (col_of[row] >= 0) m.add(static_cast<int>(r), col_of[row], v);
        m.normalize();
        return m;
    }

    // projection of cochains from a larger subcomplex onto a smaller one
    SparseMatrix restriction(const std::vector<char>& from, const std::vector<char>& to, int j) const
    {
        auto cols = cells(from, j), rows = cells(to, j);
        SparseMatrix m(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
        std::size_t c = 0;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            while (c < cols.size() && cols[c] < rows[r]) ++c;
            if (c < cols.size() && cols[c] == rows[r]) m.add(static_cast<int>(r), static_cast<int>(c), 1);
        }
        return m;
    }

    int betti(int a, int j) const
    {
        auto key = std::pair{a, j};
        auto it = betti_.find(key);
        if (it != betti_.end()) return it->second;
        auto m = member_[a];
        int b = static_cast<int>(cells(m, j).size()) - rank_of(coboundary(m, j)) - rank_of(coboundary(m, j - 1));
        return betti_[key] = b;
    }

    // E0 blocks
    int block_dim(int i, int j) const
    {
        if (i < 0 || i > imax_) return 0;
        int d = 0;
        for (int k : by_dim_[i]) d += static_cast<int>(cells(member_[chains_[k][0]], j).size());
        return d;
    }

    SparseMatrix vertical(int i, int j) const  // E0^{i,j} -> E0^{i,j+1}
    {
        SparseMatrix m(block_dim(i, j + 1), block_dim(i, j));
        if (i < 0 || i > imax_) return m;
        int r0 = 0, c0 = 0;
        const std::int64_t sign = i % 2 ? -1 : 1;
        for (int k : by_dim_[i]) {
            const auto& mask = member_[chains_[k][0]];
            auto b = coboundary(mask, j);
            for (int c = 0; c < b.cols; ++c)
                for (auto& [r, v] : b.col[c]) m.add(r0 + r, c0 + c, sign * v);
            r0 += static_cast<int>(cells(mask, j + 1).size());
            c0 += static_cast<int>(cells(mask, j).size());
        }
        return m;
    }

    SparseMatrix horizontal(int i, int j) const  // E0^{i,j} -> E0^{i+1,j}
    {
        SparseMatrix m(block_dim(i + 1, j), block_dim(i, j));
        if (i < 0 || i + 1 > imax_) return m;
        std::map<int, std::pair<int, std::vector<int>>> col_block;  // chain -> (offset, cells)
        int c0 = 0;
        for (int k : by_dim_[i]) {
            auto c = cells(member_[chains_[k][0]], j);
            col_block[k] = {c0, c};
            c0 += static_cast<int>(c.size());
        }
        int r0 = 0;
        for (int t : by_dim_[i + 1]) {
            const auto& tau = chains_[t];
            auto rows = cells(member_[tau[0]], j);
            for (std::size_t drop = 0; drop < tau.size(); ++drop) {
                auto sigma = tau;
                sigma.erase(sigma.begin() + static_cast<long>(drop));
                auto& [off, cs] = col_block.at(chain_index_.at(sigma));
                const std::int64_t sign = drop % 2 ? -1 : 1;
                std::size_t c = 0;
                for (std::size_t r = 0; r < rows.size(); ++r) {
                    while (c < cs.size() && cs[c] < rows[r]) ++c;
                    if (c < cs.size() && cs[c] == rows[r]) m.add(r0 + static_cast<int>(r), off + static_cast<int>(c), sign);
                }
            }
            r0 += static_cast<int>(rows.size());
        }
        return m;
    }

    // total complex differential D^n -> D^{n+1}
    SparseMatrix total(int n) const
    {
        std::vector<int> row_off, col_off;
        int rows = 0, cols = 0;
        for (int i = 0; i <= imax_; ++i) {
            col_off.push_back(cols);
            cols += block_dim(i, n - i);
            row_off.push_back(rows);
            rows += block_dim(i, n + 1 - i);
        }
        SparseMatrix m(rows, cols);
        for (int i = 0; i <= imax_; ++i) {
            auto v = vertical(i, n - i);
            for (int c = 0; c < v.cols; ++c)
                for (auto& [r, x] : v.col[c]) m.add(row_off[i] + r, col_off[i] + c, x);
            if (i + 1 <= imax_) {
                auto h = horizontal(i, n - i);
                for (int c = 0; c < h.cols; ++c)
                    for (auto& [r, x] : h.col[c]) m.add(row_off[i + 1] + r, col_off[i] + c, x);
            }
        }
        m.normalize();
        return m;
    }

    int total_dim(int n) const
    {
        int d = 0;
        for (int i = 0; i <= imax_; ++i) d += block_dim(i, n - i);
        return d;
    }

    // ranks of H^i(Flag P>=a, Flag P>a) over Q
    std::map<int, int> flag_pair(int a) const
    {
        std::vector<std::string> verts;
        std::vector<std::vector<std::string>> big, small;
        for (auto& c : chains_) {
            bool in_ge = std::all_of(c.begin(), c.end(), [&](int x) { return x == a || ps_.poset.less[a][x]; });
            if (!in_ge) continue;
            std::vector<std::string> l;
            for (int x : c) l.push_back(ps_.poset.labels[x]);
            big.push_back(l);
            if (c[0] != a) small.push_back(l);
        }
        for (int x = 0; x < ps_.poset.size(); ++x)
            if (x == a || ps_.poset.less[a][x]) verts.push_back(ps_.poset.labels[x]);
        std::vector<std::string> small_verts;
        for (auto& v : verts)
            if (v != ps_.poset.labels[a]) small_verts.push_back(v);
        auto k = SimplicialComplex::from_facets(verts, big);
        auto sub = SimplicialComplex::from_facets(small_verts, small);
        return betti_numbers(k, sub);
    }

private:
    const PosetOfSpaces& ps_;
    bool reduced_;
    int shift_;
    ChainComplex cc_;
    int jmin_ = 0, jmax_ = 0, imax_ = 0;
    std::vector<std::vector<char>> member_;
    std::vector<std::vector<int>> chains_;
    std::vector<std::vector<int>> by_dim_;
    std::map<std::vector<int>, int> chain_index_;
    mutable std::map<std::pair<int, int>, int> betti_;
};

MapVerdict map_verdict(const Model& m, int a, const std::vector<char>& target, std::optional<int> lower)
{
    MapVerdict v;
    v.element = m.ps().poset.labels[a];
    if (lower) v.lower = m.ps().poset.labels[*lower];
    auto source = m.mask_of(a);
    for (int j = m.jmin(); j <= m.jmax(); ++j) {
        auto da = m.coboundary(source, j);
        auto db = m.coboundary(target, j - 1);
        auto r = m.restriction(source, target, j);
        int induced = rank_of(lower_block(da, r, db)) - rank_of(da) - rank_of(db);
        bool int_zero = true;
        if (induced == 0 && r.rows > 0 && r.cols > 0) {
            // integral cocycles must restrict to integral coboundaries
            IntMatrix z = da.rows == 0 ? IntMatrix::Identity(da.cols, da.cols) : integer_kernel(da.dense());
            if (z.cols() > 0) {
                IntMatrix image = r.dense() * z;
                int_zero = lattice_contains(db, SparseMatrix::from_dense(image));
            }
        } else if (induced != 0) {
            int_zero = false;
        }
        v.rational_rank[j + m.shift()] = induced;
        v.integral_zero[j + m.shift()] = int_zero;
        v.zero = v.zero && induced == 0 && int_zero;
    }
    return v;
}

nlohmann::json ranks_json(const PageRanks& p)
{
    nlohmann::json arr = nlohmann::json::array();
    for (auto& [k, v] : p)
        if (v) arr.push_back({{"i", k.first}, {"j", k.second}, {"rank", v}});
    return arr;
}

nlohmann::json degree_json(const std::map<int, int>& m)
{
    nlohmann::json j = nlohmann::json::object();
    for (auto& [d, v] : m)
        if (v) j[std::to_string(d)] = v;
    return j;
}

Conditions conditions_of(const Model& m)
{
    Conditions c;
    const auto& p = m.ps().poset;
    for (int a = 0; a < p.size(); ++a) {
        bool any_below = false;
        for (int b = 0; b < p.size(); ++b) any_below = any_below || p.less[b][a];
        if (!any_below) {
            MapVerdict v;
            v.element = p.labels[a];
            v.vacuous = true;
            c.z.push_back(v);
            continue;
        }
        auto z = map_verdict(m, a, m.union_below(a), std::nullopt);
        c.z_holds = c.z_holds && z.zero;
        c.z.push_back(z);
        for (int b = 0; b < p.size(); ++b) {
            if (!p.less[b][a]) continue;
            auto zp = map_verdict(m, a, m.mask_of(b), b);
            c.z_prime_holds = c.z_prime_holds && zp.zero;
            c.z_prime.push_back(zp);
        }
    }
    return c;
}

std::map<std::string, PageRanks> summands_of(const Model& m)
{
    std::map<std::string, PageRanks> out;
    const auto& p = m.ps().poset;
    for (int a = 0; a < p.size(); ++a) {
        auto flag = m.flag_pair(a);
        PageRanks r;
        for (auto& [i, h] : flag)
            for (int j = m.jmin(); j <= m.jmax(); ++j) {
                int b = m.betti(a, j);
                if (h && b) r[{i, j + m.shift()}] = h * b;
            }
        out[p.labels[a]] = r;
    }
    return out;
}

}  // namespace

Conditions check_conditions(const PosetOfSpaces& ps)
{
    Model m(ps);
    return conditions_of(m);
}

SpectralReport build_pages(const PosetOfSpaces& ps)
{
    Model m(ps);
    SpectralReport r;
    const int s = m.shift();
    std::map<std::pair<int, int>, int> rank_h, rank_d1;
    for (int i = 0; i <= m.imax(); ++i)
        for (int j = m.jmin(); j <= m.jmax(); ++j) {
            rank_h[{i, j}] = rank_of(m.horizontal(i, j));
            r.e0[{i, j + s}] = m.block_dim(i, j);
        }
    // E1 = vertical cohomology, E2 through the induced horizontal maps
    for (int i = 0; i <= m.imax(); ++i)
        for (int j = m.jmin(); j <= m.jmax(); ++j) {
            int dim = m.block_dim(i, j);
            int e1 = dim - rank_of(m.vertical(i, j)) - rank_of(m.vertical(i, j - 1));
            r.e1[{i, j + s}] = e1;
            auto a = m.vertical(i, j);
            auto c = m.vertical(i + 1, j - 1);
            rank_d1[{i, j}] = i + 1 > m.imax() ? 0 : rank_of(lower_block(a, m.horizontal(i, j), c)) - rank_of(a) - rank_of(c);
        }
    for (int i = 0; i <= m.imax(); ++i)
        for (int j = m.jmin(); j <= m.jmax(); ++j) {
            int prev = i > 0 ? rank_d1[{i - 1, j}] : 0;
            int e2 = r.e1[{i, j + s}] - rank_d1[{i, j}] - prev;
            r.e2[{i, j + s}] = e2;
            r.e2_total[i + j + s] += e2;
            // rows of E0
            int h = m.block_dim(i, j) - rank_h[{i, j}] - (i > 0 ? rank_h[{i - 1, j}] : 0);
            int expect = i == 0 ? static_cast<int>(m.cells(std::vector<char>(ps.ambient.size(), 1), j).size()) : 0;
            if (h != expect) r.rows_exact = false;
        }
    const int nmin = m.jmin(), nmax = m.jmax() + m.imax();
    std::map<int, SparseMatrix> d;
    for (int n = nmin - 1; n <= nmax; ++n) d[n] = m.total(n);
    for (int n = nmin; n <= nmax; ++n) {
        int h = m.total_dim(n) - rank_of(d[n]) - rank_of(d[n - 1]);
        if (h) r.total[n + s] = h;
        std::vector<Integer> orders;
        for (int k = 0; k < h; ++k) orders.push_back(0);
        if (d[n - 1].rows && d[n - 1].cols)
            for (auto& f : invariant_factors(d[n - 1]))
                if (f > 1) orders.push_back(f);
        auto g = FgAbelianGroup::from_cyclic(orders);
        if (!g.is_zero()) r.total_integral.set(n + s, g);
    }
    const Variant variant = ps.mode == CochainMode::Absolute ? Variant::Absolute : Variant::Reduced;
    for (auto& [deg, b] : betti_numbers(ps.ambient, variant))
        if (b) r.direct[deg + s] = b;
    for (auto& [deg, g] : homology_groups(ps.ambient, variant, Theory::Cohomology).degrees()) r.direct_integral.set(deg + s, g);
    r.total_matches_direct = r.total == r.direct && r.total_integral == r.direct_integral;
    std::map<int, int> e2_nonzero;
    for (auto& [n, v] : r.e2_total)
        if (v) e2_nonzero[n] = v;
    r.e2_total = e2_nonzero;
    r.degenerates = r.e2_total == r.direct;
    r.conditions = conditions_of(m);
    r.summands = summands_of(m);
    PageRanks sum;
    for (auto& [a, pr] : r.summands)
        for (auto& [k, v] : pr) sum[k] += v;
    r.e2_matches_summands = true;
    for (auto& [k, v] : r.e2)
        if (v != (sum.count(k) ? sum[k] : 0)) r.e2_matches_summands = false;
    for (auto& [k, v] : sum)
        if (!r.e2.count(k) && v) r.e2_matches_summands = false;
    return r;
}

DecompositionCheck verify_decomposition(const PosetOfSpaces& ps)
{
    Model m(ps);
    auto c = conditions_of(m);
    if (!c.z_holds) {
        for (auto& v : c.z)
            if (!v.zero)
                throw Error(ErrorKind::ProvisoViolation,
                            "condition (Z) fails at '" + v.element + "'; the decomposition is not established");
    }
    DecompositionCheck out;
    for (auto& [a, pr] : summands_of(m))
        for (auto& [k, v] : pr) {
            out.summands[a][k.first + k.second] += v;
            out.summand_total[k.first + k.second] += v;
        }
    const Variant variant = ps.mode == CochainMode::Absolute ? Variant::Absolute : Variant::Reduced;
    for (auto& [deg, b] : betti_numbers(ps.ambient, variant))
        if (b) out.direct[deg + m.shift()] = b;
    out.equal = out.summand_total == out.direct;
    return out;
}

nlohmann::json Conditions::to_json() const
{
    auto verdicts = [](const std::vector<MapVerdict>& vs) {
        nlohmann::json arr = nlohmann::json::array();
        for (auto& v : vs) {
            nlohmann::json rr = nlohmann::json::object(), iz = nlohmann::json::object();
            for (auto& [d, x] : v.rational_rank) rr[std::to_string(d)] = x;
            for (auto& [d, x] : v.integral_zero) iz[std::to_string(d)] = x;
            nlohmann::json j{{"element", v.element}, {"zero", v.zero}, {"vacuous", v.vacuous},
                             {"rational_rank", rr}, {"integral_zero", iz}};
            if (v.lower) j["lower"] = *v.lower;
            arr.push_back(j);
        }
        return arr;
    };
    return {{"Z", z_holds}, {"Z_prime", z_prime_holds}, {"Z_maps", verdicts(z)}, {"Z_prime_maps", verdicts(z_prime)}};
}

nlohmann::json SpectralReport::to_json() const
{
    nlohmann::json sm = nlohmann::json::object();
    for (auto& [a, pr] : summands) sm[a] = ranks_json(pr);
    return {{"E0", ranks_json(e0)},
            {"E1", ranks_json(e1)},
            {"E2", ranks_json(e2)},
            {"E2_total", degree_json(e2_total)},
            {"total", degree_json(total)},
            {"total_integral", gpcohom::to_json(total_integral)},
            {"direct", degree_json(direct)},
            {"direct_integral", gpcohom::to_json(direct_integral)},
            {"rows_exact", rows_exact},
            {"total_matches_direct", total_matches_direct},
            {"degenerates", degenerates},
            {"conditions", conditions.to_json()},
            {"summands", sm},
            {"E2_matches_summands", e2_matches_summands}};
}

nlohmann::json DecompositionCheck::to_json() const
{
    nlohmann::json sm = nlohmann::json::object();
    for (auto& [a, m] : summands) sm[a] = degree_json(m);
    return {{"summands", sm}, {"summand_total", degree_json(summand_total)}, {"direct", degree_json(direct)}, {"equal", equal}};
}

}  // namespace gpcohom
