#include "gpcohom/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gpcohom {

void SparseMatrix::add(int r, int c, std::int64_t v)
{
    if (v != 0) col[c].emplace_back(r, v);
}

void SparseMatrix::normalize()
{
    for (auto& c : col) {
        std::sort(c.begin(), c.end());
        std::vector<std::pair<int, std::int64_t>> merged;
        for (auto& e : c) {
            if (!merged.empty() && merged.back().first == e.first)
                merged.back().second += e.second;
            else
                merged.push_back(e);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(), [](auto& e) { return e.second == 0; }),
                     merged.end());
        c.swap(merged);
    }
}

SparseMatrix SparseMatrix::transpose() const
{
    SparseMatrix t(cols, rows);
    for (int c = 0; c < cols; ++c)
        for (auto& [r, v] : col[c]) t.col[r].emplace_back(c, v);
    return t;
}

std::size_t SparseMatrix::nonzeros() const
{
    std::size_t n = 0;
    for (auto& c : col) n += c.size();
    return n;
}

IntMatrix SparseMatrix::dense() const
{
    IntMatrix m = IntMatrix::Zero(rows, cols);
    for (int c = 0; c < cols; ++c)
        for (auto& [r, v] : col[c]) m(r, c) += Integer(v);
    return m;
}

SparseMatrix SparseMatrix::from_dense(const IntMatrix& m)
{
    SparseMatrix s(static_cast<int>(m.rows()), static_cast<int>(m.cols()));
    for (int c = 0; c < m.cols(); ++c)
        for (int r = 0; r < m.rows(); ++r)
            if (m(r, c) != 0) s.col[c].emplace_back(r, m(r, c).convert_to<std::int64_t>());
    return s;
}

SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.rows != b.rows) invalid("hconcat: row mismatch");
    SparseMatrix out(a.rows, a.cols + b.cols);
    std::copy(a.col.begin(), a.col.end(), out.col.begin());
    std::copy(b.col.begin(), b.col.end(), out.col.begin() + a.cols);
    return out;
}

SparseMatrix vconcat(const SparseMatrix& a, const SparseMatrix& b)
{
    if (a.cols != b.cols) invalid("vconcat: column mismatch");
    SparseMatrix out(a.rows + b.rows, a.cols);
    for (int c = 0; c < a.cols; ++c) {
        out.col[c] = a.col[c];
        for (auto& [r, v] : b.col[c]) out.col[c].emplace_back(r + a.rows, v);
    }
    return out;
}

namespace {

struct Overflow {};

inline std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline std::int64_t checked_sub(std::int64_t a, std::int64_t b)
{
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline Integer checked_mul(const Integer& a, const Integer& b) { return a * b; }
inline Integer checked_sub(const Integer& a, const Integer& b) { return a - b; }

inline bool is_unit(std::int64_t v) { return v == 1 || v == -1; }
inline bool is_unit(const Integer& v) { return v == 1 || v == -1; }

// Markowitz-style elimination on unit pivots; what is left over is handed to dense code.
template <class T>
class UnitEliminator {
public:
    explicit UnitEliminator(const SparseMatrix& m) : cols_(m.cols), rows_(m.rows)
    {
        for (int c = 0; c < m.cols; ++c)
            for (auto& [r, v] : m.col[c]) {
                if (v == 0) continue;
                cols_[c][r] += T(v);
                rows_[r].insert(c);
            }
        for (int c = 0; c < m.cols; ++c) {
            for (auto it = cols_[c].begin(); it != cols_[c].end();) {
                if (it->second == 0) {
                    rows_[it->first].erase(c);
                    it = cols_[c].erase(it);
                } else
                    ++it;
            }
            if (!cols_[c].empty()) queue_.insert({cols_[c].size(), c});
        }
    }

    int run()
    {
        int pivots = 0;
        while (true) {
            int pc = -1, pr = -1;
            for (auto& [sz, c] : queue_) {
                std::size_t best = static_cast<std::size_t>(-1);
                for (auto& [r, v] : cols_[c])
                    if (is_unit(v) && rows_[r].size() < best) {
                        best = rows_[r].size();
                        pr = r;
                    }
                if (pr >= 0) {
                    pc = c;
                    break;
                }
            }
            if (pc < 0) break;
            pivot(pr, pc);
            ++pivots;
        }
        return pivots;
    }

    // remaining nonzero block as a dense matrix
    IntMatrix remainder() const
    {
        std::vector<int> rs, cs;
        for (auto& [sz, c] : queue_) cs.push_back(c);
        std::sort(cs.begin(), cs.end());
        std::set<int> rowset;
        for (int c : cs)
            for (auto& [r, v] : cols_[c]) rowset.insert(r);
        rs.assign(rowset.begin(), rowset.end());
        if (static_cast<double>(rs.size()) * static_cast<double>(cs.size()) > 4.0e6)
            resource_cap("sparse elimination left a dense block of " + std::to_string(rs.size()) + "x" +
                         std::to_string(cs.size()));
        std::map<int, int> rindex;
        for (std::size_t i = 0; i < rs.size(); ++i) rindex[rs[i]] = static_cast<int>(i);
        IntMatrix out = IntMatrix::Zero(static_cast<int>(rs.size()), static_cast<int>(cs.size()));
        for (std::size_t j = 0; j < cs.size(); ++j)
            for (auto& [r, v] : cols_[cs[j]]) out(rindex[r], static_cast<int>(j)) = Integer(v);
        return out;
    }

private:
    void requeue(int c, std::size_t old)
    {
        if (old) queue_.erase({old, c});
        if (!cols_[c].empty()) queue_.insert({cols_[c].size(), c});
    }

    void pivot(int r, int c)
    {
        const T p = cols_[c].at(r);
        auto colc = cols_[c];
        std::vector<int> rowr(rows_[r].begin(), rows_[r].end());
        for (int j : rowr) {
            if (j == c) continue;
            std::size_t old = cols_[j].size();
            T arj = cols_[j].at(r);
            T factor = checked_mul(arj, p);  // p is a unit so 1/p == p
            for (auto& [i, aic] : colc) {
                if (i == r) continue;
                auto it = cols_[j].find(i);
                T cur = it == cols_[j].end() ? T(0) : it->second;
                T nv = checked_sub(cur, checked_mul(aic, factor));
                if (nv == 0) {
                    if (it != cols_[j].end()) {
                        cols_[j].erase(it);
                        rows_[i].erase(j);
                    }
                } else if (it == cols_[j].end()) {
                    cols_[j].emplace(i, nv);
                    rows_[i].insert(j);
                } else
                    it->second = nv;
            }
            cols_[j].erase(r);
            requeue(j, old);
        }
        for (auto& [i, v] : colc) rows_[i].erase(c);
        queue_.erase({cols_[c].size(), c});
        cols_[c].clear();
        rows_[r].clear();
    }

    std::vector<std::map<int, T>> cols_;
    std::vector<std::set<int>> rows_;
    std::set<std::pair<std::size_t, int>> queue_;
};

template <class T>
std::pair<int, IntMatrix> eliminate(const SparseMatrix& m)
{
    UnitEliminator<T> e(m);
    int p = e.run();
    return {p, e.remainder()};
}

std::pair<int, IntMatrix> eliminate_any(const SparseMatrix& m)
{
    try {
        return eliminate<std::int64_t>(m);
    } catch (const Overflow&) {
        return eliminate<Integer>(m);
    }
}

Integer nearest_quotient(const Integer& a, const Integer& b)
{
    // a / b rounded to the nearest integer, so remainders stay small
    Integer q = a / b;
    Integer r = a - q * b;
    if (2 * abs(r) > abs(b)) q += (r < 0) == (b < 0) ? 1 : -1;
    return q;
}

}  // namespace

std::vector<Integer> invariant_factors(const SparseMatrix& m)
{
    auto [units, rest] = eliminate_any(m);
    std::vector<Integer> out(units, Integer(1));
    if (rest.size() > 0) {
        auto snf = smith_normal_form(rest, false);
        for (auto& d : snf.factors()) out.push_back(d);
    }
    return out;
}

int rank(const SparseMatrix& m)
{
    auto [units, rest] = eliminate_any(m);
    if (rest.size() == 0) return units;
    return units + rank<Integer>(rest);
}

SmithForm<Integer> smith_normal_form(const IntMatrix& input, bool certificate)
{
    const int m = static_cast<int>(input.rows()), n = static_cast<int>(input.cols());
    SmithForm<Integer> out;
    out.D = input;
    if (certificate) {
        out.U = IntMatrix::Identity(m, m);
        out.V = IntMatrix::Identity(n, n);
    }
    IntMatrix& a = out.D;

    auto swap_rows = [&](int i, int j) {
        if (i == j) return;
        a.row(i).swap(a.row(j));
        if (certificate) out.U.row(i).swap(out.U.row(j));
    };
    auto swap_cols = [&](int i, int j) {
        if (i == j) return;
        a.col(i).swap(a.col(j));
        if (certificate) out.V.col(i).swap(out.V.col(j));
    };
    // row_i -= q row_t
    auto row_op = [&](int i, int t, const Integer& q) {
        for (int j = 0; j < n; ++j)
            if (a(t, j) != 0) a(i, j) -= q * a(t, j);
        if (certificate)
            for (int j = 0; j < m; ++j)
                if (out.U(t, j) != 0) out.U(i, j) -= q * out.U(t, j);
    };
    auto col_op = [&](int j, int t, const Integer& q) {
        for (int i = 0; i < m; ++i)
            if (a(i, t) != 0) a(i, j) -= q * a(i, t);
        if (certificate)
            for (int i = 0; i < n; ++i)
                if (out.V(i, t) != 0) out.V(i, j) -= q * out.V(i, t);
    };

    int t = 0;
    for (; t < std::min(m, n); ++t) {
        int bi = -1, bj = -1;
        Integer best;
        for (int j = t; j < n; ++j)
            for (int i = t; i < m; ++i)
                if (a(i, j) != 0 && (bi < 0 || abs(a(i, j)) < best)) {
                    best = abs(a(i, j));
                    bi = i;
                    bj = j;
                }
        if (bi < 0) break;
        swap_rows(t, bi);
        swap_cols(t, bj);
        while (true) {
            bool clean = true;
            for (int i = t + 1; i < m; ++i)
                if (a(i, t) != 0) {
                    row_op(i, t, nearest_quotient(a(i, t), a(t, t)));
                    if (a(i, t) != 0) clean = false;
                }
            for (int j = t + 1; j < n; ++j)
                if (a(t, j) != 0) {
                    col_op(j, t, nearest_quotient(a(t, j), a(t, t)));
                    if (a(t, j) != 0) clean = false;
                }
            if (!clean) {
                // bring the smallest leftover in row/column t to the pivot
                int si = t, sj = t;
                Integer small = abs(a(t, t));
                for (int i = t + 1; i < m; ++i)
                    if (a(i, t) != 0 && abs(a(i, t)) < small) { small = abs(a(i, t)); si = i; sj = t; }
                for (int j = t + 1; j < n; ++j)
                    if (a(t, j) != 0 && abs(a(t, j)) < small) { small = abs(a(t, j)); si = t; sj = j; }
                swap_rows(t, si);
                swap_cols(t, sj);
                continue;
            }
            int bad = -1;
            for (int i = t + 1; i < m && bad < 0; ++i)
                for (int j = t + 1; j < n; ++j)
                    if (a(i, j) % a(t, t) != 0) { bad = i; break; }
            if (bad < 0) break;
            row_op(t, bad, Integer(-1));  // row_t += row_bad
        }
        if (a(t, t) < 0) {
            for (int j = 0; j < n; ++j) a(t, j) = -a(t, j);
            if (certificate)
                for (int j = 0; j < m; ++j) out.U(t, j) = -out.U(t, j);
        }
    }
    out.rank = t;
    return out;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    auto snf = smith_normal_form(m, true);
    const int n = static_cast<int>(m.cols());
    return snf.V.rightCols(n - snf.rank);
}

Integer lattice_index(const SparseMatrix& generators)
{
    Integer prod = 1;
    for (auto& d : invariant_factors(generators)) prod *= d;
    return prod;
}

bool lattice_contains(const SparseMatrix& a, const SparseMatrix& b)
{
    SparseMatrix ab = hconcat(a, b);
    auto fa = invariant_factors(a);
    auto fab = invariant_factors(ab);
    if (fa.size() != fab.size()) return false;
    Integer pa = 1, pab = 1;
    for (auto& d : fa) pa *= d;
    for (auto& d : fab) pab *= d;
    return pa == pab;
}

int exit_code(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::RegimeUncertifiable: return 3;
    case ErrorKind::ResourceCap: return 4;
    default: return 2;
    }
}

const char* kind_name(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::ResourceCap: return "resource-cap";
    case ErrorKind::RegimeUncertifiable: return "regime-uncertifiable";
    case ErrorKind::ProvisoViolation: return "proviso-violation";
    case ErrorKind::InsufficientData: return "insufficient-data";
    case ErrorKind::Pole: return "pole";
    }
    return "error";
}

Rational parse_rational(const std::string& text)
{
    std::string s = text;
    auto bad = [&]() { invalid("not an exact rational: '" + text + "'"); };
    if (s.empty()) bad();
    auto slash = s.find('/');
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    auto digits = [&](const std::string& x, bool sign) {
        std::size_t i = 0;
        if (sign && !x.empty() && (x[0] == '-' || x[0] == '+')) i = 1;
        if (i >= x.size()) return false;
        for (; i < x.size(); ++i)
            if (x[i] < '0' || x[i] > '9') return false;
        return true;
    };
    if (!digits(num, true) || !digits(den, false)) bad();
    if (num[0] == '+') num = num.substr(1);
    Integer d(den);
    if (d == 0) invalid("zero denominator in '" + text + "'");
    return Rational(Integer(num), d);
}

std::string to_string(const Rational& q)
{
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

}  // namespace gpcohom
