#include "gpcohom/polynomial.hpp"

#include <algorithm>

namespace gpcohom {

Polynomial::Polynomial(int nvars, const Integer& constant) : nvars_(nvars)
{
    add_term(Exponent(nvars, 0), constant);
}

Polynomial Polynomial::variable(int nvars, int i)
{
    Exponent e(nvars, 0);
    e.at(i) = 1;
    return monomial(e);
}

Polynomial Polynomial::monomial(const Exponent& e, const Integer& c)
{
    Polynomial p(static_cast<int>(e.size()));
    p.add_term(e, c);
    return p;
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent(nvars_, 0));
}

Integer Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Integer(0) : it->second;
}

int Polynomial::degree(int var) const
{
    int d = terms_.empty() ? -1 : 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
}

int Polynomial::total_degree() const
{
    int d = terms_.empty() ? -1 : 0;
    for (auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        d = std::max(d, s);
    }
    return d;
}

void Polynomial::add_term(const Exponent& e, const Integer& c)
{
    if (static_cast<int>(e.size()) != nvars_) invalid("polynomial exponent has the wrong number of variables");
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check(const Polynomial& o) const
{
    if (nvars_ != o.nvars_) invalid("polynomials over different variable sets");
}

Polynomial Polynomial::operator-() const
{
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& o)
{
    check(o);
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o)
{
    check(o);
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Polynomial& Polynomial::operator*=(const Integer& c)
{
    if (c == 0) terms_.clear();
    for (auto& [e, x] : terms_) x *= c;
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check(b);
    Polynomial p(a.nvars_);
    Exponent e(a.nvars_);
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.nvars_; ++i) e[i] = ea[i] + eb[i];
            p.add_term(e, ca * cb);
        }
    return p;
}

Polynomial Polynomial::pow(int k) const
{
    Polynomial r(nvars_, 1), b = *this;
    while (k > 0) {
        if (k & 1) r = r * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return r;
}

Integer Polynomial::content() const
{
    Integer g = 0;
    for (auto& [e, c] : terms_) g = gcd(g, c);
    return g;
}

Rational Polynomial::evaluate(const std::vector<Rational>& x) const
{
    if (static_cast<int>(x.size()) != nvars_) invalid("evaluation point has the wrong number of variables");
    Rational s = 0;
    for (auto& [e, c] : terms_) {
        Rational t = Rational(c);
        for (int i = 0; i < nvars_; ++i)
            for (int k = 0; k < e[i]; ++k) t *= x[i];
        s += t;
    }
    return s;
}

std::vector<Integer> Polynomial::univariate() const
{
    std::vector<Integer> out(std::max(total_degree(), 0) + 1, Integer(0));
    for (auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        out[s] += c;
    }
    while (out.size() > 1 && out.back() == 0) out.pop_back();
    return out;
}

std::string Polynomial::str(const std::vector<std::string>& names) const
{
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto& [e, c] : terms_) {
        Integer a = abs(c);
        std::string mono;
        for (int i = 0; i < nvars_; ++i) {
            if (!e[i]) continue;
            if (!mono.empty()) mono += "*";
            mono += i < static_cast<int>(names.size()) ? names[i] : "t" + std::to_string(i);
            if (e[i] > 1) mono += "^" + std::to_string(e[i]);
        }
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (mono.empty())
            out += a.str();
        else if (a == 1)
            out += mono;
        else
            out += a.str() + "*" + mono;
    }
    return out;
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero()) throw Error(ErrorKind::Pole, "division by the zero polynomial");
    const int n = a.nvars();
    Polynomial q(n), r = a;
    const auto& [eb, cb] = b.leading();
    while (!r.is_zero()) {
        auto [er, cr] = r.leading();
        Exponent d(n);
        for (int i = 0; i < n; ++i) {
            d[i] = er[i] - eb[i];
            if (d[i] < 0) invalid("polynomial division is not exact");
        }
        if (cr % cb != 0) invalid("polynomial division is not exact");
        Polynomial t = Polynomial::monomial(d, cr / cb);
        q += t;
        r -= t * b;
    }
    return q;
}

bool divides(const Polynomial& b, const Polynomial& a)
{
    try {
        exact_divide(a, b);
        return true;
    } catch (const Error&) {
        return false;
    }
}

namespace {

// coefficients in variable v, each free of v
using Uni = std::vector<Polynomial>;

Uni to_uni(const Polynomial& p, int v)
{
    Uni u(std::max(p.degree(v), 0) + 1, Polynomial(p.nvars()));
    for (auto& [e, c] : p.terms()) {
        Exponent f = e;
        f[v] = 0;
        u[e[v]].add_term(f, c);
    }
    return u;
}

Polynomial from_uni(const Uni& u, int v, int nvars)
{
    Polynomial p(nvars);
    for (std::size_t k = 0; k < u.size(); ++k)
        for (auto& [e, c] : u[k].terms()) {
            Exponent f = e;
            f[v] = static_cast<int>(k);
            p.add_term(f, c);
        }
    return p;
}

Polynomial normalized(Polynomial p)
{
    if (!p.is_zero() && p.leading().second < 0) p = -p;
    return p;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b, int v);

Polynomial content_in(const Polynomial& p, int v)
{
    Polynomial g(p.nvars());
    for (auto& c : to_uni(p, v)) {
        g = gcd_rec(g, c, v - 1);
        if (g.is_constant() && g.constant_term() == 1) break;
    }
    return g;
}

Polynomial primitive_in(const Polynomial& p, int v)
{
    if (p.is_zero()) return p;
    return exact_divide(p, content_in(p, v));
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b, int v)
{
    Uni x = to_uni(a, v);
    const Uni y = to_uni(b, v);
    const int db = static_cast<int>(y.size()) - 1;
    const Polynomial& lc = y.back();
    int steps = 0;
    const int da = static_cast<int>(x.size()) - 1;
    while (static_cast<int>(x.size()) - 1 >= db && !(x.size() == 1 && x[0].is_zero())) {
        const int d = static_cast<int>(x.size()) - 1;
        Polynomial top = x.back();
        for (auto& c : x) c = c * lc;
        for (int k = 0; k <= db; ++k) x[d - db + k] -= top * y[k];
        while (x.size() > 1 && x.back().is_zero()) x.pop_back();
        ++steps;
        if (x.size() == 1 && x[0].is_zero()) break;
    }
    Polynomial r = from_uni(x, v, a.nvars());
    for (int k = steps; k < da - db + 1; ++k) r = r * lc;
    return r;
}

Polynomial gcd_rec(const Polynomial& a, const Polynomial& b, int v)
{
    if (a.is_zero()) return normalized(b);
    if (b.is_zero()) return normalized(a);
    if (v < 0) return Polynomial(a.nvars(), gcd(a.constant_term(), b.constant_term()));
    if (a.degree(v) == 0 && b.degree(v) == 0) return gcd_rec(a, b, v - 1);
    Polynomial ca = content_in(a, v), cb = content_in(b, v);
    Polynomial c = gcd_rec(ca, cb, v - 1);
    Polynomial pa = exact_divide(a, ca), pb = exact_divide(b, cb);
    if (pa.degree(v) < pb.degree(v)) std::swap(pa, pb);
    Polynomial g(a.nvars());
    while (true) {
        if (pb.is_zero()) {
            g = pa;
            break;
        }
        if (pb.degree(v) == 0) {
            g = Polynomial(a.nvars(), 1);
            break;
        }
        Polynomial r = pseudo_remainder(pa, pb, v);
        pa = pb;
        pb = primitive_in(r, v);
    }
    return normalized(c * primitive_in(g, v));
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars() != b.nvars()) invalid("polynomials over different variable sets");
    return gcd_rec(a, b, a.nvars() - 1);
}

RationalFunction::RationalFunction(int nvars) : num_(nvars), den_(nvars, 1) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.nvars() == 0 && den_.is_zero()) den_ = Polynomial(num_.nvars(), 1);  // defaulted denominator
    canonicalize();
}

void RationalFunction::canonicalize()
{
    if (num_.nvars() != den_.nvars()) invalid("rational function over mixed variable sets");
    if (den_.is_zero()) throw Error(ErrorKind::Pole, "rational function with zero denominator");
    if (num_.is_zero()) {
        den_ = Polynomial(num_.nvars(), 1);
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (!(g.is_constant() && g.constant_term() == 1)) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    Integer c = gcd(num_.content(), den_.content());
    if (den_.leading().second < 0) c = -c;
    if (c != 1) {
        num_ = exact_divide(num_, Polynomial(num_.nvars(), c));
        den_ = exact_divide(den_, Polynomial(den_.nvars(), c));
    }
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const
{
    if (den_ == o.den_) return RationalFunction(num_ + o.num_, den_);
    return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator-(const RationalFunction& o) const
{
    if (den_ == o.den_) return RationalFunction(num_ - o.num_, den_);
    return RationalFunction(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const
{
    return RationalFunction(num_ * o.num_, den_ * o.den_);
}

RationalFunction RationalFunction::operator/(const RationalFunction& o) const
{
    if (o.num_.is_zero()) throw Error(ErrorKind::Pole, "division by the zero rational function");
    return RationalFunction(num_ * o.den_, den_ * o.num_);
}

RationalFunction RationalFunction::reciprocal() const { return RationalFunction(den_, num_); }

Rational RationalFunction::evaluate(const std::vector<Rational>& x) const
{
    Rational d = den_.evaluate(x);
    if (d == 0) throw Error(ErrorKind::Pole, "rational function has a pole at the evaluation point");
    return num_.evaluate(x) / d;
}

namespace {

void exponents_of_degree(int nvars, int d, Exponent& cur, int i, std::vector<Exponent>& out)
{
    if (i == nvars - 1) {
        cur[i] = d;
        out.push_back(cur);
        return;
    }
    for (int k = d; k >= 0; --k) {
        cur[i] = k;
        exponents_of_degree(nvars, d - k, cur, i + 1, out);
    }
}

}  // namespace

std::map<Exponent, Rational> RationalFunction::series(int max_degree) const
{
    const int n = nvars();
    Rational c0 = Rational(den_.constant_term());
    if (c0 == 0) throw Error(ErrorKind::Pole, "series expansion needs a nonzero constant term");
    std::map<Exponent, Rational> s;
    for (int d = 0; d <= max_degree; ++d) {
        std::vector<Exponent> es;
        Exponent cur(n, 0);
        if (n == 0) {
            if (d == 0) es.push_back(cur);
        } else {
            exponents_of_degree(n, d, cur, 0, es);
        }
        for (auto& e : es) {
            Rational v = Rational(num_.coefficient(e));
            for (auto& [f, c] : den_.terms()) {
                bool zero = true, fits = true;
                Exponent g(n);
                for (int i = 0; i < n; ++i) {
                    if (f[i]) zero = false;
                    g[i] = e[i] - f[i];
                    if (g[i] < 0) fits = false;
                }
                if (zero || !fits) continue;
                auto it = s.find(g);
                if (it != s.end()) v -= Rational(c) * it->second;
            }
            v /= c0;
            if (v != 0) s[e] = v;
        }
    }
    return s;
}

std::string RationalFunction::str(const std::vector<std::string>& names) const
{
    if (den_.is_constant() && den_.constant_term() == 1) return num_.str(names);
    return "(" + num_.str(names) + ") / (" + den_.str(names) + ")";
}

nlohmann::json to_json(const Polynomial& p)
{
    nlohmann::json out = nlohmann::json::array();
    for (auto& [e, c] : p.terms()) {
        nlohmann::json exp = nlohmann::json::object();
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i]) exp[std::to_string(i)] = e[i];
        out.push_back({{"coef", c.str()}, {"exp", exp}});
    }
    return out;
}

nlohmann::json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

UPoly upoly(const std::vector<Integer>& coeffs)
{
    UPoly p;
    for (auto& c : coeffs) p.push_back(Rational(c));
    trim(p);
    return p;
}

void trim(UPoly& p)
{
    while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

Rational evaluate(const UPoly& p, const Rational& x)
{
    Rational s = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * x + *it;
    return s;
}

UPoly derivative(const UPoly& p)
{
    UPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<long>(i));
    trim(d);
    return d;
}

namespace {

void divmod(UPoly a, const UPoly& b, UPoly& q, UPoly& r)
{
    if (b.empty()) throw Error(ErrorKind::Pole, "division by the zero polynomial");
    trim(a);
    q.assign(std::max<int>(degree(a) - degree(b) + 1, 0), Rational(0));
    while (!a.empty() && degree(a) >= degree(b)) {
        int shift = degree(a) - degree(b);
        Rational f = a.back() / b.back();
        q[shift] = f;
        for (int i = 0; i <= degree(b); ++i) a[shift + i] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    r = a;
}

}  // namespace

UPoly remainder(const UPoly& a, const UPoly& b)
{
    UPoly q, r;
    divmod(a, b, q, r);
    return r;
}

UPoly quotient(const UPoly& a, const UPoly& b)
{
    UPoly q, r;
    divmod(a, b, q, r);
    return q;
}

UPoly gcd(UPoly a, UPoly b)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = remainder(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lc = a.back();
        for (auto& c : a) c /= lc;
    }
    return a;
}

SturmChain::SturmChain(const UPoly& p)
{
    UPoly f = p;
    trim(f);
    if (f.empty()) invalid("Sturm chain of the zero polynomial");
    UPoly g = gcd(f, derivative(f));
    if (degree(g) > 0) f = quotient(f, g);
    chain_.push_back(f);
    UPoly d = derivative(f);
    while (!d.empty()) {
        chain_.push_back(d);
        UPoly r = remainder(chain_[chain_.size() - 2], chain_.back());
        for (auto& c : r) c = -c;
        d = r;
    }
}

int SturmChain::sign_changes(const Rational& x) const
{
    int changes = 0, last = 0;
    for (auto& p : chain_) {
        Rational v = evaluate(p, x);
        int s = v > 0 ? 1 : v < 0 ? -1 : 0;
        if (!s) continue;
        if (last && s != last) ++changes;
        last = s;
    }
    return changes;
}

int SturmChain::count(const Rational& a, const Rational& b) const
{
    if (evaluate(chain_.front(), a) == 0) {
        // shift the open end past a root at a; the chain is squarefree so roots are isolated
        invalid("Sturm count with a root at the open endpoint");
    }
    return sign_changes(a) - sign_changes(b);
}

RootInterval smallest_positive_root(const UPoly& p0, const Rational& tol)
{
    UPoly p = p0;
    trim(p);
    while (!p.empty() && p.front() == 0) p.erase(p.begin());
    RootInterval out;
    if (degree(p) < 1) return out;
    Rational bound = 0;
    for (int i = 0; i < degree(p); ++i) bound = std::max(bound, Rational(abs(p[i] / p.back())));
    bound += 1;
    SturmChain chain(p);
    if (chain.count(0, bound) == 0) return out;
    out.exists = true;
    Rational lo = 0, hi = bound;
    while (hi - lo > tol) {
        Rational mid = (lo + hi) / 2;
        if (chain.count(0, mid) >= 1) {
            hi = mid;
            if (evaluate(p, mid) == 0 && chain.count(0, mid) == 1) {
                lo = mid;
                break;
            }
        } else {
            lo = mid;
        }
    }
    out.lo = lo;
    out.hi = hi;
    return out;
}

}  // namespace gpcohom
