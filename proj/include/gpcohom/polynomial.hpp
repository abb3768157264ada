#pragma once

#include "gpcohom/numeric.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace gpcohom {

using Exponent = std::vector<int>;

// Sparse multivariate polynomial with integer coefficients in a fixed number of variables.
class Polynomial {
public:
    explicit Polynomial(int nvars = 0) : nvars_(nvars) {}
    Polynomial(int nvars, const Integer& constant);
    static Polynomial variable(int nvars, int i);
    static Polynomial monomial(const Exponent& e, const Integer& c = 1);

    int nvars() const { return nvars_; }
    const std::map<Exponent, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Integer coefficient(const Exponent& e) const;
    Integer constant_term() const { return coefficient(Exponent(nvars_, 0)); }
    int degree(int var) const;
    int total_degree() const;
    // lex-leading term
    const std::pair<const Exponent, Integer>& leading() const { return *terms_.rbegin(); }

    void add_term(const Exponent& e, const Integer& c);
    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& o);
    Polynomial& operator-=(const Polynomial& o);
    Polynomial& operator*=(const Integer& c);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(Polynomial a, const Integer& c) { return a *= c; }
    bool operator==(const Polynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial pow(int k) const;
    Integer content() const;
    Rational evaluate(const std::vector<Rational>& x) const;
    // all variables set to one t: coefficients by degree
    std::vector<Integer> univariate() const;
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void check(const Polynomial& o) const;

    int nvars_;
    std::map<Exponent, Integer> terms_;
};

// exact quotient; throws when b does not divide a
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);
// gcd normalized to positive lex-leading coefficient
Polynomial gcd(const Polynomial& a, const Polynomial& b);

// num/den in lowest terms, content-reduced, den with positive lex-leading coefficient
class RationalFunction {
public:
    explicit RationalFunction(int nvars = 0);
    RationalFunction(Polynomial num, Polynomial den = Polynomial());

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    int nvars() const { return num_.nvars(); }

    RationalFunction operator+(const RationalFunction& o) const;
    RationalFunction operator-(const RationalFunction& o) const;
    RationalFunction operator*(const RationalFunction& o) const;
    RationalFunction operator/(const RationalFunction& o) const;
    RationalFunction reciprocal() const;
    bool operator==(const RationalFunction& o) const { return num_ == o.num_ && den_ == o.den_; }

    // throws a pole error when the denominator vanishes
    Rational evaluate(const std::vector<Rational>& x) const;
    // power series coefficients through the given total degree
    std::map<Exponent, Rational> series(int max_degree) const;
    std::string str(const std::vector<std::string>& names = {}) const;

private:
    void canonicalize();

    Polynomial num_;
    Polynomial den_;
};

nlohmann::json to_json(const Polynomial& p);
nlohmann::json to_json(const RationalFunction& f);

// univariate polynomials over Q, coefficient i of t^i
using UPoly = std::vector<Rational>;

UPoly upoly(const std::vector<Integer>& coeffs);
void trim(UPoly& p);
int degree(const UPoly& p);
Rational evaluate(const UPoly& p, const Rational& x);
UPoly derivative(const UPoly& p);
UPoly remainder(const UPoly& a, const UPoly& b);
UPoly quotient(const UPoly& a, const UPoly& b);
UPoly gcd(UPoly a, UPoly b);

// Sturm chain of a squarefree-reduced polynomial
class SturmChain {
public:
    explicit SturmChain(const UPoly& p);
    int sign_changes(const Rational& x) const;
    // distinct real roots in (a, b]
    int count(const Rational& a, const Rational& b) const;
    const UPoly& squarefree() const { return chain_.front(); }

private:
    std::vector<UPoly> chain_;
};

// smallest positive real root, isolated to an interval [lo, hi] of width <= tol;
// lo == hi when the root is rational and hit exactly
struct RootInterval {
    bool exists = false;
    Rational lo, hi;
};
RootInterval smallest_positive_root(const UPoly& p, const Rational& tol = rat(1, 1 << 20));

}  // namespace gpcohom
