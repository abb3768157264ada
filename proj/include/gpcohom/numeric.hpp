#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <Eigen/Core>

#include <stdexcept>
#include <string>
#include <vector>

namespace gpcohom {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

enum class ErrorKind {
    InvalidInput,
    ResourceCap,
    RegimeUncertifiable,
    ProvisoViolation,
    InsufficientData,
    Pole,
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void invalid(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }
[[noreturn]] inline void resource_cap(const std::string& msg) { throw Error(ErrorKind::ResourceCap, msg); }

int exit_code(ErrorKind kind);
const char* kind_name(ErrorKind kind);

// "3", "-2/7"; decimals and floats are refused
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

inline Rational rat(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

}  // namespace gpcohom
