#pragma once

#include "gpcohom/numeric.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace gpcohom {

// Column-major sparse integer matrix; boundary and restriction matrices live here.
struct SparseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<std::vector<std::pair<int, std::int64_t>>> col;

    SparseMatrix() = default;
    SparseMatrix(int r, int c) : rows(r), cols(c), col(c) {}

    void add(int r, int c, std::int64_t v);  // accumulates; zero results are dropped by normalize()
    void normalize();
    SparseMatrix transpose() const;
    std::size_t nonzeros() const;
    IntMatrix dense() const;
    static SparseMatrix from_dense(const IntMatrix& m);
};

// horizontal / vertical block concatenation
SparseMatrix hconcat(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix vconcat(const SparseMatrix& a, const SparseMatrix& b);

// Nonzero invariant factors in divisibility order (units included).
std::vector<Integer> invariant_factors(const SparseMatrix& m);
int rank(const SparseMatrix& m);

template <class Scalar>
struct SmithForm {
    Matrix<Scalar> D;
    Matrix<Scalar> U;
    Matrix<Scalar> V;
    int rank = 0;
    std::vector<Scalar> factors() const {
        std::vector<Scalar> out;
        for (int i = 0; i < rank; ++i) out.push_back(D(i, i));
        return out;
    }
};

// U * M * V == D with U, V unimodular and D diagonal, d1 | d2 | ...
SmithForm<Integer> smith_normal_form(const IntMatrix& m, bool certificate = true);

// Z-basis of {x : M x = 0}, as columns
IntMatrix integer_kernel(const IntMatrix& m);

// fraction-free elimination; exact over Q for integer or rational input
template <class Scalar>
int rank(Matrix<Scalar> a)
{
    const int m = static_cast<int>(a.rows()), n = static_cast<int>(a.cols());
    int r = 0;
    Scalar prev = 1;
    for (int c = 0; c < n && r < m; ++c) {
        int p = -1;
        for (int i = r; i < m; ++i)
            if (a(i, c) != 0) { p = i; break; }
        if (p < 0) continue;
        if (p != r) a.row(p).swap(a.row(r));
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j < n; ++j)
                a(i, j) = (a(r, c) * a(i, j) - a(i, c) * a(r, j)) / prev;
            a(i, c) = 0;
        }
        prev = a(r, c);
        ++r;
    }
    return r;
}

// product of the nonzero invariant factors == index of the lattice in its saturation
Integer lattice_index(const SparseMatrix& generators);

// true when span_Z(a) == span_Z([a | b]), i.e. the columns of b already lie in the lattice of a
bool lattice_contains(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace gpcohom
