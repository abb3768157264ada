#pragma once

#include "gpcohom/groups.hpp"
#include "gpcohom/linalg.hpp"
#include "gpcohom/simplicial.hpp"

#include <map>
#include <vector>

namespace gpcohom {

enum class Variant { Absolute, Reduced };
enum class Theory { Homology, Cohomology };

// Simplicial chains of K relative to A; boundary[k] maps degree k to degree k-1.
struct ChainComplex {
    int min_degree = 0;                // -1 when the empty simplex is a generator
    std::vector<std::vector<int>> cells;  // cells[k - min_degree]: indices into K.simplices()
    std::vector<SparseMatrix> boundary;   // boundary[k - min_degree], k >= min_degree + 1

    int max_degree() const { return min_degree + static_cast<int>(cells.size()) - 1; }
    int dim(int degree) const;
    // d_k : C_k -> C_{k-1}; a zero-size matrix outside the range
    SparseMatrix d(int degree) const;
};

ChainComplex chain_complex(const SimplicialComplex& k, const SimplicialComplex* a, Variant variant);

GradedGroups homology_groups(const SimplicialComplex& k, Variant variant = Variant::Absolute,
                             Theory theory = Theory::Homology);
// relative groups of (K, A) through the quotient chain complex
GradedGroups homology_groups(const SimplicialComplex& k, const SimplicialComplex& a,
                             Variant variant = Variant::Absolute, Theory theory = Theory::Homology);

// rational Betti numbers, rank only; homology and cohomology agree over Q
std::map<int, int> betti_numbers(const SimplicialComplex& k, Variant variant = Variant::Absolute);
std::map<int, int> betti_numbers(const SimplicialComplex& k, const SimplicialComplex& a);

// reduced rational Betti number of K in one degree (degree -1 counts the empty complex)
int reduced_betti(const SimplicialComplex& k, int degree);

}  // namespace gpcohom
