#include "gpcohom/homology.hpp"

#include <algorithm>

namespace gpcohom {

int ChainComplex::dim(int degree) const
{
    int i = degree - min_degree;
    if (i < 0 || i >= static_cast<int>(cells.size())) return 0;
    return static_cast<int>(cells[i].size());
}

SparseMatrix ChainComplex::d(int degree) const
{
    int i = degree - min_degree;
    if (i <= 0 || i >= static_cast<int>(cells.size())) return SparseMatrix(dim(degree - 1), dim(degree));
    return boundary[i];
}

ChainComplex chain_complex(const SimplicialComplex& k, const SimplicialComplex* a, Variant variant)
{
    if (a && !a->is_subcomplex_of(k)) invalid("relative homology: A is not a subcomplex of K");
    ChainComplex c;
    const auto& sims = k.simplices();
    std::vector<bool> keep(sims.size(), true);
    if (a)
        for (std::size_t i = 0; i < sims.size(); ++i) keep[i] = !a->contains_labels(k.labels(sims[i]));
    // the empty simplex is a chain only in the reduced absolute theory; A always contains it
    if (variant == Variant::Absolute) keep[0] = false;
    c.min_degree = keep[0] ? -1 : 0;
    const int top = std::max(k.dimension(), c.min_degree);
    c.cells.assign(top - c.min_degree + 1, {});
    std::vector<int> position(sims.size(), -1);
    for (std::size_t i = 0; i < sims.size(); ++i) {
        if (!keep[i]) continue;
        auto& bucket = c.cells[static_cast<int>(sims[i].size()) - 1 - c.min_degree];
        position[i] = static_cast<int>(bucket.size());
        bucket.push_back(static_cast<int>(i));
    }
    c.boundary.resize(c.cells.size());
    for (std::size_t lvl = 1; lvl < c.cells.size(); ++lvl) {
        SparseMatrix m(static_cast<int>(c.cells[lvl - 1].size()), static_cast<int>(c.cells[lvl].size()));
        for (std::size_t j = 0; j < c.cells[lvl].size(); ++j) {
            const Simplex& s = sims[c.cells[lvl][j]];
            for (std::size_t drop = 0; drop < s.size(); ++drop) {
                Simplex f = s;
                f.erase(f.begin() + static_cast<long>(drop));
                int p = position[k.index_of(f)];
                if (p >= 0) m.add(p, static_cast<int>(j), drop % 2 ? -1 : 1);
            }
        }
        m.normalize();
        c.boundary[lvl] = std::move(m);
    }
    return c;
}

namespace {

GradedGroups groups_of(const ChainComplex& c, Theory theory)
{
    GradedGroups out;
    const int lo = c.min_degree, hi = c.max_degree();
    // invariant factors per boundary map, indexed by its source degree
    std::map<int, std::vector<Integer>> factors;
    for (int n = lo + 1; n <= hi; ++n) {
        SparseMatrix d = c.d(n);
        factors[n] = invariant_factors(theory == Theory::Homology ? d : d.transpose());
    }
    auto rank_of = [&](int n) -> int {
        auto it = factors.find(n);
        return it == factors.end() ? 0 : static_cast<int>(it->second.size());
    };
    for (int n = lo; n <= hi; ++n) {
        int r = c.dim(n) - rank_of(n) - rank_of(n + 1);
        // homology torsion comes from the incoming boundary, cohomology torsion from the incoming coboundary
        int src = theory == Theory::Homology ? n + 1 : n;
        std::vector<Integer> torsion;
        if (factors.count(src))
            for (auto& f : factors[src])
                if (f > 1) torsion.push_back(f);
        out.set(n, FgAbelianGroup(r, torsion));
    }
    return out;
}

std::map<int, int> betti_of(const ChainComplex& c)
{
    std::map<int, int> ranks, out;
    for (int n = c.min_degree + 1; n <= c.max_degree(); ++n) ranks[n] = rank(c.d(n));
    for (int n = c.min_degree; n <= c.max_degree(); ++n) {
        int b = c.dim(n) - ranks[n] - ranks[n + 1];
        if (b) out[n] = b;
    }
    return out;
}

}  // namespace

GradedGroups homology_groups(const SimplicialComplex& k, Variant variant, Theory theory)
{
    return groups_of(chain_complex(k, nullptr, variant), theory);
}

GradedGroups homology_groups(const SimplicialComplex& k, const SimplicialComplex& a, Variant variant,
                             Theory theory)
{
    return groups_of(chain_complex(k, &a, variant), theory);
}

std::map<int, int> betti_numbers(const SimplicialComplex& k, Variant variant)
{
    return betti_of(chain_complex(k, nullptr, variant));
}

std::map<int, int> betti_numbers(const SimplicialComplex& k, const SimplicialComplex& a)
{
    return betti_of(chain_complex(k, &a, Variant::Absolute));
}

int reduced_betti(const SimplicialComplex& k, int degree)
{
    auto b = betti_numbers(k, Variant::Reduced);
    auto it = b.find(degree);
    return it == b.end() ? 0 : it->second;
}

}  // namespace gpcohom
