#pragma once

#include "gpcohom/groups.hpp"
#include "gpcohom/simplicial.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gpcohom {

// Absolute: ordinary cochains.  Reduced: augmented cochains, the empty simplex in degree -1.
// ConePair: each Y_a stands for the pair (Cone Y_a, Y_a); reduced cochains shifted up by one.
enum class CochainMode { Absolute, Reduced, ConePair };

struct PosetOfSpaces {
    Poset poset;
    std::vector<SimplicialComplex> spaces;  // Y_a, parallel to poset.labels, vertices labelled as in the ambient
    SimplicialComplex ambient;              // Y
    CochainMode mode = CochainMode::Absolute;

    int index(const std::string& label) const;
    // throws invalid-input naming the failing elements
    void validate() const;
    static PosetOfSpaces from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

// the cover of a polyhedral join by the joins L(J), J a simplex of the base (cone-pair mode)
PosetOfSpaces join_cover(const PjoinContext& ctx);

using PageRanks = std::map<std::pair<int, int>, int>;  // (i, j) -> rank

struct MapVerdict {
    std::string element;             // a
    std::optional<std::string> lower;  // b for the pairwise condition, empty for Y_{<a}
    std::map<int, int> rational_rank;  // degree -> rank of the induced map over Q
    std::map<int, bool> integral_zero; // degree -> induced map on integral cohomology vanishes
    bool zero = true;
    bool vacuous = false;  // nothing lies below a
};

struct Conditions {
    std::vector<MapVerdict> z;        // H^*(Y_a) -> H^*(Y_{<a})
    std::vector<MapVerdict> z_prime;  // H^*(Y_a) -> H^*(Y_b), b < a
    bool z_holds = true;
    bool z_prime_holds = true;
    nlohmann::json to_json() const;
};

Conditions check_conditions(const PosetOfSpaces& ps);

struct SpectralReport {
    PageRanks e0, e1, e2;
    std::map<int, int> total;         // rational cohomology of the total complex
    GradedGroups total_integral;      // integral cohomology of the total complex
    std::map<int, int> direct;        // rational cohomology of Y
    GradedGroups direct_integral;
    std::map<int, int> e2_total;      // sum over i + j
    bool rows_exact = true;           // rows exact away from i = 0, kernel C^j(Y) at i = 0
    bool total_matches_direct = true;
    bool degenerates = false;         // E2 total rank equals direct rank in every degree
    Conditions conditions;
    std::map<std::string, PageRanks> summands;  // a -> ranks of H^i(Flag P>=a, Flag P>a; H^j(Y_a))
    bool e2_matches_summands = false;
    nlohmann::json to_json() const;
};

SpectralReport build_pages(const PosetOfSpaces& ps);

struct DecompositionCheck {
    std::map<std::string, std::map<int, int>> summands;  // a -> total degree -> rank
    std::map<int, int> summand_total;
    std::map<int, int> direct;
    bool equal = false;
    nlohmann::json to_json() const;
};

// requires condition (Z)
DecompositionCheck verify_decomposition(const PosetOfSpaces& ps);

}  // namespace gpcohom
