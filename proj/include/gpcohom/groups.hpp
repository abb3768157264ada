#pragma once

#include "gpcohom/numeric.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace gpcohom {

// Z^rank + Z/d1 + ... with d1 | d2 | ..., every di >= 2
struct FgAbelianGroup {
    int rank = 0;
    std::vector<Integer> torsion;

    FgAbelianGroup() = default;
    FgAbelianGroup(int r, std::vector<Integer> t = {});

    static FgAbelianGroup Z(int r = 1) { return FgAbelianGroup(r); }
    // builds the group from arbitrary cyclic orders (0 = infinite cyclic, 1 dropped)
    static FgAbelianGroup from_cyclic(const std::vector<Integer>& orders);

    bool is_zero() const { return rank == 0 && torsion.empty(); }
    bool torsion_free() const { return torsion.empty(); }
    std::vector<Integer> elementary_cyclics() const;  // prime power decomposition of the torsion part
    std::string str() const;
    bool operator==(const FgAbelianGroup& o) const { return rank == o.rank && torsion == o.torsion; }
    bool operator!=(const FgAbelianGroup& o) const { return !(*this == o); }
};

FgAbelianGroup direct_sum(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tensor(const FgAbelianGroup& a, const FgAbelianGroup& b);
FgAbelianGroup tor(const FgAbelianGroup& a, const FgAbelianGroup& b);

// degree -> group; absent degrees are zero
class GradedGroups {
public:
    const FgAbelianGroup& operator[](int degree) const;
    void set(int degree, FgAbelianGroup g);
    int betti(int degree) const { return (*this)[degree].rank; }
    const std::map<int, FgAbelianGroup>& degrees() const& { return groups_; }
    std::map<int, FgAbelianGroup> degrees() && { return std::move(groups_); }  // safe in range-for on temporaries
    bool is_zero() const { return groups_.empty(); }
    // nonzero in at most the given degree, and torsion-free there
    bool concentrated_in(int degree) const;
    bool torsion_free() const;
    bool operator==(const GradedGroups& o) const { return groups_ == o.groups_; }
    std::string str() const;

private:
    std::map<int, FgAbelianGroup> groups_;
};

nlohmann::json to_json(const FgAbelianGroup& g);
nlohmann::json to_json(const GradedGroups& g);
FgAbelianGroup group_from_json(const nlohmann::json& j);

}  // namespace gpcohom
