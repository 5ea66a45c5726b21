#pragma once

#include "olab/chains.hpp"
#include "olab/f2.hpp"
#include "olab/intmatrix.hpp"

#include <string>
#include <vector>

namespace olab {

/// H_n of an integer complex, as a direct sum of cyclic summands.
///
/// Summand k has order orders[k] (0 for a free summand) and is generated by
/// the class of lifts column k. Torsion summands come first, in SNF order.
struct HomologyResult {
    int degree = 0;
    std::int64_t modulus = 0;
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    std::vector<Integer> orders;
    IntMatrix lifts; // chain rank x number of summands
    std::vector<std::string> chain_labels;

    std::size_t num_summands() const { return orders.size(); }
    /// Coordinates of a cycle in the summand basis (torsion coordinates reduced).
    std::vector<Integer> express(const std::vector<Integer>& cycle) const;
    bool is_cycle(const std::vector<Integer>& chain) const;
    /// "Z/8 + (Z/2)^3", "Z + Z/2", "0".
    std::string describe() const;

    // expression data
    IntMatrix cycle_basis; // columns: basis of the cycle lattice
    IntMatrix coord_change; // U of the SNF of boundaries in cycle coordinates
    std::vector<std::size_t> summand_rows; // rows of coord_change that are summands
    IntMatrix boundary_out; // for is_cycle
};

HomologyResult homology_at(const IntegerComplex& c, int n);

/// Matrix of red_2 : H_n(Z) -> H_n(Z/2); column k is the image of summand k.
F2Matrix reduction_map(const HomologyResult& hz, const HomologyResult& hz2);

/// Matrix (target summands x source summands) of the map on homology induced
/// by an integer chain map in degree n. Torsion-target entries are reduced.
IntMatrix induced_map(const HomologyResult& source, const HomologyResult& target, const IntMatrix& chain_map);

/// Describes a finite list of cyclic orders, e.g. {8,2,2,2} -> "Z/8 + (Z/2)^3".
std::string describe_orders(const std::vector<Integer>& orders);

/// Subgroup of a homology group given by generators in summand coordinates.
/// Returns the cyclic decomposition orders of that subgroup.
std::vector<Integer> subgroup_orders(const HomologyResult& h, const std::vector<std::vector<Integer>>& gens);
/// Whether the subgroups generated by `a` and `b` (summand coordinates) coincide.
bool same_subgroup(const HomologyResult& h, const std::vector<std::vector<Integer>>& a,
                   const std::vector<std::vector<Integer>>& b);

} // namespace olab
