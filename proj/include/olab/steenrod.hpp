#pragma once

#include "olab/chains.hpp"
#include "olab/f2.hpp"
#include "olab/homology.hpp"

#include <string>
#include <vector>

namespace olab {

/// Monomial in H^*(G; Z/2) for an abelian 2-group G, stored as the
/// per-factor degree. For an order-2 factor degree p means alpha^p; for
/// order >= 4 it means alpha^{p mod 2} beta^{p / 2}; for Z it is alpha^p, p <= 1.
using Monomial = Multidegree;

std::vector<Monomial> cohomology_basis(const GroupSpec& g, int degree);
std::string monomial_label(const GroupSpec& g, const Monomial& m);

/// Sq^2 : H^d -> H^{d+2}; rows indexed by cohomology_basis(d+2), columns by cohomology_basis(d).
F2Matrix sq2_matrix(const GroupSpec& g, int degree);
/// Sq^1 likewise (used in tests of the Cartan model).
F2Matrix sq1_matrix(const GroupSpec& g, int degree);
/// Total Sq^k of a single monomial as a set of monomials of degree |m| + k.
std::vector<Monomial> sq_monomial(const GroupSpec& g, const Monomial& m, int k);

/// Dual operation Sq_2 : H_{d+2}(Z/2) -> H_d(Z/2) on canonical chain bases.
F2Matrix sq2_dual(const GroupSpec& g, int degree_from);

enum class Provenance { MachineChecked, PaperFact };
std::string to_string(Provenance p);

/// d^2 = Sq_2 o red_2 : H_p(G; Z) -> H_{p-2}(G; Z/2).
struct D2Map {
    GroupSpec group;
    int degree = 0;
    HomologyResult source;      // H_p(G; Z)
    HomologyResult target;      // H_{p-2}(G; Z/2), canonical chain basis
    HomologyResult source_mod2; // H_p(G; Z/2)
    F2Matrix reduction;         // red_2 in degree p
    F2Matrix matrix;            // target summands x source summands
    Provenance provenance = Provenance::MachineChecked;

    /// Column span in H_{p-2}(G; Z/2) coordinates.
    std::vector<F2Vector> image_basis() const;
    /// Kernel as generators in H_p(G; Z) summand coordinates.
    std::vector<std::vector<Integer>> kernel_generators() const;
};

/// p in {4, 5}. Abelian groups must be 2-groups (strip odd parts first);
/// for Q_{8n} and p = 5 the zero map is returned, tagged PaperFact.
D2Map d2_differential(const GroupSpec& g, int p);

} // namespace olab
