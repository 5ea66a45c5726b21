#pragma once

#include "olab/chains.hpp"
#include "olab/intmatrix.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace olab {

/// Z-free Z[G]-module of finite rank with one action matrix per group generator
/// (acting on column coordinates).
struct ZGLattice {
    GroupSpec group;
    std::size_t rank = 0;
    std::vector<IntMatrix> action;
    std::string provenance;
    IntMatrix basis; // ambient coordinates of the basis, when the lattice is a submodule
};

/// ker d_2 of the resolution as a Z-lattice with the left regular action.
ZGLattice kernel_d2_lattice(const Resolution& r);

/// Matrix of Gamma(rho) on the basis v(b_0), ..., v(b_{r-1}), w_{01}, w_{02}, ..., w_{r-2,r-1}
/// where w_{kl} = v(b_k + b_l) - v(b_k) - v(b_l).
IntMatrix gamma_action(const IntMatrix& rho);
std::size_t gamma_rank(std::size_t r);
/// Image of the Gamma basis in L (x) L (r^2 x gamma_rank): v_k -> b_k (x) b_k,
/// w_kl -> b_k (x) b_l + b_l (x) b_k.
IntMatrix gamma_embedding(std::size_t r);
/// Coordinates of v(u) in the Gamma basis.
std::vector<Integer> gamma_v(const std::vector<Integer>& u);

struct Coinvariants {
    std::size_t gamma_rank = 0;
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;
    bool torsion_free() const { return torsion.empty(); }
    std::string describe() const;
};

/// Z (x)_{Z[G]} Gamma(L).
Coinvariants gamma_coinvariants(const ZGLattice& l);

struct TertiaryReport {
    std::string group;
    std::string reduced_group;
    std::string criterion; // TRIVIAL_TARGET | GAMMA_TORSION_FREE | PAPER_THEOREM | INCONCLUSIVE
    std::string tag;       // MACHINE_CHECKED | PAPER_FACT
    std::string target_description;
    std::size_t lattice_rank = 0;
    std::size_t gamma_rank = 0;
    std::string coinvariants;
    std::vector<std::string> torsion;
    bool torsion_divides_order = true;
    std::vector<std::string> notes;
    bool operator==(const TertiaryReport&) const = default;
};

TertiaryReport verify_tertiary(const GroupSpec& g);

void to_json(nlohmann::json& j, const TertiaryReport& x);
void from_json(const nlohmann::json& j, TertiaryReport& x);

} // namespace olab
