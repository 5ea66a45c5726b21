#pragma once

#include "olab/groupring.hpp"
#include "olab/intmatrix.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace olab {

using Multidegree = std::vector<int>;

/// Free resolution of Z over Z[G] in degrees 0..top.
///
/// Chains are row vectors: an element of C_i is v in Z[G]^{rank_i} and
/// d_i(v) = v * boundary(i), where boundary(i) is rank_i x rank_{i-1}.
struct Resolution {
    GroupSpec spec;
    GroupPtr group;
    int top = 0;
    std::vector<std::size_t> ranks;              // degrees 0..top
    std::vector<RingMatrix> boundaries;          // index i = d_i; index 0 is rank_0 x 0
    std::vector<std::vector<Multidegree>> labels; // per degree, per basis element

    std::size_t rank(int degree) const;
    const RingMatrix& boundary(int degree) const;
    /// Monomial-style label of a basis element, e.g. "T^3", "a^2*b", "t*T^2", "x" for Q8n.
    std::string basis_label(int degree, std::size_t index) const;
    std::vector<std::string> basis_labels(int degree) const;
    /// Index of the basis element with the given multidegree in its degree.
    std::size_t index_of(const Multidegree& md) const;
};

/// Free resolution for the supported groups: cyclic factors are periodic with
/// boundaries 1 - s, N_s; a Z factor is Z[G] --(1 - t)--> Z[G]; products are
/// tensor products; Q_{8n} uses the 4-periodic resolution.
///
/// Basis of a product lists multidegrees lexicographically with the first
/// factor's degree descending. The boundary is
///   d(e_P) = sum_i (-1)^{p_{i+1} + ... + p_k} d_i(e_P),
/// i.e. for two factors (-1)^q d_A (x) 1 + 1 (x) d_B.
Resolution standard_resolution(const GroupSpec& g, int top);

/// Entrywise d_{i-1} * d_i == 0 (row convention: boundary(i) * boundary(i-1)).
bool check_d_squared(const Resolution& r);
/// Exactness over Z in degrees 1..top-1 by rank counting on Z-expanded boundaries.
bool check_exact(const Resolution& r);

/// Z (x)_{Z[G]} C or Z/m (x)_{Z[G]} C. Column convention: boundary(n) is
/// rank_{n-1} x rank_n and acts on column vectors.
struct IntegerComplex {
    std::int64_t modulus = 0; // 0 for Z
    std::vector<std::size_t> ranks;
    std::vector<IntMatrix> boundaries;
    std::vector<std::vector<std::string>> labels;

    int top() const { return static_cast<int>(ranks.size()) - 1; }
};

IntegerComplex apply_coefficients(const Resolution& r, std::int64_t modulus);

/// Presentation of coker(d^2) = H^2(K; Z[G]): generators = rank C_2,
/// relation row k = (involute(d_2[j][k]))_j.
struct Presentation {
    GroupPtr group;
    std::size_t generators = 0;
    RingMatrix relations;
};

Presentation dualize_degree2(const Resolution& r);

/// Integer matrix (column convention, rank'_n x rank_n) of the chain map
/// Z (x) C(G) -> Z (x) C(G') induced by a coordinatewise reduction.
/// Each basis element e_P maps to prod_i s_i(p_i) f_{P'} where s_i is the
/// standard comparison scalar of factor i.
IntMatrix quotient_chain_map(const Resolution& source, const Resolution& target, const GroupHom& phi, int degree);

/// Z-linear expansion of v -> v * M over a finite group: row (i, g) is the
/// coefficient vector of g * M[i][.], indexed by (j, h) -> j * |G| + index(h).
IntMatrix expand_over_z(const RingMatrix& m);

nlohmann::json to_json(const Resolution& r);

} // namespace olab
