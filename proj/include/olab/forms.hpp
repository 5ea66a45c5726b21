#pragma once

#include "olab/chains.hpp"
#include "olab/groupring.hpp"
#include "olab/intmatrix.hpp"

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <string>
#include <vector>

namespace olab {

/// Finitely presented left Z[G]-module: generators e_1..e_g modulo the rows of `relations`.
struct FPModule {
    GroupPtr group;
    std::size_t generators = 0;
    RingMatrix relations; // rows x generators

    bool operator==(const FPModule& other) const;
};

FPModule module_from_presentation(const Presentation& p);

/// Sesquilinear form lambda(e_i, e_j) = entries(i, j), so that
/// lambda(u, v) = u * entries * v^dagger for row vectors u, v.
struct FormMatrix {
    FPModule module;
    RingMatrix entries;
};

bool is_hermitian(const FormMatrix& l);
/// R * L == 0 and L * R^dagger == 0.
bool is_well_defined(const FormMatrix& l);
/// The rank-one form w^dagger w is weakly even: eps_2(w_i) = 0 for every i and
/// eps_2 vanishes on the pairing of w with every relation.
bool is_weakly_even(const std::vector<RingElement>& w, const FPModule& module);

enum class Verdict { Even, Odd, Undecided };
std::string to_string(Verdict v);

struct TateVerdict {
    Verdict kind = Verdict::Undecided;
    std::optional<RingMatrix> witness; // Even: Q with Q + Q^dagger = L and Q R^dagger = 0
    std::string certificate;           // Odd: "integer-infeasible" or "quotient-odd"
    std::string detail;
    std::optional<GroupHom> quotient;  // quotient-odd: the surjection used
    std::int64_t window = 0;           // support window used for a Z factor
    int max_quotient_exponent = 0;

    bool is_even() const { return kind == Verdict::Even; }
    bool is_odd() const { return kind == Verdict::Odd; }
};

struct EvennessOptions {
    std::int64_t window = 8;        // support bound in the Z coordinate
    int max_quotient_exponent = -1; // -1: k + 2 where 2^k is the largest 2-power factor order
};

int default_quotient_exponent(const GroupSpec& g);

/// Exact evenness decision for forms on one module.
///
/// Unknown: Q with Q + Q^dagger = L. Writing Q = Q0 + sum x_v P_v with a
/// particular Q0 and a Z-basis P_v of {P : P + P^dagger = 0} with support in
/// the window, the remaining condition Q R^dagger = 0 is linear in x. The
/// system matrix depends only on the module, so its Smith form is computed
/// once and reused for every form.
class EvennessSolver {
public:
    EvennessSolver(FPModule module, std::int64_t window);

    /// Finite group: Even or Odd. Z factor: Even, Odd (diagonal parity
    /// obstruction) or Undecided when no witness exists in the window.
    TateVerdict decide(const RingMatrix& l) const;

    const FPModule& module() const { return module_; }
    std::size_t num_unknowns() const { return vars_.size(); }
    std::size_t num_constraints() const { return keys_.size(); }

private:
    struct Var {
        std::size_t i, j; // i < j off-diagonal; i == j diagonal
        GroupElement h;
    };
    using Key = std::tuple<std::size_t, std::size_t, GroupElement>;

    RingMatrix pattern(const Var& v) const;
    void verify(const RingMatrix& q, const RingMatrix& l) const;

    FPModule module_;
    std::int64_t window_;
    bool finite_;
    RingMatrix rdag_;
    std::vector<Var> vars_;
    std::map<Key, std::size_t> keys_;
    SNFResult snf_;
};

/// Evenness decision with quotient certificates for groups with a Z factor.
class EvennessDecider {
public:
    EvennessDecider(FPModule module, EvennessOptions opts = {});
    TateVerdict decide(const RingMatrix& l) const;

private:
    const EvennessSolver& quotient_solver(int m) const;

    FPModule module_;
    EvennessOptions opts_;
    int max_exp_;
    EvennessSolver solver_;
    mutable std::map<int, std::pair<GroupHom, std::unique_ptr<EvennessSolver>>> quotients_;
};

TateVerdict decide_even(const FormMatrix& l, const EvennessOptions& opts = {});
TateVerdict tate_equal(const FormMatrix& l1, const FormMatrix& l2, const EvennessOptions& opts = {});

/// Checks Q + Q^dagger = L, Q R^dagger = 0 and R Q = 0.
bool verify_witness(const RingMatrix& q, const FormMatrix& l);

} // namespace olab
