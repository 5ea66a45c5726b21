#pragma once

#include "olab/chains.hpp"
#include "olab/forms.hpp"
#include "olab/homology.hpp"
#include "olab/steenrod.hpp"

#include "json.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace olab {

/// Rank-one form w^dagger w with w = c * d_3, for a chain c in C_3 given by
/// group-ring coefficients.
FormMatrix a_of_chain(const Resolution& r, const FPModule& module, const std::vector<RingElement>& c);
/// Same for an integral chain (coefficients on the identity element).
FormMatrix a_of_chain(const Resolution& r, const FPModule& module, const std::vector<Integer>& c);
/// w = c * d_3.
std::vector<RingElement> d3_image(const Resolution& r, const std::vector<RingElement>& c);

/// {0,1}-coefficient integral lift of the class with the given coordinates.
std::vector<Integer> class_lift(const HomologyResult& h3, const F2Vector& coords);
std::string class_label(const HomologyResult& h3, const F2Vector& coords);

/// Everything needed to evaluate A on H_3(G; Z/2) for one group.
class AMapContext {
public:
    explicit AMapContext(const GroupSpec& g, EvennessOptions opts = {});

    const GroupSpec& spec() const { return spec_; }
    const Resolution& resolution() const { return res_; }
    const FPModule& module() const { return module_; }
    const HomologyResult& h3() const { return h3_; }
    const EvennessOptions& options() const { return opts_; }
    int max_quotient_exponent() const { return max_exp_; }

    FormMatrix a_of_class(const F2Vector& coords) const;
    /// Window search, then chain-level quotient certificates for a Z factor.
    TateVerdict verdict(const F2Vector& coords) const;
    /// Pushes the class along Z -> Z/2^m for m = 1..max_exp and returns the first odd verdict.
    std::optional<TateVerdict> certify_odd_via_quotients(const F2Vector& coords, int max_exp) const;

private:
    struct Quotient {
        GroupHom phi;
        Resolution res;
        FPModule module;
        IntMatrix chain_map; // degree 3
        std::unique_ptr<EvennessSolver> solver;
    };
    const Quotient& quotient(int m) const;

    GroupSpec spec_;
    EvennessOptions opts_;
    int max_exp_;
    Resolution res_;
    FPModule module_;
    HomologyResult h3_;
    std::unique_ptr<EvennessSolver> solver_;
    mutable std::map<int, Quotient> quotients_;
};

struct ClassVerdict {
    F2Vector coords;
    std::string label;
    TateVerdict verdict;
};

struct KernelOfA {
    std::size_t h3_dim = 0;
    std::vector<std::string> h3_basis;
    std::vector<ClassVerdict> classes; // every nonzero class, in binary counting order
    std::vector<F2Vector> kernel_basis;
    bool undecided = false;
};

KernelOfA kernel_of_A(const AMapContext& ctx);

/// Free-standing form of AMapContext::certify_odd_via_quotients.
std::optional<TateVerdict> certify_odd_via_quotients(const GroupSpec& g, const F2Vector& coords, int max_exp,
                                                     EvennessOptions opts = {});

struct Ingredient {
    std::string fact;
    std::string tag;
    bool operator==(const Ingredient&) const = default;
};

struct ClassReport {
    std::vector<int> coords;
    std::string label;
    std::string verdict;
    nlohmann::json witness_or_certificate;
    bool operator==(const ClassReport&) const = default;
};

struct SecondaryReport {
    std::string group;
    std::string reduced_group;
    std::size_t h3_dim = 0;
    std::vector<std::string> h3_basis;
    std::vector<std::vector<int>> image_basis;
    std::vector<std::vector<int>> kernel_basis;
    std::vector<ClassReport> classes;
    std::string condition_holds; // yes | no | undecided
    std::vector<Ingredient> ingredients;
    bool operator==(const SecondaryReport&) const = default;
};

struct ConditionAnalysis {
    GroupSpec reduced;
    D2Map d2;
    KernelOfA kernel;
    SecondaryReport report;
};

/// Exactness of H_5(Z) -> H_3(Z/2) -> Tate at the middle term, after
/// removing odd-order factors.
ConditionAnalysis analyze_condition(const GroupSpec& g, EvennessOptions opts = {});
SecondaryReport check_condition(const GroupSpec& g, EvennessOptions opts = {});

nlohmann::json verdict_json(const TateVerdict& v);

void to_json(nlohmann::json& j, const Ingredient& x);
void from_json(const nlohmann::json& j, Ingredient& x);
void to_json(nlohmann::json& j, const ClassReport& x);
void from_json(const nlohmann::json& j, ClassReport& x);
void to_json(nlohmann::json& j, const SecondaryReport& x);
void from_json(const nlohmann::json& j, SecondaryReport& x);

} // namespace olab
