#pragma once

#include "olab/amap.hpp"
#include "olab/gamma.hpp"
#include "olab/homology.hpp"
#include "olab/steenrod.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace olab {

struct E2Entry {
    int p = 0;
    int q = 0;
    std::string value;
    bool operator==(const E2Entry&) const = default;
};

struct DifferentialEntry {
    std::string name;
    std::vector<std::string> source_basis;
    std::vector<std::string> target_basis;
    std::vector<std::vector<int>> matrix;
    std::string tag;
    bool operator==(const DifferentialEntry&) const = default;
};

struct GradedPiece {
    std::string name;
    std::string value;
    std::string tag; // MACHINE_CHECKED | PAPER_FACT | UNKNOWN
    std::string note;
    bool operator==(const GradedPiece&) const = default;
};

struct AHSSReport {
    std::string group;
    std::string reduced_group;
    std::vector<E2Entry> e2;
    std::vector<DifferentialEntry> differentials;
    std::vector<GradedPiece> pieces;
    std::string d3_status;
    std::string extension_note;
    bool operator==(const AHSSReport&) const = default;
};

/// E^2 page for p <= 5, q <= 4 with spin bordism coefficients Z, Z/2, Z/2, 0, Z,
/// the d^2 differentials out of degrees 4 and 5, and the graded pieces of the
/// reduced spin bordism in degree 4 as far as they are determined.
AHSSReport ahss_report(const GroupSpec& g);

/// Result of the quotient argument for d^3_{5,0} on a finite abelian 2-group.
struct D3QuotientCheck {
    bool applies = false;
    std::string quotient;       // label of the quotient group
    bool kills_kernel = false;  // p_* maps ker d2_{5,0} to 0 in H_5(quotient; Z)
    bool injective_e22 = false; // p_* injective on H_2(;Z/2)/im d2_{4,1}
};

/// Tries every coordinatewise quotient halving one factor.
std::vector<D3QuotientCheck> d3_quotient_checks(const GroupSpec& g);
/// One specific quotient (new factor orders).
D3QuotientCheck d3_quotient_check(const GroupSpec& g, const std::vector<std::int64_t>& new_orders);

struct HomologyEntry {
    int degree = 0;
    std::string coefficients;
    std::string value;
    bool operator==(const HomologyEntry&) const = default;
};

std::vector<HomologyEntry> homology_table(const GroupSpec& g, int max_degree);

void to_json(nlohmann::json& j, const E2Entry& x);
void from_json(const nlohmann::json& j, E2Entry& x);
void to_json(nlohmann::json& j, const DifferentialEntry& x);
void from_json(const nlohmann::json& j, DifferentialEntry& x);
void to_json(nlohmann::json& j, const GradedPiece& x);
void from_json(const nlohmann::json& j, GradedPiece& x);
void to_json(nlohmann::json& j, const AHSSReport& x);
void from_json(const nlohmann::json& j, AHSSReport& x);
void to_json(nlohmann::json& j, const HomologyEntry& x);
void from_json(const nlohmann::json& j, HomologyEntry& x);

nlohmann::json homology_json(const GroupSpec& g, const HomologyResult& h);
nlohmann::json d2_json(const D2Map& d);

} // namespace olab
