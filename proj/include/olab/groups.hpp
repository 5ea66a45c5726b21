#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace olab {

enum class GroupKind { Abelian, Quaternion };

/// Factor order used for a copy of the integers.
inline constexpr std::int64_t kInfiniteOrder = 0;

/// A finitely generated abelian group written as a product of cyclic factors
/// (at most one of them infinite), or a generalised quaternion group Q_{8n}.
struct GroupSpec {
    GroupKind kind = GroupKind::Abelian;
    std::vector<std::int64_t> factors; // kInfiniteOrder marks the Z factor
    std::int64_t quaternion_n = 0;     // Q_{8n}; power of two

    static GroupSpec abelian(std::vector<std::int64_t> orders);
    static GroupSpec quaternion(std::int64_t n);
    static GroupSpec trivial() { return abelian({}); }

    bool is_abelian() const { return kind == GroupKind::Abelian; }
    bool is_finite() const;
    bool is_two_group() const; // every finite factor a power of two
    std::optional<std::size_t> infinite_factor() const;
    std::int64_t finite_order() const; // order of the torsion part
    std::size_t num_generators() const;

    std::string label() const;

    bool operator==(const GroupSpec&) const = default;
};

/// Normal form of a group element.
///
/// Abelian: one residue per factor (reduced into [0, n) for finite factors,
/// any integer for the Z factor). Quaternion: {i, j} meaning x^i y^j with
/// 0 <= i < 4n and j in {0, 1}.
struct GroupElement {
    std::vector<std::int64_t> coords;

    auto operator<=>(const GroupElement&) const = default;
    bool operator==(const GroupElement&) const = default;
};

/// Group operations on normal forms. Immutable once constructed and shared
/// by every ring element over the group.
class Group {
public:
    explicit Group(GroupSpec spec);

    const GroupSpec& spec() const { return spec_; }
    std::string label() const { return spec_.label(); }

    GroupElement identity() const;
    GroupElement generator(std::size_t index) const;
    std::vector<std::string> generator_names() const;

    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, std::int64_t k) const;
    GroupElement normalize(GroupElement a) const;
    bool is_identity(const GroupElement& a) const { return a == identity(); }

    /// All elements of a finite group in increasing normal-form order.
    const std::vector<GroupElement>& elements() const;
    /// Elements whose Z coordinate lies in [-window, window]; all elements
    /// when the group is finite.
    std::vector<GroupElement> window(std::int64_t window) const;
    std::size_t index_of(const GroupElement& a) const; // finite groups only

    /// Relators in the generators; used to validate homomorphisms.
    bool relations_hold(const std::vector<GroupElement>& images, const Group& target) const;

    std::string render(const GroupElement& a) const;
    GroupElement parse_element(std::string_view token) const;

    bool operator==(const Group& other) const { return spec_ == other.spec_; }

private:
    GroupSpec spec_;
    std::vector<GroupElement> elements_;
};

using GroupPtr = std::shared_ptr<const Group>;

GroupPtr make_group(GroupSpec spec);

/// Grammar: group := factor (" x " factor)* ; factor := "Z" | "Z/" int | "Q" int.
/// "1" denotes the trivial group.
GroupSpec parse_group_spec(std::string_view text);

/// Replaces every finite factor by its 2-primary part, deleting trivial ones.
GroupSpec strip_odd_part(const GroupSpec& g);

/// A homomorphism determined by images of the source generators.
/// For coordinatewise reductions `factor_map[i]` is the target factor of
/// source factor i (nullopt when the factor is collapsed).
struct GroupHom {
    GroupPtr source;
    GroupPtr target;
    std::vector<GroupElement> images;
    std::vector<std::optional<std::size_t>> factor_map;

    GroupElement apply(const GroupElement& a) const;
    std::string describe() const;
};

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<GroupElement> images);

/// Coordinatewise reduction g -> prod Z/new_orders[i]. A new order of 1
/// collapses the factor; kInfiniteOrder is allowed only for the Z factor.
GroupHom quotient_surjection(const GroupSpec& g, const std::vector<std::int64_t>& new_orders);

GroupHom compose(const GroupHom& second, const GroupHom& first);

} // namespace olab
