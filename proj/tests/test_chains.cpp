#include "olab/chains.hpp"
#include "olab/errors.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace olab;

namespace {

const char* const kGroups[] = {"1",         "Z/2",       "Z/4",       "Z/8",       "Z/3",
                               "Z",         "Z x Z/2",   "Z x Z/4",   "Z/2 x Z/2", "Z/4 x Z/2",
                               "Z/8 x Z/2", "Z/8 x Z/8", "Z/2 x Z/2 x Z/2", "Z/2 x Z/2 x Z/4", "Q8",
                               "Q16",       "Q32",       "Z/3 x Z/4"};

RingElement el(const GroupPtr& g, const char* text) { return parse_ring_element(g, text); }

} // namespace

TEST_CASE("d o d = 0 for every constructed resolution")
{
    for (const char* text : kGroups) {
        CAPTURE(text);
        auto r = standard_resolution(parse_group_spec(text), 6);
        CHECK(check_d_squared(r));
        for (int i = 2; i <= r.top; ++i)
            CHECK((r.boundary(i) * r.boundary(i - 1)).is_zero());
    }
}

TEST_CASE("finite resolutions are exact")
{
    for (const char* text : {"Z/2", "Z/4", "Z/2 x Z/2", "Z/4 x Z/2", "Q8", "Z/3"}) {
        CAPTURE(text);
        CHECK(check_exact(standard_resolution(parse_group_spec(text), 5)));
    }
}

TEST_CASE("ranks follow the construction rule")
{
    CHECK(standard_resolution(parse_group_spec("Z/8"), 5).ranks == std::vector<std::size_t>{1, 1, 1, 1, 1, 1});
    CHECK(standard_resolution(parse_group_spec("Z/2 x Z/2"), 5).ranks == std::vector<std::size_t>{1, 2, 3, 4, 5, 6});
    CHECK(standard_resolution(parse_group_spec("Z/2 x Z/2 x Z/2"), 4).ranks ==
          std::vector<std::size_t>{1, 3, 6, 10, 15});
    CHECK(standard_resolution(parse_group_spec("Z x Z/2"), 4).ranks == std::vector<std::size_t>{1, 2, 2, 2, 2});
    CHECK(standard_resolution(parse_group_spec("Q8"), 8).ranks ==
          std::vector<std::size_t>{1, 2, 2, 1, 1, 2, 2, 1, 1});
}

TEST_CASE("cyclic boundaries alternate 1 - T and N_T")
{
    auto r = standard_resolution(parse_group_spec("Z/4"), 4);
    const auto& g = r.group;
    for (int i = 1; i <= 4; ++i) {
        CHECK(r.boundary(i).rows() == 1);
        CHECK(r.boundary(i).at(0, 0) == (i % 2 == 1 ? el(g, "1 - T") : norm_element(g)));
    }
    auto c = apply_coefficients(r, 0);
    CHECK(c.boundaries[1] == IntMatrix{{0}});
    CHECK(c.boundaries[2] == IntMatrix{{4}});
    CHECK(c.boundaries[3] == IntMatrix{{0}});
    CHECK(c.boundaries[4] == IntMatrix{{4}});
}

TEST_CASE("quaternion resolution")
{
    auto r = standard_resolution(parse_group_spec("Q8"), 4);
    const auto& g = r.group;
    CHECK(r.boundary(1).at(0, 0) == el(g, "x - 1"));
    CHECK(r.boundary(1).at(1, 0) == el(g, "y - 1"));
    CHECK(r.boundary(2).at(0, 0) == el(g, "1 + x"));
    CHECK(r.boundary(2).at(0, 1) == el(g, "-y - 1"));
    CHECK(r.boundary(2).at(1, 0) == el(g, "x*y + 1"));
    CHECK(r.boundary(2).at(1, 1) == el(g, "x - 1"));
    CHECK(r.boundary(3).at(0, 0) == el(g, "x - 1"));
    CHECK(r.boundary(3).at(0, 1) == el(g, "1 - x*y"));
    CHECK(r.boundary(4).at(0, 0) == norm_element(g));
    CHECK(r.basis_label(3, 0) == "e3");
}

TEST_CASE("product labels and ordering")
{
    auto r = standard_resolution(parse_group_spec("Z x Z/2"), 3);
    CHECK(r.basis_labels(2) == std::vector<std::string>{"t*T", "T^2"});
    CHECK(r.basis_labels(3) == std::vector<std::string>{"t*T^2", "T^3"});
    CHECK(r.index_of({1, 2}) == 0);
    auto s = standard_resolution(parse_group_spec("Z/2 x Z/2"), 2);
    CHECK(s.basis_labels(2) == std::vector<std::string>{"a^2", "a*b", "b^2"});
}

TEST_CASE("dualized presentation of a cyclic group")
{
    auto r = standard_resolution(parse_group_spec("Z/4"), 3);
    auto p = dualize_degree2(r);
    CHECK(p.generators == 1);
    REQUIRE(p.relations.rows() == 1);
    CHECK(p.relations.at(0, 0) == norm_element(r.group));
}

TEST_CASE("quotient chain maps commute with boundaries")
{
    struct Case {
        const char* source;
        std::vector<std::int64_t> orders;
    };
    for (const auto& c : {Case{"Z x Z/2", {4, 2}}, Case{"Z x Z/4", {8, 4}}, Case{"Z/8 x Z/2", {4, 2}},
                          Case{"Z/8 x Z/2", {8, 1}}, Case{"Z/4 x Z/2", {2, 2}}, Case{"Z x Z/2", {2, 1}}}) {
        CAPTURE(c.source);
        auto spec = parse_group_spec(c.source);
        auto phi = quotient_surjection(spec, c.orders);
        auto r = standard_resolution(spec, 6);
        auto rq = standard_resolution(phi.target->spec(), 6);
        phi.source = r.group;
        phi.target = rq.group;
        auto cz = apply_coefficients(r, 0);
        auto cq = apply_coefficients(rq, 0);
        for (int n = 1; n <= 6; ++n) {
            auto lower = quotient_chain_map(r, rq, phi, n - 1);
            auto upper = quotient_chain_map(r, rq, phi, n);
            CHECK(lower * cz.boundaries[static_cast<std::size_t>(n)] ==
                  cq.boundaries[static_cast<std::size_t>(n)] * upper);
        }
    }
}

TEST_CASE("expansion over Z is multiplicative")
{
    auto g = make_group(parse_group_spec("Z/4 x Z/2"));
    RingMatrix a(g, 2, 2), b(g, 2, 1);
    for (std::size_t i = 0; i < 2; ++i) {
        b.at(i, 0) = oracle::random_element(g, 3);
        for (std::size_t j = 0; j < 2; ++j)
            a.at(i, j) = oracle::random_element(g, 3);
    }
    CHECK(expand_over_z(a * b) == expand_over_z(a) * expand_over_z(b));
}
