#include "olab/errors.hpp"
#include "olab/steenrod.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace olab;

namespace {

// Entry of an F2 matrix addressed by target and source labels.
int entry(const F2Matrix& m, const std::vector<std::string>& rows, const std::vector<std::string>& cols,
          const std::string& row, const std::string& col)
{
    auto r = std::find(rows.begin(), rows.end(), row);
    auto c = std::find(cols.begin(), cols.end(), col);
    REQUIRE(r != rows.end());
    REQUIRE(c != cols.end());
    return m.at(static_cast<std::size_t>(r - rows.begin()), static_cast<std::size_t>(c - cols.begin()));
}

std::vector<std::string> labels(const GroupSpec& g, int degree)
{
    std::vector<std::string> out;
    for (const auto& m : cohomology_basis(g, degree))
        out.push_back(monomial_label(g, m));
    return out;
}

} // namespace

TEST_CASE("Sq^1 and Sq^2 agree with the Cartan formula oracle")
{
    for (const char* text : {"Z/2", "Z/4", "Z x Z/2", "Z x Z/4", "Z/2 x Z/2", "Z/8 x Z/2", "Z/2 x Z/2 x Z/4"}) {
        auto g = parse_group_spec(text);
        std::vector<long> orders(g.factors.begin(), g.factors.end());
        for (int d = 0; d <= 4; ++d)
            for (int k : {1, 2}) {
                auto from = cohomology_basis(g, d);
                auto to = cohomology_basis(g, d + k);
                auto m = k == 1 ? sq1_matrix(g, d) : sq2_matrix(g, d);
                for (std::size_t j = 0; j < from.size(); ++j) {
                    auto expected = oracle::sq_product(orders, from[j], k);
                    for (std::size_t i = 0; i < to.size(); ++i) {
                        CAPTURE(text);
                        CAPTURE(d);
                        CAPTURE(k);
                        CHECK(m.at(i, j) == (expected.count(to[i]) ? 1 : 0));
                    }
                }
            }
    }
}

TEST_CASE("Adem relations Sq^1 Sq^1 = 0 and Sq^2 Sq^2 = Sq^1 Sq^2 Sq^1")
{
    for (const char* text : {"Z/2", "Z/2 x Z/2", "Z/2 x Z/4", "Z/2 x Z/2 x Z/2"}) {
        auto g = parse_group_spec(text);
        for (int d = 0; d <= 3; ++d) {
            CHECK((sq1_matrix(g, d + 1) * sq1_matrix(g, d)).is_zero());
            CHECK(sq2_matrix(g, d + 2) * sq2_matrix(g, d) ==
                  sq1_matrix(g, d + 3) * sq2_matrix(g, d + 1) * sq1_matrix(g, d));
        }
    }
}

TEST_CASE("dual Sq_2 is the transpose")
{
    auto g = parse_group_spec("Z/4 x Z/2");
    CHECK(sq2_dual(g, 5) == sq2_matrix(g, 3).transposed());
    CHECK(sq2_dual(g, 4) == sq2_matrix(g, 2).transposed());
}

TEST_CASE("cyclic d2 out of degree 5 is surjective")
{
    for (const char* text : {"Z/2", "Z/4", "Z/8", "Z/16"}) {
        auto d = d2_differential(parse_group_spec(text), 5);
        CHECK(d.target.num_summands() == 1);
        CHECK(f2_rank(d.matrix) == 1);
        CHECK(d.provenance == Provenance::MachineChecked);
    }
}

TEST_CASE("Z x Z/2 reduction and Sq^2 by labels")
{
    auto g = parse_group_spec("Z x Z/2");
    auto d5 = d2_differential(g, 5);
    auto d4 = d2_differential(g, 4);
    REQUIRE(d5.source.num_summands() == 1);
    REQUIRE(d4.source.num_summands() == 1);
    const auto& l5 = d5.source_mod2.chain_labels;
    const auto& l4 = d4.source_mod2.chain_labels;
    CHECK(entry(d5.reduction, l5, {"gen"}, "T^5", "gen") == 1);
    CHECK(entry(d5.reduction, l5, {"gen"}, "t*T^4", "gen") == 0);
    CHECK(entry(d4.reduction, l4, {"gen"}, "t*T^3", "gen") == 1);
    CHECK(entry(d4.reduction, l4, {"gen"}, "T^4", "gen") == 0);

    auto s3 = sq2_matrix(g, 3);
    auto c3 = labels(g, 3), c5 = labels(g, 5);
    CHECK(entry(s3, c5, c3, "t*T^4", "t*T^2") == 1);
    CHECK(entry(s3, c5, c3, "T^5", "T^3") == 1);
    CHECK(entry(s3, c5, c3, "T^5", "t*T^2") == 0);
    CHECK(entry(s3, c5, c3, "t*T^4", "T^3") == 0);

    auto s2 = sq2_matrix(g, 2);
    auto c2 = labels(g, 2), c4 = labels(g, 4);
    CHECK(entry(s2, c4, c2, "T^4", "T^2") == 1);
    CHECK(entry(s2, c4, c2, "t*T^3", "t*T") == 0);
    CHECK(entry(s2, c4, c2, "T^4", "t*T") == 0);
    CHECK(entry(s2, c4, c2, "t*T^3", "T^2") == 0);

    // the generator of H_5(Z) is hit by nothing in the kernel
    CHECK(subgroup_orders(d5.source, d5.kernel_generators()).empty());
}

TEST_CASE("two-factor image of d2_{5,0} contains gamma iff k1 <= k2")
{
    for (int k1 = 1; k1 <= 3; ++k1)
        for (int k2 = 1; k2 <= 3; ++k2) {
            auto g = GroupSpec::abelian({std::int64_t{1} << k1, std::int64_t{1} << k2});
            auto d = d2_differential(g, 5);
            auto idx = standard_resolution(g, 3).index_of({1, 2});
            F2Vector gamma(d.target.num_summands());
            gamma[idx] = 1;
            CAPTURE(g.label());
            CHECK(f2_in_span(d.image_basis(), gamma, gamma.size()) == (k1 <= k2));
        }
}

TEST_CASE("kernel of d2_{5,0} for Z/8 x Z/2")
{
    auto g = parse_group_spec("Z/8 x Z/2");
    auto d = d2_differential(g, 5);
    CHECK(d.source.describe() == "Z/8 + (Z/2)^3");
    CHECK(describe_orders(subgroup_orders(d.source, d.kernel_generators())) == "Z/4 + Z/2");
    // <2 e0, e3 + 4 e4> in the chain basis a^5, a^4*b, ..., b^5
    auto r = standard_resolution(g, 5);
    std::vector<Integer> e0(r.rank(5)), e34(r.rank(5));
    e0[r.index_of({5, 0})] = 2;
    e34[r.index_of({2, 3})] = 1;
    e34[r.index_of({1, 4})] = 4;
    REQUIRE(d.source.is_cycle(e0));
    REQUIRE(d.source.is_cycle(e34));
    CHECK(same_subgroup(d.source, d.kernel_generators(), {d.source.express(e0), d.source.express(e34)}));
}

TEST_CASE("quaternion d2 is the cited zero map")
{
    auto d = d2_differential(parse_group_spec("Q16"), 5);
    CHECK(d.matrix.is_zero());
    CHECK(d.provenance == Provenance::PaperFact);
    CHECK(to_string(d.provenance) == "PAPER_FACT");
    CHECK_THROWS_AS(d2_differential(parse_group_spec("Q8"), 4), UnsupportedGroup);
    CHECK_THROWS_AS(d2_differential(parse_group_spec("Z/3"), 5), UnsupportedGroup);
}
