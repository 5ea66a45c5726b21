#include "olab/amap.hpp"
#include "olab/errors.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace olab;

namespace {

std::size_t class_index(const KernelOfA& k, const std::string& label)
{
    for (std::size_t i = 0; i < k.classes.size(); ++i)
        if (k.classes[i].label == label)
            return i;
    FAIL("no class " << label);
    return 0;
}

FormMatrix sum(const FormMatrix& a, const FormMatrix& b) { return FormMatrix{a.module, a.entries + b.entries}; }

RingElement random_group_element(const GroupPtr& g)
{
    const auto& els = g->elements();
    std::uniform_int_distribution<std::size_t> pick(0, els.size() - 1);
    return RingElement::monomial(g, els[pick(oracle::rng())]);
}

} // namespace

TEST_CASE("A of the cyclic generator is the displayed rank-one form")
{
    for (const char* text : {"Z/2", "Z/4", "Z/8"}) {
        AMapContext ctx(parse_group_spec(text));
        const auto& g = ctx.resolution().group;
        auto f = a_of_chain(ctx.resolution(), ctx.module(), std::vector<Integer>{1});
        CHECK(f.entries.at(0, 0) == parse_ring_element(g, "1 - T^-1") * parse_ring_element(g, "1 - T"));
        auto k = kernel_of_A(ctx);
        CHECK(k.h3_dim == 1);
        CHECK(k.kernel_basis.size() == 1);
        REQUIRE(k.classes[0].verdict.is_even());
        CHECK(verify_witness(*k.classes[0].verdict.witness, ctx.a_of_class({1})));
    }
}

TEST_CASE("quaternion generator is odd")
{
    for (const char* text : {"Q8", "Q16"}) {
        AMapContext ctx(parse_group_spec(text));
        auto k = kernel_of_A(ctx);
        CHECK(k.h3_dim == 1);
        REQUIRE(k.classes.size() == 1);
        CHECK(k.classes[0].verdict.is_odd());
        CHECK(k.classes[0].verdict.certificate == "integer-infeasible");
        CHECK(k.kernel_basis.empty());
    }
}

TEST_CASE("Z x Z/2^k: gamma is odd through a finite quotient, T^3 is even")
{
    struct Case {
        const char* group;
        int m;
    };
    for (const auto& c : {Case{"Z x Z/2", 2}, Case{"Z x Z/4", 3}}) {
        AMapContext ctx(parse_group_spec(c.group));
        auto k = kernel_of_A(ctx);
        CHECK_FALSE(k.undecided);
        const auto& gamma = k.classes[class_index(k, "t*T^2")];
        CHECK(gamma.verdict.is_odd());
        CHECK(gamma.verdict.certificate == "quotient-odd");
        REQUIRE(gamma.verdict.quotient);
        CHECK(gamma.verdict.quotient->target->spec().factors[0] == (std::int64_t{1} << c.m));
        const auto& t3 = k.classes[class_index(k, "T^3")];
        REQUIRE(t3.verdict.is_even());
        CHECK(verify_witness(*t3.verdict.witness, ctx.a_of_class(t3.coords)));
        // lower exponents do not certify gamma
        CHECK_FALSE(ctx.certify_odd_via_quotients(gamma.coords, c.m - 1));
    }
}

TEST_CASE("A is additive into the Tate group")
{
    for (std::string text : {"Z/2 x Z/4", "Z/4 x Z/2", "Z/2 x Z/2", "Z/8 x Z/4", "Z/2 x Z/2 x Z/4"}) {
        CAPTURE(text);
        AMapContext ctx(parse_group_spec(text));
        const std::size_t dim = ctx.h3().num_summands();
        std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << dim) - 1);
        EvennessSolver solver(ctx.module(), 0);
        for (int trial = 0; trial < 10; ++trial) {
            auto x = f2_from_bits(pick(oracle::rng()), dim);
            auto y = f2_from_bits(pick(oracle::rng()), dim);
            auto axy = ctx.a_of_class(f2_add(x, y));
            auto diff = sum(ctx.a_of_class(x), ctx.a_of_class(y)).entries - axy.entries;
            auto v = solver.decide(diff);
            REQUIRE(v.is_even());
            CHECK(verify_witness(*v.witness, FormMatrix{ctx.module(), diff}));
            // A(x + y) = 0 exactly when A(x) = A(y) in the Tate group
            auto same = tate_equal(ctx.a_of_class(x), ctx.a_of_class(y));
            CHECK(ctx.verdict(f2_add(x, y)).is_even() == same.is_even());
        }
    }
    AMapContext zz(parse_group_spec("Z x Z/2"));
    auto k = kernel_of_A(zz);
    CHECK(k.classes[class_index(k, "t*T^2 + T^3")].verdict.is_odd());
}

TEST_CASE("A does not depend on the chosen lift")
{
    for (const char* text : {"Z/4 x Z/2", "Z/2 x Z/2", "Z/8", "Q8"}) {
        CAPTURE(text);
        AMapContext ctx(parse_group_spec(text));
        const auto& r = ctx.resolution();
        const auto& g = r.group;
        const std::size_t dim = ctx.h3().num_summands();
        std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << dim) - 1);
        EvennessSolver solver(ctx.module(), 0);
        for (int trial = 0; trial < 10; ++trial) {
            auto x = f2_from_bits(pick(oracle::rng()), dim);
            auto base = class_lift(ctx.h3(), x);
            std::vector<RingElement> lift(base.size(), RingElement(g));
            for (std::size_t i = 0; i < base.size(); ++i) {
                // translate each coefficient by a group element, add an even chain
                lift[i] = random_group_element(g) * base[i] + Integer(2) * oracle::random_element(g, 3);
            }
            // add a boundary v * d_4
            std::vector<RingElement> v(r.rank(4), RingElement(g));
            for (auto& e : v)
                e = oracle::random_element(g, 3);
            const auto& d4 = r.boundary(4);
            for (std::size_t k = 0; k < d4.rows(); ++k)
                for (std::size_t j = 0; j < d4.cols(); ++j)
                    lift[j] += v[k] * d4.at(k, j);
            auto a = a_of_chain(r, ctx.module(), lift);
            auto diff = a.entries - ctx.a_of_class(x).entries;
            auto verdict = solver.decide(diff);
            REQUIRE(verdict.is_even());
            CHECK(verify_witness(*verdict.witness, FormMatrix{ctx.module(), diff}));
        }
    }
}

TEST_CASE("condition verdicts for two-factor groups")
{
    for (int k1 = 1; k1 <= 3; ++k1)
        for (int k2 = 1; k2 <= 3; ++k2) {
            auto g = GroupSpec::abelian({std::int64_t{1} << k1, std::int64_t{1} << k2});
            CAPTURE(g.label());
            auto a = analyze_condition(g);
            CHECK(a.report.condition_holds == "yes");
            const auto& gamma = a.kernel.classes[class_index(a.kernel, "a*b^2")];
            CHECK(gamma.verdict.is_even() == (k1 <= k2));
            if (gamma.verdict.is_odd())
                CHECK(gamma.verdict.certificate == "integer-infeasible");
        }
}

TEST_CASE("odd-order factors do not change the report")
{
    auto a = check_condition(parse_group_spec("Z/3 x Z/4"));
    auto b = check_condition(parse_group_spec("Z/4"));
    CHECK(a.group == "Z/3 x Z/4");
    a.group = b.group;
    CHECK(a == b);
    CHECK(nlohmann::json(a).dump() == nlohmann::json(b).dump());
}

TEST_CASE("report JSON round trip")
{
    auto r = check_condition(parse_group_spec("Z x Z/2"));
    nlohmann::json j = r;
    CHECK(j.get<SecondaryReport>() == r);
    CHECK(nlohmann::json::parse(j.dump()).get<SecondaryReport>() == r);
    for (const auto& i : r.ingredients)
        CHECK((i.tag == "MACHINE_CHECKED" || i.tag == "PAPER_FACT"));
}
