#include "olab/f2.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace olab;

namespace {

F2Matrix random_f2(std::size_t r, std::size_t c)
{
    F2Matrix m(r, c);
    std::bernoulli_distribution bit(0.5);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j)
            m.at(i, j) = bit(oracle::rng());
    return m;
}

} // namespace

TEST_CASE("rank plus nullity")
{
    for (int trial = 0; trial < 100; ++trial) {
        auto m = random_f2(4, 7);
        auto k = f2_kernel(m);
        CHECK(f2_rank(m) + k.size() == 7);
        for (const auto& v : k)
            CHECK(f2_is_zero(m * v));
    }
}

TEST_CASE("span basis is canonical")
{
    std::vector<F2Vector> a{{1, 1, 0}, {0, 1, 1}};
    std::vector<F2Vector> b{{1, 0, 1}, {1, 1, 0}};
    CHECK(f2_same_span(a, b, 3));
    CHECK(f2_span_basis(a, 3) == f2_span_basis(b, 3));
    CHECK(f2_in_span(a, {1, 0, 1}, 3));
    CHECK_FALSE(f2_in_span(a, {1, 0, 0}, 3));
    CHECK_FALSE(f2_same_span(a, {{1, 0, 0}}, 3));
}

TEST_CASE("solve")
{
    for (int trial = 0; trial < 50; ++trial) {
        auto m = random_f2(5, 4);
        F2Vector x(4);
        for (auto& v : x)
            v = std::bernoulli_distribution(0.5)(oracle::rng());
        auto b = m * x;
        auto s = f2_solve(m, b);
        REQUIRE(s);
        CHECK(m * *s == b);
    }
    F2Matrix z(2, 2);
    CHECK_FALSE(f2_solve(z, {1, 0}));
}

TEST_CASE("bits")
{
    CHECK(f2_from_bits(5, 4) == F2Vector{1, 0, 1, 0});
    CHECK(f2_add({1, 1, 0}, {0, 1, 1}) == F2Vector{1, 0, 1});
}
