#include "olab/errors.hpp"
#include "olab/gamma.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace olab;

namespace {

// Kronecker product a (x) b with index (i, j) -> i * n + j.
IntMatrix kron(const IntMatrix& a, const IntMatrix& b)
{
    IntMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j)
            for (std::size_t p = 0; p < b.rows(); ++p)
                for (std::size_t q = 0; q < b.cols(); ++q)
                    k.at(i * b.rows() + p, j * b.cols() + q) = a.at(i, j) * b.at(p, q);
    return k;
}

} // namespace

TEST_CASE("Gamma rank is r(r+1)/2")
{
    for (std::size_t r = 0; r <= 6; ++r) {
        CHECK(gamma_rank(r) == r * (r + 1) / 2);
        CHECK(gamma_action(IntMatrix::identity(r)) == IntMatrix::identity(gamma_rank(r)));
        CHECK(gamma_embedding(r).cols() == gamma_rank(r));
    }
}

TEST_CASE("Gamma is a functor and embeds into the symmetric tensors")
{
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = 1 + trial % 4;
        auto a = oracle::random_matrix(r, r, -3, 3);
        auto b = oracle::random_matrix(r, r, -3, 3);
        CHECK(gamma_action(a * b) == gamma_action(a) * gamma_action(b));
        auto e = gamma_embedding(r);
        CHECK(kron(a, a) * e == e * gamma_action(a));
        // v is the quadratic map u -> u (x) u
        auto u = oracle::random_matrix(r, 1, -4, 4).column(0);
        IntMatrix uu = kron(IntMatrix::from_columns(r, {u}), IntMatrix::from_columns(r, {u}));
        CHECK(e * gamma_v(u) == uu.column(0));
        // v(x + y) - v(x) - v(y) is bilinear: w
        auto x = oracle::random_matrix(r, 1, -4, 4).column(0);
        auto y = oracle::random_matrix(r, 1, -4, 4).column(0);
        std::vector<Integer> xy(r);
        for (std::size_t i = 0; i < r; ++i)
            xy[i] = x[i] + y[i];
        auto vx = gamma_v(x), vy = gamma_v(y), vxy = gamma_v(xy);
        auto ex = gamma_embedding(r);
        std::vector<Integer> w(vx.size());
        for (std::size_t i = 0; i < w.size(); ++i)
            w[i] = vxy[i] - vx[i] - vy[i];
        auto sym = ex * w;
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                CHECK(sym[i * r + j] == x[i] * y[j] + x[j] * y[i]);
    }
}

TEST_CASE("ker d_2 lattice of Z/2")
{
    auto l = kernel_d2_lattice(standard_resolution(parse_group_spec("Z/2"), 3));
    CHECK(l.rank == 1);
    REQUIRE(l.action.size() == 1);
    CHECK(l.action[0] == IntMatrix{{-1}});
    auto c = gamma_coinvariants(l);
    CHECK(c.gamma_rank == 1);
    CHECK(c.describe() == "Z");
}

TEST_CASE("lattice actions are group actions")
{
    for (const char* text : {"Z/4", "Z/2 x Z/2", "Q8"}) {
        auto spec = parse_group_spec(text);
        auto r = standard_resolution(spec, 3);
        auto l = kernel_d2_lattice(r);
        // rank of ker d_2 = |G| rank C_2 - rank d_2 over Z
        auto e = expand_over_z(r.boundary(2));
        CHECK(l.rank == e.rows() - integer_rank(e));
        if (spec.is_abelian()) {
            for (std::size_t s = 0; s < l.action.size(); ++s) {
                IntMatrix p = IntMatrix::identity(l.rank);
                for (std::int64_t k = 0; k < spec.factors[s]; ++k)
                    p = p * l.action[s];
                CHECK(p == IntMatrix::identity(l.rank));
            }
        }
    }
    CHECK_THROWS_AS(kernel_d2_lattice(standard_resolution(parse_group_spec("Z x Z/2"), 3)), UnsupportedGroup);
}

TEST_CASE("Gamma coinvariants are torsion-free for the cited two-generator groups")
{
    for (const char* text : {"Z/2", "Z/4", "Z/2 x Z/2", "Z/2 x Z/4"}) {
        CAPTURE(text);
        auto l = kernel_d2_lattice(standard_resolution(parse_group_spec(text), 3));
        auto c = gamma_coinvariants(l);
        CHECK(c.gamma_rank == gamma_rank(l.rank));
        CHECK(c.torsion_free());
    }
}

TEST_CASE("tertiary criteria")
{
    auto q = verify_tertiary(parse_group_spec("Q8"));
    CHECK(q.criterion == "TRIVIAL_TARGET");
    CHECK(q.tag == "PAPER_FACT");
    for (const char* text : {"Z/2", "Z/4", "Z/8", "Z/2 x Z/2"}) {
        auto t = verify_tertiary(parse_group_spec(text));
        CHECK(t.criterion == "TRIVIAL_TARGET");
        CHECK(t.tag == "MACHINE_CHECKED");
    }
    auto t = verify_tertiary(parse_group_spec("Z/2 x Z/4"));
    CHECK(t.criterion == "GAMMA_TORSION_FREE");
    CHECK(t.target_description == "Z/2");
    auto z = verify_tertiary(parse_group_spec("Z x Z/2"));
    CHECK(z.criterion == "PAPER_THEOREM");
    CHECK(z.tag == "PAPER_FACT");
    nlohmann::json j = t;
    CHECK(j.get<TertiaryReport>() == t);
}
