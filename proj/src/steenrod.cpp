#include "olab/steenrod.hpp"

#include "olab/errors.hpp"

#include <algorithm>
#include <functional>

namespace olab {

namespace {

void require_abelian_two_group(const GroupSpec& g)
{
    if (!g.is_abelian())
        throw UnsupportedGroup("mod-2 cohomology model is only available for abelian groups");
    if (!g.is_two_group())
        throw UnsupportedGroup("mod-2 cohomology model needs 2-group factors; strip odd parts of " + g.label());
}

// Coefficient of the degree-(p + j) class in Sq^j of the degree-p class of one factor.
int factor_sq(std::int64_t order, int p, int j)
{
    if (j == 0)
        return 1;
    if (order == kInfiniteOrder)
        return 0;
    if (order == 2) {
        // binomial(p, j) mod 2 via Lucas
        return (j & ~p) == 0 ? 1 : 0;
    }
    if (j == 1)
        return 0;
    if (j == 2)
        return (p / 2) % 2;
    throw InvalidArgument("only Sq^1 and Sq^2 are modelled");
}

int max_degree(std::int64_t order, int degree) { return order == kInfiniteOrder ? 1 : degree; }

} // namespace

std::vector<Monomial> cohomology_basis(const GroupSpec& g, int degree)
{
    require_abelian_two_group(g);
    if (degree < 0)
        return {};
    // same enumeration as the chain basis of the standard resolution
    auto r = standard_resolution(g, std::max(degree, 1));
    return r.labels[static_cast<std::size_t>(degree)];
}

std::string monomial_label(const GroupSpec& g, const Monomial& m)
{
    auto G = make_group(g);
    const auto names = G->generator_names();
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += names[i];
        if (m[i] != 1)
            out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<Monomial> sq_monomial(const GroupSpec& g, const Monomial& m, int k)
{
    require_abelian_two_group(g);
    std::vector<Monomial> out;
    Monomial cur = m;
    std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int remaining, int coef) {
        if (coef == 0)
            return;
        if (i == m.size()) {
            if (remaining == 0) {
                auto it = std::find(out.begin(), out.end(), cur);
                if (it == out.end())
                    out.push_back(cur);
                else
                    out.erase(it); // coefficients are mod 2
            }
            return;
        }
        for (int j = 0; j <= remaining; ++j) {
            int c = factor_sq(g.factors[i], m[i], j);
            if (c == 0)
                continue;
            if (m[i] + j > max_degree(g.factors[i], m[i] + j))
                continue;
            cur[i] = m[i] + j;
            rec(i + 1, remaining - j, coef * c);
            cur[i] = m[i];
        }
    };
    rec(0, k, 1);
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

namespace {

F2Matrix sq_matrix(const GroupSpec& g, int degree, int k)
{
    auto from = cohomology_basis(g, degree);
    auto to = cohomology_basis(g, degree + k);
    F2Matrix m(to.size(), from.size());
    for (std::size_t j = 0; j < from.size(); ++j)
        for (const auto& t : sq_monomial(g, from[j], k)) {
            auto it = std::find(to.begin(), to.end(), t);
            check_consistency(it != to.end(), "Sq image outside the cohomology basis");
            m.at(static_cast<std::size_t>(it - to.begin()), j) ^= 1;
        }
    return m;
}

} // namespace

F2Matrix sq2_matrix(const GroupSpec& g, int degree) { return sq_matrix(g, degree, 2); }

F2Matrix sq1_matrix(const GroupSpec& g, int degree) { return sq_matrix(g, degree, 1); }

F2Matrix sq2_dual(const GroupSpec& g, int degree_from)
{
    return sq2_matrix(g, degree_from - 2).transposed();
}

std::string to_string(Provenance p)
{
    return p == Provenance::MachineChecked ? "MACHINE_CHECKED" : "PAPER_FACT";
}

std::vector<F2Vector> D2Map::image_basis() const
{
    return f2_span_basis(matrix.column_list(), matrix.rows());
}

std::vector<std::vector<Integer>> D2Map::kernel_generators() const
{
    const std::size_t s = matrix.cols();
    const std::size_t t = matrix.rows();
    IntMatrix m(t, s + t);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t j = 0; j < s; ++j)
            m.at(i, j) = matrix.at(i, j);
        m.at(i, s + i) = 2;
    }
    IntMatrix ker = kernel_basis(m);
    IntMatrix xpart(s, ker.cols());
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < ker.cols(); ++j)
            xpart.at(i, j) = ker.at(i, j);
    IntMatrix basis = lattice_basis(xpart);
    std::vector<std::vector<Integer>> out;
    for (std::size_t j = 0; j < basis.cols(); ++j)
        out.push_back(basis.column(j));
    return out;
}

D2Map d2_differential(const GroupSpec& g, int p)
{
    if (p != 4 && p != 5)
        throw InvalidArgument("d2 is only available out of degrees 4 and 5");
    D2Map d;
    d.group = g;
    d.degree = p;
    if (g.kind == GroupKind::Quaternion) {
        if (p != 5)
            throw UnsupportedGroup("d2 out of degree 4 is not available for " + g.label());
        auto r = standard_resolution(g, p + 1);
        auto cz = apply_coefficients(r, 0);
        auto c2 = apply_coefficients(r, 2);
        d.source = homology_at(cz, p);
        d.source_mod2 = homology_at(c2, p);
        d.target = homology_at(c2, p - 2);
        d.reduction = reduction_map(d.source, d.source_mod2);
        d.matrix = F2Matrix(d.target.num_summands(), d.source.num_summands());
        d.provenance = Provenance::PaperFact;
        return d;
    }
    require_abelian_two_group(g);
    auto r = standard_resolution(g, p + 1);
    auto cz = apply_coefficients(r, 0);
    auto c2 = apply_coefficients(r, 2);
    d.source = homology_at(cz, p);
    d.source_mod2 = homology_at(c2, p);
    d.target = homology_at(c2, p - 2);
    check_consistency(d.source_mod2.lifts == IntMatrix::identity(r.rank(p)) &&
                          d.target.lifts == IntMatrix::identity(r.rank(p - 2)),
                      "mod-2 homology of an abelian 2-group should have the chain basis");
    d.reduction = reduction_map(d.source, d.source_mod2);
    d.matrix = sq2_dual(g, p) * d.reduction;
    return d;
}

} // namespace olab
