#include "olab/homology.hpp"

#include "olab/errors.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace olab {

namespace {

bool all_zero_mod(const IntMatrix& m, std::int64_t modulus)
{
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!mpz_divisible_ui_p(m.at(i, j).get_mpz_t(), static_cast<unsigned long>(modulus)))
                return false;
    return true;
}

IntMatrix scalar_identity(std::size_t n, std::int64_t m)
{
    IntMatrix s(n, n);
    for (std::size_t i = 0; i < n; ++i)
        s.at(i, i) = static_cast<long>(m);
    return s;
}

} // namespace

std::vector<Integer> HomologyResult::express(const std::vector<Integer>& cycle) const
{
    if (cycle.size() != cycle_basis.rows())
        throw InvalidArgument("cycle has wrong length for H_" + std::to_string(degree));
    check_consistency(is_cycle(cycle), "express: chain is not a cycle");
    IntMatrix z(cycle.size(), 1);
    for (std::size_t i = 0; i < cycle.size(); ++i)
        z.at(i, 0) = cycle[i];
    IntMatrix y = solve_exact(cycle_basis, z);
    auto yy = coord_change * y.column(0);
    std::vector<Integer> coords;
    for (std::size_t k = 0; k < summand_rows.size(); ++k) {
        Integer v = yy[summand_rows[k]];
        if (orders[k] != 0)
            v = mod_floor(v, orders[k]);
        coords.push_back(v);
    }
    return coords;
}

bool HomologyResult::is_cycle(const std::vector<Integer>& chain) const
{
    auto b = boundary_out * chain;
    for (auto& v : b) {
        if (modulus == 0 ? v != 0 : !mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(modulus)))
            return false;
    }
    return true;
}

std::string describe_orders(const std::vector<Integer>& orders)
{
    std::map<Integer, std::size_t> counts; // 0 = free
    std::vector<Integer> seen;
    for (const auto& o : orders) {
        if (o == 1)
            continue;
        if (counts[o]++ == 0)
            seen.push_back(o);
    }
    if (seen.empty())
        return "0";
    // free part first, then torsion in decreasing order
    std::sort(seen.begin(), seen.end(), [](const Integer& a, const Integer& b) {
        if (a == 0 || b == 0)
            return a == 0 && b != 0;
        return a > b;
    });
    std::string out;
    for (const auto& o : seen) {
        if (!out.empty())
            out += " + ";
        std::string base = o == 0 ? "Z" : "Z/" + o.get_str();
        std::size_t k = counts[o];
        if (k == 1)
            out += base;
        else if (o == 0)
            out += "Z^" + std::to_string(k);
        else
            out += "(" + base + ")^" + std::to_string(k);
    }
    return out;
}

std::string HomologyResult::describe() const { return describe_orders(orders); }

HomologyResult homology_at(const IntegerComplex& c, int n)
{
    if (n < 0 || n + 1 > c.top())
        throw InvalidArgument("homology degree " + std::to_string(n) + " needs complex up to degree " +
                              std::to_string(n + 1));
    const auto N = static_cast<std::size_t>(n);
    const IntMatrix& b_out = c.boundaries[N];
    const IntMatrix& b_in = c.boundaries[N + 1];
    const std::size_t dim = c.ranks[N];

    HomologyResult h;
    h.degree = n;
    h.modulus = c.modulus;
    h.chain_labels = c.labels[N];
    h.boundary_out = b_out;

    if (c.modulus > 0 && all_zero_mod(b_out, c.modulus) && all_zero_mod(b_in, c.modulus)) {
        h.cycle_basis = IntMatrix::identity(dim);
        h.coord_change = IntMatrix::identity(dim);
        h.lifts = IntMatrix::identity(dim);
        for (std::size_t k = 0; k < dim; ++k) {
            h.summand_rows.push_back(k);
            h.orders.emplace_back(static_cast<long>(c.modulus));
            h.torsion.emplace_back(static_cast<long>(c.modulus));
        }
        return h;
    }

    IntMatrix K;
    IntMatrix boundary_gens;
    if (c.modulus == 0) {
        K = kernel_basis(b_out);
        boundary_gens = b_in;
    } else {
        IntMatrix stacked = hstack(b_out, scalar_identity(b_out.rows(), c.modulus));
        IntMatrix ker = kernel_basis(stacked);
        IntMatrix xpart(dim, ker.cols());
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < ker.cols(); ++j)
                xpart.at(i, j) = ker.at(i, j);
        K = lattice_basis(xpart);
        boundary_gens = hstack(b_in, scalar_identity(dim, c.modulus));
    }
    h.cycle_basis = K;
    IntMatrix X = solve_exact(K, boundary_gens);
    auto snf = smith_normal_form(X, {true, true});
    h.coord_change = snf.U;
    IntMatrix lift_all = K * snf.Uinv;
    std::vector<std::size_t> cols;
    for (std::size_t i = 0; i < K.cols(); ++i) {
        if (i < snf.rank) {
            if (snf.diagonal[i] == 1)
                continue;
            h.orders.push_back(snf.diagonal[i]);
            h.torsion.push_back(snf.diagonal[i]);
        } else {
            h.orders.emplace_back(0);
            ++h.free_rank;
        }
        cols.push_back(i);
    }
    h.summand_rows = cols;
    h.lifts = lift_all.columns(cols);
    for (std::size_t k = 0; k < cols.size(); ++k)
        check_consistency(h.is_cycle(h.lifts.column(k)), "homology lift is not a cycle");
    return h;
}

F2Matrix reduction_map(const HomologyResult& hz, const HomologyResult& hz2)
{
    if (hz.modulus != 0 || hz2.modulus != 2 || hz.degree != hz2.degree)
        throw InvalidArgument("reduction_map needs H_n(Z) and H_n(Z/2) of the same degree");
    F2Matrix m(hz2.num_summands(), hz.num_summands());
    for (std::size_t k = 0; k < hz.num_summands(); ++k) {
        auto lift = hz.lifts.column(k);
        for (auto& v : lift)
            v = mod_floor(v, 2);
        auto coords = hz2.express(lift);
        for (std::size_t i = 0; i < coords.size(); ++i)
            m.at(i, k) = static_cast<std::uint8_t>(coords[i].get_ui() & 1);
    }
    return m;
}

IntMatrix induced_map(const HomologyResult& source, const HomologyResult& target, const IntMatrix& chain_map)
{
    IntMatrix m(target.num_summands(), source.num_summands());
    for (std::size_t k = 0; k < source.num_summands(); ++k) {
        auto image = chain_map * source.lifts.column(k);
        auto coords = target.express(image);
        for (std::size_t i = 0; i < coords.size(); ++i)
            m.at(i, k) = coords[i];
    }
    return m;
}

namespace {

IntMatrix relation_lattice(const HomologyResult& h, const std::vector<std::vector<Integer>>& gens)
{
    const std::size_t s = h.num_summands();
    std::vector<std::vector<Integer>> cols = gens;
    for (std::size_t k = 0; k < s; ++k)
        if (h.orders[k] != 0) {
            std::vector<Integer> r(s);
            r[k] = h.orders[k];
            cols.push_back(r);
        }
    if (cols.empty())
        return IntMatrix(s, 0);
    return lattice_basis(IntMatrix::from_columns(s, cols));
}

bool lattice_contains(const IntMatrix& basis, const IntMatrix& vectors)
{
    for (std::size_t j = 0; j < vectors.cols(); ++j)
        if (!solve_integer(basis, vectors.column(j)))
            return false;
    return true;
}

} // namespace

std::vector<Integer> subgroup_orders(const HomologyResult& h, const std::vector<std::vector<Integer>>& gens)
{
    IntMatrix L = relation_lattice(h, gens);
    IntMatrix R = relation_lattice(h, {});
    if (L.cols() == 0)
        return {};
    IntMatrix X = solve_exact(L, R);
    auto snf = smith_normal_form(X, {false, false});
    std::vector<Integer> out;
    for (std::size_t i = 0; i < L.cols(); ++i) {
        if (i < snf.rank) {
            if (snf.diagonal[i] != 1)
                out.push_back(snf.diagonal[i]);
        } else {
            out.emplace_back(0);
        }
    }
    return out;
}

bool same_subgroup(const HomologyResult& h, const std::vector<std::vector<Integer>>& a,
                   const std::vector<std::vector<Integer>>& b)
{
    IntMatrix la = relation_lattice(h, a);
    IntMatrix lb = relation_lattice(h, b);
    return lattice_contains(la, lb) && lattice_contains(lb, la);
}

} // namespace olab
