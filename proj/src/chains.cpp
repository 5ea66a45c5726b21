#include "olab/chains.hpp"

#include "olab/errors.hpp"

#include <algorithm>
#include <functional>

namespace olab {

std::size_t Resolution::rank(int degree) const
{
    if (degree < 0 || degree > top)
        throw InvalidArgument("degree " + std::to_string(degree) + " outside resolution range 0.." +
                              std::to_string(top));
    return ranks[static_cast<std::size_t>(degree)];
}

const RingMatrix& Resolution::boundary(int degree) const
{
    if (degree < 1 || degree > top)
        throw InvalidArgument("no boundary in degree " + std::to_string(degree));
    return boundaries[static_cast<std::size_t>(degree)];
}

std::string Resolution::basis_label(int degree, std::size_t index) const
{
    const auto& md = labels.at(static_cast<std::size_t>(degree)).at(index);
    if (spec.kind == GroupKind::Quaternion) {
        if (rank(degree) == 1)
            return "e" + std::to_string(degree);
        return "e" + std::to_string(degree) + "_" + std::to_string(index);
    }
    const auto names = group->generator_names();
    std::string out;
    for (std::size_t i = 0; i < md.size(); ++i) {
        if (md[i] == 0)
            continue;
        if (!out.empty())
            out += "*";
        out += names[i];
        if (md[i] != 1)
            out += "^" + std::to_string(md[i]);
    }
    return out.empty() ? "1" : out;
}

std::vector<std::string> Resolution::basis_labels(int degree) const
{
    std::vector<std::string> out;
    for (std::size_t k = 0; k < rank(degree); ++k)
        out.push_back(basis_label(degree, k));
    return out;
}

std::size_t Resolution::index_of(const Multidegree& md) const
{
    int degree = 0;
    for (int p : md)
        degree += p;
    const auto& ls = labels.at(static_cast<std::size_t>(degree));
    auto it = std::find(ls.begin(), ls.end(), md);
    if (it == ls.end())
        throw InvalidArgument("multidegree not present in resolution");
    return static_cast<std::size_t>(it - ls.begin());
}

namespace {

// Multidegrees of total degree n with p_i <= caps[i], first factor descending.
std::vector<Multidegree> multidegrees(const std::vector<int>& caps, int n)
{
    std::vector<Multidegree> out;
    Multidegree cur(caps.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int remaining) {
        if (i == caps.size()) {
            if (remaining == 0)
                out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, caps[i]); p >= 0; --p) {
            cur[i] = p;
            rec(i + 1, remaining - p);
        }
    };
    rec(0, n);
    return out;
}

RingElement factor_differential(const GroupPtr& g, std::size_t factor, int p)
{
    const auto order = g->spec().factors[factor];
    if (order == kInfiniteOrder || p % 2 == 1)
        return one_minus(g, factor);
    return factor_norm(g, factor);
}

Resolution abelian_resolution(const GroupSpec& spec, int top)
{
    Resolution r;
    r.spec = spec;
    r.group = make_group(spec);
    r.top = top;
    std::vector<int> caps;
    for (auto n : spec.factors)
        caps.push_back(n == kInfiniteOrder ? 1 : top);
    for (int n = 0; n <= top; ++n) {
        r.labels.push_back(caps.empty() ? (n == 0 ? std::vector<Multidegree>{Multidegree{}}
                                                  : std::vector<Multidegree>{})
                                        : multidegrees(caps, n));
        r.ranks.push_back(r.labels.back().size());
    }
    r.boundaries.emplace_back(r.group, r.ranks[0], 0);
    for (int n = 1; n <= top; ++n) {
        const auto& src = r.labels[static_cast<std::size_t>(n)];
        const auto& dst = r.labels[static_cast<std::size_t>(n - 1)];
        RingMatrix d(r.group, src.size(), dst.size());
        for (std::size_t row = 0; row < src.size(); ++row) {
            const auto& P = src[row];
            int tail = 0; // sum of degrees of factors after i
            for (std::size_t i = P.size(); i-- > 0;) {
                if (P[i] > 0) {
                    Multidegree Q = P;
                    --Q[i];
                    auto col = static_cast<std::size_t>(std::find(dst.begin(), dst.end(), Q) - dst.begin());
                    RingElement e = factor_differential(r.group, i, P[i]);
                    if (tail % 2 == 1)
                        e = -e;
                    d.at(row, col) += e;
                }
                tail += P[i];
            }
        }
        r.boundaries.push_back(std::move(d));
    }
    return r;
}

Resolution quaternion_resolution(const GroupSpec& spec, int top)
{
    Resolution r;
    r.spec = spec;
    r.group = make_group(spec);
    r.top = top;
    const GroupPtr& G = r.group;
    const std::int64_t n = spec.quaternion_n;
    auto el = [&](std::int64_t i, std::int64_t j) { return RingElement::monomial(G, GroupElement{{i, j}}); };
    const RingElement one = RingElement::one(G);
    const RingElement x = el(1, 0);
    const RingElement y = el(0, 1);
    const RingElement xy = el(1, 1);

    RingMatrix d1(G, 2, 1);
    d1.at(0, 0) = x - one;
    d1.at(1, 0) = y - one;

    RingMatrix d2(G, 2, 2);
    d2.at(0, 0) = geometric_sum(G, 0, 2 * n);
    d2.at(0, 1) = -y - one;
    d2.at(1, 0) = xy + one;
    d2.at(1, 1) = x - one;

    RingMatrix d3(G, 1, 2);
    d3.at(0, 0) = x - one;
    d3.at(0, 1) = one - xy;

    RingMatrix d4(G, 1, 1);
    d4.at(0, 0) = norm_element(G);

    const RingMatrix period[4] = {d4, d1, d2, d3}; // index = degree mod 4
    auto rank_of = [](int deg) -> std::size_t {
        if (deg == 0)
            return 1;
        int m = deg % 4;
        return (m == 1 || m == 2) ? 2 : 1;
    };
    for (int deg = 0; deg <= top; ++deg) {
        r.ranks.push_back(rank_of(deg));
        r.labels.emplace_back(r.ranks.back(), Multidegree{deg});
    }
    r.boundaries.emplace_back(G, 1, 0);
    for (int deg = 1; deg <= top; ++deg)
        r.boundaries.push_back(period[deg % 4]);
    return r;
}

} // namespace

Resolution standard_resolution(const GroupSpec& g, int top)
{
    if (top < 1)
        throw InvalidArgument("resolution needs top degree >= 1");
    Resolution r = g.kind == GroupKind::Quaternion ? quaternion_resolution(g, top) : abelian_resolution(g, top);
    check_consistency(check_d_squared(r), "d o d != 0 in resolution of " + g.label());
    return r;
}

bool check_d_squared(const Resolution& r)
{
    for (int i = 2; i <= r.top; ++i)
        if (!(r.boundary(i) * r.boundary(i - 1)).is_zero())
            return false;
    return true;
}

IntMatrix expand_over_z(const RingMatrix& m)
{
    const GroupPtr& G = m.group();
    const auto& els = G->elements();
    const std::size_t order = els.size();
    IntMatrix out(m.rows() * order, m.cols() * order);
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t gi = 0; gi < order; ++gi) {
            const std::size_t row = i * order + gi;
            for (std::size_t j = 0; j < m.cols(); ++j)
                for (const auto& [h, c] : m.at(i, j).terms())
                    out.at(row, j * order + G->index_of(G->multiply(els[gi], h))) += c;
        }
    return out;
}

bool check_exact(const Resolution& r)
{
    if (!r.spec.is_finite())
        throw InvalidArgument("exactness check needs a finite group");
    const std::size_t order = r.group->elements().size();
    std::vector<std::size_t> rk(static_cast<std::size_t>(r.top) + 2, 0);
    // augmentation C_0 -> Z has rank 1
    rk[0] = 1;
    for (int i = 1; i <= r.top; ++i)
        rk[static_cast<std::size_t>(i)] = integer_rank(expand_over_z(r.boundary(i)));
    for (int i = 0; i < r.top; ++i) {
        const std::size_t kernel = r.rank(i) * order - rk[static_cast<std::size_t>(i)];
        if (kernel != rk[static_cast<std::size_t>(i) + 1])
            return false;
    }
    return true;
}

IntegerComplex apply_coefficients(const Resolution& r, std::int64_t modulus)
{
    if (modulus < 0 || modulus == 1)
        throw InvalidArgument("coefficient modulus must be 0 or >= 2");
    IntegerComplex c;
    c.modulus = modulus;
    c.ranks = r.ranks;
    for (int n = 0; n <= r.top; ++n)
        c.labels.push_back(r.basis_labels(n));
    c.boundaries.emplace_back(0, r.ranks[0]);
    for (int n = 1; n <= r.top; ++n) {
        const auto& d = r.boundary(n);
        IntMatrix b(d.cols(), d.rows());
        for (std::size_t i = 0; i < d.rows(); ++i)
            for (std::size_t j = 0; j < d.cols(); ++j)
                b.at(j, i) = augment(d.at(i, j), modulus);
        c.boundaries.push_back(std::move(b));
    }
    return c;
}

Presentation dualize_degree2(const Resolution& r)
{
    const auto& d2 = r.boundary(2);
    Presentation p;
    p.group = r.group;
    p.generators = d2.rows();
    p.relations = conj_transpose(d2);
    return p;
}

IntMatrix quotient_chain_map(const Resolution& source, const Resolution& target, const GroupHom& phi, int degree)
{
    if (!source.spec.is_abelian() || !target.spec.is_abelian())
        throw InvalidArgument("quotient chain maps are defined for abelian groups");
    if (phi.factor_map.size() != source.spec.factors.size())
        throw InvalidArgument("quotient chain map needs a coordinatewise reduction");
    if (!(*phi.source == *source.group) || !(*phi.target == *target.group))
        throw InvalidArgument("homomorphism does not match the resolutions");
    const auto& src = source.labels.at(static_cast<std::size_t>(degree));
    IntMatrix m(target.rank(degree), src.size());
    for (std::size_t col = 0; col < src.size(); ++col) {
        const auto& P = src[col];
        Multidegree Q(target.spec.factors.size(), 0);
        Integer scalar = 1;
        for (std::size_t i = 0; i < P.size() && scalar != 0; ++i) {
            const auto M = source.spec.factors[i];
            const auto& slot = phi.factor_map[i];
            if (!slot) {
                if (P[i] != 0)
                    scalar = 0;
                continue;
            }
            Q[*slot] = P[i];
            const auto Mp = target.spec.factors[*slot];
            if (M == kInfiniteOrder) {
                if (Mp != kInfiniteOrder && P[i] > 1)
                    scalar = 0;
                continue;
            }
            Integer ratio = static_cast<long>(M / Mp);
            Integer s;
            mpz_pow_ui(s.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(P[i] / 2));
            scalar *= s;
        }
        if (scalar != 0)
            m.at(target.index_of(Q), col) = scalar;
    }
    return m;
}

nlohmann::json to_json(const Resolution& r)
{
    nlohmann::json j;
    j["group"] = r.spec.label();
    j["top"] = r.top;
    j["ranks"] = r.ranks;
    nlohmann::json ds = nlohmann::json::array();
    for (int n = 1; n <= r.top; ++n) {
        nlohmann::json d;
        d["degree"] = n;
        d["labels"] = r.basis_labels(n);
        nlohmann::json entries = nlohmann::json::array();
        const auto& m = r.boundary(n);
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t k = 0; k < m.cols(); ++k)
                if (!m.at(i, k).is_zero())
                    entries.push_back({{"row", i}, {"col", k}, {"value", render(m.at(i, k))}});
        d["entries"] = entries;
        ds.push_back(d);
    }
    j["boundaries"] = ds;
    return j;
}

} // namespace olab
