#include "olab/report.hpp"

#include "olab/errors.hpp"

namespace olab {

namespace {

std::string coefficient_name(std::int64_t modulus)
{
    return modulus == 0 ? "Z" : "Z/" + std::to_string(modulus);
}

std::string chain_combination(const std::vector<Integer>& c, const std::vector<std::string>& labels)
{
    std::string out;
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0)
            continue;
        const bool neg = c[i] < 0;
        Integer mag = abs(c[i]);
        if (out.empty())
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (mag != 1)
            out += mag.get_str() + "*";
        out += labels[i];
    }
    return out.empty() ? "0" : out;
}

std::vector<std::string> summand_labels(const HomologyResult& h)
{
    std::vector<std::string> out;
    for (std::size_t k = 0; k < h.num_summands(); ++k) {
        std::string order = h.orders[k] == 0 ? "Z" : "Z/" + h.orders[k].get_str();
        out.push_back(chain_combination(h.lifts.column(k), h.chain_labels) + " (" + order + ")");
    }
    return out;
}

std::vector<std::vector<int>> to_rows(const F2Matrix& m)
{
    std::vector<std::vector<int>> rows(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            rows[i].push_back(m.at(i, j));
    return rows;
}

std::string elementary(std::size_t k)
{
    if (k == 0)
        return "0";
    return k == 1 ? "Z/2" : "(Z/2)^" + std::to_string(k);
}

DifferentialEntry d2_entry(const std::string& name, const D2Map& d)
{
    return DifferentialEntry{name, summand_labels(d.source), d.target.chain_labels, to_rows(d.matrix),
                             to_string(d.provenance)};
}

F2Matrix reduce_to_f2(const IntMatrix& m)
{
    F2Matrix f(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            f.at(i, j) = static_cast<std::uint8_t>(mpz_odd_p(m.at(i, j).get_mpz_t()) ? 1 : 0);
    return f;
}

} // namespace

D3QuotientCheck d3_quotient_check(const GroupSpec& g, const std::vector<std::int64_t>& new_orders)
{
    if (!g.is_abelian() || !g.is_finite() || !g.is_two_group())
        throw InvalidArgument("the quotient argument needs a finite abelian 2-group");
    D3QuotientCheck out;
    GroupHom phi = quotient_surjection(g, new_orders);
    const GroupSpec target_spec = phi.target->spec();
    out.quotient = target_spec.label();
    out.applies = true;

    auto res = standard_resolution(g, 6);
    auto res_q = standard_resolution(target_spec, 6);
    phi.source = res.group;
    phi.target = res_q.group;

    // p_* on ker d2_{5,0}
    D2Map d = d2_differential(g, 5);
    auto hq = homology_at(apply_coefficients(res_q, 0), 5);
    IntMatrix map5 = quotient_chain_map(res, res_q, phi, 5);
    out.kills_kernel = true;
    for (const auto& gen : d.kernel_generators()) {
        std::vector<Integer> chain(d.source.lifts.rows());
        for (std::size_t k = 0; k < gen.size(); ++k)
            for (std::size_t i = 0; i < chain.size(); ++i)
                chain[i] += gen[k] * d.source.lifts.at(i, k);
        for (const auto& v : hq.express(map5 * chain))
            if (v != 0)
                out.kills_kernel = false;
    }

    // p_* on H_2(;Z/2) / im d2_{4,1}
    F2Matrix m2 = reduce_to_f2(quotient_chain_map(res, res_q, phi, 2));
    auto w = f2_span_basis(sq2_dual(g, 4).column_list(), res.rank(2));
    auto wq = f2_span_basis(sq2_dual(target_spec, 4).column_list(), res_q.rank(2));
    F2Matrix stacked(m2.rows(), m2.cols() + wq.size());
    for (std::size_t i = 0; i < m2.rows(); ++i) {
        for (std::size_t j = 0; j < m2.cols(); ++j)
            stacked.at(i, j) = m2.at(i, j);
        for (std::size_t j = 0; j < wq.size(); ++j)
            stacked.at(i, m2.cols() + j) = wq[j][i];
    }
    out.injective_e22 = true;
    for (const auto& k : f2_kernel(stacked)) {
        F2Vector x(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(m2.cols()));
        if (!f2_in_span(w, x, res.rank(2)))
            out.injective_e22 = false;
    }
    return out;
}

std::vector<D3QuotientCheck> d3_quotient_checks(const GroupSpec& g)
{
    std::vector<D3QuotientCheck> out;
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        std::vector<std::int64_t> orders = g.factors;
        orders[i] /= 2;
        out.push_back(d3_quotient_check(g, orders));
    }
    return out;
}

AHSSReport ahss_report(const GroupSpec& g)
{
    AHSSReport a;
    a.group = g.label();
    const GroupSpec reduced = strip_odd_part(g);
    a.reduced_group = reduced.label();

    auto res = standard_resolution(g, 6);
    auto cz = apply_coefficients(res, 0);
    auto c2 = apply_coefficients(res, 2);
    std::vector<std::string> hz, h2;
    for (int p = 0; p <= 5; ++p) {
        hz.push_back(homology_at(cz, p).describe());
        h2.push_back(homology_at(c2, p).describe());
    }
    for (int q = 0; q <= 4; ++q)
        for (int p = 0; p <= 5; ++p) {
            std::string v;
            switch (q) {
            case 0:
            case 4:
                v = hz[static_cast<std::size_t>(p)];
                break;
            case 1:
            case 2:
                v = h2[static_cast<std::size_t>(p)];
                break;
            default:
                v = "0";
            }
            a.e2.push_back({p, q, v});
        }

    if (reduced.factors.empty() && reduced.is_abelian()) {
        for (const char* name : {"E_{4,0}", "E_{3,1}", "E_{2,2}"})
            a.pieces.push_back({name, "0", "MACHINE_CHECKED", ""});
        a.d3_status = "no differentials in positive degree";
        a.extension_note = "Omega_4^Spin = 16Z, detected by signature/16 (cited result)";
        return a;
    }

    if (reduced.kind == GroupKind::Quaternion) {
        D2Map d5 = d2_differential(reduced, 5);
        a.differentials.push_back(d2_entry("d2_{5,0}", d5));
        auto h4 = homology_at(apply_coefficients(standard_resolution(reduced, 5), 0), 4);
        if (h4.num_summands() == 0)
            a.pieces.push_back({"E_{4,0}", "0", "MACHINE_CHECKED", "H_4(;Z) = 0"});
        else
            a.pieces.push_back(
                {"E_{4,0}", "subgroup of " + h4.describe(), "UNKNOWN", "d2_{4,0} and d3_{4,0} not computed"});
        a.pieces.push_back({"E_{3,1}", elementary(d5.target.num_summands() - f2_rank(d5.matrix)), "PAPER_FACT",
                            "d2_{5,0} = 0"});
        a.pieces.push_back({"E_{2,2}", "0", "PAPER_FACT", "d3_{5,0} is an isomorphism onto E3_{2,2}"});
        a.d3_status = "d3_{5,0} is an isomorphism (PAPER_FACT)";
        a.extension_note = "extension problem not resolved";
        return a;
    }

    D2Map d5 = d2_differential(reduced, 5);
    D2Map d4 = d2_differential(reduced, 4);
    F2Matrix sq41 = sq2_dual(reduced, 4);
    auto reduced_res = standard_resolution(reduced, 5);
    a.differentials.push_back(d2_entry("d2_{5,0}", d5));
    a.differentials.push_back(d2_entry("d2_{4,0}", d4));
    a.differentials.push_back(DifferentialEntry{"d2_{4,1}", reduced_res.basis_labels(4), reduced_res.basis_labels(2),
                                                to_rows(sq41), "MACHINE_CHECKED"});

    // E_{4,0}
    auto ker4 = subgroup_orders(d4.source, d4.kernel_generators());
    a.pieces.push_back({"E_{4,0}", describe_orders(ker4), "MACHINE_CHECKED",
                        "ker d2_{4,0}; d3_{4,0} not computed, so this is an upper bound"});
    // E_{3,1}
    a.pieces.push_back({"E_{3,1}", elementary(d5.target.num_summands() - f2_rank(d5.matrix)), "MACHINE_CHECKED",
                        "H_3(;Z/2) / im d2_{5,0}"});
    // E_{2,2}
    const std::string e22 = elementary(sq41.rows() - f2_rank(sq41));
    auto ker5 = subgroup_orders(d5.source, d5.kernel_generators());
    if (ker5.empty()) {
        a.pieces.push_back({"E_{2,2}", e22, "MACHINE_CHECKED", "H_2(;Z/2) / im d2_{4,1}; ker d2_{5,0} = 0"});
        a.d3_status = "d3_{5,0} vanishes: ker d2_{5,0} = 0";
    } else {
        std::string via;
        if (reduced.is_finite())
            for (const auto& chk : d3_quotient_checks(reduced))
                if (chk.kills_kernel && chk.injective_e22) {
                    via = chk.quotient;
                    break;
                }
        if (!via.empty()) {
            a.pieces.push_back({"E_{2,2}", e22, "MACHINE_CHECKED", "H_2(;Z/2) / im d2_{4,1}"});
            a.d3_status = "d3_{5,0} vanishes on ker d2_{5,0} = " + describe_orders(ker5) + ": the projection to " +
                          via + " kills the kernel and is injective on E3_{2,2}";
        } else {
            a.pieces.push_back({"E_{2,2}", "quotient of " + e22, "UNKNOWN",
                                "d3_{5,0} on ker d2_{5,0} = " + describe_orders(ker5) + " not determined"});
            a.d3_status = "d3_{5,0} not determined";
        }
    }
    if (reduced.factors == std::vector<std::int64_t>{kInfiniteOrder, 2} ||
        reduced.factors == std::vector<std::int64_t>{2, kInfiniteOrder})
        a.extension_note = "reduced group has at most eight elements; total group Z/8 (cited result), "
                           "filtration 0 < Z/2 < Z/4 < Z/8";
    else
        a.extension_note = "extension problem not resolved";
    return a;
}

std::vector<HomologyEntry> homology_table(const GroupSpec& g, int max_degree)
{
    auto res = standard_resolution(g, max_degree + 1);
    std::vector<HomologyEntry> out;
    for (std::int64_t m : {std::int64_t{0}, std::int64_t{2}}) {
        auto c = apply_coefficients(res, m);
        for (int n = 0; n <= max_degree; ++n)
            out.push_back({n, coefficient_name(m), homology_at(c, n).describe()});
    }
    return out;
}

nlohmann::json homology_json(const GroupSpec& g, const HomologyResult& h)
{
    nlohmann::json j;
    j["group"] = g.label();
    j["degree"] = h.degree;
    j["coefficients"] = coefficient_name(h.modulus);
    j["value"] = h.describe();
    j["free_rank"] = h.free_rank;
    std::vector<std::string> torsion;
    for (const auto& t : h.torsion)
        torsion.push_back(t.get_str());
    j["torsion"] = torsion;
    j["chain_basis"] = h.chain_labels;
    j["generators"] = summand_labels(h);
    return j;
}

nlohmann::json d2_json(const D2Map& d)
{
    nlohmann::json j;
    j["group"] = d.group.label();
    j["degree"] = d.degree;
    j["source"] = d.source.describe();
    j["source_generators"] = summand_labels(d.source);
    j["target_basis"] = d.target.chain_labels;
    j["matrix"] = to_rows(d.matrix);
    j["tag"] = to_string(d.provenance);
    std::vector<std::vector<int>> image;
    for (const auto& v : d.image_basis())
        image.emplace_back(v.begin(), v.end());
    j["image_basis"] = image;
    std::vector<std::string> kernel;
    for (const auto& gen : d.kernel_generators()) {
        std::vector<Integer> chain(d.source.lifts.rows());
        for (std::size_t k = 0; k < gen.size(); ++k)
            for (std::size_t i = 0; i < chain.size(); ++i)
                chain[i] += gen[k] * d.source.lifts.at(i, k);
        kernel.push_back(chain_combination(chain, d.source.chain_labels));
    }
    j["kernel_generators"] = kernel;
    j["kernel"] = describe_orders(subgroup_orders(d.source, d.kernel_generators()));
    return j;
}

void to_json(nlohmann::json& j, const E2Entry& x) { j = {{"p", x.p}, {"q", x.q}, {"value", x.value}}; }

void from_json(const nlohmann::json& j, E2Entry& x)
{
    j.at("p").get_to(x.p);
    j.at("q").get_to(x.q);
    j.at("value").get_to(x.value);
}

void to_json(nlohmann::json& j, const DifferentialEntry& x)
{
    j = {{"name", x.name},
         {"source_basis", x.source_basis},
         {"target_basis", x.target_basis},
         {"matrix", x.matrix},
         {"tag", x.tag}};
}

void from_json(const nlohmann::json& j, DifferentialEntry& x)
{
    j.at("name").get_to(x.name);
    j.at("source_basis").get_to(x.source_basis);
    j.at("target_basis").get_to(x.target_basis);
    j.at("matrix").get_to(x.matrix);
    j.at("tag").get_to(x.tag);
}

void to_json(nlohmann::json& j, const GradedPiece& x)
{
    j = {{"name", x.name}, {"value", x.value}, {"tag", x.tag}, {"note", x.note}};
}

void from_json(const nlohmann::json& j, GradedPiece& x)
{
    j.at("name").get_to(x.name);
    j.at("value").get_to(x.value);
    j.at("tag").get_to(x.tag);
    j.at("note").get_to(x.note);
}

void to_json(nlohmann::json& j, const AHSSReport& x)
{
    j = {{"group", x.group},
         {"reduced_group", x.reduced_group},
         {"e2", x.e2},
         {"differentials", x.differentials},
         {"pieces", x.pieces},
         {"d3_status", x.d3_status},
         {"extension_note", x.extension_note}};
}

void from_json(const nlohmann::json& j, AHSSReport& x)
{
    j.at("group").get_to(x.group);
    j.at("reduced_group").get_to(x.reduced_group);
    j.at("e2").get_to(x.e2);
    j.at("differentials").get_to(x.differentials);
    j.at("pieces").get_to(x.pieces);
    j.at("d3_status").get_to(x.d3_status);
    j.at("extension_note").get_to(x.extension_note);
}

void to_json(nlohmann::json& j, const HomologyEntry& x)
{
    j = {{"degree", x.degree}, {"coefficients", x.coefficients}, {"value", x.value}};
}

void from_json(const nlohmann::json& j, HomologyEntry& x)
{
    j.at("degree").get_to(x.degree);
    j.at("coefficients").get_to(x.coefficients);
    j.at("value").get_to(x.value);
}

} // namespace olab
