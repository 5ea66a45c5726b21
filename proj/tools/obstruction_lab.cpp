#include "olab/amap.hpp"
#include "olab/errors.hpp"
#include "olab/gamma.hpp"
#include "olab/report.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>

using namespace olab;
using nlohmann::json;

namespace {

struct Flags {
    bool as_json = false;
    int max_quotient_exponent = -1;
    std::int64_t max_support = 8;
};

EvennessOptions evenness_options(const Flags& f)
{
    EvennessOptions o;
    o.window = f.max_support;
    o.max_quotient_exponent = f.max_quotient_exponent;
    return o;
}

std::int64_t parse_coefficients(const std::string& s)
{
    if (s == "Z")
        return 0;
    if (s == "Z2")
        return 2;
    std::string digits = s.rfind("Z/", 0) == 0 ? s.substr(2) : (s.rfind('Z', 0) == 0 ? s.substr(1) : "");
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("coefficients must be Z, Z2 or Z<m>, got '" + s + "'");
    std::int64_t m = std::stoll(digits);
    if (m < 2)
        throw ParseError("coefficient modulus must be at least 2");
    return m;
}

RingElement parse_entry(const GroupPtr& g, const json& e)
{
    if (e.is_string())
        return parse_ring_element(g, e.get<std::string>());
    if (e.is_number_integer())
        return RingElement::scalar(g, Integer(e.get<long>()));
    if (!e.is_array())
        throw ParseError("form entry must be a string or a list of [coefficient, token] pairs");
    RingElement r(g);
    for (const auto& term : e) {
        if (!term.is_array() || term.size() != 2 || !term[0].is_number_integer() || !term[1].is_string())
            throw ParseError("form term must be [coefficient, token]");
        r.add_term(g->parse_element(term[1].get<std::string>()), Integer(term[0].get<long>()));
    }
    return r;
}

RingMatrix parse_matrix(const GroupPtr& g, const json& rows, std::size_t cols, const char* what)
{
    if (!rows.is_array())
        throw ParseError(std::string(what) + " must be a list of rows");
    RingMatrix m(g, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (!rows[i].is_array() || rows[i].size() != cols)
            throw ParseError(std::string(what) + " row " + std::to_string(i) + " must have " + std::to_string(cols) +
                             " entries");
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = parse_entry(g, rows[i][j]);
    }
    return m;
}

FormMatrix load_form(const GroupSpec& spec, const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open form file '" + path + "'");
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(std::string("form file: ") + e.what());
    }
    if (!j.contains("generators") || !j.contains("form"))
        throw ParseError("form file needs 'generators' and 'form'");
    GroupPtr g = make_group(spec);
    FPModule m;
    m.group = g;
    m.generators = j.at("generators").get<std::size_t>();
    m.relations = parse_matrix(g, j.value("relations", json::array()), m.generators, "relations");
    return FormMatrix{m, parse_matrix(g, j.at("form"), m.generators, "form")};
}

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_homology(const GroupSpec& g, const std::string& coeff, int degree, const Flags& f)
{
    const std::int64_t m = parse_coefficients(coeff);
    if (degree < 0 || degree > 12)
        throw InvalidArgument("degree must lie in 0..12");
    auto res = standard_resolution(g, degree + 1);
    auto h = homology_at(apply_coefficients(res, m), degree);
    if (f.as_json)
        print_json(homology_json(g, h));
    else
        std::cout << "H_" << degree << "(" << g.label() << "; " << (m == 0 ? "Z" : "Z/" + std::to_string(m))
                  << ") = " << h.describe() << "\n";
    return 0;
}

int cmd_d2(const GroupSpec& g, int degree, const Flags& f)
{
    if (degree != 4 && degree != 5)
        throw InvalidArgument("d2 degree must be 4 or 5");
    D2Map d = d2_differential(strip_odd_part(g), degree);
    json j = d2_json(d);
    j["group"] = g.label();
    j["reduced_group"] = d.group.label();
    if (f.as_json) {
        print_json(j);
        return 0;
    }
    std::cout << "d2_{" << degree << ",0} = Sq_2 o red_2 on " << d.group.label() << " [" << j["tag"].get<std::string>()
              << "]\n";
    std::cout << "source H_" << degree << "(Z) = " << d.source.describe() << "\n";
    for (const auto& s : j["source_generators"])
        std::cout << "  " << s.get<std::string>() << "\n";
    std::cout << "target basis of H_" << degree - 2 << "(Z/2):";
    for (const auto& s : j["target_basis"])
        std::cout << " " << s.get<std::string>();
    std::cout << "\nmatrix (target x source):\n";
    for (const auto& row : j["matrix"]) {
        std::cout << " ";
        for (const auto& v : row)
            std::cout << " " << v.get<int>();
        std::cout << "\n";
    }
    std::cout << "kernel = " << j["kernel"].get<std::string>() << "\n";
    return 0;
}

json amap_json(const GroupSpec& g, const Flags& f)
{
    AMapContext ctx(strip_odd_part(g), evenness_options(f));
    KernelOfA k = kernel_of_A(ctx);
    json j;
    j["group"] = g.label();
    j["reduced_group"] = ctx.spec().label();
    j["h3_dim"] = k.h3_dim;
    j["h3_basis"] = k.h3_basis;
    json classes = json::array();
    for (const auto& c : k.classes) {
        std::vector<std::vector<std::string>> form = render(ctx.a_of_class(c.coords).entries);
        classes.push_back({{"coords", std::vector<int>(c.coords.begin(), c.coords.end())},
                           {"label", c.label},
                           {"form", form},
                           {"verdict", to_string(c.verdict.kind)},
                           {"witness_or_certificate", verdict_json(c.verdict)}});
    }
    j["classes"] = classes;
    std::vector<std::vector<int>> kernel;
    for (const auto& v : k.kernel_basis)
        kernel.emplace_back(v.begin(), v.end());
    j["kernel_basis"] = kernel;
    j["undecided"] = k.undecided;
    return j;
}

int cmd_amap(const GroupSpec& g, const Flags& f)
{
    json j = amap_json(g, f);
    if (f.as_json) {
        print_json(j);
        return 0;
    }
    std::cout << "A : H_3(" << j["reduced_group"].get<std::string>() << "; Z/2) -> Tate, dim H_3 = "
              << j["h3_dim"].get<std::size_t>() << "\n";
    for (const auto& c : j["classes"])
        std::cout << "  " << c["label"].get<std::string>() << ": " << c["verdict"].get<std::string>() << "\n";
    std::cout << "kernel dimension = " << j["kernel_basis"].size() << "\n";
    return 0;
}

int cmd_evenness(const GroupSpec& g, const std::string& path, const Flags& f)
{
    FormMatrix l = load_form(g, path);
    if (!is_hermitian(l))
        throw InvalidArgument("form is not hermitian");
    if (!is_well_defined(l))
        throw InvalidArgument("form does not descend to the presented module");
    TateVerdict v = decide_even(l, evenness_options(f));
    if (v.is_even())
        check_consistency(verify_witness(*v.witness, l), "evenness witness failed verification");
    json j = verdict_json(v);
    j["group"] = g.label();
    j["verdict"] = to_string(v.kind);
    if (f.as_json)
        print_json(j);
    else {
        std::cout << to_string(v.kind);
        if (v.is_even())
            std::cout << ", witness Q = " << j["witness"].dump();
        else if (!v.detail.empty())
            std::cout << ": " << v.detail;
        std::cout << "\n";
    }
    return 0;
}

void print_condition_text(const SecondaryReport& r)
{
    std::cout << "group " << r.group << " (2-primary part " << r.reduced_group << ")\n";
    std::cout << "dim H_3(;Z/2) = " << r.h3_dim << ", dim im d2_{5,0} = " << r.image_basis.size()
              << ", dim ker A = " << r.kernel_basis.size() << "\n";
    for (const auto& c : r.classes)
        std::cout << "  " << c.label << ": " << c.verdict << "\n";
    std::cout << "condition holds: " << r.condition_holds << "\n";
    for (const auto& i : r.ingredients)
        std::cout << "  [" << i.tag << "] " << i.fact << "\n";
}

void print_tertiary_text(const TertiaryReport& t)
{
    std::cout << "group " << t.group << ": " << t.criterion << " [" << t.tag << "]\n";
    std::cout << "target " << t.target_description << "\n";
    if (t.gamma_rank > 0)
        std::cout << "ker d_2 rank " << t.lattice_rank << ", Gamma rank " << t.gamma_rank << ", coinvariants "
                  << t.coinvariants << "\n";
    for (const auto& n : t.notes)
        std::cout << "  " << n << "\n";
}

void print_ahss_text(const AHSSReport& a)
{
    std::cout << "AHSS for " << a.group << " (2-primary part " << a.reduced_group << ")\n";
    for (int q = 4; q >= 0; --q) {
        std::cout << "  q=" << q << ":";
        for (const auto& e : a.e2)
            if (e.q == q)
                std::cout << "  " << e.value;
        std::cout << "\n";
    }
    for (const auto& d : a.differentials)
        std::cout << "  " << d.name << " [" << d.tag << "]\n";
    for (const auto& p : a.pieces)
        std::cout << "  " << p.name << " = " << p.value << " [" << p.tag << "]" << (p.note.empty() ? "" : " " + p.note)
                  << "\n";
    std::cout << "  " << a.d3_status << "\n  " << a.extension_note << "\n";
}

int cmd_report(const GroupSpec& g, const Flags& f)
{
    json j;
    j["group"] = g.label();
    j["homology"] = homology_table(g, 5);
    GroupSpec reduced = strip_odd_part(g);
    json d2 = json::array();
    for (int p : {4, 5}) {
        if (!reduced.is_abelian() && p == 4)
            continue;
        d2.push_back(d2_json(d2_differential(reduced, p)));
    }
    j["d2"] = d2;
    SecondaryReport cond = check_condition(g, evenness_options(f));
    TertiaryReport ter = verify_tertiary(g);
    AHSSReport ahss = ahss_report(g);
    j["condition"] = cond;
    j["tertiary"] = ter;
    j["ahss"] = ahss;
    if (f.as_json) {
        print_json(j);
        return 0;
    }
    for (const auto& e : j["homology"])
        std::cout << "H_" << e["degree"].get<int>() << "(" << g.label() << "; " << e["coefficients"].get<std::string>()
                  << ") = " << e["value"].get<std::string>() << "\n";
    print_condition_text(cond);
    print_tertiary_text(ter);
    print_ahss_text(ahss);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"obstruction-lab: group homology, Sq_2 o red_2, the map A and evenness of hermitian forms"};
    app.require_subcommand(1);
    Flags flags;
    app.add_flag("--json", flags.as_json, "emit JSON");
    app.add_option("--max-quotient-exponent", flags.max_quotient_exponent, "largest m for Z -> Z/2^m certificates")
        ->check(CLI::Range(0, 30));
    app.add_option("--max-support", flags.max_support, "support window in the Z coordinate")
        ->check(CLI::Range(std::int64_t{0}, std::int64_t{64}));

    std::string group_text, coefficients = "Z", form_path;
    int degree = 0;
    auto add = [&](const char* name, const char* help) {
        auto* s = app.add_subcommand(name, help);
        s->add_option("group", group_text, "group, e.g. \"Z x Z/2\", \"Z/4 x Z/2\", \"Q8\"")->required();
        s->fallthrough();
        return s;
    };
    auto* homology = add("homology", "group homology in one degree");
    homology->add_option("--coefficients", coefficients, "Z, Z2 or Z<m>");
    homology->add_option("--degree", degree, "degree")->required();
    auto* d2 = add("d2", "the differential Sq_2 o red_2 out of H_4 or H_5");
    d2->add_option("--degree", degree, "4 or 5")->required();
    auto* amap = add("amap", "A on every nonzero class of H_3(;Z/2)");
    auto* evenness = add("evenness", "decide evenness of a hermitian form");
    evenness->add_option("--form", form_path, "form JSON file")->required();
    auto* condition = add("condition", "exactness of H_5(Z) -> H_3(Z/2) -> Tate");
    auto* tertiary = add("tertiary", "torsion criterion for the tertiary invariant");
    auto* ahss = add("ahss", "Atiyah-Hirzebruch skeleton in total degree 4");
    auto* report = add("report", "all of the above");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const GroupSpec g = parse_group_spec(group_text);
        if (*homology)
            return cmd_homology(g, coefficients, degree, flags);
        if (*d2)
            return cmd_d2(g, degree, flags);
        if (*amap)
            return cmd_amap(g, flags);
        if (*evenness)
            return cmd_evenness(g, form_path, flags);
        if (*condition) {
            SecondaryReport r = check_condition(g, evenness_options(flags));
            if (flags.as_json)
                print_json(json(r));
            else
                print_condition_text(r);
            return 0;
        }
        if (*tertiary) {
            TertiaryReport t = verify_tertiary(g);
            if (flags.as_json)
                print_json(json(t));
            else
                print_tertiary_text(t);
            return 0;
        }
        if (*ahss) {
            AHSSReport a = ahss_report(g);
            if (flags.as_json)
                print_json(json(a));
            else
                print_ahss_text(a);
            return 0;
        }
        if (*report)
            return cmd_report(g, flags);
    } catch (const UnsupportedGroup& e) {
        std::cerr << "unsupported group: " << e.what() << "\n";
        return 3;
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 4;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const InvalidArgument& e) {
        std::cerr << "invalid argument: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
