#include "olab/forms.hpp"

#include "olab/errors.hpp"

namespace olab {

bool FPModule::operator==(const FPModule& other) const
{
    return group && other.group && *group == *other.group && generators == other.generators &&
           relations == other.relations;
}

FPModule module_from_presentation(const Presentation& p)
{
    return FPModule{p.group, p.generators, p.relations};
}

bool is_hermitian(const FormMatrix& l)
{
    return l.entries.rows() == l.entries.cols() && l.entries == conj_transpose(l.entries);
}

bool is_well_defined(const FormMatrix& l)
{
    const auto& r = l.module.relations;
    if (l.entries.rows() != l.module.generators || l.entries.cols() != l.module.generators)
        return false;
    if (r.rows() == 0)
        return true;
    return (r * l.entries).is_zero() && (l.entries * conj_transpose(r)).is_zero();
}

bool is_weakly_even(const std::vector<RingElement>& w, const FPModule& module)
{
    if (w.size() != module.generators)
        throw InvalidArgument("weakly-even test: vector length does not match the module");
    for (const auto& x : w)
        if (augment(x, 2) != 0)
            return false;
    const auto& r = module.relations;
    for (std::size_t k = 0; k < r.rows(); ++k) {
        RingElement pairing(module.group);
        for (std::size_t j = 0; j < w.size(); ++j)
            pairing += r.at(k, j) * involute(w[j]);
        if (augment(pairing, 2) != 0)
            return false;
    }
    return true;
}

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::Even:
        return "Even";
    case Verdict::Odd:
        return "Odd";
    case Verdict::Undecided:
        break;
    }
    return "Undecided";
}

int default_quotient_exponent(const GroupSpec& g)
{
    int k = 0;
    for (auto n : g.factors) {
        if (n == kInfiniteOrder)
            continue;
        int e = 0;
        while (n % 2 == 0) {
            n /= 2;
            ++e;
        }
        k = std::max(k, e);
    }
    return k + 2;
}

// ---------------------------------------------------------------------------
// EvennessSolver

EvennessSolver::EvennessSolver(FPModule module, std::int64_t window)
    : module_(std::move(module)), window_(window), finite_(module_.group->spec().is_finite())
{
    const GroupPtr& G = module_.group;
    const std::size_t g = module_.generators;
    if (module_.relations.cols() != g)
        throw InvalidArgument("relation matrix width does not match generator count");
    rdag_ = conj_transpose(module_.relations);

    const auto support = G->window(window_);
    for (std::size_t i = 0; i < g; ++i)
        for (std::size_t j = i; j < g; ++j)
            for (const auto& h : support) {
                if (i == j) {
                    auto hinv = G->inverse(h);
                    if (!(h < hinv))
                        continue; // involutions are fixed; pairs counted once
                }
                vars_.push_back(Var{i, j, h});
            }

    // column contributions to Q R^dagger
    std::vector<std::vector<std::pair<std::size_t, Integer>>> columns(vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        RingMatrix prod = pattern(vars_[v]) * rdag_;
        for (std::size_t i = 0; i < prod.rows(); ++i)
            for (std::size_t k = 0; k < prod.cols(); ++k)
                for (const auto& [h, c] : prod.at(i, k).terms()) {
                    auto [it, inserted] = keys_.try_emplace(Key{i, k, h}, keys_.size());
                    columns[v].emplace_back(it->second, c);
                }
    }
    IntMatrix a(keys_.size(), vars_.size());
    for (std::size_t v = 0; v < vars_.size(); ++v)
        for (const auto& [row, c] : columns[v])
            a.at(row, v) += c;
    snf_ = smith_normal_form(a, {true, false});
}

RingMatrix EvennessSolver::pattern(const Var& v) const
{
    const GroupPtr& G = module_.group;
    RingMatrix p(G, module_.generators, module_.generators);
    if (v.i == v.j) {
        p.at(v.i, v.i).add_term(v.h, 1);
        p.at(v.i, v.i).add_term(G->inverse(v.h), -1);
    } else {
        p.at(v.i, v.j).add_term(v.h, 1);
        p.at(v.j, v.i).add_term(G->inverse(v.h), -1);
    }
    return p;
}

void EvennessSolver::verify(const RingMatrix& q, const RingMatrix& l) const
{
    check_consistency(q + conj_transpose(q) == l, "evenness witness fails Q + Q^dagger = L");
    check_consistency((q * rdag_).is_zero(), "evenness witness fails Q R^dagger = 0");
    check_consistency((module_.relations * q).is_zero(), "evenness witness fails R Q = 0");
}

TateVerdict EvennessSolver::decide(const RingMatrix& l) const
{
    const GroupPtr& G = module_.group;
    const std::size_t g = module_.generators;
    FormMatrix form{module_, l};
    if (l.rows() != g || l.cols() != g)
        throw InvalidArgument("form size does not match the module");
    if (!is_hermitian(form))
        throw InvalidArgument("form is not hermitian");
    if (!is_well_defined(form))
        throw InvalidArgument("form is not well defined on the module");

    TateVerdict verdict;
    verdict.window = finite_ ? 0 : window_;

    // particular solution of Q + Q^dagger = L
    RingMatrix q0(G, g, g);
    for (std::size_t i = 0; i < g; ++i) {
        for (std::size_t j = 0; j < i; ++j)
            q0.at(i, j) = l.at(i, j);
        for (const auto& [h, c] : l.at(i, i).terms()) {
            auto hinv = G->inverse(h);
            if (h == hinv) {
                if (!mpz_divisible_ui_p(c.get_mpz_t(), 2)) {
                    verdict.kind = Verdict::Odd;
                    verdict.certificate = "integer-infeasible";
                    verdict.detail = "diagonal entry " + std::to_string(i) + " has odd coefficient " + c.get_str() +
                                     " at the involution " + G->render(h);
                    return verdict;
                }
                Integer half;
                mpz_divexact_ui(half.get_mpz_t(), c.get_mpz_t(), 2);
                q0.at(i, i).add_term(h, half);
            } else if (hinv < h) {
                q0.at(i, i).add_term(h, c);
            }
        }
    }

    std::vector<Integer> b(keys_.size());
    RingMatrix rest = q0 * rdag_;
    bool outside = false;
    for (std::size_t i = 0; i < rest.rows(); ++i)
        for (std::size_t k = 0; k < rest.cols(); ++k)
            for (const auto& [h, c] : rest.at(i, k).terms()) {
                auto it = keys_.find(Key{i, k, h});
                if (it == keys_.end())
                    outside = true;
                else
                    b[it->second] = -c;
            }

    auto infeasible = [&](const std::string& why) {
        if (finite_) {
            verdict.kind = Verdict::Odd;
            verdict.certificate = "integer-infeasible";
            verdict.detail = why;
        } else {
            verdict.kind = Verdict::Undecided;
            verdict.detail = "no witness with support in window " + std::to_string(window_);
        }
        return verdict;
    };

    if (outside)
        return infeasible("constraint outside the span of the unknowns is violated");

    // U b, accumulated over the nonzero entries of b
    const IntMatrix& U = snf_.U;
    std::vector<Integer> ub(U.rows());
    for (std::size_t j = 0; j < b.size(); ++j) {
        if (b[j] == 0)
            continue;
        for (std::size_t i = 0; i < U.rows(); ++i)
            if (U.at(i, j) != 0)
                mpz_addmul(ub[i].get_mpz_t(), U.at(i, j).get_mpz_t(), b[j].get_mpz_t());
    }
    std::vector<Integer> y(vars_.size());
    for (std::size_t i = 0; i < ub.size(); ++i) {
        if (i < snf_.rank) {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), snf_.diagonal[i].get_mpz_t()))
                return infeasible("Smith invariant " + snf_.diagonal[i].get_str() + " does not divide the right-hand side");
            mpz_divexact(y[i].get_mpz_t(), ub[i].get_mpz_t(), snf_.diagonal[i].get_mpz_t());
        } else if (ub[i] != 0) {
            return infeasible("right-hand side has a component outside the image");
        }
    }
    auto x = snf_.V * y;

    RingMatrix q = q0;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
        if (x[v] == 0)
            continue;
        const auto& var = vars_[v];
        if (var.i == var.j) {
            q.at(var.i, var.i).add_term(var.h, x[v]);
            q.at(var.i, var.i).add_term(G->inverse(var.h), -x[v]);
        } else {
            q.at(var.i, var.j).add_term(var.h, x[v]);
            q.at(var.j, var.i).add_term(G->inverse(var.h), -x[v]);
        }
    }
    verify(q, l);
    verdict.kind = Verdict::Even;
    verdict.witness = std::move(q);
    return verdict;
}

// ---------------------------------------------------------------------------
// EvennessDecider

EvennessDecider::EvennessDecider(FPModule module, EvennessOptions opts)
    : module_(module), opts_(opts),
      max_exp_(opts.max_quotient_exponent >= 0 ? opts.max_quotient_exponent
                                               : default_quotient_exponent(module.group->spec())),
      solver_(std::move(module), opts.window)
{
}

const EvennessSolver& EvennessDecider::quotient_solver(int m) const
{
    auto it = quotients_.find(m);
    if (it == quotients_.end()) {
        const auto& spec = module_.group->spec();
        std::vector<std::int64_t> orders = spec.factors;
        orders[*spec.infinite_factor()] = std::int64_t{1} << m;
        GroupHom phi = quotient_surjection(spec, orders);
        FPModule pushed{phi.target, module_.generators, pushforward(module_.relations, phi)};
        auto solver = std::make_unique<EvennessSolver>(std::move(pushed), 0);
        it = quotients_.emplace(m, std::make_pair(std::move(phi), std::move(solver))).first;
    }
    return *it->second.second;
}

TateVerdict EvennessDecider::decide(const RingMatrix& l) const
{
    TateVerdict v = solver_.decide(l);
    v.max_quotient_exponent = module_.group->spec().is_finite() ? 0 : max_exp_;
    if (v.kind != Verdict::Undecided)
        return v;
    const auto& spec = module_.group->spec();
    for (int m = 1; m <= max_exp_; ++m) {
        const auto& solver = quotient_solver(m);
        const GroupHom& phi = quotients_.at(m).first;
        TateVerdict pushed = solver.decide(pushforward(l, phi));
        if (pushed.is_odd()) {
            TateVerdict odd;
            odd.kind = Verdict::Odd;
            odd.certificate = "quotient-odd";
            odd.detail = "pushforward to " + phi.target->label() + " is odd: " + pushed.detail;
            odd.quotient = phi;
            odd.window = opts_.window;
            odd.max_quotient_exponent = max_exp_;
            return odd;
        }
    }
    v.detail = "no witness with support in window " + std::to_string(opts_.window) +
               " and every quotient of " + spec.label() + " up to exponent " + std::to_string(max_exp_) + " is even";
    return v;
}

TateVerdict decide_even(const FormMatrix& l, const EvennessOptions& opts)
{
    return EvennessDecider(l.module, opts).decide(l.entries);
}

TateVerdict tate_equal(const FormMatrix& l1, const FormMatrix& l2, const EvennessOptions& opts)
{
    if (!(l1.module == l2.module))
        throw InvalidArgument("tate_equal: forms live on different modules");
    return decide_even(FormMatrix{l1.module, l1.entries - l2.entries}, opts);
}

bool verify_witness(const RingMatrix& q, const FormMatrix& l)
{
    const auto& r = l.module.relations;
    if (!(q + conj_transpose(q) == l.entries))
        return false;
    if (r.rows() == 0)
        return true;
    return (q * conj_transpose(r)).is_zero() && (r * q).is_zero();
}

} // namespace olab
