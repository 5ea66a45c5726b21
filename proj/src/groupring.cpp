#include "olab/groupring.hpp"

#include "olab/errors.hpp"

#include <cctype>

namespace olab {

namespace {

bool same_group(const GroupPtr& a, const GroupPtr& b)
{
    return a == b || (a && b && *a == *b);
}

} // namespace

RingElement RingElement::one(GroupPtr group)
{
    auto id = group->identity();
    return monomial(std::move(group), id, 1);
}

RingElement RingElement::scalar(GroupPtr group, const Integer& c)
{
    auto id = group->identity();
    return monomial(std::move(group), id, c);
}

RingElement RingElement::monomial(GroupPtr group, const GroupElement& g, const Integer& c)
{
    RingElement r(group);
    r.add_term(group->normalize(g), c);
    return r;
}

Integer RingElement::coefficient(const GroupElement& g) const
{
    auto it = terms_.find(g);
    return it == terms_.end() ? Integer(0) : it->second;
}

void RingElement::add_term(const GroupElement& g, const Integer& c)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(g, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

const GroupPtr& RingElement::common_group(const RingElement& other) const
{
    if (group_ && other.group_ && !same_group(group_, other.group_))
        throw InvalidArgument("ring elements over different groups: " + group_->label() + " and " +
                              other.group_->label());
    return group_ ? group_ : other.group_;
}

RingElement& RingElement::operator+=(const RingElement& other)
{
    group_ = common_group(other);
    for (const auto& [g, c] : other.terms_)
        add_term(g, c);
    return *this;
}

RingElement& RingElement::operator-=(const RingElement& other)
{
    group_ = common_group(other);
    for (const auto& [g, c] : other.terms_)
        add_term(g, -c);
    return *this;
}

RingElement& RingElement::operator*=(const Integer& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [g, v] : terms_)
        v *= c;
    return *this;
}

RingElement RingElement::operator-() const
{
    RingElement r = *this;
    for (auto& [g, v] : r.terms_)
        v = -v;
    return r;
}

bool RingElement::operator==(const RingElement& other) const
{
    if (terms_ != other.terms_)
        return false;
    return terms_.empty() || same_group(group_, other.group_);
}

RingElement operator*(const RingElement& a, const RingElement& b)
{
    const GroupPtr& g = a.common_group(b);
    RingElement r(g);
    if (a.is_zero() || b.is_zero())
        return r;
    for (const auto& [x, c] : a.terms_)
        for (const auto& [y, d] : b.terms_)
            r.add_term(g->multiply(x, y), c * d);
    return r;
}

RingElement multiply(const RingElement& a, const RingElement& b) { return a * b; }

RingElement involute(const RingElement& a)
{
    RingElement r(a.group());
    for (const auto& [g, c] : a.terms())
        r.add_term(a.group()->inverse(g), c);
    return r;
}

Integer augment(const RingElement& a, std::int64_t modulus)
{
    Integer s = 0;
    for (const auto& [g, c] : a.terms())
        s += c;
    if (modulus > 0) {
        Integer m = static_cast<long>(modulus);
        s %= m;
        if (s < 0)
            s += m;
    }
    return s;
}

RingElement pushforward(const RingElement& a, const GroupHom& phi)
{
    if (a.group() && !same_group(a.group(), phi.source))
        throw InvalidArgument("pushforward: element is not over " + phi.source->label());
    RingElement r(phi.target);
    for (const auto& [g, c] : a.terms())
        r.add_term(phi.apply(g), c);
    return r;
}

RingElement norm_element(const GroupPtr& g)
{
    RingElement r(g);
    for (const auto& e : g->elements())
        r.add_term(e, 1);
    return r;
}

RingElement factor_norm(const GroupPtr& g, std::size_t factor)
{
    const auto& spec = g->spec();
    if (!spec.is_abelian() || factor >= spec.factors.size() || spec.factors[factor] == kInfiniteOrder)
        throw InvalidArgument("factor_norm needs a finite cyclic factor");
    return geometric_sum(g, factor, spec.factors[factor]);
}

RingElement geometric_sum(const GroupPtr& g, std::size_t gen, std::int64_t k)
{
    RingElement r(g);
    const auto s = g->generator(gen);
    auto p = g->identity();
    for (std::int64_t i = 0; i < k; ++i) {
        r.add_term(p, 1);
        p = g->multiply(p, s);
    }
    return r;
}

RingElement one_minus(const GroupPtr& g, std::size_t gen)
{
    RingElement r = RingElement::one(g);
    r.add_term(g->generator(gen), -1);
    return r;
}

std::string render(const RingElement& a)
{
    if (a.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [g, c] : a.terms()) {
        const bool negative = c < 0;
        Integer mag = abs(c);
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        const bool unit = a.group()->is_identity(g);
        if (unit) {
            out += mag.get_str();
        } else {
            if (mag != 1)
                out += mag.get_str() + "*";
            out += a.group()->render(g);
        }
    }
    return out;
}

RingElement parse_ring_element(const GroupPtr& g, std::string_view text)
{
    RingElement result(g);
    std::size_t pos = 0;
    bool any = false;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    };
    while (true) {
        skip_space();
        if (pos >= text.size())
            break;
        int sign = 1;
        if (text[pos] == '+' || text[pos] == '-') {
            sign = text[pos] == '-' ? -1 : 1;
            ++pos;
            skip_space();
        } else if (any) {
            throw ParseError("expected '+' or '-' in ring element '" + std::string(text) + "'");
        }
        // term runs until the next '+'/'-' that is not an exponent sign
        std::size_t end = pos;
        while (end < text.size()) {
            char c = text[end];
            if ((c == '+' || c == '-') && end > pos) {
                std::size_t back = end;
                while (back > pos && std::isspace(static_cast<unsigned char>(text[back - 1])))
                    --back;
                if (back == pos || text[back - 1] != '^')
                    break;
            }
            ++end;
        }
        std::string_view term = text.substr(pos, end - pos);
        pos = end;
        std::size_t k = 0;
        while (k < term.size() && std::isdigit(static_cast<unsigned char>(term[k])))
            ++k;
        Integer coef = 1;
        if (k > 0)
            coef = Integer(std::string(term.substr(0, k)));
        std::string_view rest = term.substr(k);
        std::size_t r = 0;
        while (r < rest.size() && (std::isspace(static_cast<unsigned char>(rest[r])) || rest[r] == '*'))
            ++r;
        if (k > 0 && r == 0 && !rest.empty())
            throw ParseError("malformed term '" + std::string(term) + "'");
        rest = rest.substr(r);
        while (!rest.empty() && std::isspace(static_cast<unsigned char>(rest.back())))
            rest.remove_suffix(1);
        if (k == 0 && rest.empty())
            throw ParseError("empty term in ring element '" + std::string(text) + "'");
        GroupElement e = rest.empty() ? g->identity() : g->parse_element(rest);
        result.add_term(e, sign * coef);
        any = true;
    }
    if (!any)
        throw ParseError("empty ring element");
    return result;
}

// ---------------------------------------------------------------------------

RingMatrix::RingMatrix(GroupPtr group, std::size_t rows, std::size_t cols)
    : group_(std::move(group)), rows_(rows), cols_(cols), entries_(rows * cols, RingElement(group_))
{
}

RingMatrix RingMatrix::identity(GroupPtr group, std::size_t n)
{
    RingMatrix m(group, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = RingElement::one(group);
    return m;
}

RingMatrix RingMatrix::row(std::size_t i) const
{
    RingMatrix r(group_, 1, cols_);
    for (std::size_t j = 0; j < cols_; ++j)
        r.at(0, j) = at(i, j);
    return r;
}

bool RingMatrix::is_zero() const
{
    for (const auto& e : entries_)
        if (!e.is_zero())
            return false;
    return true;
}

RingMatrix& RingMatrix::operator+=(const RingMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InvalidArgument("matrix dimension mismatch in addition");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] += other.entries_[k];
    return *this;
}

RingMatrix& RingMatrix::operator-=(const RingMatrix& other)
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw InvalidArgument("matrix dimension mismatch in subtraction");
    for (std::size_t k = 0; k < entries_.size(); ++k)
        entries_[k] -= other.entries_[k];
    return *this;
}

RingMatrix operator*(const RingMatrix& a, const RingMatrix& b)
{
    if (a.cols_ != b.rows_)
        throw InvalidArgument("matrix dimension mismatch in product");
    if (a.group_ && b.group_ && !same_group(a.group_, b.group_))
        throw InvalidArgument("matrices over different groups");
    RingMatrix c(a.group_ ? a.group_ : b.group_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const auto& x = a.at(i, k);
            if (x.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b.at(k, j).is_zero())
                    c.at(i, j) += x * b.at(k, j);
        }
    return c;
}

RingMatrix RingMatrix::operator-() const
{
    RingMatrix r = *this;
    for (auto& e : r.entries_)
        e = -e;
    return r;
}

bool RingMatrix::operator==(const RingMatrix& other) const
{
    return rows_ == other.rows_ && cols_ == other.cols_ && entries_ == other.entries_;
}

RingMatrix conj_transpose(const RingMatrix& m)
{
    RingMatrix r(m.group(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(j, i) = involute(m.at(i, j));
    return r;
}

RingMatrix transpose(const RingMatrix& m)
{
    RingMatrix r(m.group(), m.cols(), m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(j, i) = m.at(i, j);
    return r;
}

RingMatrix pushforward(const RingMatrix& m, const GroupHom& phi)
{
    RingMatrix r(phi.target, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            r.at(i, j) = pushforward(m.at(i, j), phi);
    return r;
}

RingMatrix row_vector(const GroupPtr& g, const std::vector<RingElement>& v)
{
    RingMatrix r(g, 1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j)
        r.at(0, j) = v[j].group() ? v[j] : RingElement(g);
    return r;
}

std::vector<std::vector<std::string>> render(const RingMatrix& m)
{
    std::vector<std::vector<std::string>> out(m.rows());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out[i].push_back(render(m.at(i, j)));
    return out;
}

} // namespace olab
