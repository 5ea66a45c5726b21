#include "olab/groups.hpp"

#include "olab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <sstream>

namespace olab {

namespace {

std::int64_t mod_floor(std::int64_t a, std::int64_t n)
{
    std::int64_t r = a % n;
    return r < 0 ? r + n : r;
}

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::string trim(std::string_view s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

std::int64_t parse_positive(std::string_view digits, std::string_view context)
{
    std::int64_t value = 0;
    if (digits.empty())
        throw ParseError("expected an integer in '" + std::string(context) + "'");
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size())
        throw ParseError("bad integer '" + std::string(digits) + "' in '" + std::string(context) + "'");
    return value;
}

} // namespace

// ---------------------------------------------------------------------------
// GroupSpec

GroupSpec GroupSpec::abelian(std::vector<std::int64_t> orders)
{
    GroupSpec g;
    g.kind = GroupKind::Abelian;
    int infinite = 0;
    for (auto n : orders) {
        if (n == kInfiniteOrder)
            ++infinite;
        else if (n < 2)
            throw InvalidArgument("cyclic factor order must be at least 2");
    }
    if (infinite > 1)
        throw UnsupportedGroup("at most one Z factor is supported");
    g.factors = std::move(orders);
    return g;
}

GroupSpec GroupSpec::quaternion(std::int64_t n)
{
    if (!is_power_of_two(n))
        throw UnsupportedGroup("Q_{8n} requires n to be a power of two");
    GroupSpec g;
    g.kind = GroupKind::Quaternion;
    g.quaternion_n = n;
    return g;
}

bool GroupSpec::is_finite() const { return !infinite_factor().has_value(); }

bool GroupSpec::is_two_group() const
{
    if (kind == GroupKind::Quaternion)
        return true;
    return std::all_of(factors.begin(), factors.end(),
                       [](std::int64_t n) { return n == kInfiniteOrder || is_power_of_two(n); });
}

std::optional<std::size_t> GroupSpec::infinite_factor() const
{
    for (std::size_t i = 0; i < factors.size(); ++i)
        if (factors[i] == kInfiniteOrder)
            return i;
    return std::nullopt;
}

std::int64_t GroupSpec::finite_order() const
{
    if (kind == GroupKind::Quaternion)
        return 8 * quaternion_n;
    std::int64_t order = 1;
    for (auto n : factors)
        if (n != kInfiniteOrder)
            order *= n;
    return order;
}

std::size_t GroupSpec::num_generators() const
{
    return kind == GroupKind::Quaternion ? 2 : factors.size();
}

std::string GroupSpec::label() const
{
    if (kind == GroupKind::Quaternion)
        return "Q" + std::to_string(8 * quaternion_n);
    if (factors.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i)
            out += " x ";
        out += factors[i] == kInfiniteOrder ? "Z" : "Z/" + std::to_string(factors[i]);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Group

Group::Group(GroupSpec spec) : spec_(std::move(spec))
{
    if (!spec_.is_finite())
        return;
    if (spec_.kind == GroupKind::Quaternion) {
        for (std::int64_t i = 0; i < 4 * spec_.quaternion_n; ++i)
            for (std::int64_t j = 0; j < 2; ++j)
                elements_.push_back(GroupElement{{i, j}});
        return;
    }
    elements_.push_back(GroupElement{std::vector<std::int64_t>(spec_.factors.size(), 0)});
    for (std::size_t f = 0; f < spec_.factors.size(); ++f) {
        std::vector<GroupElement> next;
        for (const auto& e : elements_)
            for (std::int64_t r = 0; r < spec_.factors[f]; ++r) {
                GroupElement x = e;
                x.coords[f] = r;
                next.push_back(std::move(x));
            }
        elements_ = std::move(next);
    }
    std::sort(elements_.begin(), elements_.end());
}

GroupElement Group::identity() const
{
    if (spec_.kind == GroupKind::Quaternion)
        return GroupElement{{0, 0}};
    return GroupElement{std::vector<std::int64_t>(spec_.factors.size(), 0)};
}

GroupElement Group::generator(std::size_t index) const
{
    if (index >= spec_.num_generators())
        throw InvalidArgument("generator index out of range");
    GroupElement g = identity();
    g.coords[index] = 1;
    return normalize(std::move(g));
}

std::vector<std::string> Group::generator_names() const
{
    if (spec_.kind == GroupKind::Quaternion)
        return {"x", "y"};
    std::size_t finite = 0;
    for (auto n : spec_.factors)
        if (n != kInfiniteOrder)
            ++finite;
    std::vector<std::string> names;
    char next = 'a';
    for (auto n : spec_.factors) {
        if (n == kInfiniteOrder)
            names.emplace_back("t");
        else if (finite == 1)
            names.emplace_back("T");
        else
            names.emplace_back(1, next++);
    }
    return names;
}

GroupElement Group::normalize(GroupElement a) const
{
    if (spec_.kind == GroupKind::Quaternion) {
        if (a.coords.size() != 2)
            throw InvalidArgument("quaternion element needs two coordinates");
        const std::int64_t n = spec_.quaternion_n;
        std::int64_t i = a.coords[0];
        std::int64_t j = mod_floor(a.coords[1], 4);
        // y^2 = x^{2n}
        i += (j / 2) * 2 * n;
        j %= 2;
        a.coords = {mod_floor(i, 4 * n), j};
        return a;
    }
    if (a.coords.size() != spec_.factors.size())
        throw InvalidArgument("element has wrong number of coordinates for " + label());
    for (std::size_t f = 0; f < spec_.factors.size(); ++f)
        if (spec_.factors[f] != kInfiniteOrder)
            a.coords[f] = mod_floor(a.coords[f], spec_.factors[f]);
    return a;
}

GroupElement Group::multiply(const GroupElement& a, const GroupElement& b) const
{
    if (spec_.kind == GroupKind::Quaternion) {
        // (x^i y^j)(x^k y^l) = x^{i + (-1)^j k} y^{j+l}, y^2 = x^{2n}
        const std::int64_t n = spec_.quaternion_n;
        std::int64_t i = a.coords[0] + (a.coords[1] ? -b.coords[0] : b.coords[0]);
        std::int64_t j = a.coords[1] + b.coords[1];
        if (j == 2) {
            i += 2 * n;
            j = 0;
        }
        return GroupElement{{mod_floor(i, 4 * n), j}};
    }
    GroupElement c = a;
    for (std::size_t f = 0; f < c.coords.size(); ++f) {
        c.coords[f] += b.coords[f];
        if (spec_.factors[f] != kInfiniteOrder && c.coords[f] >= spec_.factors[f])
            c.coords[f] -= spec_.factors[f];
    }
    return c;
}

GroupElement Group::inverse(const GroupElement& a) const
{
    if (spec_.kind == GroupKind::Quaternion) {
        const std::int64_t n = spec_.quaternion_n;
        if (a.coords[1] == 0)
            return GroupElement{{mod_floor(-a.coords[0], 4 * n), 0}};
        // (x^i y)^{-1} = x^{i+2n} y
        return GroupElement{{mod_floor(a.coords[0] + 2 * n, 4 * n), 1}};
    }
    GroupElement c = a;
    for (std::size_t f = 0; f < c.coords.size(); ++f)
        c.coords[f] = spec_.factors[f] == kInfiniteOrder ? -c.coords[f] : mod_floor(-c.coords[f], spec_.factors[f]);
    return c;
}

GroupElement Group::power(const GroupElement& a, std::int64_t k) const
{
    GroupElement base = k < 0 ? inverse(a) : a;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    GroupElement result = identity();
    while (e) {
        if (e & 1)
            result = multiply(result, base);
        base = multiply(base, base);
        e >>= 1;
    }
    return result;
}

const std::vector<GroupElement>& Group::elements() const
{
    if (!spec_.is_finite())
        throw InvalidArgument("element enumeration requested for infinite group " + label());
    return elements_;
}

std::vector<GroupElement> Group::window(std::int64_t window) const
{
    if (spec_.is_finite())
        return elements_;
    const std::size_t inf = *spec_.infinite_factor();
    GroupSpec finite_part = spec_;
    finite_part.factors.erase(finite_part.factors.begin() + static_cast<std::ptrdiff_t>(inf));
    Group finite(finite_part);
    std::vector<GroupElement> out;
    for (const auto& e : finite.elements())
        for (std::int64_t t = -window; t <= window; ++t) {
            GroupElement x = e;
            x.coords.insert(x.coords.begin() + static_cast<std::ptrdiff_t>(inf), t);
            out.push_back(std::move(x));
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t Group::index_of(const GroupElement& a) const
{
    const auto& els = elements();
    auto it = std::lower_bound(els.begin(), els.end(), a);
    if (it == els.end() || *it != a)
        throw InvalidArgument("element not in group");
    return static_cast<std::size_t>(it - els.begin());
}

bool Group::relations_hold(const std::vector<GroupElement>& images, const Group& target) const
{
    if (images.size() != spec_.num_generators())
        return false;
    if (spec_.kind == GroupKind::Quaternion) {
        const auto& x = images[0];
        const auto& y = images[1];
        // x^{2n} y^{-2} and x y x y^{-1}
        auto r1 = target.multiply(target.power(x, 2 * spec_.quaternion_n), target.power(y, -2));
        auto r2 = target.multiply(target.multiply(x, y), target.multiply(x, target.inverse(y)));
        return target.is_identity(r1) && target.is_identity(r2);
    }
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (spec_.factors[i] != kInfiniteOrder && !target.is_identity(target.power(images[i], spec_.factors[i])))
            return false;
        for (std::size_t j = i + 1; j < images.size(); ++j) {
            auto ab = target.multiply(images[i], images[j]);
            auto ba = target.multiply(images[j], images[i]);
            if (ab != ba)
                return false;
        }
    }
    return true;
}

std::string Group::render(const GroupElement& a) const
{
    const auto names = generator_names();
    std::string out;
    auto append = [&](const std::string& name, std::int64_t exponent) {
        if (exponent == 0)
            return;
        if (!out.empty())
            out += "*";
        out += name;
        if (exponent != 1)
            out += "^" + std::to_string(exponent);
    };
    for (std::size_t f = 0; f < a.coords.size(); ++f)
        append(names[f], a.coords[f]);
    return out.empty() ? "1" : out;
}

GroupElement Group::parse_element(std::string_view token) const
{
    const auto names = generator_names();
    GroupElement result = identity();
    std::size_t pos = 0;
    auto skip_separators = [&] {
        while (pos < token.size() && (token[pos] == '*' || std::isspace(static_cast<unsigned char>(token[pos]))))
            ++pos;
    };
    skip_separators();
    if (pos < token.size() && token.substr(pos) == "1")
        return result;
    while (pos < token.size()) {
        std::size_t start = pos;
        while (pos < token.size() && std::isalpha(static_cast<unsigned char>(token[pos])))
            ++pos;
        std::string name(token.substr(start, pos - start));
        if (name.empty())
            throw ParseError("expected a generator name in '" + std::string(token) + "'");
        std::int64_t exponent = 1;
        if (pos < token.size() && token[pos] == '^') {
            ++pos;
            std::size_t estart = pos;
            if (pos < token.size() && (token[pos] == '-' || token[pos] == '+'))
                ++pos;
            while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos])))
                ++pos;
            std::string_view digits = token.substr(estart, pos - estart);
            bool negative = !digits.empty() && digits[0] == '-';
            if (!digits.empty() && (digits[0] == '-' || digits[0] == '+'))
                digits.remove_prefix(1);
            exponent = parse_positive(digits, token);
            if (negative)
                exponent = -exponent;
        }
        auto it = std::find(names.begin(), names.end(), name);
        if (it == names.end())
            throw ParseError("unknown generator '" + name + "' for group " + label());
        auto index = static_cast<std::size_t>(it - names.begin());
        result = multiply(result, power(generator(index), exponent));
        skip_separators();
    }
    return result;
}

GroupPtr make_group(GroupSpec spec) { return std::make_shared<const Group>(std::move(spec)); }

// ---------------------------------------------------------------------------
// Parsing and reductions

GroupSpec parse_group_spec(std::string_view text)
{
    std::string whole = trim(text);
    if (whole.empty())
        throw ParseError("empty group specification");
    if (whole == "1")
        return GroupSpec::trivial();

    std::vector<std::string> parts;
    std::string current;
    for (char c : whole) {
        if (c == 'x' || c == 'X') {
            parts.push_back(trim(current));
            current.clear();
        } else {
            current += c;
        }
    }
    parts.push_back(trim(current));

    std::vector<std::int64_t> orders;
    std::optional<std::int64_t> quaternion;
    for (const auto& part : parts) {
        if (part.empty())
            throw ParseError("empty factor in '" + whole + "'");
        if (part == "Z") {
            orders.push_back(kInfiniteOrder);
        } else if (part.rfind("Z/", 0) == 0) {
            std::int64_t n = parse_positive(trim(std::string_view(part).substr(2)), whole);
            if (n < 2)
                throw ParseError("cyclic factor order must be at least 2 in '" + whole + "'");
            orders.push_back(n);
        } else if (part[0] == 'Q') {
            std::int64_t k = parse_positive(trim(std::string_view(part).substr(1)), whole);
            if (k % 8 != 0 || !is_power_of_two(k / 8))
                throw UnsupportedGroup("Q" + std::to_string(k) + ": quaternion order must be 8n with n a power of two");
            quaternion = k / 8;
        } else {
            throw ParseError("cannot parse factor '" + part + "' in '" + whole + "'");
        }
    }
    if (quaternion) {
        if (parts.size() != 1)
            throw UnsupportedGroup("products involving Q_{8n} are not supported");
        return GroupSpec::quaternion(*quaternion);
    }
    return GroupSpec::abelian(std::move(orders));
}

GroupSpec strip_odd_part(const GroupSpec& g)
{
    if (g.kind == GroupKind::Quaternion)
        return g;
    std::vector<std::int64_t> out;
    for (auto n : g.factors) {
        if (n == kInfiniteOrder) {
            out.push_back(n);
            continue;
        }
        std::int64_t two_part = 1;
        while (n % 2 == 0) {
            n /= 2;
            two_part *= 2;
        }
        if (two_part > 1)
            out.push_back(two_part);
    }
    return GroupSpec::abelian(std::move(out));
}

GroupElement GroupHom::apply(const GroupElement& a) const
{
    const auto& src = source->spec();
    if (src.kind == GroupKind::Quaternion) {
        auto xi = target->power(images[0], a.coords[0]);
        auto yj = target->power(images[1], a.coords[1]);
        return target->multiply(xi, yj);
    }
    GroupElement out = target->identity();
    for (std::size_t f = 0; f < a.coords.size(); ++f)
        out = target->multiply(out, target->power(images[f], a.coords[f]));
    return out;
}

std::string GroupHom::describe() const
{
    std::ostringstream os;
    os << source->label() << " -> " << target->label() << " (";
    const auto names = source->generator_names();
    for (std::size_t i = 0; i < images.size(); ++i) {
        if (i)
            os << ", ";
        os << names[i] << " -> " << target->render(images[i]);
    }
    os << ")";
    return os.str();
}

GroupHom make_hom(GroupPtr source, GroupPtr target, std::vector<GroupElement> images)
{
    for (auto& img : images)
        img = target->normalize(img);
    if (!source->relations_hold(images, *target))
        throw InvalidArgument("generator images do not satisfy the relations of " + source->label());
    GroupHom hom;
    hom.source = std::move(source);
    hom.target = std::move(target);
    hom.images = std::move(images);
    return hom;
}

GroupHom quotient_surjection(const GroupSpec& g, const std::vector<std::int64_t>& new_orders)
{
    if (!g.is_abelian())
        throw InvalidArgument("quotient_surjection needs an abelian group");
    if (new_orders.size() != g.factors.size())
        throw InvalidArgument("quotient_surjection: wrong number of new orders");
    std::vector<std::int64_t> target_orders;
    std::vector<std::optional<std::size_t>> factor_map;
    for (std::size_t i = 0; i < g.factors.size(); ++i) {
        const auto old_n = g.factors[i];
        const auto new_n = new_orders[i];
        if (new_n == kInfiniteOrder) {
            if (old_n != kInfiniteOrder)
                throw InvalidArgument("a finite factor cannot map onto Z");
        } else if (new_n < 1 || (old_n != kInfiniteOrder && old_n % new_n != 0)) {
            throw InvalidArgument("quotient order " + std::to_string(new_n) + " does not divide " +
                                  (old_n == kInfiniteOrder ? std::string("Z") : std::to_string(old_n)));
        }
        if (new_n == 1) {
            factor_map.push_back(std::nullopt);
        } else {
            factor_map.push_back(target_orders.size());
            target_orders.push_back(new_n);
        }
    }
    auto source = make_group(g);
    auto target = make_group(GroupSpec::abelian(target_orders));
    std::vector<GroupElement> images;
    for (std::size_t i = 0; i < g.factors.size(); ++i)
        images.push_back(factor_map[i] ? target->generator(*factor_map[i]) : target->identity());
    GroupHom hom = make_hom(source, target, std::move(images));
    hom.factor_map = std::move(factor_map);
    return hom;
}

GroupHom compose(const GroupHom& second, const GroupHom& first)
{
    if (!(*first.target == *second.source))
        throw InvalidArgument("compose: target/source mismatch");
    std::vector<GroupElement> images;
    for (const auto& img : first.images)
        images.push_back(second.apply(img));
    GroupHom hom = make_hom(first.source, second.target, std::move(images));
    if (!first.factor_map.empty() && !second.factor_map.empty()) {
        for (const auto& m : first.factor_map)
            hom.factor_map.push_back(m ? second.factor_map[*m] : std::nullopt);
    }
    return hom;
}

} // namespace olab
