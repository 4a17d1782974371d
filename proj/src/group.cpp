#include "spanlab/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace spanlab {

namespace {

int checked_mod(std::int64_t v, int m) {
    std::int64_t r = v % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

std::int64_t minor_det(int ax, int ay, int bx, int by) {
    return static_cast<std::int64_t>(ax) * by - static_cast<std::int64_t>(ay) * bx;
}

int parse_positive_int(std::string_view text) {
    int value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || value <= 0)
        throw std::invalid_argument("expected a positive integer, got '" +
                                    std::string(text) + "'");
    return value;
}

}  // namespace

GroupSpec::GroupSpec(int c, int n) : c_(c), n_(n) {
    if (c < 1 || n < 1)
        throw std::invalid_argument("group moduli must be positive");
    if (c > n || n % c != 0)
        throw std::invalid_argument("invariant factors require c | n, got c=" +
                                    std::to_string(c) + " n=" + std::to_string(n));
}

Element GroupSpec::element(std::int64_t x, std::int64_t y) const {
    return {checked_mod(x, c_), checked_mod(y, n_)};
}

Element GroupSpec::add(Element a, Element b) const {
    int x = a.x + b.x;
    if (x >= c_) x -= c_;
    int y = a.y + b.y;
    if (y >= n_) y -= n_;
    return {x, y};
}

Element GroupSpec::neg(Element a) const {
    return {a.x == 0 ? 0 : c_ - a.x, a.y == 0 ? 0 : n_ - a.y};
}

Element GroupSpec::sub(Element a, Element b) const {
    return add(a, neg(b));
}

Element GroupSpec::scalar_mul(std::int64_t t, Element a) const {
    return element(t * a.x, t * a.y);
}

Element GroupSpec::element_at(std::int64_t idx) const {
    if (idx < 0 || idx >= order())
        throw std::out_of_range("element index " + std::to_string(idx) +
                                " outside group of order " + std::to_string(order()));
    return {static_cast<int>(idx / n_), static_cast<int>(idx % n_)};
}

std::int64_t GroupSpec::subgroup_order(Element a, Element b) const {
    // The subgroup generated by a and b is M / L where L is the lattice of
    // relations (c,0), (0,n) and M additionally contains a and b. Its order
    // is c*n divided by the lattice index of M, which equals the gcd of all
    // 2x2 minors of the four generating columns.
    std::int64_t d = minor_det(c_, 0, 0, n_);
    d = std::gcd(d, minor_det(a.x, a.y, b.x, b.y));
    d = std::gcd(d, minor_det(a.x, a.y, c_, 0));
    d = std::gcd(d, minor_det(a.x, a.y, 0, n_));
    d = std::gcd(d, minor_det(b.x, b.y, c_, 0));
    d = std::gcd(d, minor_det(b.x, b.y, 0, n_));
    return order() / d;
}

std::string GroupSpec::to_string() const {
    return std::to_string(c_) + "x" + std::to_string(n_);
}

GroupSpec GroupSpec::parse(std::string_view text) {
    auto sep = text.find('x');
    if (sep == std::string_view::npos)
        return cyclic(parse_positive_int(text));
    int c = parse_positive_int(text.substr(0, sep));
    int n = parse_positive_int(text.substr(sep + 1));
    return GroupSpec(c, n);
}

GeneratorSet::GeneratorSet(std::vector<Element> members) : members_(std::move(members)) {
    if (members_.empty() || members_.size() > 4)
        throw std::invalid_argument("generator sets hold 1 to 4 elements, got " +
                                    std::to_string(members_.size()));
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw std::invalid_argument("generator set members must be distinct");
}

GeneratorSet GeneratorSet::negated(const GroupSpec& G) const {
    std::vector<Element> flipped;
    flipped.reserve(members_.size());
    for (Element e : members_) flipped.push_back(G.neg(e));
    return GeneratorSet(std::move(flipped));
}

std::string GeneratorSet::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(members_[i].x) + ":" + std::to_string(members_[i].y);
    }
    return out;
}

std::vector<GroupSpec> enumerate_rank2_groups(std::int64_t max_order) {
    std::vector<GroupSpec> groups;
    for (std::int64_t c = 2; c * c <= max_order; ++c)
        for (std::int64_t k = 1; c * c * k <= max_order; ++k)
            groups.emplace_back(static_cast<int>(c), static_cast<int>(c * k));
    std::sort(groups.begin(), groups.end(), [](const GroupSpec& a, const GroupSpec& b) {
        return std::pair(a.order(), a.c()) < std::pair(b.order(), b.c());
    });
    return groups;
}

std::vector<GroupSpec> groups_of_order(std::int64_t order, bool include_cyclic) {
    std::vector<GroupSpec> groups;
    if (order < 1) return groups;
    if (include_cyclic) groups.push_back(GroupSpec::cyclic(static_cast<int>(order)));
    for (std::int64_t c = 2; c * c <= order; ++c)
        if (order % (c * c) == 0)
            groups.emplace_back(static_cast<int>(c), static_cast<int>(order / c));
    return groups;
}

}  // namespace spanlab
