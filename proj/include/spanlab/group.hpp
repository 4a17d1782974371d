#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace spanlab {

/**
 * An element of a rank-at-most-2 abelian group, stored as a coordinate pair.
 *
 * The first coordinate lives modulo the small invariant factor c, the second
 * modulo the large one n. Elements of cyclic groups keep x == 0. Element
 * carries no reference to its group; all arithmetic goes through GroupSpec.
 */
struct Element {
    int x = 0;
    int y = 0;

    friend auto operator<=>(const Element&, const Element&) = default;
};

/**
 * A finite abelian group of rank at most 2 in invariant-factor form
 * Z_c x Z_n with c dividing n. The cyclic group Z_n is encoded as c == 1.
 *
 * Invariants: 1 <= c <= n and c | n. Elements are pairs (x, y) with
 * 0 <= x < c and 0 <= y < n, indexed by x * n + y.
 */
class GroupSpec {
public:
    /// Builds Z_c x Z_n. Throws std::invalid_argument unless 1 <= c <= n
    /// and c divides n.
    GroupSpec(int c, int n);

    /// Builds the cyclic group Z_n.
    static GroupSpec cyclic(int n) { return GroupSpec(1, n); }

    int c() const { return c_; }
    int n() const { return n_; }
    std::int64_t order() const { return static_cast<std::int64_t>(c_) * n_; }

    /// 0 for the trivial group, 1 for nontrivial cyclic groups, 2 otherwise.
    int rank() const { return c_ > 1 ? 2 : (n_ > 1 ? 1 : 0); }

    bool is_cyclic() const { return c_ == 1; }

    Element zero() const { return {0, 0}; }

    /// Reduces arbitrary integer coordinates into the group.
    Element element(std::int64_t x, std::int64_t y) const;

    Element add(Element a, Element b) const;
    Element neg(Element a) const;
    Element sub(Element a, Element b) const;

    /// t * a for any integer t, by modular multiplication per coordinate.
    Element scalar_mul(std::int64_t t, Element a) const;

    /// Bijection onto 0 .. order()-1, ordered by (x, y).
    std::int64_t index(Element a) const {
        return static_cast<std::int64_t>(a.x) * n_ + a.y;
    }

    /// Inverse of index().
    Element element_at(std::int64_t idx) const;

    /// Order of the subgroup generated by a and b.
    std::int64_t subgroup_order(Element a, Element b) const;

    /// True when a and b together generate the whole group.
    bool generates(Element a, Element b) const {
        return subgroup_order(a, b) == order();
    }

    /// "c x n" without spaces, e.g. "3x12"; cyclic groups render as "1x13".
    std::string to_string() const;

    /// Accepts "CxN" ("3x12", "1x13") or a bare integer for a cyclic group
    /// ("13"). Throws std::invalid_argument on malformed input.
    static GroupSpec parse(std::string_view text);

    friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;

private:
    int c_;
    int n_;
};

/**
 * An ordered set of one to four distinct group elements.
 *
 * Members are stored sorted ascending by (x, y), which matches ascending
 * element index in any group the members are valid for. Coefficient vectors
 * elsewhere in the library always refer to this stored order.
 */
class GeneratorSet {
public:
    /// Sorts the members. Throws std::invalid_argument when the list is
    /// empty, longer than four, or contains duplicates.
    explicit GeneratorSet(std::vector<Element> members);

    GeneratorSet(std::initializer_list<Element> members)
        : GeneratorSet(std::vector<Element>(members)) {}

    int size() const { return static_cast<int>(members_.size()); }
    const Element& operator[](int i) const { return members_[i]; }
    const std::vector<Element>& members() const { return members_; }

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    /// Memberwise negation in G, re-sorted into canonical order.
    GeneratorSet negated(const GroupSpec& G) const;

    /// Members joined by ';', each as "x:y", e.g. "1:1;1:2".
    std::string to_string() const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<Element> members_;
};

/// All rank-2 groups Z_c x Z_ck with order c * ck <= max_order, sorted by
/// (order, c). Returns an empty list when max_order < 4.
std::vector<GroupSpec> enumerate_rank2_groups(std::int64_t max_order);

/// All groups of order exactly `order` and rank <= 2, sorted by c ascending,
/// so the cyclic group (when included) comes first.
std::vector<GroupSpec> groups_of_order(std::int64_t order, bool include_cyclic);

}  // namespace spanlab
