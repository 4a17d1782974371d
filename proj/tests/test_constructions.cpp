#include <doctest.h>

#include <string>

#include "spanlab/constructions.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/group.hpp"
#include "spanlab/span.hpp"

using namespace spanlab;

namespace {

void check_spans(const Construction& built) {
    SpanResult direct = signed_span(built.group, built.generators, built.s);
    CHECK(direct.full());
    SpanResult ball = bfs_ball(built.group, built.generators, built.s);
    CHECK(ball.covered == direct.covered);
}

}  // namespace

TEST_CASE("cyclic pair construction") {
    Construction built = cyclic_construction(2, 13);
    CHECK(built.kind == ConstructionKind::cyclic_pair);
    CHECK(built.group.to_string() == "1x13");
    CHECK(built.generators.to_string() == "0:2;0:3");
    CHECK_FALSE(built.degenerate);
    check_spans(built);

    // Wrapped members still span: n = 3 reduces {4, 5} to {1, 2}.
    Construction wrapped = cyclic_construction(4, 3);
    CHECK(wrapped.generators.to_string() == "0:1;0:2");
    check_spans(wrapped);

    for (int s = 1; s <= 8; ++s)
        for (int n = 2; n <= 2 * s * s + 2 * s + 1; ++n) check_spans(cyclic_construction(s, n));

    CHECK_THROWS_AS(cyclic_construction(2, 1), RangeError);
    CHECK_THROWS_AS(cyclic_construction(2, 14), RangeError);
    CHECK_THROWS_AS(cyclic_construction(0, 2), std::invalid_argument);
}

TEST_CASE("half order construction") {
    Construction built = half_construction(3);
    CHECK(built.group.to_string() == "3x6");
    CHECK(built.group.order() == 18);
    CHECK(built.generators.to_string() == "0:1;1:1");
    CHECK_FALSE(built.degenerate);
    check_spans(built);

    for (int s = 2; s <= 20; ++s) {
        Construction c = half_construction(s);
        CHECK(c.group.order() == 2LL * s * s);
        check_spans(c);
    }

    Construction tiny = half_construction(1);
    CHECK(tiny.degenerate);
    CHECK(tiny.group.order() == 2);
    CHECK(tiny.generators.size() == 1);
    check_spans(tiny);

    CHECK_THROWS_AS(half_construction(0), std::invalid_argument);
}

TEST_CASE("floor ceiling construction") {
    Construction built = floor_ceiling_construction(3, 4);
    CHECK(built.kind == ConstructionKind::floor_ceiling);
    CHECK(built.group.to_string() == "3x12");
    CHECK(built.generators.to_string() == "1:1;1:2");
    check_spans(built);

    Construction two = floor_ceiling_construction(2, 3);
    CHECK(two.group.to_string() == "2x8");
    check_spans(two);

    for (int c = 2; c <= 9; ++c)
        for (int s = 1; s <= 20; ++s) {
            int r = s % c;
            int u = s / c;
            if (2 * r < c - 1) {
                CHECK_THROWS_AS(floor_ceiling_construction(c, s), HypothesisError);
                continue;
            }
            if (u == 0) {
                CHECK_THROWS_AS(floor_ceiling_construction(c, s), DegenerateError);
                continue;
            }
            Construction inst = floor_ceiling_construction(c, s);
            CHECK(inst.group.order() == 2LL * c * c * u * (u + 1));
            check_spans(inst);
        }

    CHECK_THROWS_AS(floor_ceiling_construction(1, 4), std::invalid_argument);
}

TEST_CASE("floor ceiling order formula at the half residue") {
    // When s mod c == (c-1)/2 for odd c the order meets the regular bound.
    for (int c = 3; c <= 9; c += 2)
        for (int s = 1; s <= 30; ++s) {
            if (s % c != (c - 1) / 2 || s / c == 0) continue;
            Construction inst = floor_ceiling_construction(c, s);
            CHECK(inst.group.order() ==
                  2LL * s * s + 2 * s - (static_cast<std::int64_t>(c) * c - 1) / 2);
        }
}

TEST_CASE("prime divisor construction") {
    Construction built = prime_divisor_construction(4, 3);
    CHECK(built.kind == ConstructionKind::prime_divisor);
    CHECK(built.group.to_string() == "3x12");
    CHECK(built.group.order() == 36);
    check_spans(built);

    Construction s7p3 = prime_divisor_construction(7, 3);
    CHECK(s7p3.group.to_string() == "3x36");
    CHECK(s7p3.group.order() == 108);
    check_spans(s7p3);

    Construction s7p5 = prime_divisor_construction(7, 5);
    CHECK(s7p5.group.to_string() == "5x20");
    CHECK(s7p5.group.order() == 100);
    check_spans(s7p5);

    CHECK_THROWS_AS(prime_divisor_construction(4, 4), DivisibilityError);
    CHECK_THROWS_AS(prime_divisor_construction(4, 5), DivisibilityError);
    CHECK_THROWS_AS(prime_divisor_construction(2, 5), DivisibilityError);
    CHECK_THROWS_AS(prime_divisor_construction(1, 3), DivisibilityError);
}

TEST_CASE("z2 family construction") {
    Construction built = z2_construction(3, 4);
    CHECK(built.group.to_string() == "2x8");
    CHECK(built.generators.to_string() == "1:1;1:2");
    check_spans(built);

    Construction even = z2_construction(4, 6);
    CHECK(even.group.to_string() == "2x12");
    CHECK(even.generators.to_string() == "1:1;1:2");
    check_spans(even);

    for (int s = 2; s <= 12; ++s) {
        std::int64_t cap = s % 2 == 1 ? (static_cast<std::int64_t>(s) * s - 1) / 2
                                      : (static_cast<std::int64_t>(s) * s - s) / 2;
        for (int k = 1; k <= cap; ++k) check_spans(z2_construction(s, k));
        CHECK_THROWS_AS(z2_construction(s, static_cast<int>(cap) + 1), RangeError);
    }
    CHECK_THROWS_AS(z2_construction(3, 0), RangeError);
    CHECK_THROWS_AS(z2_construction(1, 1), RangeError);
}

TEST_CASE("directed basis construction") {
    Construction built = directed_noncyclic_basis(4);
    CHECK(built.kind == ConstructionKind::directed_basis);
    CHECK(built.claims_directed_basis);
    CHECK(built.group.to_string() == "2x6");
    CHECK(built.group.order() == 12);
    CHECK_FALSE(built.degenerate);
    DiameterResult radius = directed_covering_radius(built.group, built.generators);
    CHECK(radius.finite);
    CHECK(radius.value <= built.s);

    for (int s = 1; s <= 19; s += 3) {
        Construction inst = directed_noncyclic_basis(s);
        CHECK(inst.group.order() == (static_cast<std::int64_t>(s) * s + 4 * s + 4) / 3);
        SpanResult ball = bfs_ball(inst.group, inst.generators, inst.s, true);
        CHECK(ball.full());
        CHECK(inst.degenerate == (s == 1));
    }

    CHECK_THROWS_AS(directed_noncyclic_basis(2), CongruenceError);
    CHECK_THROWS_AS(directed_noncyclic_basis(3), CongruenceError);
    CHECK_THROWS_AS(directed_noncyclic_basis(0), std::invalid_argument);
}

TEST_CASE("descriptions name the family and group") {
    Construction built = floor_ceiling_construction(3, 4);
    std::string text = built.describe();
    CHECK(text.find("floor-ceiling") != std::string::npos);
    CHECK(text.find("3x12") != std::string::npos);
    CHECK(text.find("s=4") != std::string::npos);
}
