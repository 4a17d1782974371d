#include <doctest.h>

#include <cstdint>
#include <map>
#include <vector>

#include "spanlab/combinatorics.hpp"
#include "spanlab/errors.hpp"

using namespace spanlab;

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 0) == 1);
    CHECK(binomial(5, 5) == 1);
    CHECK(binomial(4, 7) == 0);
    CHECK(binomial(52, 5) == 2598960);
    CHECK(binomial(61, 30) == 232714176627630544LL);
    for (int n = 1; n <= 30; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    CHECK(binomial(-1, 0) == 0);
    CHECK(binomial(3, -1) == 0);
}

TEST_CASE("delannoy values and recursion") {
    CHECK(delannoy(1, 3) == 7);
    CHECK(delannoy(2, 3) == 25);
    CHECK(delannoy(3, 3) == 63);
    CHECK(delannoy(2, 10) == 221);
    for (int m = 0; m <= 12; ++m) {
        CHECK(delannoy(m, 0) == 1);
        CHECK(delannoy(0, m) == 1);
    }
    for (int m = 1; m <= 12; ++m)
        for (int s = 1; s <= 12; ++s)
            CHECK(delannoy(m, s) ==
                  delannoy(m, s - 1) + delannoy(m - 1, s) + delannoy(m - 1, s - 1));
    for (int m = 0; m <= 10; ++m)
        for (int s = 0; s <= 10; ++s) CHECK(delannoy(m, s) == delannoy(s, m));
    CHECK_THROWS_AS(delannoy(-1, 2), std::invalid_argument);
}

TEST_CASE("index_set_size closed form") {
    for (int s = 0; s <= 30; ++s) {
        CHECK(index_set_size(s) == delannoy(2, s));
        CHECK(index_set_size(s) == 2LL * s * s + 2 * s + 1);
    }
    CHECK(index_set_size(1000000) == 2000002000001LL);
}

TEST_CASE("lambda_count closed form") {
    CHECK(lambda_count(5, 3) == 6);
    CHECK(lambda_count(5, 0) == 5);
    CHECK(lambda_count(4, 4) == 5);
    CHECK(lambda_count(4, 0) == 5);
    CHECK(lambda_count(4, 7) == 0);
    CHECK(lambda_count(3, -2) == 3);
    for (int s = 0; s <= 14; ++s)
        for (int h = -s - 2; h <= s + 2; ++h) CHECK(lambda_count(s, h) == lambda_count(s, -h));
}

TEST_CASE("index set statistics agree with direct enumeration") {
    for (int s = 0; s <= 12; ++s) {
        std::map<int, std::int64_t> per_sum;
        std::int64_t total = 0;
        std::int64_t even_class = 0;
        for (int l1 = -s; l1 <= s; ++l1)
            for (int l2 = -s; l2 <= s; ++l2) {
                int weight = (l1 < 0 ? -l1 : l1) + (l2 < 0 ? -l2 : l2);
                if (weight > s) continue;
                total += 1;
                per_sum[l1 + l2] += 1;
                if (((l1 + l2) % 2 + 2) % 2 == s % 2) even_class += 1;
            }
        CHECK(total == index_set_size(s));
        for (int h = -2 * s - 1; h <= 2 * s + 1; ++h) {
            std::int64_t expected = per_sum.count(h) != 0 ? per_sum[h] : 0;
            CHECK(lambda_count(s, h) == expected);
        }
        ParityClassSizes classes = parity_class_sizes(s);
        CHECK(classes.same_parity == even_class);
        CHECK(classes.opposite_parity == total - even_class);
        CHECK(classes.same_parity == static_cast<std::int64_t>(s + 1) * (s + 1));
        CHECK(classes.opposite_parity == static_cast<std::int64_t>(s) * s);

        for (int c = 1; c <= 9; ++c) {
            std::int64_t residue_total = 0;
            for (int r = 0; r < c; ++r) {
                std::int64_t direct = 0;
                for (const auto& [h, count] : per_sum)
                    if (((h % c) + c) % c == r) direct += count;
                CHECK(residue_count(s, c, r) == direct);
                residue_total += residue_count(s, c, r);
            }
            CHECK(residue_total == index_set_size(s));
        }
    }
}

TEST_CASE("residue_count examples") {
    CHECK(residue_count(5, 3, 0) == 17);
    CHECK(residue_count(1, 3, 0) == 1);
    CHECK(residue_count(4, 2, 1) == 16);
    // The residue argument is read modulo c.
    CHECK(residue_count(3, 4, 4) == residue_count(3, 4, 0));
    CHECK(residue_count(3, 4, -1) == residue_count(3, 4, 3));
    CHECK_THROWS_AS(residue_count(3, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(residue_count(-1, 3, 0), std::invalid_argument);
}

TEST_CASE("residue identity for even modulus") {
    for (int c = 2; c <= 8; c += 2)
        for (int s = 1; s <= 20; ++s) {
            int r = s % c;
            std::int64_t lhs = static_cast<std::int64_t>(c) * residue_count(s, c, (r + 1) % c);
            std::int64_t rhs =
                (2LL * s - 2 * r + static_cast<std::int64_t>(c) * ((2 * r + 1) / c)) * s;
            CHECK(lhs == rhs);
        }
}

TEST_CASE("regular upper bound case ladder") {
    BoundReport even = sregular_upper_bound(2, 4);
    CHECK(even.bound == 32);
    CHECK(even.case_label == BoundCase::even_modulus);
    CHECK(even.equality_condition.has_value());

    BoundReport half = sregular_upper_bound(3, 4);
    CHECK(half.bound == 36);
    CHECK(half.case_label == BoundCase::odd_half_residue);

    BoundReport three = sregular_upper_bound(3, 5);
    CHECK(three.bound == 51);
    CHECK(three.case_label == BoundCase::three_residue_two);

    BoundReport mult = sregular_upper_bound(5, 5);
    CHECK(mult.bound == 55);
    CHECK(mult.case_label == BoundCase::odd_multiple);

    BoundReport generic = sregular_upper_bound(7, 5);
    CHECK(generic.bound == 49);
    CHECK(generic.case_label == BoundCase::strict_generic);

    CHECK(sregular_upper_bound(2, 5).bound == 50);
    CHECK(sregular_upper_bound(3, 7).bound == 108);
    CHECK(sregular_upper_bound(2, 6).bound == 72);

    CHECK_THROWS_AS(sregular_upper_bound(1, 4), std::invalid_argument);
    CHECK_THROWS_AS(sregular_upper_bound(3, 0), std::invalid_argument);
}

TEST_CASE("extremal formulas") {
    CHECK(extremal_formula(ExtremalFormula::undirected_cyclic, 3) == 25);
    CHECK(extremal_formula(ExtremalFormula::undirected_cyclic, 10) == 221);
    CHECK(extremal_formula(ExtremalFormula::directed_cyclic, 2) == 5);
    CHECK(extremal_formula(ExtremalFormula::directed_cyclic, 3) == 8);
    CHECK(extremal_formula(ExtremalFormula::directed_cyclic, 6) == 21);
    CHECK(extremal_formula(ExtremalFormula::directed_abelian, 1) == 3);
    CHECK(extremal_formula(ExtremalFormula::directed_abelian, 4) == 12);
    CHECK(extremal_formula(ExtremalFormula::directed_abelian, 6) == 21);
    CHECK(extremal_formula(ExtremalFormula::undirected_z2, 5) == 48);
    CHECK(extremal_formula(ExtremalFormula::undirected_z2, 6) == 72);
    CHECK(extremal_formula(ExtremalFormula::conjectured_noncyclic, 2) == 9);
    CHECK(extremal_formula(ExtremalFormula::conjectured_noncyclic, 3) == 18);
    CHECK(extremal_formula(ExtremalFormula::conjectured_noncyclic, 4) == 36);
    CHECK(extremal_formula(ExtremalFormula::conjectured_noncyclic, 7) == 108);
    CHECK(extremal_formula(ExtremalFormula::conjectured_noncyclic, 8) == 128);
    CHECK(extremal_formula(ExtremalFormula::sregular_max, 4) == 36);
    CHECK_THROWS_AS(extremal_formula(ExtremalFormula::conjectured_noncyclic, 1), RangeError);
    CHECK_THROWS_AS(extremal_formula(ExtremalFormula::undirected_cyclic, 0), std::invalid_argument);
}

TEST_CASE("extremal formula tags round trip") {
    for (ExtremalFormula kind :
         {ExtremalFormula::directed_cyclic, ExtremalFormula::directed_abelian,
          ExtremalFormula::undirected_cyclic, ExtremalFormula::undirected_z2,
          ExtremalFormula::conjectured_noncyclic, ExtremalFormula::sregular_max})
        CHECK(parse_extremal_formula(to_string(kind)) == kind);
    CHECK_FALSE(parse_extremal_formula("nonsense").has_value());
}

TEST_CASE("noncyclic formula is divisible by the square of the smallest prime factor") {
    CHECK(extremal_formula(ExtremalFormula::conjectured_noncyclic, 2) == 9);
    for (int s = 3; s <= 60; ++s) {
        if (is_prime(2 * s + 1)) {
            CHECK(extremal_formula(ExtremalFormula::conjectured_noncyclic, s) == 2LL * s * s);
            continue;
        }
        std::int64_t p = smallest_prime_factor(2 * s + 1);
        std::int64_t value = extremal_formula(ExtremalFormula::conjectured_noncyclic, s);
        CHECK(value == 2LL * s * s + 2 * s - (p * p - 1) / 2);
        CHECK(value % (p * p) == 0);
    }
}

TEST_CASE("primality helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(21));
    CHECK(smallest_prime_factor(21) == 3);
    CHECK(smallest_prime_factor(169) == 13);
    CHECK(smallest_prime_factor(2) == 2);
    CHECK_THROWS_AS(smallest_prime_factor(1), std::invalid_argument);
}
