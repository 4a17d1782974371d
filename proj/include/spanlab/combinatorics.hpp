#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace spanlab {

/// C(n, k) as an exact 64-bit integer. Returns 0 when k < 0 or k > n.
std::int64_t binomial(std::int64_t n, std::int64_t k);

/// Number of coefficient vectors (l_1, ..., l_m) with sum |l_i| <= s.
/// Equals sum over i of C(m, i) * C(s, i) * 2^i and satisfies the recursion
/// a(m, s) = a(m, s-1) + a(m-1, s) + a(m-1, s-1). Requires m, s >= 0.
std::int64_t delannoy(int m, int s);

/// Number of pairs (l_1, l_2) with |l_1| + |l_2| <= s and l_1 + l_2 == h.
/// Equals s + 1 when h and s have the same parity and |h| <= s, s when the
/// parities differ and |h| <= s, and 0 when |h| > s. Requires s >= 0.
std::int64_t lambda_count(int s, std::int64_t h);

/// |{(l_1, l_2) : |l_1| + |l_2| <= s}| = 2s^2 + 2s + 1.
std::int64_t index_set_size(int s);

/// Sizes of the two diagonal-sum parity classes of the index set:
/// (s+1)^2 pairs whose sum has the parity of s, s^2 with the other parity.
struct ParityClassSizes {
    std::int64_t same_parity;
    std::int64_t opposite_parity;
};
ParityClassSizes parity_class_sizes(int s);

/// Sum of lambda_count(s, h) over the diagonals h in [-s, s] congruent to
/// i modulo c. Requires s >= 0, c >= 1.
std::int64_t residue_count(int s, int c, std::int64_t i);

/// Which congruence case of the order bound applied.
enum class BoundCase {
    even_modulus,          // c even
    odd_multiple,          // c odd, s mod c == 0
    odd_half_residue,      // c odd, s mod c == (c-1)/2
    three_residue_two,     // c == 3, s mod 3 == 2
    strict_generic,        // every remaining residue, bound held strictly
};

const char* to_string(BoundCase label);

/// Upper bound on the order of Z_c x Z_ck admitting a spanning pair of the
/// form {(1,u), (1,v)} at radius s, with the congruence case that produced
/// it. The strict_generic case converts a strict bound below 2s^2 into the
/// inclusive value 2s^2 - 1.
struct BoundReport {
    std::int64_t bound;
    BoundCase case_label;
    std::optional<std::string> equality_condition;
};

/// Requires c >= 2 and s >= 1.
BoundReport sregular_upper_bound(int c, int s);

/// Closed-form extremal order formulas, all exact in 64-bit arithmetic.
enum class ExtremalFormula {
    directed_cyclic,        // floor((s^2 + 4s + 3) / 3)
    directed_abelian,       // floor((s^2 + 4s + 4) / 3)
    undirected_cyclic,      // 2s^2 + 2s + 1
    undirected_z2,          // 2s^2 for even s, 2s^2 - 2 for odd s
    conjectured_noncyclic,  // see below; requires s >= 2
    sregular_max,           // 2s^2 + 2s - 4
};

const char* to_string(ExtremalFormula kind);
std::optional<ExtremalFormula> parse_extremal_formula(const std::string& tag);

/// Evaluates the chosen formula at radius s >= 1.
///
/// conjectured_noncyclic is the conjectured largest order of a noncyclic
/// group with a spanning pair: 9 for s == 2; for s >= 3 it is 2s^2 when
/// 2s + 1 is prime and 2s^2 + 2s - (p^2 - 1)/2 otherwise, where p is the
/// smallest prime divisor of 2s + 1. Throws RangeError for s == 1 with that
/// kind, and std::invalid_argument for s < 1.
std::int64_t extremal_formula(ExtremalFormula kind, int s);

/// Least prime divisor of odd n >= 3.
std::int64_t smallest_prime_factor(std::int64_t n);

bool is_prime(std::int64_t n);

}  // namespace spanlab
