#include "spanlab/combinatorics.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "spanlab/errors.hpp"

namespace spanlab {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::int64_t result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        // Exact at every step: result * (n - k + i) is divisible by i.
        result = result / i * (n - k + i) + result % i * (n - k + i) / i;
    }
    return result;
}

std::int64_t delannoy(int m, int s) {
    if (m < 0 || s < 0)
        throw std::invalid_argument("delannoy requires nonnegative arguments");
    std::int64_t total = 0;
    std::int64_t power = 1;
    for (int i = 0; i <= std::min(m, s); ++i) {
        total += binomial(m, i) * binomial(s, i) * power;
        power *= 2;
    }
    return total;
}

std::int64_t lambda_count(int s, std::int64_t h) {
    if (s < 0) throw std::invalid_argument("lambda_count requires s >= 0");
    std::int64_t a = std::llabs(h);
    if (a > s) return 0;
    bool same_parity = ((a ^ s) & 1) == 0;
    return same_parity ? s + 1 : s;
}

std::int64_t index_set_size(int s) {
    if (s < 0) throw std::invalid_argument("index_set_size requires s >= 0");
    return 2ll * s * s + 2ll * s + 1;
}

ParityClassSizes parity_class_sizes(int s) {
    if (s < 0) throw std::invalid_argument("parity_class_sizes requires s >= 0");
    std::int64_t w = s + 1;
    return {w * w, static_cast<std::int64_t>(s) * s};
}

std::int64_t residue_count(int s, int c, std::int64_t i) {
    if (s < 0 || c < 1)
        throw std::invalid_argument("residue_count requires s >= 0 and c >= 1");
    std::int64_t total = 0;
    for (std::int64_t h = -s; h <= s; ++h)
        if (((h - i) % c + c) % c == 0) total += lambda_count(s, h);
    return total;
}

const char* to_string(BoundCase label) {
    switch (label) {
        case BoundCase::even_modulus: return "even_modulus";
        case BoundCase::odd_multiple: return "odd_multiple";
        case BoundCase::odd_half_residue: return "odd_half_residue";
        case BoundCase::three_residue_two: return "three_residue_two";
        case BoundCase::strict_generic: return "strict_generic";
    }
    return "unknown";
}

BoundReport sregular_upper_bound(int c, int s) {
    if (c < 2 || s < 1)
        throw std::invalid_argument("sregular_upper_bound requires c >= 2 and s >= 1");
    std::int64_t s2 = 2ll * s * s;
    if (c % 2 == 0)
        return {s2, BoundCase::even_modulus,
                "s divisible by " + std::to_string(c)};
    int r = s % c;
    if (r == 0)
        return {s2 + s, BoundCase::odd_multiple, std::nullopt};
    if (2 * r == c - 1)
        return {s2 + 2ll * s - (static_cast<std::int64_t>(c) * c - 1) / 2,
                BoundCase::odd_half_residue, std::nullopt};
    if (c == 3 && r == 2)
        return {s2 + 1, BoundCase::three_residue_two, std::nullopt};
    // Every remaining residue admits fewer than 2s^2 elements, reported as
    // the inclusive bound 2s^2 - 1.
    return {s2 - 1, BoundCase::strict_generic, std::nullopt};
}

const char* to_string(ExtremalFormula kind) {
    switch (kind) {
        case ExtremalFormula::directed_cyclic: return "directed_cyclic";
        case ExtremalFormula::directed_abelian: return "directed_abelian";
        case ExtremalFormula::undirected_cyclic: return "undirected_cyclic";
        case ExtremalFormula::undirected_z2: return "undirected_z2";
        case ExtremalFormula::conjectured_noncyclic: return "conjectured_noncyclic";
        case ExtremalFormula::sregular_max: return "sregular_max";
    }
    return "unknown";
}

std::optional<ExtremalFormula> parse_extremal_formula(const std::string& tag) {
    for (ExtremalFormula kind :
         {ExtremalFormula::directed_cyclic, ExtremalFormula::directed_abelian,
          ExtremalFormula::undirected_cyclic, ExtremalFormula::undirected_z2,
          ExtremalFormula::conjectured_noncyclic, ExtremalFormula::sregular_max})
        if (tag == to_string(kind)) return kind;
    return std::nullopt;
}

std::int64_t extremal_formula(ExtremalFormula kind, int s) {
    if (s < 1) throw std::invalid_argument("extremal_formula requires s >= 1");
    std::int64_t sq = static_cast<std::int64_t>(s) * s;
    switch (kind) {
        case ExtremalFormula::directed_cyclic:
            return (sq + 4ll * s + 3) / 3;
        case ExtremalFormula::directed_abelian:
            return (sq + 4ll * s + 4) / 3;
        case ExtremalFormula::undirected_cyclic:
            return 2 * sq + 2ll * s + 1;
        case ExtremalFormula::undirected_z2:
            return s % 2 == 0 ? 2 * sq : 2 * sq - 2;
        case ExtremalFormula::conjectured_noncyclic: {
            if (s < 2)
                throw RangeError("conjectured_noncyclic is defined for s >= 2");
            if (s == 2) return 9;
            std::int64_t q = 2ll * s + 1;
            if (is_prime(q)) return 2 * sq;
            std::int64_t p = smallest_prime_factor(q);
            return 2 * sq + 2ll * s - (p * p - 1) / 2;
        }
        case ExtremalFormula::sregular_max:
            return 2 * sq + 2ll * s - 4;
    }
    throw std::invalid_argument("unsupported formula kind");
}

std::int64_t smallest_prime_factor(std::int64_t n) {
    if (n < 2) throw std::invalid_argument("smallest_prime_factor requires n >= 2");
    if (n % 2 == 0) return 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return d;
    return n;
}

bool is_prime(std::int64_t n) {
    return n >= 2 && smallest_prime_factor(n) == n;
}

}  // namespace spanlab
