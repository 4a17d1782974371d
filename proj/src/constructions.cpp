#include "spanlab/constructions.hpp"

#include <stdexcept>

#include "spanlab/combinatorics.hpp"
#include "spanlab/errors.hpp"

namespace spanlab {

const char* to_string(ConstructionKind kind) {
    switch (kind) {
        case ConstructionKind::cyclic_pair: return "cyclic";
        case ConstructionKind::half_group: return "half";
        case ConstructionKind::floor_ceiling: return "floor-ceiling";
        case ConstructionKind::prime_divisor: return "prime-divisor";
        case ConstructionKind::z2_family: return "z2";
        case ConstructionKind::directed_basis: return "directed-basis";
    }
    return "unknown";
}

std::string Construction::describe() const {
    std::string text = std::string(to_string(kind)) + " s=" + std::to_string(s) +
                       " group=" + group.to_string() + " generators=" +
                       generators.to_string() + " order=" + std::to_string(group.order());
    if (degenerate) text += " degenerate";
    return text;
}

Construction cyclic_construction(int s, int n) {
    if (s < 1) throw std::invalid_argument("cyclic_construction requires s >= 1");
    if (n < 2 || n > index_set_size(s))
        throw RangeError("cyclic_construction requires 2 <= n <= " +
                         std::to_string(index_set_size(s)) + ", got n=" +
                         std::to_string(n));
    GroupSpec G = GroupSpec::cyclic(n);
    GeneratorSet A{G.element(0, s), G.element(0, s + 1)};
    return {ConstructionKind::cyclic_pair, G, A, s};
}

Construction half_construction(int s) {
    if (s < 1) throw std::invalid_argument("half_construction requires s >= 1");
    GroupSpec G(s == 1 ? 1 : s, 2 * s);
    Element a = G.element(0, 1);
    Element b = G.element(1, 1);
    bool degenerate = a == b;
    GeneratorSet A = degenerate ? GeneratorSet{a} : GeneratorSet{a, b};
    return {ConstructionKind::half_group, G, A, s, true, false, degenerate};
}

Construction floor_ceiling_construction(int c, int s) {
    if (c < 2 || s < 1)
        throw std::invalid_argument("floor_ceiling_construction requires c >= 2, s >= 1");
    int r = s % c;
    if (2 * r < c - 1)
        throw HypothesisError("floor_ceiling_construction requires the residue of s "
                              "mod c to be at least (c-1)/2, got r=" +
                              std::to_string(r) + " for c=" + std::to_string(c));
    int u = s / c;
    if (u == 0)
        throw DegenerateError("floor_ceiling_construction requires s >= c so that "
                              "floor(s/c) is positive");
    int v = u + 1;
    int k = 2 * u * v;
    GroupSpec G(c, c * k);
    GeneratorSet A{G.element(1, u), G.element(1, v)};
    return {ConstructionKind::floor_ceiling, G, A, s};
}

Construction prime_divisor_construction(int s, int p) {
    if (s < 1) throw std::invalid_argument("prime_divisor_construction requires s >= 1");
    if (p < 2 || !is_prime(p))
        throw DivisibilityError("prime_divisor_construction requires a prime p, got " +
                                std::to_string(p));
    int q = 2 * s + 1;
    if (q % p != 0)
        throw DivisibilityError(std::to_string(p) + " does not divide 2s+1 = " +
                                std::to_string(q));
    int t = q / p;
    if (t < 2)
        throw DivisibilityError("2s+1 must be a proper multiple of p; got t = " +
                                std::to_string(t));
    Construction built = floor_ceiling_construction(p, s);
    built.kind = ConstructionKind::prime_divisor;
    return built;
}

Construction z2_construction(int s, int k) {
    if (s < 1) throw std::invalid_argument("z2_construction requires s >= 1");
    std::int64_t cap = s % 2 == 1 ? (static_cast<std::int64_t>(s) * s - 1) / 2
                                  : (static_cast<std::int64_t>(s) * s - s) / 2;
    if (k < 1 || k > cap)
        throw RangeError("z2_construction requires 1 <= k <= " + std::to_string(cap) +
                         " at s=" + std::to_string(s) + ", got k=" + std::to_string(k));
    int u = s % 2 == 1 ? (s - 1) / 2 : (s - 2) / 2;
    int v = u + 1;
    GroupSpec G(2, 2 * k);
    GeneratorSet A{G.element(1, u), G.element(1, v)};
    return {ConstructionKind::z2_family, G, A, s};
}

Construction directed_noncyclic_basis(int s) {
    if (s < 1) throw std::invalid_argument("directed_noncyclic_basis requires s >= 1");
    if (s % 3 != 1)
        throw CongruenceError("directed_noncyclic_basis requires s to be 1 mod 3, "
                              "got s=" + std::to_string(s));
    int k = (s + 2) / 3;
    GroupSpec G(k, 3 * k);
    GeneratorSet A{G.element(0, 1), G.element(1, 3 * k - 1)};
    Construction built{ConstructionKind::directed_basis, G, A, s};
    built.claims_directed_basis = true;
    built.degenerate = k == 1;
    return built;
}

}  // namespace spanlab
