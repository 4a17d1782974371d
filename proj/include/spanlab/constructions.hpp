#pragma once

#include <string>

#include "spanlab/group.hpp"

namespace spanlab {

enum class ConstructionKind {
    cyclic_pair,        // {s, s+1} in Z_n
    half_group,         // {(0,1), (1,1)} in Z_s x Z_2s
    floor_ceiling,      // {(1, floor(s/c)), (1, ceil(s/c))} in Z_c x Z_ck
    prime_divisor,      // floor_ceiling at c = p for p dividing 2s + 1
    z2_family,          // {(1,u), (1,v)} in Z_2 x Z_2k
    directed_basis,     // {(0,1), (1,3k-1)} in Z_k x Z_3k
};

const char* to_string(ConstructionKind kind);

/**
 * A generator set built by one of the closed-form families, together with
 * the claim it carries. claims_spanning instances must cover their group at
 * radius s with signed steps; claims_directed_basis instances must cover it
 * with nonnegative steps. degenerate marks instances whose group collapsed
 * to rank below 2, with duplicate members merged.
 */
struct Construction {
    ConstructionKind kind;
    GroupSpec group;
    GeneratorSet generators;
    int s = 0;
    bool claims_spanning = true;
    bool claims_directed_basis = false;
    bool degenerate = false;

    std::string describe() const;
};

/// {s mod n, (s+1) mod n} in Z_n. Spans for every n in [2, 2s^2 + 2s + 1];
/// RangeError outside that interval.
Construction cyclic_construction(int s, int n);

/// {(0,1), (1,1)} in Z_s x Z_2s, of order 2s^2. Requires s >= 1; the s == 1
/// instance collapses to the cyclic group of order 2 and is flagged
/// degenerate.
Construction half_construction(int s);

/// {(1,u), (1,v)} in Z_c x Z_ck with u = floor(s/c), v = ceil(s/c) and
/// k = 2uv. Requires c >= 2 and 2(s mod c) >= c - 1 (HypothesisError
/// otherwise) and u >= 1 (DegenerateError otherwise).
Construction floor_ceiling_construction(int c, int s);

/// The floor_ceiling instance at c = p for a prime p with p * t == 2s + 1
/// and t >= 2. The group Z_p x Z_pk with k = (t^2 - 1)/2 has order
/// 2s^2 + 2s - (p^2 - 1)/2. DivisibilityError when p is not prime, does not
/// divide 2s + 1, or t < 2.
Construction prime_divisor_construction(int s, int p);

/// {(1,u), (1,v)} in Z_2 x Z_2k with {u, v} = {(s-1)/2, (s+1)/2} for odd s
/// and {(s-2)/2, s/2} for even s. RangeError unless 1 <= k <= (s^2 - 1)/2
/// for odd s, 1 <= k <= (s^2 - s)/2 for even s.
Construction z2_construction(int s, int k);

/// {(0,1), (1,3k-1)} in Z_k x Z_3k with k = (s + 2)/3, every element a sum
/// of at most s members. Order (s^2 + 4s + 4)/3. CongruenceError unless
/// s mod 3 == 1. The s == 1 instance is cyclic and flagged degenerate.
Construction directed_noncyclic_basis(int s);

}  // namespace spanlab
