#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "spanlab/bitmap.hpp"
#include "spanlab/group.hpp"

namespace spanlab {

/**
 * Coverage of a group by signed combinations of a generator set.
 *
 * covered holds one bit per element index; cover_count == covered.count().
 * full() means every element of the group was reached.
 */
struct SpanResult {
    GroupSpec group;
    GeneratorSet generators;
    int s = 0;
    Bitmap covered;
    std::int64_t cover_count = 0;

    bool full() const { return cover_count == group.order(); }
};

/**
 * The set of all sums l_1 a_1 + ... + l_m a_m with sum |l_i| <= s,
 * computed by direct enumeration of coefficient vectors.
 *
 * Requires s >= 0. The s == 0 result contains exactly the zero element.
 */
SpanResult signed_span(const GroupSpec& G, const GeneratorSet& A, int s);

/**
 * The ball of radius s around 0 in the Cayley graph on generators A,
 * computed by breadth-first search. Steps use +a and -a for each member;
 * directed_only restricts steps to +a.
 *
 * For directed_only == false this equals signed_span(G, A, s) and serves
 * as its independent cross-check.
 */
SpanResult bfs_ball(const GroupSpec& G, const GeneratorSet& A, int s,
                    bool directed_only = false);

/**
 * Eccentricity of 0 in a Cayley graph. The graph is vertex transitive, so
 * this equals the graph diameter. finite == false means A does not generate
 * G and value/witness are meaningless; when finite, witness is the
 * least-index element at maximum distance.
 */
struct DiameterResult {
    bool finite = false;
    int value = 0;
    Element witness{};

    std::string to_string() const;
};

/// Diameter of the undirected Cayley graph (steps +a and -a).
DiameterResult undirected_diameter(const GroupSpec& G, const GeneratorSet& A);

/// Eccentricity of 0 in the directed Cayley graph (steps +a only). This is
/// the least s such that every element is a sum of at most s generators,
/// or infinite when no such s exists.
DiameterResult directed_covering_radius(const GroupSpec& G, const GeneratorSet& A);

/// True when every element of G has exactly one representation
/// l_1 a_1 + ... + l_m a_m with sum |l_i| <= s. Implies
/// order(G) == delannoy(m, s). Requires s >= 0.
bool is_perfect_s_spanning(const GroupSpec& G, const GeneratorSet& A, int s);

/// True when every element of G has exactly one representation as a sum of
/// at most s generators with nonnegative multiplicities. Implies
/// order(G) == C(m + s, s). Requires s >= 0.
bool is_perfect_s_basis(const GroupSpec& G, const GeneratorSet& A, int s);

}  // namespace spanlab
