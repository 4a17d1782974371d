#include "spanlab/span.hpp"

#include <cstdlib>
#include <stdexcept>
#include <vector>

namespace spanlab {

namespace {

// Enumerates coefficient vectors over generators coord..m-1 with |l| budget
// remaining, adding each partial sum's final element to the cover. Prefix
// sums are carried as elements, so each leaf costs one addition.
void span_recurse(const GroupSpec& G, const GeneratorSet& A, int coord,
                  int budget, Element prefix, Bitmap& cover) {
    if (coord == A.size() - 1) {
        // Last coordinate: walk l from -budget to budget incrementally.
        Element step = A[coord];
        Element e = G.add(prefix, G.scalar_mul(-budget, step));
        cover.set(G.index(e));
        for (int l = -budget; l < budget; ++l) {
            e = G.add(e, step);
            cover.set(G.index(e));
        }
        return;
    }
    Element step = A[coord];
    Element e = G.add(prefix, G.scalar_mul(-budget, step));
    for (int l = -budget; l <= budget; ++l) {
        span_recurse(G, A, coord + 1, budget - std::abs(l), e, cover);
        if (l < budget) e = G.add(e, step);
    }
}

}  // namespace

SpanResult signed_span(const GroupSpec& G, const GeneratorSet& A, int s) {
    if (s < 0) throw std::invalid_argument("signed_span requires s >= 0");
    SpanResult result{G, A, s, Bitmap(G.order()), 0};
    span_recurse(G, A, 0, s, G.zero(), result.covered);
    result.cover_count = result.covered.count();
    return result;
}

SpanResult bfs_ball(const GroupSpec& G, const GeneratorSet& A, int s,
                    bool directed_only) {
    if (s < 0) throw std::invalid_argument("bfs_ball requires s >= 0");
    SpanResult result{G, A, s, Bitmap(G.order()), 0};
    Bitmap& reached = result.covered;
    reached.set(0);

    std::vector<Element> frontier{G.zero()};
    std::vector<Element> next;
    for (int round = 0; round < s && !frontier.empty(); ++round) {
        next.clear();
        for (Element e : frontier) {
            for (Element g : A) {
                Element fwd = G.add(e, g);
                if (std::int64_t i = G.index(fwd); !reached.test(i)) {
                    reached.set(i);
                    next.push_back(fwd);
                }
                if (directed_only) continue;
                Element bwd = G.sub(e, g);
                if (std::int64_t i = G.index(bwd); !reached.test(i)) {
                    reached.set(i);
                    next.push_back(bwd);
                }
            }
        }
        frontier.swap(next);
    }
    result.cover_count = reached.count();
    return result;
}

namespace {

DiameterResult eccentricity_of_zero(const GroupSpec& G, const GeneratorSet& A,
                                    bool directed_only) {
    Bitmap reached(G.order());
    reached.set(0);
    std::int64_t seen = 1;

    DiameterResult result;
    result.value = 0;
    result.witness = G.zero();

    std::vector<Element> frontier{G.zero()};
    std::vector<Element> next;
    int depth = 0;
    while (!frontier.empty() && seen < G.order()) {
        ++depth;
        next.clear();
        for (Element e : frontier) {
            for (Element g : A) {
                Element fwd = G.add(e, g);
                if (std::int64_t i = G.index(fwd); !reached.test(i)) {
                    reached.set(i);
                    next.push_back(fwd);
                }
                if (directed_only) continue;
                Element bwd = G.sub(e, g);
                if (std::int64_t i = G.index(bwd); !reached.test(i)) {
                    reached.set(i);
                    next.push_back(bwd);
                }
            }
        }
        if (next.empty()) break;
        seen += static_cast<std::int64_t>(next.size());
        result.value = depth;
        // Least-index element of the deepest layer.
        Element least = next.front();
        std::int64_t least_idx = G.index(least);
        for (Element e : next)
            if (std::int64_t i = G.index(e); i < least_idx) {
                least_idx = i;
                least = e;
            }
        result.witness = least;
        frontier.swap(next);
    }
    result.finite = seen == G.order();
    return result;
}

// Shared uniqueness check for both perfect-set notions. Counts the
// representations of every element for coefficient vectors in the signed
// ball (lo = -budget) or the nonnegative simplex (lo = 0).
bool unique_cover(const GroupSpec& G, const GeneratorSet& A, int s, bool signed_coeffs) {
    std::vector<std::uint8_t> hits(static_cast<std::size_t>(G.order()), 0);
    bool unique = true;

    // Iterative enumeration over vectors would obscure the budget carry;
    // a small recursive lambda keeps the coefficient order explicit.
    auto walk = [&](auto&& self, int coord, int budget, Element prefix) -> void {
        if (!unique) return;
        if (coord == A.size()) {
            std::size_t i = static_cast<std::size_t>(G.index(prefix));
            if (++hits[i] > 1) unique = false;
            return;
        }
        int lo = signed_coeffs ? -budget : 0;
        Element e = G.add(prefix, G.scalar_mul(lo, A[coord]));
        for (int l = lo; l <= budget; ++l) {
            self(self, coord + 1, budget - std::abs(l), e);
            if (l < budget) e = G.add(e, A[coord]);
        }
    };
    walk(walk, 0, s, G.zero());
    if (!unique) return false;
    for (std::uint8_t h : hits)
        if (h != 1) return false;
    return true;
}

}  // namespace

std::string DiameterResult::to_string() const {
    return finite ? std::to_string(value) : "INFINITE";
}

DiameterResult undirected_diameter(const GroupSpec& G, const GeneratorSet& A) {
    return eccentricity_of_zero(G, A, false);
}

DiameterResult directed_covering_radius(const GroupSpec& G, const GeneratorSet& A) {
    return eccentricity_of_zero(G, A, true);
}

bool is_perfect_s_spanning(const GroupSpec& G, const GeneratorSet& A, int s) {
    if (s < 0) throw std::invalid_argument("is_perfect_s_spanning requires s >= 0");
    return unique_cover(G, A, s, true);
}

bool is_perfect_s_basis(const GroupSpec& G, const GeneratorSet& A, int s) {
    if (s < 0) throw std::invalid_argument("is_perfect_s_basis requires s >= 0");
    return unique_cover(G, A, s, false);
}

}  // namespace spanlab
