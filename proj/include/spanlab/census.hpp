#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "spanlab/combinatorics.hpp"
#include "spanlab/group.hpp"

namespace spanlab::census {

/**
 * Result of one exhaustive pair search. Searches scan unordered pairs
 * ascending by (index(a1), index(a2)), identify {a1, a2} with {-a1, -a2},
 * and report the first witness in that canonical order, so results are
 * reproducible across runs and thread counts.
 */
struct SearchOutcome {
    bool found = false;
    std::optional<GeneratorSet> witness;
};

/// Does G contain a 2-subset whose signed span at radius s is all of G?
/// Requires s >= 1. Groups of order below 2 never have one.
SearchOutcome has_spanning_pair(const GroupSpec& G, int s);

/// Does G contain a 2-subset covering G by sums of at most s members with
/// nonnegative multiplicities? Requires s >= 1.
SearchOutcome has_basis_pair(const GroupSpec& G, int s);

/// Does the rank-2 group Z_c x Z_ck have a spanning pair of the special
/// form {(1,u), (1,v)}? Scans 0 <= u < v < ck up to negation. Throws
/// RankError when G is cyclic.
SearchOutcome is_s_regular(const GroupSpec& G, int s);

/**
 * One row of the rank-2 census. regular_witness is set only when
 * is_regular is true. elapsed_seconds is wall-clock search time; it is
 * never serialized, so emitted censuses stay byte-identical across runs.
 */
struct CensusRecord {
    GroupSpec group;
    int s = 0;
    bool has_spanning_pair = false;
    std::optional<GeneratorSet> witness;
    bool is_regular = false;
    std::optional<GeneratorSet> regular_witness;
    double elapsed_seconds = 0.0;
};

/**
 * Census over every rank-2 group of order at most max_order, defaulting to
 * the coverage cutoff 2s^2 + 2s + 1. Rows are ordered by (order, c).
 * threads > 1 distributes groups across worker threads; rows keep the
 * same order and content regardless of thread count.
 */
std::vector<CensusRecord> rank2_census(int s, int threads = 1,
                                       std::optional<std::int64_t> max_order = std::nullopt);

/// Group families an extremal search can range over.
enum class SearchKind {
    cyclic,            // cyclic groups, signed steps
    noncyclic,         // rank-2 groups, signed steps
    z2,                // groups Z_2 x Z_2k, signed steps
    directed_cyclic,   // cyclic groups, nonnegative steps
    directed_abelian,  // all rank <= 2 groups, nonnegative steps
};

const char* to_string(SearchKind kind);
std::optional<SearchKind> parse_search_kind(const std::string& tag);

/**
 * Outcome of a descending exhaustive search for the largest group order in
 * a family admitting a covering pair. max_order == 0 means no group in the
 * family qualifies. formula_value is the matching closed-form prediction
 * (the conjectured one for noncyclic) and agrees compares it to the search.
 */
struct ExtremalReport {
    SearchKind kind;
    int s = 0;
    std::int64_t max_order = 0;
    std::vector<GroupSpec> attaining;
    std::vector<GeneratorSet> witnesses;
    std::int64_t formula_value = 0;
    bool agrees = false;
};

/// Exhaustive search downward from the coverage cutoff for the family.
/// Requires s >= 1, except noncyclic which requires s >= 2.
ExtremalReport extremal_order(SearchKind kind, int s);

/// Largest order among groups passing is_s_regular at radius s, with every
/// attaining group, compared against the closed-form bound 2s^2 + 2s - 4.
struct RegularExtremalReport {
    int s = 0;
    std::int64_t max_order = 0;
    std::vector<GroupSpec> attaining;
    std::vector<GeneratorSet> witnesses;
    std::int64_t bound = 0;
    bool attains_bound = false;
};

RegularExtremalReport max_regular_order(int s);

/**
 * One perfect set found by exhaustive search: every group element has a
 * unique representation under the set.
 */
struct PerfectSetRecord {
    GroupSpec group;
    GeneratorSet set;
};

/**
 * All perfect size-m sets at radius s, up to negating a whole set. Search
 * space: every abelian group of rank <= 2 whose order equals the unique
 * admissible one (delannoy(m, s) for spanning, C(m+s, s) for basis).
 * rank3_findings lists perfect sets found in rank-3 groups of the target
 * order; the main record type cannot carry those groups, and none are
 * expected to exist.
 */
struct PerfectCensusReport {
    int m = 0;
    int s = 0;
    std::int64_t target_order = 0;
    std::vector<PerfectSetRecord> found;
    std::vector<std::string> rank3_findings;
};

/// Requires 1 <= m <= 3 and s >= 1. CapExceededError when the target order
/// exceeds order_cap.
PerfectCensusReport perfect_census(int m, int s, std::int64_t order_cap = 200);
PerfectCensusReport perfect_basis_census(int m, int s, std::int64_t order_cap = 200);

/**
 * One row of the Z_2 x Z_2k spanning-pair probe. predicted is the
 * conjectured availability: k <= (s^2 - 1)/2 for odd s; for even s,
 * k <= (s^2 - s)/2, or k <= s^2/2 with k even when s mod 4 == 0, or
 * k <= s^2/2 with k mod 4 == 2 when s mod 4 == 2.
 */
struct Z2ProbeRow {
    int k = 0;
    std::int64_t order = 0;
    bool has_pair = false;
    bool predicted = false;

    bool matches() const { return has_pair == predicted; }
};

/// Ground truth versus prediction for all k in [1, s^2/2 + 2].
std::vector<Z2ProbeRow> z2_family_probe(int s);

/// CSV with header row; fields holding generator sets use "x:y;x:y".
std::string census_to_csv(const std::vector<CensusRecord>& rows);
/// One JSON object per line, same field names as the CSV columns.
std::string census_to_jsonl(const std::vector<CensusRecord>& rows);

std::string probe_to_csv(const std::vector<Z2ProbeRow>& rows, int s);
std::string probe_to_jsonl(const std::vector<Z2ProbeRow>& rows, int s);

}  // namespace spanlab::census
