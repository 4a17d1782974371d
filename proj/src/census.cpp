#include "spanlab/census.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "spanlab/errors.hpp"
#include "spanlab/span.hpp"

namespace spanlab::census {

namespace {

using ordered_json = nlohmann::ordered_json;

std::int64_t negated_index(const GroupSpec& G, std::int64_t idx) {
    return G.index(G.neg(G.element_at(idx)));
}

// Unordered pairs are scanned ascending by (i, j). A pair is canonical when
// it is lexicographically no larger than its memberwise negation; exactly
// one of each {A, -A} orbit survives, and coverage is negation invariant,
// so skipping the other member loses nothing.
bool pair_is_canonical(const GroupSpec& G, std::int64_t i, std::int64_t j) {
    std::int64_t ni = negated_index(G, i);
    std::int64_t nj = negated_index(G, j);
    if (ni > nj) std::swap(ni, nj);
    return std::pair(i, j) <= std::pair(ni, nj);
}

SearchOutcome scan_pairs(const GroupSpec& G, int s, bool directed) {
    if (s < 1) throw std::invalid_argument("pair searches require s >= 1");
    std::int64_t N = G.order();
    for (std::int64_t i = 0; i + 1 < N; ++i) {
        Element a = G.element_at(i);
        for (std::int64_t j = i + 1; j < N; ++j) {
            if (!pair_is_canonical(G, i, j)) continue;
            Element b = G.element_at(j);
            if (!G.generates(a, b)) continue;
            GeneratorSet A{a, b};
            bool covers = directed ? bfs_ball(G, A, s, true).full()
                                   : signed_span(G, A, s).full();
            if (covers) return {true, A};
        }
    }
    return {false, std::nullopt};
}

void parallel_over(std::size_t count, int threads,
                   const std::function<void(std::size_t)>& work) {
    threads = std::min<int>(threads, static_cast<int>(count));
    if (threads <= 1) {
        for (std::size_t i = 0; i < count; ++i) work(i);
        return;
    }
    // Contiguous chunks, one per worker. Each index is processed exactly
    // once and lands in a preassigned slot, so results do not depend on
    // scheduling.
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) {
        std::size_t lo = count * static_cast<std::size_t>(w) / static_cast<std::size_t>(threads);
        std::size_t hi = count * (static_cast<std::size_t>(w) + 1) / static_cast<std::size_t>(threads);
        pool.emplace_back([lo, hi, &work] {
            for (std::size_t i = lo; i < hi; ++i) work(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace

SearchOutcome has_spanning_pair(const GroupSpec& G, int s) {
    return scan_pairs(G, s, false);
}

SearchOutcome has_basis_pair(const GroupSpec& G, int s) {
    return scan_pairs(G, s, true);
}

SearchOutcome is_s_regular(const GroupSpec& G, int s) {
    if (s < 1) throw std::invalid_argument("is_s_regular requires s >= 1");
    if (G.is_cyclic())
        throw RankError("is_s_regular is defined only for rank-2 groups, got " +
                        G.to_string());
    int n = G.n();
    for (int u = 0; u + 1 < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            // {(1,u), (1,v)} negates to {(c-1, n-u), (c-1, n-v)}; within the
            // special form the orbit pairing works on (u, v) alone only when
            // c == 2, where (1,u) negates to (1, n-u). For larger c the
            // negated set leaves the form, so every pair is scanned.
            if (G.c() == 2) {
                int nu = u == 0 ? 0 : n - u;
                int nv = v == 0 ? 0 : n - v;
                if (nu > nv) std::swap(nu, nv);
                if (std::pair(u, v) > std::pair(nu, nv)) continue;
            }
            Element a = G.element(1, u);
            Element b = G.element(1, v);
            if (!G.generates(a, b)) continue;
            GeneratorSet A{a, b};
            if (signed_span(G, A, s).full()) return {true, A};
        }
    }
    return {false, std::nullopt};
}

std::vector<CensusRecord> rank2_census(int s, int threads,
                                       std::optional<std::int64_t> max_order) {
    if (s < 1) throw std::invalid_argument("rank2_census requires s >= 1");
    std::int64_t cutoff = max_order.value_or(index_set_size(s));
    std::vector<GroupSpec> groups = enumerate_rank2_groups(cutoff);

    std::vector<CensusRecord> rows;
    rows.reserve(groups.size());
    for (const GroupSpec& G : groups) rows.push_back(CensusRecord{G, s});

    parallel_over(rows.size(), threads, [&rows, s](std::size_t i) {
        CensusRecord& row = rows[i];
        auto started = std::chrono::steady_clock::now();
        SearchOutcome pair = has_spanning_pair(row.group, s);
        row.has_spanning_pair = pair.found;
        row.witness = pair.witness;
        if (pair.found) {
            SearchOutcome regular = is_s_regular(row.group, s);
            row.is_regular = regular.found;
            row.regular_witness = regular.witness;
        }
        row.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
                .count();
    });
    return rows;
}

const char* to_string(SearchKind kind) {
    switch (kind) {
        case SearchKind::cyclic: return "cyclic";
        case SearchKind::noncyclic: return "noncyclic";
        case SearchKind::z2: return "z2";
        case SearchKind::directed_cyclic: return "directed_cyclic";
        case SearchKind::directed_abelian: return "directed_abelian";
    }
    return "unknown";
}

std::optional<SearchKind> parse_search_kind(const std::string& tag) {
    for (SearchKind kind : {SearchKind::cyclic, SearchKind::noncyclic, SearchKind::z2,
                            SearchKind::directed_cyclic, SearchKind::directed_abelian})
        if (tag == to_string(kind)) return kind;
    return std::nullopt;
}

ExtremalReport extremal_order(SearchKind kind, int s) {
    if (s < 1) throw std::invalid_argument("extremal_order requires s >= 1");
    if (kind == SearchKind::noncyclic && s < 2)
        throw std::invalid_argument("the noncyclic search requires s >= 2");

    ExtremalReport report;
    report.kind = kind;
    report.s = s;

    bool directed = kind == SearchKind::directed_cyclic ||
                    kind == SearchKind::directed_abelian;
    std::int64_t ceiling = directed ? binomial(s + 2, 2) : index_set_size(s);

    auto candidates_at = [&](std::int64_t N) {
        std::vector<GroupSpec> out;
        switch (kind) {
            case SearchKind::cyclic:
            case SearchKind::directed_cyclic:
                out.push_back(GroupSpec::cyclic(static_cast<int>(N)));
                break;
            case SearchKind::noncyclic:
                out = groups_of_order(N, false);
                break;
            case SearchKind::z2:
                if (N % 4 == 0) out.emplace_back(2, static_cast<int>(N / 2));
                break;
            case SearchKind::directed_abelian:
                out = groups_of_order(N, true);
                break;
        }
        return out;
    };

    for (std::int64_t N = ceiling; N >= 2 && report.max_order == 0; --N) {
        for (const GroupSpec& G : candidates_at(N)) {
            SearchOutcome found =
                directed ? has_basis_pair(G, s) : has_spanning_pair(G, s);
            if (found.found) {
                report.max_order = N;
                report.attaining.push_back(G);
                report.witnesses.push_back(*found.witness);
            }
        }
    }

    switch (kind) {
        case SearchKind::cyclic:
            report.formula_value = extremal_formula(ExtremalFormula::undirected_cyclic, s);
            break;
        case SearchKind::noncyclic:
            report.formula_value =
                extremal_formula(ExtremalFormula::conjectured_noncyclic, s);
            break;
        case SearchKind::z2:
            report.formula_value = extremal_formula(ExtremalFormula::undirected_z2, s);
            break;
        case SearchKind::directed_cyclic:
            report.formula_value = extremal_formula(ExtremalFormula::directed_cyclic, s);
            break;
        case SearchKind::directed_abelian:
            report.formula_value = extremal_formula(ExtremalFormula::directed_abelian, s);
            break;
    }
    report.agrees = report.max_order == report.formula_value;
    return report;
}

RegularExtremalReport max_regular_order(int s) {
    if (s < 1) throw std::invalid_argument("max_regular_order requires s >= 1");
    RegularExtremalReport report;
    report.s = s;
    report.bound = extremal_formula(ExtremalFormula::sregular_max, s);

    for (const GroupSpec& G : enumerate_rank2_groups(index_set_size(s))) {
        SearchOutcome regular = is_s_regular(G, s);
        if (!regular.found) continue;
        if (G.order() > report.max_order) {
            report.max_order = G.order();
            report.attaining.clear();
            report.witnesses.clear();
        }
        if (G.order() == report.max_order) {
            report.attaining.push_back(G);
            report.witnesses.push_back(*regular.witness);
        }
    }
    report.attains_bound =
        !report.attaining.empty() && report.max_order == report.bound;
    return report;
}

namespace {

// Rank-3 abelian groups in divisor-chain form d1 | d2 | d3, used only to
// certify that perfect censuses lose nothing by restricting the main scan
// to rank <= 2.
struct ChainGroup {
    std::array<int, 3> d;

    std::int64_t order() const {
        return static_cast<std::int64_t>(d[0]) * d[1] * d[2];
    }

    std::array<int, 3> decode(std::int64_t idx) const {
        std::array<int, 3> e{};
        e[2] = static_cast<int>(idx % d[2]);
        idx /= d[2];
        e[1] = static_cast<int>(idx % d[1]);
        e[0] = static_cast<int>(idx / d[1]);
        return e;
    }

    std::int64_t encode(const std::array<int, 3>& e) const {
        return (static_cast<std::int64_t>(e[0]) * d[1] + e[1]) * d[2] + e[2];
    }

    std::int64_t negate(std::int64_t idx) const {
        auto e = decode(idx);
        for (int i = 0; i < 3; ++i)
            if (e[i] != 0) e[i] = d[i] - e[i];
        return encode(e);
    }
};

std::vector<ChainGroup> rank3_groups_of_order(std::int64_t N) {
    std::vector<ChainGroup> out;
    for (std::int64_t d1 = 2; d1 * d1 * d1 <= N; ++d1) {
        if (N % d1 != 0) continue;
        for (std::int64_t d2 = d1; d1 * d2 * d2 <= N; d2 += d1) {
            if ((N / d1) % d2 != 0) continue;
            std::int64_t d3 = N / (d1 * d2);
            if (d3 % d2 != 0) continue;
            out.push_back({{static_cast<int>(d1), static_cast<int>(d2),
                            static_cast<int>(d3)}});
        }
    }
    return out;
}

// Uniqueness of representation over a rank-3 group, mirroring the rank <= 2
// perfect-set checks.
bool chain_perfect(const ChainGroup& G, const std::vector<std::array<int, 3>>& members,
                   int s, bool signed_coeffs) {
    std::vector<std::uint8_t> hits(static_cast<std::size_t>(G.order()), 0);
    bool unique = true;
    std::array<int, 3> acc{};

    auto walk = [&](auto&& self, std::size_t coord, int budget) -> void {
        if (!unique) return;
        if (coord == members.size()) {
            auto& h = hits[static_cast<std::size_t>(G.encode(acc))];
            if (++h > 1) unique = false;
            return;
        }
        int lo = signed_coeffs ? -budget : 0;
        for (int l = lo; l <= budget; ++l) {
            std::array<int, 3> saved = acc;
            for (int i = 0; i < 3; ++i) {
                std::int64_t v = (acc[i] + static_cast<std::int64_t>(l) * members[coord][i]) % G.d[i];
                acc[i] = static_cast<int>(v < 0 ? v + G.d[i] : v);
            }
            self(self, coord + 1, budget - std::abs(l));
            acc = saved;
        }
    };
    walk(walk, 0, s);
    if (!unique) return false;
    for (std::uint8_t h : hits)
        if (h != 1) return false;
    return true;
}

void scan_rank3(std::int64_t target, int m, int s, bool basis,
                std::vector<std::string>& findings) {
    for (const ChainGroup& G : rank3_groups_of_order(target)) {
        std::int64_t N = G.order();
        std::vector<std::int64_t> indices(static_cast<std::size_t>(m));
        std::vector<std::array<int, 3>> members(static_cast<std::size_t>(m));

        auto choose = [&](auto&& self, int slot, std::int64_t from) -> void {
            if (slot == m) {
                std::vector<std::int64_t> flipped(indices);
                for (auto& idx : flipped) idx = G.negate(idx);
                std::sort(flipped.begin(), flipped.end());
                if (indices > flipped) return;
                for (int i = 0; i < m; ++i)
                    members[static_cast<std::size_t>(i)] =
                        G.decode(indices[static_cast<std::size_t>(i)]);
                if (chain_perfect(G, members, s, !basis)) {
                    std::string desc = std::to_string(G.d[0]) + "x" +
                                       std::to_string(G.d[1]) + "x" +
                                       std::to_string(G.d[2]) + " indices";
                    for (auto idx : indices) desc += " " + std::to_string(idx);
                    findings.push_back(desc);
                }
                return;
            }
            for (std::int64_t i = from; i < N; ++i) {
                indices[static_cast<std::size_t>(slot)] = i;
                self(self, slot + 1, i + 1);
            }
        };
        choose(choose, 0, 0);
    }
}

PerfectCensusReport perfect_scan(int m, int s, std::int64_t order_cap, bool basis) {
    if (m < 1 || m > 3)
        throw std::invalid_argument("perfect censuses support 1 <= m <= 3");
    if (s < 1) throw std::invalid_argument("perfect censuses require s >= 1");

    std::int64_t target = basis ? binomial(m + s, s) : delannoy(m, s);
    if (target > order_cap)
        throw CapExceededError("perfect census target order " + std::to_string(target) +
                               " exceeds the cap " + std::to_string(order_cap));

    PerfectCensusReport report;
    report.m = m;
    report.s = s;
    report.target_order = target;

    for (const GroupSpec& G : groups_of_order(target, true)) {
        std::int64_t N = G.order();
        std::vector<std::int64_t> indices(static_cast<std::size_t>(m));

        auto choose = [&](auto&& self, int slot, std::int64_t from) -> void {
            if (slot == m) {
                std::vector<std::int64_t> flipped(indices);
                for (auto& idx : flipped) idx = negated_index(G, idx);
                std::sort(flipped.begin(), flipped.end());
                if (indices > flipped) return;
                std::vector<Element> members;
                members.reserve(static_cast<std::size_t>(m));
                for (auto idx : indices) members.push_back(G.element_at(idx));
                GeneratorSet A(std::move(members));
                bool perfect = basis ? is_perfect_s_basis(G, A, s)
                                     : is_perfect_s_spanning(G, A, s);
                if (perfect) report.found.push_back({G, A});
                return;
            }
            for (std::int64_t i = from; i < N; ++i) {
                indices[static_cast<std::size_t>(slot)] = i;
                self(self, slot + 1, i + 1);
            }
        };
        choose(choose, 0, 0);
    }

    scan_rank3(target, m, s, basis, report.rank3_findings);
    return report;
}

}  // namespace

PerfectCensusReport perfect_census(int m, int s, std::int64_t order_cap) {
    return perfect_scan(m, s, order_cap, false);
}

PerfectCensusReport perfect_basis_census(int m, int s, std::int64_t order_cap) {
    return perfect_scan(m, s, order_cap, true);
}

std::vector<Z2ProbeRow> z2_family_probe(int s) {
    if (s < 1) throw std::invalid_argument("z2_family_probe requires s >= 1");
    std::vector<Z2ProbeRow> rows;
    int k_max = s * s / 2 + 2;
    for (int k = 1; k <= k_max; ++k) {
        Z2ProbeRow row;
        row.k = k;
        GroupSpec G(2, 2 * k);
        row.order = G.order();
        row.has_pair = has_spanning_pair(G, s).found;
        std::int64_t sq = static_cast<std::int64_t>(s) * s;
        if (s % 2 == 1) {
            row.predicted = k <= (sq - 1) / 2;
        } else {
            bool base = k <= (sq - s) / 2;
            bool extended = false;
            if (s % 4 == 0) extended = k % 2 == 0 && k <= sq / 2;
            if (s % 4 == 2) extended = k % 4 == 2 && k <= sq / 2;
            row.predicted = base || extended;
        }
        rows.push_back(row);
    }
    return rows;
}

namespace {

std::string bool_text(bool v) { return v ? "true" : "false"; }

ordered_json set_to_json(const std::optional<GeneratorSet>& set) {
    if (!set) return nullptr;
    auto arr = ordered_json::array();
    for (Element e : *set) arr.push_back({e.x, e.y});
    return arr;
}

}  // namespace

std::string census_to_csv(const std::vector<CensusRecord>& rows) {
    std::string out =
        "group,s,order,c,n,has_spanning_pair,witness,is_regular,regular_witness\n";
    for (const CensusRecord& row : rows) {
        out += row.group.to_string() + ',' + std::to_string(row.s) + ',' +
               std::to_string(row.group.order()) + ',' + std::to_string(row.group.c()) +
               ',' + std::to_string(row.group.n()) + ',' +
               bool_text(row.has_spanning_pair) + ',' +
               (row.witness ? row.witness->to_string() : std::string()) + ',' +
               bool_text(row.is_regular) + ',' +
               (row.regular_witness ? row.regular_witness->to_string() : std::string()) +
               '\n';
    }
    return out;
}

std::string census_to_jsonl(const std::vector<CensusRecord>& rows) {
    std::string out;
    for (const CensusRecord& row : rows) {
        ordered_json doc;
        doc["group"] = row.group.to_string();
        doc["s"] = row.s;
        doc["order"] = row.group.order();
        doc["c"] = row.group.c();
        doc["n"] = row.group.n();
        doc["has_spanning_pair"] = row.has_spanning_pair;
        doc["witness"] = set_to_json(row.witness);
        doc["is_regular"] = row.is_regular;
        doc["regular_witness"] = set_to_json(row.regular_witness);
        out += doc.dump();
        out += '\n';
    }
    return out;
}

std::string probe_to_csv(const std::vector<Z2ProbeRow>& rows, int s) {
    std::string out = "s,k,order,has_spanning_pair,predicted,matches\n";
    for (const Z2ProbeRow& row : rows) {
        out += std::to_string(s) + ',' + std::to_string(row.k) + ',' +
               std::to_string(row.order) + ',' + bool_text(row.has_pair) + ',' +
               bool_text(row.predicted) + ',' + bool_text(row.matches()) + '\n';
    }
    return out;
}

std::string probe_to_jsonl(const std::vector<Z2ProbeRow>& rows, int s) {
    std::string out;
    for (const Z2ProbeRow& row : rows) {
        ordered_json doc;
        doc["s"] = s;
        doc["k"] = row.k;
        doc["order"] = row.order;
        doc["has_spanning_pair"] = row.has_pair;
        doc["predicted"] = row.predicted;
        doc["matches"] = row.matches();
        out += doc.dump();
        out += '\n';
    }
    return out;
}

}  // namespace spanlab::census
