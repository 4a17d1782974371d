#pragma once

#include <sys/wait.h>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "spanlab/group.hpp"

namespace testsupport {

// Deterministic generator for every sampled quantity in the suite, so runs
// are reproducible bit for bit.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Modulo bias is irrelevant at test scales.
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }

    int range(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }
};

// Reference count of representations sum l_i * a_i per element index, by a
// plain odometer over the coefficient box [-s, s]^m (or [0, s]^m), filtered
// by total weight. Shares nothing with the engine's incremental walks.
inline std::map<std::int64_t, int> oracle_rep_counts(const spanlab::GroupSpec& G,
                                                     const std::vector<spanlab::Element>& members,
                                                     int s, bool signed_coeffs) {
    std::map<std::int64_t, int> counts;
    std::vector<int> lambda(members.size(), signed_coeffs ? -s : 0);
    while (true) {
        int weight = 0;
        for (int l : lambda) weight += l < 0 ? -l : l;
        if (weight <= s) {
            spanlab::Element sum = G.zero();
            for (std::size_t j = 0; j < members.size(); ++j)
                sum = G.add(sum, G.scalar_mul(lambda[j], members[j]));
            counts[G.index(sum)] += 1;
        }
        std::size_t pos = 0;
        while (pos < lambda.size() && lambda[pos] == s) {
            lambda[pos] = signed_coeffs ? -s : 0;
            ++pos;
        }
        if (pos == lambda.size()) break;
        lambda[pos] += 1;
    }
    return counts;
}

inline std::set<std::int64_t> oracle_span(const spanlab::GroupSpec& G,
                                          const std::vector<spanlab::Element>& members,
                                          int s) {
    std::set<std::int64_t> covered;
    for (const auto& [idx, count] : oracle_rep_counts(G, members, s, true))
        covered.insert(idx);
    return covered;
}

// Graph diameter by breadth-first search from every vertex, for the
// vertex-transitivity cross-check. Returns -1 when some pair is
// unreachable.
inline int oracle_all_pairs_diameter(const spanlab::GroupSpec& G,
                                     const std::vector<spanlab::Element>& members,
                                     bool directed) {
    const std::int64_t N = G.order();
    int diameter = 0;
    std::vector<int> dist(static_cast<std::size_t>(N));
    std::vector<std::int64_t> queue;
    for (std::int64_t start = 0; start < N; ++start) {
        std::fill(dist.begin(), dist.end(), -1);
        dist[static_cast<std::size_t>(start)] = 0;
        queue.assign(1, start);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            std::int64_t u = queue[head];
            spanlab::Element e = G.element_at(u);
            for (spanlab::Element g : members) {
                for (int sign = 0; sign < (directed ? 1 : 2); ++sign) {
                    spanlab::Element t = sign == 0 ? G.add(e, g) : G.sub(e, g);
                    std::int64_t v = G.index(t);
                    if (dist[static_cast<std::size_t>(v)] < 0) {
                        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
                        queue.push_back(v);
                    }
                }
            }
        }
        for (int d : dist) {
            if (d < 0) return -1;
            if (d > diameter) diameter = d;
        }
    }
    return diameter;
}

struct CommandResult {
    int exit_code = -1;
    std::string output;
};

// Runs a shell command capturing standard output only.
inline CommandResult run_command(const std::string& command) {
    CommandResult result;
    FILE* pipe = popen(command.c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0)
        result.output.append(buffer, got);
    int status = pclose(pipe);
    if (status >= 0 && WIFEXITED(status)) result.exit_code = WEXITSTATUS(status);
    return result;
}

}  // namespace testsupport
