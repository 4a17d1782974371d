#include "spanlab/certificate.hpp"

#include <cstdlib>
#include <stdexcept>

#include <json.hpp>

#include "spanlab/errors.hpp"

namespace spanlab {

namespace {

using ordered_json = nlohmann::ordered_json;

// Enumerates coefficient vectors with sum |l_j| exactly equal to `total`,
// ascending lexicographically, and assigns each uncovered element its
// vector. Combined with an outer loop over total = 0..s this realizes the
// canonical tie-break: smallest coefficient weight first, then smallest
// vector in lexicographic order.
void assign_layer(const GroupSpec& G, const GeneratorSet& A, int coord, int total,
                  Element prefix, std::vector<int>& current,
                  std::vector<std::vector<int>>& assignments, std::int64_t& remaining) {
    if (remaining == 0) return;
    if (coord == A.size() - 1) {
        for (int l : {-total, total}) {
            current[static_cast<std::size_t>(coord)] = l;
            Element e = G.add(prefix, G.scalar_mul(l, A[coord]));
            auto& slot = assignments[static_cast<std::size_t>(G.index(e))];
            if (slot.empty()) {
                slot = current;
                --remaining;
            }
            if (total == 0) break;
        }
        return;
    }
    for (int l = -total; l <= total; ++l) {
        current[static_cast<std::size_t>(coord)] = l;
        assign_layer(G, A, coord + 1, total - std::abs(l),
                     G.add(prefix, G.scalar_mul(l, A[coord])), current, assignments,
                     remaining);
    }
}

std::int64_t get_checked_int(const ordered_json& node, const char* where) {
    if (!node.is_number_integer())
        throw std::invalid_argument(std::string("certificate: ") + where +
                                    " must be an integer");
    auto v = node.get<std::int64_t>();
    if (v < -1000000000 || v > 1000000000)
        throw std::invalid_argument(std::string("certificate: ") + where +
                                    " out of range");
    return v;
}

}  // namespace

SpanCertificate make_certificate(const GroupSpec& G, const GeneratorSet& A, int s) {
    if (s < 0) throw std::invalid_argument("make_certificate requires s >= 0");
    SpanCertificate cert{G, A, s, {}};
    cert.assignments.assign(static_cast<std::size_t>(G.order()), {});

    std::int64_t remaining = G.order();
    std::vector<int> current(static_cast<std::size_t>(A.size()), 0);
    for (int total = 0; total <= s && remaining > 0; ++total)
        assign_layer(G, A, 0, total, G.zero(), current, cert.assignments, remaining);

    if (remaining > 0) {
        std::int64_t missing = 0;
        while (!cert.assignments[static_cast<std::size_t>(missing)].empty()) ++missing;
        throw NotSpanningError("element " + std::to_string(missing) + " of " +
                               G.to_string() + " is not covered at radius " +
                               std::to_string(s));
    }
    return cert;
}

VerifyResult verify_certificate(const SpanCertificate& cert) {
    const GroupSpec& G = cert.group;
    if (cert.s < 0) return {false, "negative radius"};
    if (static_cast<std::int64_t>(cert.assignments.size()) != G.order())
        return {false, "expected " + std::to_string(G.order()) +
                           " assignments, found " +
                           std::to_string(cert.assignments.size())};

    for (std::int64_t i = 0; i < G.order(); ++i) {
        const auto& coeffs = cert.assignments[static_cast<std::size_t>(i)];
        if (static_cast<int>(coeffs.size()) != cert.generators.size())
            return {false, "assignment " + std::to_string(i) +
                               " has the wrong number of coefficients"};
        std::int64_t weight = 0;
        Element sum = G.zero();
        for (int j = 0; j < cert.generators.size(); ++j) {
            weight += std::abs(coeffs[static_cast<std::size_t>(j)]);
            sum = G.add(sum, G.scalar_mul(coeffs[static_cast<std::size_t>(j)],
                                          cert.generators[j]));
        }
        if (weight > cert.s)
            return {false, "assignment " + std::to_string(i) + " has weight " +
                               std::to_string(weight) + " above radius " +
                               std::to_string(cert.s)};
        if (sum != G.element_at(i))
            return {false, "assignment " + std::to_string(i) +
                               " does not reproduce its element"};
    }
    return {true, ""};
}

std::string certificate_to_json(const SpanCertificate& cert) {
    ordered_json doc;
    doc["group"] = cert.group.to_string();
    auto gens = ordered_json::array();
    for (Element e : cert.generators) gens.push_back({e.x, e.y});
    doc["generators"] = std::move(gens);
    doc["s"] = cert.s;
    doc["assignments"] = cert.assignments;
    return doc.dump();
}

SpanCertificate certificate_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("certificate: not valid JSON: ") +
                                    e.what());
    }
    if (!doc.is_object() || !doc.contains("group") || !doc.contains("generators") ||
        !doc.contains("s") || !doc.contains("assignments"))
        throw std::invalid_argument(
            "certificate: required keys are group, generators, s, assignments");
    if (!doc["group"].is_string())
        throw std::invalid_argument("certificate: group must be a string");

    GroupSpec G = GroupSpec::parse(doc["group"].get<std::string>());

    if (!doc["generators"].is_array() || doc["generators"].empty())
        throw std::invalid_argument("certificate: generators must be a nonempty array");
    std::vector<Element> members;
    for (const auto& node : doc["generators"]) {
        if (!node.is_array() || node.size() != 2)
            throw std::invalid_argument("certificate: each generator is a pair [x, y]");
        auto x = get_checked_int(node[0], "generator coordinate");
        auto y = get_checked_int(node[1], "generator coordinate");
        if (x < 0 || x >= G.c() || y < 0 || y >= G.n())
            throw std::invalid_argument("certificate: generator coordinates must be "
                                        "reduced modulo the group");
        members.push_back({static_cast<int>(x), static_cast<int>(y)});
    }

    int s = static_cast<int>(get_checked_int(doc["s"], "s"));

    if (!doc["assignments"].is_array())
        throw std::invalid_argument("certificate: assignments must be an array");
    std::vector<std::vector<int>> assignments;
    assignments.reserve(doc["assignments"].size());
    for (const auto& row : doc["assignments"]) {
        if (!row.is_array())
            throw std::invalid_argument("certificate: each assignment is an array");
        std::vector<int> coeffs;
        coeffs.reserve(row.size());
        for (const auto& node : row)
            coeffs.push_back(static_cast<int>(get_checked_int(node, "coefficient")));
        assignments.push_back(std::move(coeffs));
    }

    return SpanCertificate{G, GeneratorSet(std::move(members)), s,
                           std::move(assignments)};
}

}  // namespace spanlab
