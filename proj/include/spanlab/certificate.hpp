#pragma once

#include <string>
#include <vector>

#include "spanlab/group.hpp"

namespace spanlab {

/**
 * A machine-checkable witness that a generator set covers its group at
 * radius s. assignments[i] is the coefficient vector of the element with
 * index i, in the stored generator order.
 *
 * Valid certificates satisfy, for every element index i:
 *   sum |assignments[i][j]| <= s
 *   sum assignments[i][j] * generators[j] == element_at(i)
 */
struct SpanCertificate {
    GroupSpec group;
    GeneratorSet generators;
    int s = 0;
    std::vector<std::vector<int>> assignments;
};

/**
 * Builds the canonical certificate for a spanning instance. Each element
 * receives the first coefficient vector in the order: smallest sum |l_j|
 * first, ties broken lexicographically on (l_1, ..., l_m). Throws
 * NotSpanningError when some element is not covered at radius s.
 */
SpanCertificate make_certificate(const GroupSpec& G, const GeneratorSet& A, int s);

struct VerifyResult {
    bool ok = false;
    std::string reason;
};

/// Re-derives every claim in the certificate using only group arithmetic.
/// Never throws on bad data; the failure reason names the first violation.
VerifyResult verify_certificate(const SpanCertificate& cert);

/// Serialization to the interchange schema:
/// {"group": "3x12", "generators": [[x, y], ...], "s": 2,
///  "assignments": [[l1, l2], ...]} with assignments ordered by element
/// index. Parsing throws std::invalid_argument on malformed documents.
std::string certificate_to_json(const SpanCertificate& cert);
SpanCertificate certificate_from_json(const std::string& text);

}  // namespace spanlab
