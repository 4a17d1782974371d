#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spanlab/census.hpp"
#include "spanlab/certificate.hpp"
#include "spanlab/combinatorics.hpp"
#include "spanlab/constructions.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/group.hpp"
#include "spanlab/span.hpp"

namespace {

using namespace spanlab;

// Raised when a requested claim fails re-verification; mapped to exit 1,
// while argument problems map to exit 2.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::int64_t parse_int(std::string_view text, const char* what) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument(std::string("expected an integer for ") + what +
                                    ", got '" + std::string(text) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    while (true) {
        auto pos = text.find(sep);
        parts.push_back(text.substr(0, pos));
        if (pos == std::string_view::npos) break;
        text.remove_prefix(pos + 1);
    }
    return parts;
}

// Accepts "x1,y1[;x2,y2;...]"; for cyclic groups a bare comma list is read
// as the second coordinates of up to four generators.
GeneratorSet parse_generators(const GroupSpec& G, std::string_view text) {
    std::vector<Element> members;
    auto tokens = split(text, ';');
    if (tokens.size() == 1 && G.is_cyclic()) {
        for (auto value : split(tokens.front(), ','))
            members.push_back(G.element(0, parse_int(value, "--gens")));
        return GeneratorSet(std::move(members));
    }
    for (auto token : tokens) {
        auto coords = split(token, ',');
        if (coords.size() != 2)
            throw std::invalid_argument("each generator is x,y; got '" +
                                        std::string(token) + "'");
        members.push_back(G.element(parse_int(coords[0], "--gens"),
                                    parse_int(coords[1], "--gens")));
    }
    return GeneratorSet(std::move(members));
}

void write_output(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file)
        throw std::invalid_argument("cannot open output file '" + out_path + "'");
    file << payload;
}

void emit_certificates(const std::vector<census::CensusRecord>& rows,
                       const std::string& dir) {
    std::filesystem::create_directories(dir);
    for (const auto& row : rows) {
        if (!row.witness) continue;
        SpanCertificate cert = make_certificate(row.group, *row.witness, row.s);
        std::string name = row.group.to_string() + "_s" + std::to_string(row.s) + ".json";
        std::ofstream file(std::filesystem::path(dir) / name, std::ios::binary);
        if (!file)
            throw std::invalid_argument("cannot write certificate in '" + dir + "'");
        file << certificate_to_json(cert) << '\n';
    }
}

int run_formula(const std::string& kind, int s, std::optional<int> m,
                std::optional<int> c, std::optional<std::int64_t> h,
                std::optional<std::int64_t> i) {
    auto need = [&](const auto& opt, const char* flag) {
        if (!opt)
            throw std::invalid_argument(std::string("formula kind '") + kind +
                                        "' requires " + flag);
        return *opt;
    };
    if (kind == "delannoy") {
        std::cout << delannoy(need(m, "--m"), s) << '\n';
    } else if (kind == "lambda") {
        std::cout << lambda_count(s, need(h, "--h")) << '\n';
    } else if (kind == "index-set-size") {
        std::cout << index_set_size(s) << '\n';
    } else if (kind == "parity-classes") {
        auto sizes = parity_class_sizes(s);
        std::cout << "same_parity=" << sizes.same_parity
                  << " opposite_parity=" << sizes.opposite_parity << '\n';
    } else if (kind == "residue") {
        std::cout << residue_count(s, need(c, "--c"), need(i, "--i")) << '\n';
    } else if (kind == "sregular-bound") {
        BoundReport report = sregular_upper_bound(need(c, "--c"), s);
        std::cout << "bound=" << report.bound << " case=" << to_string(report.case_label);
        if (report.equality_condition)
            std::cout << " equality_condition=\"" << *report.equality_condition << "\"";
        std::cout << '\n';
    } else if (auto formula = parse_extremal_formula(kind)) {
        std::cout << extremal_formula(*formula, s) << '\n';
    } else {
        throw std::invalid_argument(
            "unknown formula kind '" + kind +
            "'; expected delannoy, lambda, index-set-size, parity-classes, residue, "
            "sregular-bound, directed_cyclic, directed_abelian, undirected_cyclic, "
            "undirected_z2, conjectured_noncyclic, or sregular_max");
    }
    return 0;
}

int run_construct(const std::string& name, int s, std::optional<int> n,
                  std::optional<int> c, std::optional<int> p, std::optional<int> k,
                  const std::string& cert_path) {
    auto need = [&](const std::optional<int>& opt, const char* flag) {
        if (!opt)
            throw std::invalid_argument(std::string("construct ") + name +
                                        " requires " + flag);
        return *opt;
    };
    Construction built = [&] {
        if (name == "cyclic") return cyclic_construction(s, need(n, "--n"));
        if (name == "half") return half_construction(s);
        if (name == "floor-ceiling") return floor_ceiling_construction(need(c, "--c"), s);
        if (name == "prime-divisor") return prime_divisor_construction(s, need(p, "--p"));
        if (name == "z2") return z2_construction(s, need(k, "--k"));
        if (name == "directed-basis") return directed_noncyclic_basis(s);
        throw std::invalid_argument("unknown construction '" + name +
                                    "'; expected cyclic, half, floor-ceiling, "
                                    "prime-divisor, z2, or directed-basis");
    }();

    std::cout << built.describe() << '\n';
    if (built.claims_spanning) {
        if (!signed_span(built.group, built.generators, built.s).full())
            throw VerificationFailure(built.describe() +
                                      ": signed coverage check failed");
        std::cout << "signed coverage verified at s=" << built.s << '\n';
    }
    if (built.claims_directed_basis) {
        if (!bfs_ball(built.group, built.generators, built.s, true).full())
            throw VerificationFailure(built.describe() +
                                      ": directed coverage check failed");
        std::cout << "directed coverage verified at s=" << built.s << '\n';
    }
    if (!cert_path.empty()) {
        SpanCertificate cert = make_certificate(built.group, built.generators, built.s);
        std::ofstream file(cert_path, std::ios::binary);
        if (!file)
            throw std::invalid_argument("cannot write certificate '" + cert_path + "'");
        file << certificate_to_json(cert) << '\n';
        std::cout << "certificate written to " << cert_path << '\n';
    }
    return 0;
}

int run_span(const std::string& group, const std::string& gens, int s) {
    GroupSpec G = GroupSpec::parse(group);
    GeneratorSet A = parse_generators(G, gens);
    SpanResult result = signed_span(G, A, s);
    DiameterResult diameter = undirected_diameter(G, A);
    std::cout << "covers " << result.cover_count << "/" << G.order() << ", diameter "
              << diameter.to_string() << '\n';
    return 0;
}

int run_diameter(const std::string& group, const std::string& gens, bool directed) {
    GroupSpec G = GroupSpec::parse(group);
    GeneratorSet A = parse_generators(G, gens);
    DiameterResult result =
        directed ? directed_covering_radius(G, A) : undirected_diameter(G, A);
    std::cout << "diameter " << result.to_string();
    if (result.finite)
        std::cout << " witness " << result.witness.x << ":" << result.witness.y;
    std::cout << '\n';
    return 0;
}

int run_census(int s, int threads, std::optional<std::int64_t> max_order,
               const std::string& format, const std::string& out_path,
               const std::string& certs_dir) {
    auto rows = census::rank2_census(s, threads, max_order);
    write_output(format == "json" ? census::census_to_jsonl(rows)
                                  : census::census_to_csv(rows),
                 out_path);
    if (!certs_dir.empty()) emit_certificates(rows, certs_dir);

    std::size_t with_pair = 0;
    std::size_t regular = 0;
    for (const auto& row : rows) {
        with_pair += row.has_spanning_pair ? 1 : 0;
        regular += row.is_regular ? 1 : 0;
    }
    std::cerr << "census s=" << s << ": " << rows.size() << " groups, " << with_pair
              << " with spanning pair, " << regular << " s-regular\n";
    return 0;
}

int run_extremal(const std::string& kind_tag, int s) {
    auto kind = census::parse_search_kind(kind_tag);
    if (!kind)
        throw std::invalid_argument("unknown extremal kind '" + kind_tag +
                                    "'; expected cyclic, noncyclic, z2, "
                                    "directed_cyclic, or directed_abelian");
    census::ExtremalReport report = census::extremal_order(*kind, s);
    std::cout << "kind=" << census::to_string(report.kind) << " s=" << report.s
              << " max_order=" << report.max_order << " formula=" << report.formula_value
              << " agrees=" << (report.agrees ? "true" : "false") << '\n';
    for (std::size_t i = 0; i < report.attaining.size(); ++i)
        std::cout << "attaining " << report.attaining[i].to_string() << " witness="
                  << report.witnesses[i].to_string() << '\n';
    return 0;
}

int run_perfect(int m, int s, bool basis, std::optional<std::int64_t> cap,
                const std::string& format, const std::string& out_path) {
    census::PerfectCensusReport report =
        basis ? census::perfect_basis_census(m, s, cap.value_or(200))
              : census::perfect_census(m, s, cap.value_or(200));
    std::string payload;
    if (format == "json") {
        for (const auto& record : report.found) {
            payload += "{\"group\":\"" + record.group.to_string() + "\",\"set\":\"" +
                       record.set.to_string() + "\"}\n";
        }
        for (const auto& finding : report.rank3_findings)
            payload += "{\"rank3\":\"" + finding + "\"}\n";
    } else {
        payload = "group,set\n";
        for (const auto& record : report.found)
            payload += record.group.to_string() + ',' + record.set.to_string() + '\n';
        for (const auto& finding : report.rank3_findings)
            payload += "# rank3 " + finding + '\n';
    }
    write_output(payload, out_path);
    std::cerr << (basis ? "perfect basis census" : "perfect spanning census")
              << " m=" << m << " s=" << s << " target_order=" << report.target_order
              << ": " << report.found.size() << " sets";
    if (!report.rank3_findings.empty())
        std::cerr << ", " << report.rank3_findings.size() << " rank-3 findings";
    std::cerr << '\n';
    return 0;
}

int run_probe(int s, const std::string& format, const std::string& out_path) {
    auto rows = census::z2_family_probe(s);
    write_output(format == "json" ? census::probe_to_jsonl(rows, s)
                                  : census::probe_to_csv(rows, s),
                 out_path);
    bool consistent = true;
    for (const auto& row : rows) consistent = consistent && row.matches();
    std::cerr << "z2 probe s=" << s << ": "
              << (consistent ? "CONSISTENT" : "INCONSISTENT") << " over " << rows.size()
              << " rows\n";
    return 0;
}

int run_check_cert(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot read certificate '" + path + "'");
    std::string text((std::istreambuf_iterator<char>(file)),
                     std::istreambuf_iterator<char>());
    std::optional<SpanCertificate> cert;
    try {
        cert = certificate_from_json(text);
    } catch (const std::invalid_argument& e) {
        std::cout << "INVALID: " << e.what() << '\n';
        return 1;
    }
    VerifyResult result = verify_certificate(*cert);
    if (!result.ok) {
        std::cout << "INVALID: " << result.reason << '\n';
        return 1;
    }
    std::cout << "OK group=" << cert->group.to_string() << " s=" << cert->s
              << " generators=" << cert->generators.to_string() << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"signed sumsets, Cayley graph diameters, and extremal censuses "
                 "for finite abelian groups of rank at most 2"};
    app.require_subcommand(1);

    int s = 1;
    int threads = 1;
    std::optional<int> opt_m, opt_c, opt_n, opt_p, opt_k;
    std::optional<std::int64_t> opt_h, opt_i, opt_max_order;
    std::string kind, group, gens, format = "csv", out_path, certs_dir, cert_path, name;
    bool directed = false;
    bool basis = false;

    auto* cmd_formula = app.add_subcommand("formula", "evaluate a closed-form quantity");
    // The diagonal argument is spelled --h, so this subcommand keeps only the
    // long help flag.
    cmd_formula->set_help_flag("--help", "print help");
    cmd_formula->add_option("--kind", kind)->required();
    cmd_formula->add_option("--s", s)->required();
    cmd_formula->add_option("--m", opt_m);
    cmd_formula->add_option("--c", opt_c);
    cmd_formula->add_option("--h", opt_h);
    cmd_formula->add_option("--i", opt_i);

    auto* cmd_construct =
        app.add_subcommand("construct", "build a closed-form generator set and verify it");
    cmd_construct->add_option("name", name, "cyclic|half|floor-ceiling|prime-divisor|z2|directed-basis")
        ->required();
    cmd_construct->add_option("--s", s)->required();
    cmd_construct->add_option("--n", opt_n);
    cmd_construct->add_option("--c", opt_c);
    cmd_construct->add_option("--p", opt_p);
    cmd_construct->add_option("--k", opt_k);
    cmd_construct->add_option("--emit-cert", cert_path);

    auto* cmd_span = app.add_subcommand("span", "coverage of a generator set at radius s");
    cmd_span->add_option("--group", group)->required();
    cmd_span->add_option("--gens", gens)->required();
    cmd_span->add_option("--s", s)->required();

    auto* cmd_diameter = app.add_subcommand("diameter", "Cayley graph diameter");
    cmd_diameter->add_option("--group", group)->required();
    cmd_diameter->add_option("--gens", gens)->required();
    cmd_diameter->add_flag("--directed", directed);

    auto* cmd_census = app.add_subcommand("census", "rank-2 spanning-pair census");
    cmd_census->add_option("--s", s)->required();
    cmd_census->add_option("--threads", threads);
    cmd_census->add_option("--max-order", opt_max_order);
    cmd_census->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    cmd_census->add_option("--out", out_path);
    cmd_census->add_option("--emit-certs", certs_dir);

    auto* cmd_extremal =
        app.add_subcommand("extremal", "largest order in a family admitting a covering pair");
    cmd_extremal->add_option("--kind", kind)->required();
    cmd_extremal->add_option("--s", s)->required();

    auto* cmd_perfect =
        app.add_subcommand("perfect", "census of sets with unique representations");
    cmd_perfect->add_option("--m", opt_m)->required();
    cmd_perfect->add_option("--s", s)->required();
    cmd_perfect->add_flag("--basis", basis, "nonnegative representations instead of signed");
    cmd_perfect->add_option("--max-order", opt_max_order);
    cmd_perfect->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    cmd_perfect->add_option("--out", out_path);

    auto* cmd_probe =
        app.add_subcommand("conjecture41", "probe conjectured spanning-pair ranges in 2x2k");
    cmd_probe->add_option("--s", s)->required();
    cmd_probe->add_option("--format", format)->check(CLI::IsMember({"csv", "json"}));
    cmd_probe->add_option("--out", out_path);

    auto* cmd_check = app.add_subcommand("check-cert", "verify a coverage certificate");
    std::string cert_file;
    cmd_check->add_option("path", cert_file)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*cmd_formula) return run_formula(kind, s, opt_m, opt_c, opt_h, opt_i);
        if (*cmd_construct) return run_construct(name, s, opt_n, opt_c, opt_p, opt_k, cert_path);
        if (*cmd_span) return run_span(group, gens, s);
        if (*cmd_diameter) return run_diameter(group, gens, directed);
        if (*cmd_census)
            return run_census(s, threads, opt_max_order, format, out_path, certs_dir);
        if (*cmd_extremal) return run_extremal(kind, s);
        if (*cmd_perfect)
            return run_perfect(opt_m.value_or(1), s, basis, opt_max_order, format, out_path);
        if (*cmd_probe) return run_probe(s, format, out_path);
        if (*cmd_check) return run_check_cert(cert_file);
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failure: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        std::cerr << "run '" << (argc > 0 ? argv[0] : "spanlab")
                  << " --help' for the flag grammar\n";
        return 2;
    }
    return 0;
}
