#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "spanlab/census.hpp"
#include "spanlab/certificate.hpp"
#include "spanlab/combinatorics.hpp"
#include "spanlab/constructions.hpp"
#include "spanlab/errors.hpp"
#include "spanlab/group.hpp"
#include "spanlab/span.hpp"

namespace py = pybind11;
using namespace spanlab;

namespace {

GeneratorSet set_from_pairs(const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Element> members;
    members.reserve(pairs.size());
    for (auto [x, y] : pairs) members.push_back({x, y});
    return GeneratorSet(std::move(members));
}

std::vector<std::int64_t> covered_indices(const SpanResult& result) {
    std::vector<std::int64_t> out;
    for (std::int64_t i = 0; i < result.covered.size(); ++i)
        if (result.covered.test(i)) out.push_back(i);
    return out;
}

ExtremalFormula formula_kind(const std::string& tag) {
    if (auto kind = parse_extremal_formula(tag)) return *kind;
    throw std::invalid_argument("unknown formula kind '" + tag + "'");
}

census::SearchKind search_kind(const std::string& tag) {
    if (auto kind = census::parse_search_kind(tag)) return *kind;
    throw std::invalid_argument("unknown search kind '" + tag + "'");
}

}  // namespace

PYBIND11_MODULE(_spanlab, m) {
    m.doc() = "Signed sumsets, Cayley graph diameters, and extremal censuses "
              "for finite abelian groups of rank at most 2.";

    py::class_<Element>(m, "Element")
        .def(py::init<>())
        .def(py::init([](int x, int y) { return Element{x, y}; }), py::arg("x"),
             py::arg("y"))
        .def_readwrite("x", &Element::x)
        .def_readwrite("y", &Element::y)
        .def("__eq__", [](Element a, Element b) { return a == b; })
        .def("__repr__", [](Element e) {
            return "Element(" + std::to_string(e.x) + ", " + std::to_string(e.y) + ")";
        });

    py::class_<GroupSpec>(m, "GroupSpec")
        .def(py::init<int, int>(), py::arg("c"), py::arg("n"))
        .def_static("cyclic", &GroupSpec::cyclic, py::arg("n"))
        .def_static("parse", [](const std::string& text) { return GroupSpec::parse(text); },
                    py::arg("text"))
        .def_property_readonly("c", &GroupSpec::c)
        .def_property_readonly("n", &GroupSpec::n)
        .def_property_readonly("order", &GroupSpec::order)
        .def_property_readonly("rank", &GroupSpec::rank)
        .def("is_cyclic", &GroupSpec::is_cyclic)
        .def("element", &GroupSpec::element, py::arg("x"), py::arg("y"))
        .def("add", &GroupSpec::add)
        .def("neg", &GroupSpec::neg)
        .def("sub", &GroupSpec::sub)
        .def("scalar_mul", &GroupSpec::scalar_mul, py::arg("t"), py::arg("a"))
        .def("index", &GroupSpec::index)
        .def("element_at", &GroupSpec::element_at)
        .def("subgroup_order", &GroupSpec::subgroup_order)
        .def("generates", &GroupSpec::generates)
        .def("__eq__", [](const GroupSpec& a, const GroupSpec& b) { return a == b; })
        .def("__str__", &GroupSpec::to_string)
        .def("__repr__", [](const GroupSpec& G) { return "GroupSpec(" + G.to_string() + ")"; });

    py::class_<GeneratorSet>(m, "GeneratorSet")
        .def(py::init(&set_from_pairs), py::arg("members"),
             "Build from a list of (x, y) pairs.")
        .def_property_readonly("members",
                               [](const GeneratorSet& A) { return A.members(); })
        .def("__len__", &GeneratorSet::size)
        .def("__eq__", [](const GeneratorSet& a, const GeneratorSet& b) { return a == b; })
        .def("__str__", &GeneratorSet::to_string)
        .def("__repr__", [](const GeneratorSet& A) {
            return "GeneratorSet(" + A.to_string() + ")";
        });

    m.def("enumerate_rank2_groups", &enumerate_rank2_groups, py::arg("max_order"));
    m.def("groups_of_order", &groups_of_order, py::arg("order"), py::arg("include_cyclic"));

    m.def("binomial", &binomial);
    m.def("delannoy", &delannoy, py::arg("m"), py::arg("s"));
    m.def("lambda_count", &lambda_count, py::arg("s"), py::arg("h"));
    m.def("index_set_size", &index_set_size, py::arg("s"));
    m.def("parity_class_sizes", [](int s) {
        auto sizes = parity_class_sizes(s);
        return std::pair(sizes.same_parity, sizes.opposite_parity);
    }, py::arg("s"));
    m.def("residue_count", &residue_count, py::arg("s"), py::arg("c"), py::arg("i"));
    m.def("sregular_upper_bound", [](int c, int s) {
        BoundReport report = sregular_upper_bound(c, s);
        return std::tuple(report.bound, std::string(to_string(report.case_label)),
                          report.equality_condition);
    }, py::arg("c"), py::arg("s"), "Returns (bound, case_label, equality_condition).");
    m.def("extremal_formula",
          [](const std::string& kind, int s) { return extremal_formula(formula_kind(kind), s); },
          py::arg("kind"), py::arg("s"));

    py::class_<SpanResult>(m, "SpanResult")
        .def_readonly("group", &SpanResult::group)
        .def_readonly("generators", &SpanResult::generators)
        .def_readonly("s", &SpanResult::s)
        .def_readonly("cover_count", &SpanResult::cover_count)
        .def("full", &SpanResult::full)
        .def("covered_indices", &covered_indices)
        .def("covers", [](const SpanResult& r, std::int64_t i) { return r.covered.test(i); },
             py::arg("index"));

    py::class_<DiameterResult>(m, "DiameterResult")
        .def_readonly("finite", &DiameterResult::finite)
        .def_readonly("value", &DiameterResult::value)
        .def_readonly("witness", &DiameterResult::witness)
        .def("__str__", &DiameterResult::to_string);

    m.def("signed_span", &signed_span, py::arg("group"), py::arg("generators"), py::arg("s"));
    m.def("bfs_ball", &bfs_ball, py::arg("group"), py::arg("generators"), py::arg("s"),
          py::arg("directed_only") = false);
    m.def("undirected_diameter", &undirected_diameter);
    m.def("directed_covering_radius", &directed_covering_radius);
    m.def("is_perfect_s_spanning", &is_perfect_s_spanning);
    m.def("is_perfect_s_basis", &is_perfect_s_basis);

    py::class_<SpanCertificate>(m, "SpanCertificate")
        .def_readonly("group", &SpanCertificate::group)
        .def_readonly("generators", &SpanCertificate::generators)
        .def_readonly("s", &SpanCertificate::s)
        .def_readonly("assignments", &SpanCertificate::assignments);

    py::class_<VerifyResult>(m, "VerifyResult")
        .def_readonly("ok", &VerifyResult::ok)
        .def_readonly("reason", &VerifyResult::reason)
        .def("__bool__", [](const VerifyResult& r) { return r.ok; });

    m.def("make_certificate", &make_certificate);
    m.def("verify_certificate", &verify_certificate);
    m.def("certificate_to_json", &certificate_to_json);
    m.def("certificate_from_json", &certificate_from_json);

    py::class_<Construction>(m, "Construction")
        .def_property_readonly("kind",
                               [](const Construction& b) { return std::string(to_string(b.kind)); })
        .def_readonly("group", &Construction::group)
        .def_readonly("generators", &Construction::generators)
        .def_readonly("s", &Construction::s)
        .def_readonly("claims_spanning", &Construction::claims_spanning)
        .def_readonly("claims_directed_basis", &Construction::claims_directed_basis)
        .def_readonly("degenerate", &Construction::degenerate)
        .def("describe", &Construction::describe);

    m.def("cyclic_construction", &cyclic_construction, py::arg("s"), py::arg("n"));
    m.def("half_construction", &half_construction, py::arg("s"));
    m.def("floor_ceiling_construction", &floor_ceiling_construction, py::arg("c"), py::arg("s"));
    m.def("prime_divisor_construction", &prime_divisor_construction, py::arg("s"), py::arg("p"));
    m.def("z2_construction", &z2_construction, py::arg("s"), py::arg("k"));
    m.def("directed_noncyclic_basis", &directed_noncyclic_basis, py::arg("s"));

    py::class_<census::SearchOutcome>(m, "SearchOutcome")
        .def_readonly("found", &census::SearchOutcome::found)
        .def_readonly("witness", &census::SearchOutcome::witness)
        .def("__bool__", [](const census::SearchOutcome& o) { return o.found; });

    py::class_<census::CensusRecord>(m, "CensusRecord")
        .def_readonly("group", &census::CensusRecord::group)
        .def_readonly("s", &census::CensusRecord::s)
        .def_readonly("has_spanning_pair", &census::CensusRecord::has_spanning_pair)
        .def_readonly("witness", &census::CensusRecord::witness)
        .def_readonly("is_regular", &census::CensusRecord::is_regular)
        .def_readonly("regular_witness", &census::CensusRecord::regular_witness)
        .def_readonly("elapsed_seconds", &census::CensusRecord::elapsed_seconds);

    py::class_<census::ExtremalReport>(m, "ExtremalReport")
        .def_property_readonly("kind",
                               [](const census::ExtremalReport& r) {
                                   return std::string(census::to_string(r.kind));
                               })
        .def_readonly("s", &census::ExtremalReport::s)
        .def_readonly("max_order", &census::ExtremalReport::max_order)
        .def_readonly("attaining", &census::ExtremalReport::attaining)
        .def_readonly("witnesses", &census::ExtremalReport::witnesses)
        .def_readonly("formula_value", &census::ExtremalReport::formula_value)
        .def_readonly("agrees", &census::ExtremalReport::agrees);

    py::class_<census::RegularExtremalReport>(m, "RegularExtremalReport")
        .def_readonly("s", &census::RegularExtremalReport::s)
        .def_readonly("max_order", &census::RegularExtremalReport::max_order)
        .def_readonly("attaining", &census::RegularExtremalReport::attaining)
        .def_readonly("witnesses", &census::RegularExtremalReport::witnesses)
        .def_readonly("bound", &census::RegularExtremalReport::bound)
        .def_readonly("attains_bound", &census::RegularExtremalReport::attains_bound);

    py::class_<census::PerfectSetRecord>(m, "PerfectSetRecord")
        .def_readonly("group", &census::PerfectSetRecord::group)
        .def_readonly("set", &census::PerfectSetRecord::set);

    py::class_<census::PerfectCensusReport>(m, "PerfectCensusReport")
        .def_readonly("m", &census::PerfectCensusReport::m)
        .def_readonly("s", &census::PerfectCensusReport::s)
        .def_readonly("target_order", &census::PerfectCensusReport::target_order)
        .def_readonly("found", &census::PerfectCensusReport::found)
        .def_readonly("rank3_findings", &census::PerfectCensusReport::rank3_findings);

    py::class_<census::Z2ProbeRow>(m, "Z2ProbeRow")
        .def_readonly("k", &census::Z2ProbeRow::k)
        .def_readonly("order", &census::Z2ProbeRow::order)
        .def_readonly("has_pair", &census::Z2ProbeRow::has_pair)
        .def_readonly("predicted", &census::Z2ProbeRow::predicted)
        .def("matches", &census::Z2ProbeRow::matches);

    m.def("has_spanning_pair", &census::has_spanning_pair, py::arg("group"), py::arg("s"));
    m.def("has_basis_pair", &census::has_basis_pair, py::arg("group"), py::arg("s"));
    m.def("is_s_regular", &census::is_s_regular, py::arg("group"), py::arg("s"));
    m.def("rank2_census", &census::rank2_census, py::arg("s"), py::arg("threads") = 1,
          py::arg("max_order") = std::nullopt,
          py::call_guard<py::gil_scoped_release>());
    m.def("extremal_order",
          [](const std::string& kind, int s) {
              return census::extremal_order(search_kind(kind), s);
          },
          py::arg("kind"), py::arg("s"));
    m.def("max_regular_order", &census::max_regular_order, py::arg("s"));
    m.def("perfect_census", &census::perfect_census, py::arg("m"), py::arg("s"),
          py::arg("order_cap") = 200);
    m.def("perfect_basis_census", &census::perfect_basis_census, py::arg("m"),
          py::arg("s"), py::arg("order_cap") = 200);
    m.def("z2_family_probe", &census::z2_family_probe, py::arg("s"));
    m.def("census_to_csv", &census::census_to_csv);
    m.def("census_to_jsonl", &census::census_to_jsonl);
}
