#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "qmh/cli.hpp"
#include "qmh/gp.hpp"
#include "qmh/harness.hpp"
#include "qmh/homology.hpp"

namespace py = pybind11;
using namespace qmh;

namespace {

// Torsion coefficients cross the boundary as python ints.
py::object to_py_int(const mpz_class& z) {
    return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::list torsion_list(const std::vector<mpz_class>& t) {
    py::list out;
    for (const auto& z : t) out.append(to_py_int(z));
    return out;
}

}  // namespace

PYBIND11_MODULE(_qmh, m) {
    m.doc() = "hyperplane structure and complexes of finite quasi-median graphs";

    py::class_<Graph>(m, "Graph")
        .def(py::init<const std::vector<std::string>&,
                      const std::vector<std::pair<std::string, std::string>>&>(),
             py::arg("labels"), py::arg("edges"))
        .def_property_readonly("n", &Graph::n)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def("label", &Graph::label)
        .def("index_of", &Graph::index_of)
        .def("neighbors", [](const Graph& g, VertexId v) { return g.neighbors(v); })
        .def("adjacent", &Graph::adjacent)
        .def("__repr__", [](const Graph& g) {
            return "<Graph n=" + std::to_string(g.n()) + " m=" + std::to_string(g.edge_count()) +
                   ">";
        });

    m.def("parse_graph", &parse_graph_text, py::arg("text"));
    m.def("emit_graph", &emit_graph);
    m.def("emit_dot_edges", &emit_dot_edges);
    m.def("maximal_cliques", &maximal_cliques);
    m.def("maximal_joins", &maximal_joins);
    m.def("cartesian_product", &cartesian_product);

    py::class_<Hyperplane>(m, "Hyperplane")
        .def_readonly("id", &Hyperplane::id)
        .def_readonly("carrier", &Hyperplane::carrier)
        .def_readonly("sectors", &Hyperplane::sectors)
        .def_readonly("fibres", &Hyperplane::fibres);

    py::class_<Prism>(m, "Prism")
        .def_readonly("vertices", &Prism::vertices)
        .def_readonly("factor_cliques", &Prism::factor_cliques)
        .def_readonly("crossing_hyperplanes", &Prism::crossing_hyperplanes);

    py::class_<ValidationReport>(m, "ValidationReport")
        .def_readonly("passed", &ValidationReport::passed)
        .def_readonly("violations", &ValidationReport::violations);

    py::class_<QMGraph>(m, "QMGraph")
        .def_readonly("g", &QMGraph::g)
        .def_readonly("hyperplanes", &QMGraph::hyperplanes)
        .def_property_readonly("validation",
                               [](const QMGraph& X) { return X.validation.value(); });

    m.def("analyze", &analyze);
    m.def("validate_quasi_median", &validate_quasi_median);
    m.def("maximal_prisms", &maximal_prisms);
    m.def("gated_hull", &gated_hull);
    m.def("canonical_star_covering", &canonical_star_covering);
    m.def("generate_hamming", &generate_hamming);

    py::class_<RandomGenParams>(m, "RandomGenParams")
        .def(py::init<>())
        .def_readwrite("steps", &RandomGenParams::steps)
        .def_readwrite("max_factor", &RandomGenParams::max_factor)
        .def_readwrite("max_factors", &RandomGenParams::max_factors)
        .def_readwrite("max_vertices", &RandomGenParams::max_vertices);
    m.def("generate_random", &generate_random, py::arg("seed"),
          py::arg("params") = RandomGenParams{});

    py::class_<SimplicialComplex>(m, "SimplicialComplex")
        .def_readonly("maximal_faces", &SimplicialComplex::maximal_faces)
        .def("vertex_labels", &SimplicialComplex::vertex_labels)
        .def("__repr__", [](const SimplicialComplex& K) {
            return "<SimplicialComplex faces=" + std::to_string(K.maximal_faces.size()) + ">";
        });

    py::enum_<HyperplaneComplexKind>(m, "HyperplaneComplexKind")
        .value("Contact", HyperplaneComplexKind::Contact)
        .value("Crossing", HyperplaneComplexKind::Crossing)
        .value("Contiguity", HyperplaneComplexKind::Contiguity)
        .value("SmallCrossing", HyperplaneComplexKind::SmallCrossing);

    m.def("make_complex", [](std::vector<Face> faces) { return make_complex(std::move(faces)); });
    m.def("hyperplane_complex", &hyperplane_complex);
    m.def("flag_completion", &flag_completion);
    m.def("join_complex", &join_complex);
    m.def("emit_complex", &emit_complex);
    m.def("parse_complex", &parse_complex_text);
    m.def("euler_characteristic", &euler_characteristic, py::arg("K"),
          py::arg("guard") = kDefaultFaceGuard);

    py::class_<HomologyGroup>(m, "HomologyGroup")
        .def_readonly("betti", &HomologyGroup::betti)
        .def_property_readonly("torsion",
                               [](const HomologyGroup& g) { return torsion_list(g.torsion); });

    py::class_<HomologySignature>(m, "HomologySignature")
        .def_readonly("groups", &HomologySignature::groups)
        .def_readonly("reduced", &HomologySignature::reduced)
        .def("render", [](const HomologySignature& s) { return render_signature(s); });

    m.def("homology", &homology, py::arg("K"), py::arg("reduced"), py::arg("max_degree") = -1,
          py::arg("guard") = kDefaultFaceGuard);

    py::class_<GPPresentation>(m, "GPPresentation")
        .def_readonly("graph", &GPPresentation::graph)
        .def_readonly("order", &GPPresentation::order);
    m.def("make_presentation", &make_presentation);
    m.def("parse_presentation", &parse_presentation_text);

    py::class_<ParabolicCoset>(m, "ParabolicCoset")
        .def_readonly("support", &ParabolicCoset::support);

    py::class_<CICFragment>(m, "CICFragment")
        .def_readonly("vertices", &CICFragment::vertices)
        .def_readonly("maximal_simplices", &CICFragment::maximal_simplices)
        .def_readonly("radius", &CICFragment::radius);
    m.def("cic_fragment", &cic_fragment, py::arg("pres"), py::arg("supports"), py::arg("radius"),
          py::arg("max_dim"), py::arg("exp_bound") = 2, py::arg("guard") = 5000);

    py::class_<QMBall>(m, "QMBall")
        .def_readonly("graph", &QMBall::graph)
        .def_readonly("trust_radius", &QMBall::trust_radius);
    m.def("qm_ball", &qm_ball, py::arg("pres"), py::arg("r"), py::arg("guard") = 20000);

    py::enum_<RaagInvariant>(m, "RaagInvariant")
        .value("Join", RaagInvariant::Join)
        .value("Flag", RaagInvariant::Flag)
        .value("Commensurability", RaagInvariant::Commensurability);

    py::class_<RaagVerdict>(m, "RaagVerdict")
        .def_readonly("distinguished", &RaagVerdict::distinguished)
        .def_readonly("degree", &RaagVerdict::degree)
        .def_readonly("verdict", &RaagVerdict::verdict)
        .def_readonly("sig1", &RaagVerdict::sig1)
        .def_readonly("sig2", &RaagVerdict::sig2);
    m.def("raag_verdict", &raag_verdict);

    py::enum_<FamilyChoice>(m, "FamilyChoice")
        .value("CanonicalStarCovering", FamilyChoice::CanonicalStarCovering)
        .value("MaximalPrisms", FamilyChoice::MaximalPrisms)
        .value("WholeGraph", FamilyChoice::WholeGraph);

    py::class_<GatedFamily>(m, "GatedFamily").def_readonly("members", &GatedFamily::members);
    m.def("build_family", &build_family);

    py::enum_<CheckStatus>(m, "CheckStatus")
        .value("Pass", CheckStatus::Pass)
        .value("Fail", CheckStatus::Fail)
        .value("Skipped", CheckStatus::Skipped);

    py::class_<CheckResult>(m, "CheckResult")
        .def_readonly("id", &CheckResult::id)
        .def_readonly("status", &CheckResult::status)
        .def_readonly("witness", &CheckResult::witness)
        .def_readonly("seconds", &CheckResult::seconds);

    py::class_<TheoremReport>(m, "TheoremReport")
        .def_readonly("graph_name", &TheoremReport::graph_name)
        .def_readonly("checks", &TheoremReport::checks)
        .def("passed", &TheoremReport::passed);
    m.def("verify_graph", &verify_graph, py::arg("X"), py::arg("families"),
          py::arg("max_degree") = 4, py::arg("sample_seed") = 7);

    py::class_<CorpusSpec>(m, "CorpusSpec")
        .def(py::init<>())
        .def_readwrite("seed", &CorpusSpec::seed)
        .def_readwrite("count", &CorpusSpec::count)
        .def_readwrite("max_vertices", &CorpusSpec::max_vertices)
        .def_readwrite("max_degree", &CorpusSpec::max_degree);

    py::class_<CorpusReport>(m, "CorpusReport")
        .def_readonly("failures", &CorpusReport::failures)
        .def_readonly("skipped", &CorpusReport::skipped)
        .def_readonly("text", &CorpusReport::text)
        .def("passed", &CorpusReport::passed);
    m.def("run_corpus", &run_corpus);

    m.def("dispatch", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = dispatch(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
