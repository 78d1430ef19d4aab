#include "qmh/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include "qmh/harness.hpp"
#include "qmh/homology.hpp"
#include "qmh/qm.hpp"

namespace qmh {
namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    for (std::string tok; in >> tok;) out.push_back(tok);
    return out;
}

}  // namespace

Graph parse_graph_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<std::string, std::vector<std::string>>> rows;
    std::map<std::string, int> index;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        std::string head = toks[0];
        if (head.size() < 2 || head.back() != ':')
            throw std::runtime_error("line " + std::to_string(lineno) +
                                     ": expected `vertex: neighbors...`");
        head.pop_back();
        if (index.count(head))
            throw std::runtime_error("line " + std::to_string(lineno) + ": duplicate vertex " +
                                     head);
        index[head] = static_cast<int>(rows.size());
        rows.push_back({head, {toks.begin() + 1, toks.end()}});
    }
    if (rows.empty()) throw std::runtime_error("no vertices");
    std::vector<std::string> labels;
    for (auto& r : rows) labels.push_back(r.first);
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto& [v, nbrs] : rows)
        for (const std::string& w : nbrs) {
            if (w == v) throw std::runtime_error("loop at vertex " + v);
            if (!index.count(w)) throw std::runtime_error("unknown vertex " + w);
            edges.emplace_back(std::min(v, w), std::max(v, w));  // symmetric closure
        }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return Graph(labels, edges);
}

Graph parse_graph_file(const std::string& path) { return parse_graph_text(read_file(path)); }

GPPresentation parse_presentation_text(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> labels;
    std::vector<long> orders;
    std::map<std::string, int> index;
    std::vector<std::pair<std::string, std::string>> edges;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        auto bad = [&](const std::string& msg) {
            return std::runtime_error("line " + std::to_string(lineno) + ": " + msg);
        };
        if (toks[0] == "vertex") {
            if (toks.size() != 3) throw bad("expected `vertex name order`");
            if (index.count(toks[1])) throw bad("duplicate vertex " + toks[1]);
            long order = 0;
            try {
                order = std::stol(toks[2]);
            } catch (...) {
                throw bad("bad order " + toks[2]);
            }
            if (order == 1) throw bad("vertex groups must be non-trivial (order 1)");
            if (order < 0) throw bad("negative order");
            index[toks[1]] = static_cast<int>(labels.size());
            labels.push_back(toks[1]);
            orders.push_back(order);
        } else if (toks[0] == "edge") {
            if (toks.size() != 3) throw bad("expected `edge a b`");
            for (int i : {1, 2})
                if (!index.count(toks[i])) throw bad("unknown endpoint " + toks[i]);
            edges.emplace_back(toks[1], toks[2]);
        } else {
            throw bad("unknown directive " + toks[0]);
        }
    }
    if (labels.empty()) throw std::runtime_error("no vertices");
    return make_presentation(Graph(labels, edges), orders);
}

GPPresentation parse_presentation_file(const std::string& path) {
    return parse_presentation_text(read_file(path));
}

std::string emit_graph(const Graph& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.n(); ++v) {
        out << g.label(v) << ":";
        for (VertexId w : g.neighbors(v)) out << " " << g.label(w);
        out << "\n";
    }
    return out.str();
}

std::string emit_dot_edges(const Graph& g) {
    std::ostringstream out;
    for (VertexId v = 0; v < g.n(); ++v)
        for (VertexId w : g.neighbors(v))
            if (v < w) out << g.label(v) << " -- " << g.label(w) << "\n";
    return out.str();
}

std::string emit_complex(const SimplicialComplex& K) {
    std::ostringstream out;
    out << "vertices:";
    for (const std::string& l : K.vertex_labels()) out << " " << l;
    out << "\nmaximal_faces:\n";
    for (const Face& f : K.maximal_faces) {
        for (size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i];
        out << "\n";
    }
    return out.str();
}

SimplicialComplex parse_complex_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<Face> faces;
    bool in_faces = false;
    bool saw_vertices = false;
    while (std::getline(in, line)) {
        auto toks = split_ws(line);
        if (toks.empty()) continue;
        if (toks[0] == "vertices:") {
            saw_vertices = true;
            continue;
        }
        if (toks[0] == "maximal_faces:") {
            in_faces = true;
            continue;
        }
        if (!in_faces) throw std::runtime_error("unexpected line before maximal_faces:");
        faces.push_back(toks);
    }
    if (!saw_vertices) throw std::runtime_error("missing vertices: block");
    return make_complex(std::move(faces));
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
    if (!out.flush()) throw std::runtime_error("write failed for " + path);
}

namespace {

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const std::length_error*>(&e)) return kExitGuard;
    return kExitUsage;
}

int cmd_raag_compare(const std::string& p1, const std::string& p2, const std::string& invariant,
                     std::ostream& out) {
    RaagInvariant inv;
    if (invariant == "join")
        inv = RaagInvariant::Join;
    else if (invariant == "flag")
        inv = RaagInvariant::Flag;
    else if (invariant == "commensurability")
        inv = RaagInvariant::Commensurability;
    else
        throw std::runtime_error("unknown invariant " + invariant);
    RaagVerdict v = raag_verdict(parse_graph_file(p1), parse_graph_file(p2), inv);
    out << "invariant: " << invariant << "\n";
    out << "signature 1 (reduced):\n";
    for (const auto& l : render_signature(v.sig1)) out << "  " << l << "\n";
    out << "signature 2 (reduced):\n";
    for (const auto& l : render_signature(v.sig2)) out << "  " << l << "\n";
    if (v.distinguished) out << "least differing degree: " << v.degree << "\n";
    out << "verdict: " << v.verdict << "\n";
    return kExitPass;
}

int cmd_qm_analyze(const std::string& path, const std::vector<std::string>& complexes,
                   std::ostream& out) {
    QMGraph X = analyze(parse_graph_file(path));
    out << "vertices: " << X.g.n() << "\nedges: " << X.g.edge_count() << "\n";
    out << "validation: " << (X.validation->passed ? "pass" : "FAIL") << "\n";
    for (const auto& v : X.validation->violations) out << "  violation: " << v << "\n";
    if (!X.validation->passed) return kExitFail;
    out << "hyperplanes: " << X.hyperplanes.size() << "\n";
    for (const auto& J : X.hyperplanes) {
        out << "  h" << J.id << ": edges=" << J.edges.size() << " sectors=" << J.sectors.size()
            << " fibres=" << J.fibres.size() << "\n";
    }
    int transverse = 0, tangent = 0, remote = 0;
    for (size_t i = 0; i < X.hyperplanes.size(); ++i)
        for (size_t j = i + 1; j < X.hyperplanes.size(); ++j) {
            switch (classify_pair(X, static_cast<int>(i), static_cast<int>(j)).relation) {
                case PairRelation::Transverse: ++transverse; break;
                case PairRelation::Tangent: ++tangent; break;
                case PairRelation::Remote: ++remote; break;
            }
        }
    out << "pair classes: transverse=" << transverse << " tangent=" << tangent
        << " remote=" << remote << "\n";
    auto prisms = maximal_prisms(X);
    out << "maximal prisms: " << prisms.size() << "\n";
    for (const auto& kind : complexes) {
        HyperplaneComplexKind k;
        if (kind == "contact")
            k = HyperplaneComplexKind::Contact;
        else if (kind == "crossing")
            k = HyperplaneComplexKind::Crossing;
        else if (kind == "contiguity")
            k = HyperplaneComplexKind::Contiguity;
        else if (kind == "small-crossing")
            k = HyperplaneComplexKind::SmallCrossing;
        else
            throw std::runtime_error("unknown complex kind " + kind);
        out << "complex " << kind << ":\n" << emit_complex(hyperplane_complex(X, k));
    }
    return kExitPass;
}

int cmd_qm_verify(const std::string& path, const std::string& family, std::ostream& out) {
    QMGraph X = analyze(parse_graph_file(path));
    out << "validation: " << (X.validation->passed ? "pass" : "FAIL") << "\n";
    for (const auto& v : X.validation->violations) out << "  violation: " << v << "\n";
    if (!X.validation->passed) return kExitFail;
    std::vector<GatedFamily> families;
    if (family == "canonical-star")
        families.push_back(build_family(X, FamilyChoice::CanonicalStarCovering));
    else if (family == "prisms")
        families.push_back(build_family(X, FamilyChoice::MaximalPrisms));
    else if (family == "whole")
        families.push_back(build_family(X, FamilyChoice::WholeGraph));
    else if (family.rfind("file:", 0) == 0) {
        // One member per line, vertex labels separated by spaces.
        std::istringstream in(read_file(family.substr(5)));
        std::vector<VertexSet> members;
        for (std::string line; std::getline(in, line);) {
            auto toks = split_ws(line);
            if (toks.empty()) continue;
            VertexSet m;
            for (const auto& t : toks) m.push_back(X.g.index_of(t));
            std::sort(m.begin(), m.end());
            members.push_back(std::move(m));
        }
        families.push_back(make_gated_family(X, std::move(members)));
    } else {
        throw std::runtime_error("unknown family choice " + family);
    }
    TheoremReport rep = verify_graph(X, families);
    for (const auto& l : render_report(rep)) out << l << "\n";
    out << "result: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
    return rep.passed() ? kExitPass : kExitFail;
}

int cmd_gp_cic(const std::string& path, const std::string& family, int radius, int max_dim,
               std::ostream& out) {
    GPPresentation pres = parse_presentation_file(path);
    std::vector<VertexSet> supports;
    if (family == "maximal-joins")
        supports = maximal_joins(pres.graph);
    else if (family == "maximal-cliques")
        supports = maximal_cliques(pres.graph);
    else
        throw std::runtime_error("unknown family choice " + family);
    CICFragment frag = cic_fragment(pres, supports, radius, max_dim);
    out << "fragment radius=" << frag.radius << " vertices=" << frag.vertices.size() << "\n";
    for (size_t i = 0; i < frag.vertices.size(); ++i) {
        const auto& c = frag.vertices[i];
        out << "  v" << i << ": support={";
        for (size_t j = 0; j < c.support.size(); ++j)
            out << (j ? "," : "") << pres.graph.label(c.support[j]);
        out << "} rep=" << render(pres, c.rep) << "\n";
    }
    out << "maximal_simplices:\n";
    for (const auto& s : frag.maximal_simplices) {
        out << " ";
        for (int v : s) out << " v" << v;
        out << "\n";
    }
    return kExitPass;
}

int cmd_gen_corpus(std::uint64_t seed, int count, int max_vertices, std::ostream& out) {
    CorpusSpec spec;
    spec.seed = seed;
    spec.count = count;
    spec.max_vertices = max_vertices;
    CorpusReport rep = run_corpus(spec);
    out << rep.text;
    return rep.passed() ? kExitPass : kExitFail;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperplane structure and complexes of finite quasi-median graphs"};
    app.require_subcommand(1);

    std::string g1, g2, invariant = "join";
    auto* raag = app.add_subcommand("raag-compare", "compare two graphs' wedge-stable signatures");
    raag->add_option("graph1", g1)->required();
    raag->add_option("graph2", g2)->required();
    raag->add_option("--invariant", invariant, "join|flag|commensurability");

    std::string analyze_path;
    std::vector<std::string> complexes;
    auto* ana = app.add_subcommand("qm-analyze", "hyperplane structure of one graph");
    ana->add_option("graph", analyze_path)->required();
    ana->add_option("--complex", complexes, "contact|crossing|contiguity|small-crossing");

    std::string verify_path, family = "whole";
    auto* ver = app.add_subcommand("qm-verify", "run the theorem checks on one graph");
    ver->add_option("graph", verify_path)->required();
    ver->add_option("--family", family, "canonical-star|prisms|whole|file:<path>");

    std::string cic_path, cic_family = "maximal-joins";
    int radius = 0, max_dim = 2;
    auto* cic = app.add_subcommand("gp-cic", "coset intersection complex fragment");
    cic->add_option("presentation", cic_path)->required();
    cic->add_option("--family", cic_family, "maximal-joins|maximal-cliques");
    cic->add_option("--radius", radius);
    cic->add_option("--max-dim", max_dim);

    std::uint64_t seed = 0;
    int count = 50, max_vertices = 200;
    auto* gen = app.add_subcommand("gen-corpus", "generate and verify a corpus");
    gen->add_option("--seed", seed)->required();
    gen->add_option("--count", count);
    gen->add_option("--max-vertices", max_vertices);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (app.got_subcommand(raag)) return cmd_raag_compare(g1, g2, invariant, out);
        if (app.got_subcommand(ana)) return cmd_qm_analyze(analyze_path, complexes, out);
        if (app.got_subcommand(ver)) return cmd_qm_verify(verify_path, family, out);
        if (app.got_subcommand(cic)) return cmd_gp_cic(cic_path, cic_family, radius, max_dim, out);
        if (app.got_subcommand(gen)) return cmd_gen_corpus(seed, count, max_vertices, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    err << "no subcommand\n";
    return kExitUsage;
}

}  // namespace qmh
