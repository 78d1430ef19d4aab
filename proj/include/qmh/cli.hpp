#pragma once

#include <string>
#include <vector>

#include "qmh/complex.hpp"
#include "qmh/gp.hpp"
#include "qmh/graph.hpp"

namespace qmh {

/// Adjacency-list text: one `v: n1 n2 ...` line per vertex; entries may be
/// one-sided (the symmetric closure is taken) but must not contradict.
Graph parse_graph_file(const std::string& path);
Graph parse_graph_text(const std::string& text);

/// `vertex name order` lines (order 0 = infinite cyclic, 1 rejected)
/// followed by `edge a b` lines.
GPPresentation parse_presentation_file(const std::string& path);
GPPresentation parse_presentation_text(const std::string& text);

std::string emit_graph(const Graph& g);                    // parse_graph_text format
std::string emit_dot_edges(const Graph& g);                // `u -- v` lines
std::string emit_complex(const SimplicialComplex& K);      // vertices:/maximal_faces: blocks
SimplicialComplex parse_complex_text(const std::string& text);

/// Writes emitted text to a file; throws on unwritable paths.
void write_file(const std::string& path, const std::string& content);

// Exit codes: 0 success/pass, 1 checks failed, 2 usage or parse error,
// 3 guard exceeded.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitGuard = 3;

/// Command dispatch for raag-compare / qm-analyze / qm-verify / gp-cic /
/// gen-corpus. Writes to the given streams; never throws.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qmh
