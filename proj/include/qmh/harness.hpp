#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qmh/complex.hpp"
#include "qmh/homology.hpp"
#include "qmh/qm.hpp"

namespace qmh {

enum class CheckStatus { Pass, Fail, Skipped };

struct CheckResult {
    std::string id;
    CheckStatus status = CheckStatus::Pass;
    std::string witness;  // nonempty for fail (replayable) and skipped (reason)
    double seconds = 0.0;
};

struct TheoremReport {
    std::string graph_name;
    std::vector<CheckResult> checks;
    bool passed() const;  // no failed entries (skipped allowed)
};

enum class FamilyChoice { CanonicalStarCovering, MaximalPrisms, WholeGraph };

GatedFamily build_family(const QMGraph& X, FamilyChoice choice);

/// Theorem checks (a)-(f) on one validated graph. Homology is compared up to
/// max_degree; sampling (Helly triples) is seeded and deterministic.
TheoremReport verify_graph(const QMGraph& X, const std::vector<GatedFamily>& families,
                           int max_degree = 4, std::uint64_t sample_seed = 7);

struct CorpusSpec {
    std::uint64_t seed = 1;
    int count = 50;         // target number of graphs
    int max_vertices = 200;
    std::vector<FamilyChoice> families{FamilyChoice::CanonicalStarCovering,
                                       FamilyChoice::WholeGraph};
    int max_degree = 4;
};

struct CorpusReport {
    std::vector<TheoremReport> entries;
    int failures = 0;
    int skipped = 0;
    std::string text;  // byte-stable for a fixed spec (no timings)
    bool passed() const { return failures == 0; }
};

/// Deterministic corpus (named fixed graphs + seeded random ones), verified
/// concurrently, aggregated in construction order.
CorpusReport run_corpus(const CorpusSpec& spec);

enum class RaagInvariant { Join, Flag, Commensurability };

struct RaagVerdict {
    bool distinguished = false;
    int degree = -1;  // least degree where the wedge supports differ
    std::string verdict;
    HomologySignature sig1, sig2;  // reduced
};

/// Compares the wedge-stable reduced-homology supports of the two graphs'
/// join complexes (join / commensurability) or flag complexes (flag).
/// Flag mode refuses graphs containing non-adjacent u, v with
/// link(u) contained in star(v).
RaagVerdict raag_verdict(const Graph& g1, const Graph& g2, RaagInvariant invariant);

std::vector<std::string> render_report(const TheoremReport& report, bool with_times = false);

}  // namespace qmh
