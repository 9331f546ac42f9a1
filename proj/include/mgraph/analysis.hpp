#pragma once

#include "mgraph/bignum.hpp"
#include "mgraph/graph.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace mgraph {

struct DegreeLaw {
    std::map<std::size_t, std::size_t> histogram;  // degree -> vertex count
    bool holds = false;  // #{deg >= k} / |V| == 2^{2-k} for every 2 <= k <= t+1
};

DegreeLaw degree_law_check(const MGraph& g);

std::uint64_t triangle_count(const MGraph& g);

struct DistanceStats {
    std::uint32_t diameter = 0;
    Rational avg_distance;       // over unordered pairs of distinct vertices
    bool estimated = false;      // true when BFS roots were subsampled
    std::size_t roots_used = 0;
};

inline constexpr std::size_t kFullDistanceLimit = std::size_t{1} << 13;

// All-pairs BFS when |V| <= full_limit, otherwise BFS from `sample_roots`
// evenly strided roots (the result is then an estimate: the diameter is a
// lower bound and the average is over the sampled sources).
DistanceStats distances(const MGraph& g, std::size_t full_limit = kFullDistanceLimit,
                        std::size_t sample_roots = 256);

struct Assortativity {
    Rational exact;  // Pearson r over directed edge stubs
    double value = 0.0;
};

// Throws DegenerateInputError when every vertex has the same degree.
Assortativity assortativity(const MGraph& g);

struct OuterplanarityCertificate {
    bool certified = false;
    std::size_t chords = 0;
    std::string failure;  // empty when certified
};

// Checks that `boundary` is a Hamiltonian cycle of g and that every other
// edge is a chord not interleaving any other chord. A failure means the
// certificate is invalid, not that g is non-outerplanar.
OuterplanarityCertificate outerplanarity_certify(const MGraph& g, std::span<const VertexId> boundary);
OuterplanarityCertificate outerplanarity_certify(const MGraph& g);

// 2|E| / |V|.
Rational average_degree(const MGraph& g);

struct EntropyRow {
    std::string family;
    std::string value;  // as printed, three decimals
    double numeric = 0.0;
    std::string source;
    bool computed = false;
};

inline constexpr unsigned kEntropyLimitLevel = 64;

// Spanning-tree entropy of M(t) (computed at t = limit_level) next to the
// published values for other average-degree-3 families, ascending by value.
std::vector<EntropyRow> entropy_table(unsigned limit_level = kEntropyLimitLevel);

struct AnalysisReport {
    unsigned t = 0;
    std::size_t vertices = 0;
    std::size_t edges = 0;
    Rational average_degree;
    std::map<std::size_t, std::size_t> degree_histogram;
    bool cumulative_law_ok = false;
    std::uint64_t triangle_count = 0;
    std::uint32_t diameter = 0;
    Rational avg_distance;
    bool distances_estimated = false;
    bool assortativity_defined = false;
    Rational assortativity_exact;
    double assortativity_r = 0.0;
    bool outerplanar_certified = false;
    std::size_t chords = 0;
    std::string entropy_h_t;  // empty for t = 0
};

AnalysisReport analyze(const MGraph& g, unsigned entropy_precision = 15);

std::string to_json(const AnalysisReport& r);
std::string to_json(const std::vector<AnalysisReport>& reports);
std::string csv_header();
std::string to_csv_row(const AnalysisReport& r);

}  // namespace mgraph
