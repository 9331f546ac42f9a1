#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mgraph {

using VertexId = std::uint32_t;

struct Edge {
    VertexId u;
    VertexId v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

using HubPair = std::pair<VertexId, VertexId>;

inline constexpr unsigned kDefaultMaxBuildLevel = 24;

// Explicit labeled instance of M(t).
//
// Vertices are [0, 2^{t+1}). At every join the second copy is the first one
// shifted by 2^t. Adjacency is stored in CSR form with sorted neighbor lists.
// The boundary is the outer-face cycle of the canonical outerplanar embedding.
class MGraph {
public:
    unsigned level() const { return level_; }
    std::size_t num_vertices() const { return offsets_.size() - 1; }
    std::size_t num_edges() const { return neighbors_.size() / 2; }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
    bool adjacent(VertexId u, VertexId v) const;

    const HubPair& hub_pair() const { return hubs_; }
    const std::vector<VertexId>& boundary() const { return boundary_; }

    // All edges with u < v in ascending lexicographic order.
    std::vector<Edge> edges() const;

    friend MGraph from_edges(unsigned, std::size_t, std::span<const Edge>, HubPair,
                             std::vector<VertexId>);

private:
    unsigned level_ = 0;
    std::vector<std::size_t> offsets_{0};
    std::vector<VertexId> neighbors_;
    HubPair hubs_{0, 0};
    std::vector<VertexId> boundary_;
};

// Canonical M(t). M(0) is the edge {0,1}; M(t) joins A = M(t-1) and
// B = M(t-1) + 2^t with the edges (a, a+2^t), (b, b+2^t) where (a, b) is the
// hub pair of M(t-1). The hub pair of M(t) is the cross edge (a, a+2^t).
// Throws ResourceLimitError when t > max_level.
MGraph build(unsigned t, unsigned max_level = kDefaultMaxBuildLevel);

// Assemble a graph from an explicit edge list. Used for fault injection and
// negative controls; no M(t) invariant is checked.
MGraph from_edges(unsigned level, std::size_t num_vertices, std::span<const Edge> edges,
                  HubPair hubs, std::vector<VertexId> boundary);

// Copy of g with edge {u,v} removed. Throws std::invalid_argument if absent.
MGraph without_edge(const MGraph& g, Edge e);

HubPair hub_pair(const MGraph& g);

enum class ExportFormat { EdgeList, Dot, Json };

// Accepts "edge-list"/"edgelist", "dot", "json". Throws std::invalid_argument.
ExportFormat parse_export_format(std::string_view name);

std::string export_graph(const MGraph& g, ExportFormat format);

// Vertex count 2^{t+1} and edge count 3*2^t - 2 without building the graph.
std::uint64_t expected_vertices(unsigned t);
std::uint64_t expected_edges(unsigned t);

}  // namespace mgraph
