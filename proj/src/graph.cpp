#include "mgraph/graph.hpp"

#include "mgraph/error.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace mgraph {

namespace {

// Linear walk of a circular boundary from `from` to its cycle neighbor `to`
// the long way round, i.e. every vertex appears once and the walk ends at `to`.
std::vector<VertexId> open_at(const std::vector<VertexId>& cycle, VertexId from, VertexId to) {
    const std::size_t n = cycle.size();
    const auto it = std::find(cycle.begin(), cycle.end(), from);
    const std::size_t start = static_cast<std::size_t>(it - cycle.begin());
    const bool next_is_to = cycle[(start + 1) % n] == to;
    std::vector<VertexId> path;
    path.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t pos = next_is_to ? (start + n - i) % n : (start + i) % n;
        path.push_back(cycle[pos]);
    }
    return path;
}

}  // namespace

bool MGraph::adjacent(VertexId u, VertexId v) const {
    if (u >= num_vertices() || v >= num_vertices()) return false;
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> MGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(num_edges());
    for (VertexId u = 0; u < num_vertices(); ++u) {
        for (VertexId w : neighbors(u)) {
            if (u < w) out.push_back({u, w});
        }
    }
    return out;
}

std::uint64_t expected_vertices(unsigned t) { return std::uint64_t{2} << t; }

std::uint64_t expected_edges(unsigned t) { return 3 * (std::uint64_t{1} << t) - 2; }

MGraph build(unsigned t, unsigned max_level) {
    if (t > max_level) {
        throw ResourceLimitError("M(" + std::to_string(t) + ") exceeds the construction limit t <= " +
                                 std::to_string(max_level));
    }
    std::vector<Edge> edges{{0, 1}};
    edges.reserve(expected_edges(t));
    std::vector<VertexId> boundary{0, 1};
    HubPair hubs{0, 1};

    for (unsigned k = 1; k <= t; ++k) {
        const auto offset = static_cast<VertexId>(std::uint64_t{1} << k);
        const std::size_t m = edges.size();
        for (std::size_t i = 0; i < m; ++i) {
            edges.push_back({edges[i].u + offset, edges[i].v + offset});
        }
        const auto [a, b] = hubs;
        edges.push_back({a, a + offset});
        edges.push_back({b, b + offset});

        // New outer cycle: a ... b (copy A, long way), then b+2^k ... a+2^k
        // (copy B reversed). Both cross edges close the cycle and the old hub
        // edges become chords.
        std::vector<VertexId> path = open_at(boundary, a, b);
        const std::size_t half = path.size();
        path.reserve(2 * half);
        for (std::size_t i = half; i-- > 0;) path.push_back(path[i] + offset);
        boundary = std::move(path);
        hubs = {a, a + offset};
    }
    return from_edges(t, static_cast<std::size_t>(expected_vertices(t)), edges, hubs,
                    std::move(boundary));
}

MGraph from_edges(unsigned level, std::size_t num_vertices, std::span<const Edge> edges,
                  HubPair hubs, std::vector<VertexId> boundary) {
    MGraph g;
    g.level_ = level;
    g.offsets_.assign(num_vertices + 1, 0);
    for (const Edge& e : edges) {
        if (e.u >= num_vertices || e.v >= num_vertices) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (e.u == e.v) throw std::invalid_argument("self-loop in simple graph");
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    for (std::size_t i = 0; i < num_vertices; ++i) g.offsets_[i + 1] += g.offsets_[i];
    g.neighbors_.resize(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const Edge& e : edges) {
        g.neighbors_[fill[e.u]++] = e.v;
        g.neighbors_[fill[e.v]++] = e.u;
    }
    for (std::size_t v = 0; v < num_vertices; ++v) {
        auto first = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = g.neighbors_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        if (std::adjacent_find(first, last) != last) {
            throw std::invalid_argument("multi-edge in simple graph");
        }
    }
    g.hubs_ = hubs;
    g.boundary_ = std::move(boundary);
    return g;
}

MGraph without_edge(const MGraph& g, Edge e) {
    if (e.u > e.v) std::swap(e.u, e.v);
    std::vector<Edge> edges = g.edges();
    auto it = std::find(edges.begin(), edges.end(), e);
    if (it == edges.end()) throw std::invalid_argument("edge not present");
    edges.erase(it);
    return from_edges(g.level(), g.num_vertices(), edges, g.hub_pair(), g.boundary());
}

HubPair hub_pair(const MGraph& g) { return g.hub_pair(); }

ExportFormat parse_export_format(std::string_view name) {
    if (name == "edge-list" || name == "edgelist") return ExportFormat::EdgeList;
    if (name == "dot") return ExportFormat::Dot;
    if (name == "json") return ExportFormat::Json;
    throw std::invalid_argument("unsupported export format: " + std::string(name));
}

std::string export_graph(const MGraph& g, ExportFormat format) {
    const std::vector<Edge> edges = g.edges();
    std::string out;
    switch (format) {
        case ExportFormat::EdgeList:
            out.reserve(edges.size() * 12);
            for (const Edge& e : edges) {
                out += std::to_string(e.u);
                out += ' ';
                out += std::to_string(e.v);
                out += '\n';
            }
            return out;
        case ExportFormat::Dot: {
            const auto [h1, h2] = g.hub_pair();
            out += "graph M" + std::to_string(g.level()) + " {\n";
            out += "  graph [hub_pair=\"" + std::to_string(h1) + "," + std::to_string(h2) +
                   "\", boundary=\"";
            for (std::size_t i = 0; i < g.boundary().size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(g.boundary()[i]);
            }
            out += "\"];\n";
            out += "  " + std::to_string(h1) + " [hub=true, shape=doublecircle];\n";
            out += "  " + std::to_string(h2) + " [hub=true, shape=doublecircle];\n";
            for (const Edge& e : edges) {
                out += "  " + std::to_string(e.u) + " -- " + std::to_string(e.v) + ";\n";
            }
            out += "}\n";
            return out;
        }
        case ExportFormat::Json: {
            nlohmann::ordered_json j;
            j["t"] = g.level();
            j["vertices"] = g.num_vertices();
            auto& arr = j["edges"] = nlohmann::ordered_json::array();
            for (const Edge& e : edges) arr.push_back({e.u, e.v});
            j["hub_pair"] = {g.hub_pair().first, g.hub_pair().second};
            j["boundary"] = g.boundary();
            return j.dump() + "\n";
        }
    }
    throw std::invalid_argument("unsupported export format");
}

}  // namespace mgraph
