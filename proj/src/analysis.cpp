#include "mgraph/analysis.hpp"

#include "mgraph/error.hpp"
#include "mgraph/exact_count.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace mgraph {

DegreeLaw degree_law_check(const MGraph& g) {
    DegreeLaw law;
    const std::size_t n = g.num_vertices();
    for (VertexId v = 0; v < n; ++v) ++law.histogram[g.degree(v)];

    const unsigned t = g.level();
    law.holds = true;
    for (unsigned k = 2; k <= t + 1; ++k) {
        std::size_t at_least = 0;
        for (auto it = law.histogram.lower_bound(k); it != law.histogram.end(); ++it) at_least += it->second;
        // at_least / n == 2^{2-k}  <=>  at_least * 2^{k-2} == n
        if ((static_cast<std::uint64_t>(at_least) << (k - 2)) != n) law.holds = false;
    }
    return law;
}

std::uint64_t triangle_count(const MGraph& g) {
    std::uint64_t count = 0;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        auto nu = g.neighbors(u);
        for (VertexId v : nu) {
            if (v <= u) continue;
            auto nv = g.neighbors(v);
            // common neighbors w > v, each triangle counted once as u < v < w
            auto i = std::upper_bound(nu.begin(), nu.end(), v);
            auto j = std::upper_bound(nv.begin(), nv.end(), v);
            while (i != nu.end() && j != nv.end()) {
                if (*i < *j) {
                    ++i;
                } else if (*j < *i) {
                    ++j;
                } else {
                    ++count;
                    ++i;
                    ++j;
                }
            }
        }
    }
    return count;
}

DistanceStats distances(const MGraph& g, std::size_t full_limit, std::size_t sample_roots) {
    const std::size_t n = g.num_vertices();
    DistanceStats stats;
    if (n < 2) return stats;

    std::vector<VertexId> roots;
    if (n <= full_limit || sample_roots >= n) {
        roots.resize(n);
        for (VertexId v = 0; v < n; ++v) roots[v] = v;
    } else {
        const std::size_t stride = n / sample_roots;
        for (std::size_t i = 0; i < sample_roots; ++i) roots.push_back(static_cast<VertexId>(i * stride));
        stats.estimated = true;
    }
    stats.roots_used = roots.size();

    constexpr std::uint32_t unseen = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> dist(n);
    std::vector<VertexId> queue(n);
    BigInt total = 0;
    for (VertexId root : roots) {
        std::fill(dist.begin(), dist.end(), unseen);
        std::size_t head = 0;
        std::size_t tail = 0;
        queue[tail++] = root;
        dist[root] = 0;
        std::uint64_t sum = 0;
        while (head < tail) {
            const VertexId x = queue[head++];
            sum += dist[x];
            stats.diameter = std::max(stats.diameter, dist[x]);
            for (VertexId y : g.neighbors(x)) {
                if (dist[y] == unseen) {
                    dist[y] = dist[x] + 1;
                    queue[tail++] = y;
                }
            }
        }
        if (tail != n) throw DegenerateInputError("graph is disconnected: distances undefined");
        total += BigInt(static_cast<unsigned long>(sum));
    }
    // Ordered pairs from each root; the mean over unordered pairs is the same.
    stats.avg_distance = ratio(total, BigInt(static_cast<unsigned long>(roots.size() * (n - 1))));
    return stats;
}

Assortativity assortativity(const MGraph& g) {
    BigInt stubs = 0;
    BigInt sum_j = 0;
    BigInt sum_jj = 0;
    BigInt sum_jk = 0;
    for (VertexId u = 0; u < g.num_vertices(); ++u) {
        const unsigned long du = g.degree(u);
        for (VertexId v : g.neighbors(u)) {
            const unsigned long dv = g.degree(v);
            stubs += 1;
            sum_j += du;
            sum_jj += du * du;
            sum_jk += du * dv;
        }
    }
    if (sgn(stubs) == 0) throw DegenerateInputError("assortativity undefined for an edgeless graph");
    const Rational mean = ratio(sum_j, stubs);
    const Rational variance = ratio(sum_jj, stubs) - mean * mean;
    if (sgn(variance) == 0) {
        throw DegenerateInputError("assortativity undefined: all endpoint degrees are equal");
    }
    Assortativity a;
    a.exact = (ratio(sum_jk, stubs) - mean * mean) / variance;
    a.value = a.exact.get_d();
    return a;
}

OuterplanarityCertificate outerplanarity_certify(const MGraph& g, std::span<const VertexId> boundary) {
    OuterplanarityCertificate cert;
    const std::size_t n = g.num_vertices();
    if (boundary.size() != n) {
        cert.failure = "boundary length differs from vertex count";
        return cert;
    }
    constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> pos(n, none);
    for (std::size_t i = 0; i < n; ++i) {
        const VertexId v = boundary[i];
        if (v >= n || pos[v] != none) {
            cert.failure = "boundary is not a permutation of the vertices";
            return cert;
        }
        pos[v] = i;
    }
    if (n <= 2) {
        // A single edge (or fewer) has no cycle to check and no chords.
        cert.certified = g.num_edges() + 1 >= n;
        if (!cert.certified) cert.failure = "graph is disconnected";
        return cert;
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (!g.adjacent(boundary[i], boundary[(i + 1) % n])) {
            cert.failure = "boundary vertices " + std::to_string(boundary[i]) + " and " +
                           std::to_string(boundary[(i + 1) % n]) + " are not adjacent";
            return cert;
        }
    }

    std::vector<std::pair<std::size_t, std::size_t>> chords;
    for (const Edge& e : g.edges()) {
        std::size_t l = pos[e.u];
        std::size_t r = pos[e.v];
        if (l > r) std::swap(l, r);
        if (r - l == 1 || (l == 0 && r == n - 1)) continue;  // cycle edge
        chords.emplace_back(l, r);
    }
    cert.chords = chords.size();

    // Chords do not cross iff their position intervals form a laminar family
    // (nested or disjoint, shared endpoints allowed).
    std::sort(chords.begin(), chords.end(), [](const auto& x, const auto& y) {
        return x.first != y.first ? x.first < y.first : x.second > y.second;
    });
    std::vector<std::pair<std::size_t, std::size_t>> open;
    for (const auto& c : chords) {
        while (!open.empty() && open.back().second <= c.first) open.pop_back();
        if (!open.empty() && open.back().second < c.second) {
            cert.failure = "chords " + std::to_string(boundary[open.back().first]) + "-" +
                           std::to_string(boundary[open.back().second]) + " and " +
                           std::to_string(boundary[c.first]) + "-" + std::to_string(boundary[c.second]) +
                           " cross";
            return cert;
        }
        open.push_back(c);
    }
    cert.certified = true;
    return cert;
}

OuterplanarityCertificate outerplanarity_certify(const MGraph& g) {
    return outerplanarity_certify(g, g.boundary());
}

Rational average_degree(const MGraph& g) {
    return ratio(static_cast<unsigned long>(2 * g.num_edges()), static_cast<unsigned long>(g.num_vertices()));
}

std::vector<EntropyRow> entropy_table(unsigned limit_level) {
    const EntropyEstimate est = entropy(limit_level, 20);
    std::vector<EntropyRow> rows{
        {"M(t) (t=" + std::to_string(limit_level) + ")", est.h_t.to_fixed(3), est.h_t.to_double(),
         "computed from the exact q(i)", true},
        {"Hanoi graphs", "0.677", 0.677, "Zhang, Lin, Wu, Comellas (2012)", false},
        {"3-12-12 lattice", "0.721", 0.721, "Shrock, Wu (2000)", false},
        {"4-8-8 (bathroom tile) lattice", "0.787", 0.787, "Shrock, Wu (2000)", false},
        {"honeycomb lattice", "0.807", 0.807, "Wu (1977)", false},
    };
    std::stable_sort(rows.begin(), rows.end(),
                     [](const EntropyRow& a, const EntropyRow& b) { return a.numeric < b.numeric; });
    return rows;
}

AnalysisReport analyze(const MGraph& g, unsigned entropy_precision) {
    AnalysisReport r;
    r.t = g.level();
    r.vertices = g.num_vertices();
    r.edges = g.num_edges();
    r.average_degree = average_degree(g);

    DegreeLaw law = degree_law_check(g);
    r.degree_histogram = std::move(law.histogram);
    r.cumulative_law_ok = law.holds;
    r.triangle_count = triangle_count(g);

    const DistanceStats d = distances(g);
    r.diameter = d.diameter;
    r.avg_distance = d.avg_distance;
    r.distances_estimated = d.estimated;

    try {
        const Assortativity a = assortativity(g);
        r.assortativity_defined = true;
        r.assortativity_exact = a.exact;
        r.assortativity_r = a.value;
    } catch (const DegenerateInputError&) {
        r.assortativity_defined = false;
    }

    const OuterplanarityCertificate cert = outerplanarity_certify(g);
    r.outerplanar_certified = cert.certified;
    r.chords = cert.chords;

    if (r.t >= 1) r.entropy_h_t = entropy(r.t, std::max(entropy_precision, 10U)).h_t.to_fixed(entropy_precision);
    return r;
}

namespace {

nlohmann::ordered_json report_json(const AnalysisReport& r) {
    nlohmann::ordered_json j;
    j["t"] = r.t;
    j["vertices"] = r.vertices;
    j["edges"] = r.edges;
    j["average_degree"] = to_string(r.average_degree);
    auto& hist = j["degree_histogram"] = nlohmann::ordered_json::object();
    for (const auto& [deg, count] : r.degree_histogram) hist[std::to_string(deg)] = count;
    j["cumulative_law_ok"] = r.cumulative_law_ok;
    j["triangle_count"] = r.triangle_count;
    j["diameter"] = r.diameter;
    j["avg_distance"] = r.avg_distance.get_d();
    j["avg_distance_exact"] = to_string(r.avg_distance);
    j["distances_estimated"] = r.distances_estimated;
    if (r.assortativity_defined) {
        j["assortativity_r"] = r.assortativity_r;
        j["assortativity_exact"] = to_string(r.assortativity_exact);
    } else {
        j["assortativity_r"] = nullptr;
        j["assortativity_exact"] = nullptr;
    }
    j["outerplanar_certified"] = r.outerplanar_certified;
    j["chords"] = r.chords;
    if (r.entropy_h_t.empty()) {
        j["entropy_h_t"] = nullptr;
    } else {
        j["entropy_h_t"] = std::stod(r.entropy_h_t);
    }
    return j;
}

}  // namespace

std::string to_json(const AnalysisReport& r) { return report_json(r).dump(2) + "\n"; }

std::string to_json(const std::vector<AnalysisReport>& reports) {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(report_json(r));
    return arr.dump(2) + "\n";
}

std::string csv_header() {
    return "t,vertices,edges,average_degree,degree_histogram,cumulative_law_ok,triangle_count,diameter,"
           "avg_distance,distances_estimated,assortativity_r,outerplanar_certified,chords,entropy_h_t\n";
}

std::string to_csv_row(const AnalysisReport& r) {
    std::ostringstream os;
    os.precision(17);
    os << r.t << ',' << r.vertices << ',' << r.edges << ',' << to_string(r.average_degree) << ',';
    bool first = true;
    for (const auto& [deg, count] : r.degree_histogram) {
        if (!first) os << ';';
        os << deg << ':' << count;
        first = false;
    }
    os << ',' << (r.cumulative_law_ok ? "true" : "false") << ',' << r.triangle_count << ',' << r.diameter
       << ',' << r.avg_distance.get_d() << ',' << (r.distances_estimated ? "true" : "false") << ',';
    if (r.assortativity_defined) os << r.assortativity_r;
    os << ',' << (r.outerplanar_certified ? "true" : "false") << ',' << r.chords << ',' << r.entropy_h_t
       << '\n';
    return os.str();
}

}  // namespace mgraph
