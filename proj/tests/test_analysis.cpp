#include "mgraph/analysis.hpp"
#include "mgraph/error.hpp"
#include "mgraph/graph.hpp"

#include <doctest.h>
#include <json.hpp>

#include <algorithm>

using namespace mgraph;

using Histogram = std::map<std::size_t, std::size_t>;

TEST_CASE("degree law on small levels") {
    const DegreeLaw l1 = degree_law_check(build(1));
    CHECK(l1.histogram == Histogram{{2, 4}});
    CHECK(l1.holds);

    const DegreeLaw l2 = degree_law_check(build(2));
    CHECK(l2.histogram == Histogram{{2, 4}, {3, 4}});
    CHECK(l2.holds);

    const DegreeLaw l3 = degree_law_check(build(3));
    CHECK(l3.histogram == Histogram{{2, 8}, {3, 4}, {4, 4}});
    CHECK(l3.holds);
}

TEST_CASE("cumulative degree law holds exactly for t <= 12") {
    for (unsigned t = 1; t <= 12; ++t) {
        CAPTURE(t);
        const DegreeLaw law = degree_law_check(build(t));
        CHECK(law.holds);
        std::size_t total = 0;
        for (const auto& [d, c] : law.histogram) total += c;
        CHECK(total == (std::size_t{2} << t));
    }
}

TEST_CASE("degree law detects a perturbed graph") {
    const MGraph g = build(4);
    CHECK_FALSE(degree_law_check(without_edge(g, {0, 16})).holds);
}

TEST_CASE("triangle-free") {
    for (unsigned t = 0; t <= 12; ++t) CHECK(triangle_count(build(t)) == 0);
    // K4 has four triangles
    std::vector<Edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    CHECK(triangle_count(from_edges(0, 4, k4, {0, 1}, {0, 1, 2, 3})) == 4);
}

TEST_CASE("distances") {
    const DistanceStats d0 = distances(build(0));
    CHECK(d0.diameter == 1);
    CHECK(d0.avg_distance == 1);

    const DistanceStats d1 = distances(build(1));
    CHECK(d1.diameter == 2);
    CHECK(d1.avg_distance == Rational(4, 3));

    // networkx all-pairs shortest paths
    CHECK(distances(build(2)).avg_distance == 2);
    CHECK(distances(build(3)).avg_distance == Rational(14, 5));
    CHECK(distances(build(4)).avg_distance == Rational(114, 31));
    CHECK(distances(build(5)).avg_distance == Rational(290, 63));
    CHECK(distances(build(5)).diameter == 10);
}

TEST_CASE("distances are monotone with a linear-in-t envelope") {
    std::uint32_t prev_diameter = 0;
    Rational prev_avg = 0;
    for (unsigned t = 0; t <= 12; ++t) {
        CAPTURE(t);
        const DistanceStats d = distances(build(t));
        CHECK_FALSE(d.estimated);
        CHECK(d.diameter >= prev_diameter);
        CHECK(d.avg_distance >= prev_avg);
        CHECK(d.avg_distance <= d.diameter);
        // measured: diameter = 2t for t >= 1
        CHECK(d.diameter <= 2 * t + 1);
        const double per_level = d.avg_distance.get_d() / (t + 1);
        CHECK(per_level >= 0.5);
        CHECK(per_level <= 1.5);
        prev_diameter = d.diameter;
        prev_avg = d.avg_distance;
    }
}

TEST_CASE("sampled distances are labelled as estimates") {
    const MGraph g = build(9);
    const DistanceStats full = distances(g);
    const DistanceStats sampled = distances(g, 64, 32);
    CHECK(sampled.estimated);
    CHECK(sampled.roots_used == 32);
    CHECK(sampled.diameter <= full.diameter);
}

TEST_CASE("assortativity") {
    CHECK_THROWS_AS(assortativity(build(1)), DegenerateInputError);
    CHECK_THROWS_AS(assortativity(build(0)), DegenerateInputError);
    // exact values; networkx degree_pearson_correlation_coefficient agrees
    CHECK(assortativity(build(2)).exact == Rational(1, 6));
    CHECK(assortativity(build(3)).exact == Rational(1, 4));
    CHECK(assortativity(build(4)).exact == Rational(31, 100));
    CHECK(assortativity(build(8)).value == doctest::Approx(0.4135798329846396).epsilon(1e-12));
    for (unsigned t = 2; t <= 10; ++t) {
        const Assortativity a = assortativity(build(t));
        CHECK(sgn(a.exact) > 0);
        CHECK(a.value <= 1.0);
    }
}

TEST_CASE("outerplanarity certificate") {
    const MGraph g1 = build(1);
    const std::vector<VertexId> cycle{0, 2, 3, 1};
    const auto c1 = outerplanarity_certify(g1, cycle);
    CHECK(c1.certified);
    CHECK(c1.chords == 0);

    const auto c2 = outerplanarity_certify(build(2));
    CHECK(c2.certified);
    CHECK(c2.chords == 2);

    for (unsigned t = 0; t <= 12; ++t) {
        CAPTURE(t);
        const MGraph g = build(t);
        const auto c = outerplanarity_certify(g);
        CHECK(c.certified);
        CHECK(c.failure.empty());
        // every edge not on the outer cycle is a chord
        if (t >= 1) CHECK(c.chords == g.num_edges() - g.num_vertices());
    }
}

TEST_CASE("outerplanarity negative controls") {
    const MGraph g = build(3);
    std::vector<VertexId> swapped = g.boundary();
    std::swap(swapped[0], swapped[1]);
    CHECK_FALSE(outerplanarity_certify(g, swapped).certified);

    std::vector<VertexId> cycle{0, 2, 3, 1};
    std::swap(cycle[0], cycle[1]);
    CHECK_FALSE(outerplanarity_certify(build(1), cycle).certified);

    std::vector<VertexId> repeated = g.boundary();
    repeated[3] = repeated[4];
    CHECK_FALSE(outerplanarity_certify(g, repeated).certified);

    const std::vector<VertexId> short_boundary{0, 1};
    CHECK_FALSE(outerplanarity_certify(g, short_boundary).certified);

    // A Hamiltonian cycle with two crossing chords: K4 on the cycle 0-1-2-3.
    std::vector<Edge> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    const MGraph complete = from_edges(0, 4, k4, {0, 1}, {0, 1, 2, 3});
    const auto c = outerplanarity_certify(complete);
    CHECK_FALSE(c.certified);
    CHECK(c.failure.find("cross") != std::string::npos);
}

TEST_CASE("average degree is 3 - 2^{1-t}") {
    for (unsigned t = 0; t <= 12; ++t) {
        CHECK(average_degree(build(t)) == Rational(3) - ratio(2, 1UL << t));
    }
}

TEST_CASE("entropy comparison table") {
    const auto rows = entropy_table();
    REQUIRE(rows.size() == 5);
    auto find = [&](const std::string& family) {
        return std::find_if(rows.begin(), rows.end(), [&](const EntropyRow& r) { return r.family == family; });
    };
    CHECK(find("honeycomb lattice")->value == "0.807");
    CHECK(find("4-8-8 (bathroom tile) lattice")->value == "0.787");
    CHECK(find("3-12-12 lattice")->value == "0.721");
    CHECK(find("Hanoi graphs")->value == "0.677");
    CHECK(rows.front().computed);
    CHECK(rows.front().value == "0.657");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK_FALSE(rows[i].computed);
        CHECK(rows[i - 1].numeric < rows[i].numeric);
    }
}

TEST_CASE("analysis report and serialization") {
    const AnalysisReport r = analyze(build(3));
    CHECK(r.t == 3);
    CHECK(r.vertices == 16);
    CHECK(r.edges == 22);
    CHECK(r.triangle_count == 0);
    CHECK(r.cumulative_law_ok);
    CHECK(r.outerplanar_certified);
    CHECK(r.assortativity_defined);
    CHECK(r.diameter == 6);

    const auto j = nlohmann::json::parse(to_json(r));
    for (const char* key : {"t", "degree_histogram", "cumulative_law_ok", "triangle_count", "diameter",
                            "avg_distance", "assortativity_r", "outerplanar_certified", "entropy_h_t"}) {
        CHECK(j.contains(key));
    }
    CHECK(j["triangle_count"] == 0);
    CHECK(j["degree_histogram"]["4"] == 4);
    CHECK(j["avg_distance_exact"] == "14/5");
    CHECK(j["assortativity_r"].get<double>() == doctest::Approx(0.25));

    const AnalysisReport r1 = analyze(build(1));
    CHECK_FALSE(r1.assortativity_defined);
    CHECK(nlohmann::json::parse(to_json(r1))["assortativity_r"].is_null());

    const std::string row = to_csv_row(r);
    const std::string header = csv_header();
    CHECK(row.rfind("3,16,22,", 0) == 0);
    CHECK(std::count(row.begin(), row.end(), ',') == std::count(header.begin(), header.end(), ','));
}
