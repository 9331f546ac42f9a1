// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include "mgraph/analysis.hpp"
#include "mgraph/exact_count.hpp"
#include "mgraph/graph.hpp"
#include "mgraph/kirchhoff.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace mgraph;

namespace {

struct Failure {
    std::string what;
};

void require(bool cond, const std::string& what) {
    if (!cond) throw Failure{what};
}

std::string level(unsigned t) { return "t=" + std::to_string(t) + ": "; }

struct Criterion {
    int number;
    std::string title;
    std::function<std::string()> body;
};

// 2-forests of the 4-cycle separating u and v, by checking every edge subset.
unsigned enumerate_4cycle_forests(const MGraph& g, VertexId u, VertexId v) {
    const auto edges = g.edges();
    unsigned count = 0;
    for (unsigned mask = 0; mask < 16; ++mask) {
        std::vector<VertexId> comp(4);
        std::iota(comp.begin(), comp.end(), VertexId{0});
        unsigned kept = 0;
        bool cycle = false;
        for (unsigned i = 0; i < 4; ++i) {
            if (!(mask >> i & 1U)) continue;
            ++kept;
            const VertexId a = comp[edges[i].u];
            const VertexId b = comp[edges[i].v];
            if (a == b) cycle = true;
            for (auto& c : comp) {
                if (c == b) c = a;
            }
        }
        if (!cycle && kept == 2 && comp[u] != comp[v]) ++count;
    }
    return count;
}

}  // namespace

int main() {
    const std::vector<std::uint64_t> primes{1000000007ULL, 998244353ULL, 1000000009ULL};

    const std::vector<Criterion> criteria{
        {1, "base values s(0)=1, s(1)=4",
         [] {
             require(s_recurrence(0) == 1, "s(0) = " + to_decimal(s_recurrence(0)));
             require(s_recurrence(1) == 4, "s(1) = " + to_decimal(s_recurrence(1)));
             return std::string("exact");
         }},
        {2, "recurrence = product formula = Kirchhoff, 0 <= t <= 7",
         [] {
             for (unsigned t = 0; t <= 7; ++t) {
                 const BigInt rec = s_recurrence(t);
                 const BigInt kir = count_trees(build(t));
                 require(rec == kir, level(t) + "recurrence " + to_decimal(rec) + " vs kirchhoff " + to_decimal(kir));
                 if (t >= 1) {
                     const BigInt thm = s_theorem1(t);
                     require(rec == thm, level(t) + "recurrence vs product " + to_decimal(thm));
                 }
             }
             return "s(7) has " + std::to_string(decimal_digits(s_recurrence(7))) + " digits";
         }},
        {3, "s(t) mod p = Kirchhoff mod p, t <= 10, three primes near 1e9",
         [&] {
             for (unsigned t = 0; t <= 10; ++t) {
                 const MGraph g = build(t);
                 for (std::uint64_t p : primes) {
                     const std::uint64_t rec = s_recurrence_mod(t, p);
                     const std::uint64_t kir = count_trees_mod(g, p);
                     require(rec == kir, level(t) + "p=" + std::to_string(p) + " " + std::to_string(rec) +
                                             " vs " + std::to_string(kir));
                 }
             }
             return std::string("33 residues agree");
         }},
        {4, "g(t) = separating 2-forests of M(t), 0 <= t <= 6; g(1)=3 by enumeration",
         [] {
             for (unsigned t = 0; t <= 6; ++t) {
                 const MGraph g = build(t);
                 const auto [u, v] = hub_pair(g);
                 const BigInt forests = count_separating_2forests(g, u, v);
                 require(forests == g_value(t),
                         level(t) + "identification " + to_decimal(forests) + " vs g " + to_decimal(g_value(t)));
             }
             const MGraph c4 = build(1);
             const auto [u, v] = hub_pair(c4);
             const unsigned enumerated = enumerate_4cycle_forests(c4, u, v);
             require(enumerated == 3, "enumeration gives " + std::to_string(enumerated));
             require(g_value(1) == 3, "g(1) = " + to_decimal(g_value(1)));
             return std::string("g(6) = ") + to_decimal(g_value(6));
         }},
        {5, "closed form for q(t) has zero sqrt2 part and equals the recurrence, 1 <= t <= 64",
         [] {
             for (unsigned t = 1; t <= 64; ++t) {
                 const QuadExt q = q_closed_form_field(t);
                 require(q.is_rational(), level(t) + "sqrt2 component " + to_string(q.radical_part()));
                 require(q.rational_part() == q_recurrence(t), level(t) + "differs from recurrence");
             }
             return "q(64) = " + to_string(q_recurrence(64)).substr(0, 24) + "...";
         }},
        {6, "entropy h_20 = 0.657 +/- 1e-3; partial sums increasing within the tail bound",
         [] {
             const EntropyEstimate h20 = entropy(20, 30);
             require(std::abs(h20.h_t.to_double() - 0.657) <= 1e-3, "h_20 = " + h20.h_t.to_fixed(10));
             const EntropyEstimate limit = entropy(kEntropyLimitLevel, 30);
             for (unsigned t = 1; t < kEntropyLimitLevel; ++t) {
                 const EntropyEstimate cur = entropy(t, 30);
                 const EntropyEstimate next = entropy(t + 1, 30);
                 require(cur.h_t < next.h_t, level(t) + "not increasing");
                 BigFloat gap(limit.h_t.precision());
                 mpfr_sub(gap.get(), limit.h_t.get(), cur.h_t.get(), MPFR_RNDN);
                 require(gap.to_double() <= entropy_tail_bound(t), level(t) + "tail bound violated");
             }
             return "h_20 = " + h20.h_t.to_fixed(12);
         }},
        {7, "|V|, |E|, average degree, triangle-free, cumulative degree law, 1 <= t <= 12",
         [] {
             for (unsigned t = 1; t <= 12; ++t) {
                 const MGraph g = build(t);
                 require(g.num_vertices() == (std::size_t{2} << t), level(t) + "vertex count");
                 require(g.num_edges() == 3 * (std::size_t{1} << t) - 2, level(t) + "edge count");
                 require(average_degree(g) == Rational(3) - ratio(2, 1UL << t),
                         level(t) + "average degree " + to_string(average_degree(g)));
                 require(triangle_count(g) == 0, level(t) + "triangles");
                 require(degree_law_check(g).holds, level(t) + "degree law");
             }
             return std::string("exact");
         }},
        {8, "outerplanarity certificate for 0 <= t <= 12; corrupted boundary rejected",
         [] {
             for (unsigned t = 0; t <= 12; ++t) {
                 const auto cert = outerplanarity_certify(build(t));
                 require(cert.certified, level(t) + cert.failure);
             }
             for (unsigned t : {1U, 2U, 6U, 12U}) {
                 const MGraph g = build(t);
                 std::vector<VertexId> corrupted = g.boundary();
                 std::swap(corrupted[0], corrupted[1]);
                 require(!outerplanarity_certify(g, corrupted).certified, level(t) + "negative control certified");
             }
             return std::string("13 certificates, 4 negative controls");
         }},
        {9, "assortativity r > 0 for 2 <= t <= 10",
         [] {
             std::ostringstream os;
             for (unsigned t = 2; t <= 10; ++t) {
                 const Assortativity a = assortativity(build(t));
                 require(sgn(a.exact) > 0, level(t) + "r = " + to_string(a.exact));
                 if (t == 2 || t == 10) os << "r(" << t << ")=" << a.value << " ";
             }
             return os.str();
         }},
        {10, "comparison table: 0.807, 0.787, 0.721, 0.677 verbatim, M(t) is the minimum",
         [] {
             const auto rows = entropy_table();
             for (const char* expected : {"0.807", "0.787", "0.721", "0.677"}) {
                 bool found = false;
                 for (const auto& r : rows) found = found || (!r.computed && r.value == expected);
                 require(found, std::string("missing ") + expected);
             }
             require(rows.front().computed, "computed value is not the minimum");
             for (std::size_t i = 1; i < rows.size(); ++i) {
                 require(rows.front().numeric < rows[i].numeric, "not strictly smallest");
             }
             return "M(t) = " + rows.front().value;
         }},
    };

    int failed = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            detail = c.body();
            ok = true;
        } catch (const Failure& f) {
            detail = f.what;
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << (ok ? "PASS" : "FAIL") << " [" << c.number << "] " << c.title << " -- " << detail << " ("
                  << timing << ")\n";
        failed += ok ? 0 : 1;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << "\n";
    return failed == 0 ? 0 : 1;
}
