#include "mgraph/kirchhoff.hpp"

#include "mgraph/error.hpp"

#include <stdexcept>
#include <utility>

namespace mgraph {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (e) {
        if (e & 1U) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        e >>= 1U;
    }
    return r;
}

void check_vertex(std::size_t n, VertexId v) {
    if (v >= n) throw std::invalid_argument("vertex " + std::to_string(v) + " out of range");
}

BigInt cofactor(std::size_t n, std::span<const Edge> edges, VertexId removed) {
    check_vertex(n, removed);
    return det_exact(laplacian(n, edges).minor(removed));
}

// Edge list of the multigraph with v merged into u; vertices above v shift
// down by one. Returns the new index of the merged vertex.
VertexId identify(std::size_t n, std::span<const Edge> edges, VertexId u, VertexId v,
                  std::vector<Edge>& out) {
    check_vertex(n, u);
    check_vertex(n, v);
    if (u == v) throw std::invalid_argument("identification needs two distinct vertices");
    auto relabel = [&](VertexId x) -> VertexId {
        if (x == v) x = u;
        return x > v ? x - 1 : x;
    };
    out.clear();
    out.reserve(edges.size());
    for (const Edge& e : edges) {
        const VertexId a = relabel(e.u);
        const VertexId b = relabel(e.v);
        if (a != b) out.push_back({a, b});
    }
    return relabel(u);
}

}  // namespace

IntMatrix IntMatrix::minor(std::size_t k) const {
    if (k >= n_) throw std::out_of_range("minor index out of range");
    IntMatrix m(n_ - 1);
    for (std::size_t i = 0, mi = 0; i < n_; ++i) {
        if (i == k) continue;
        for (std::size_t j = 0, mj = 0; j < n_; ++j) {
            if (j == k) continue;
            m(mi, mj++) = (*this)(i, j);
        }
        ++mi;
    }
    return m;
}

IntMatrix laplacian(std::size_t num_vertices, std::span<const Edge> edges) {
    IntMatrix l(num_vertices);
    for (const Edge& e : edges) {
        check_vertex(num_vertices, e.u);
        check_vertex(num_vertices, e.v);
        if (e.u == e.v) continue;
        l(e.u, e.u) += 1;
        l(e.v, e.v) += 1;
        l(e.u, e.v) -= 1;
        l(e.v, e.u) -= 1;
    }
    return l;
}

IntMatrix laplacian(const MGraph& g) {
    const auto edges = g.edges();
    return laplacian(g.num_vertices(), edges);
}

BigInt det_exact(IntMatrix m) {
    const std::size_t n = m.size();
    if (n == 0) return 1;
    int sign = 1;
    BigInt prev = 1;
    BigInt tmp;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (sgn(m(k, k)) == 0) {
            std::size_t r = k + 1;
            while (r < n && sgn(m(r, k)) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(m(k, j), m(r, j));
            sign = -sign;
        }
        const BigInt& pivot = m(k, k);
        for (std::size_t i = k + 1; i < n; ++i) {
            const BigInt& lead = m(i, k);
            for (std::size_t j = k + 1; j < n; ++j) {
                // m(i,j) = (pivot * m(i,j) - lead * m(k,j)) / prev, exact.
                mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), m(i, j).get_mpz_t());
                mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), m(k, j).get_mpz_t());
                mpz_divexact(m(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
            }
            m(i, k) = 0;
        }
        prev = pivot;
    }
    BigInt det = m(n - 1, n - 1);
    if (sign < 0) det = -det;
    return det;
}

BigInt count_trees(std::size_t num_vertices, std::span<const Edge> edges, VertexId removed) {
    BigInt c = cofactor(num_vertices, edges, removed);
    if (sgn(c) == 0) throw DegenerateInputError("graph is disconnected: no spanning trees");
    return c;
}

BigInt count_trees(const MGraph& g, VertexId removed) {
    const auto edges = g.edges();
    return count_trees(g.num_vertices(), edges, removed);
}

BigInt count_separating_2forests(std::size_t num_vertices, std::span<const Edge> edges, VertexId u,
                                 VertexId v) {
    std::vector<Edge> merged;
    const VertexId root = identify(num_vertices, edges, u, v, merged);
    return cofactor(num_vertices - 1, merged, root);
}

BigInt count_separating_2forests(const MGraph& g, VertexId u, VertexId v) {
    const auto edges = g.edges();
    return count_separating_2forests(g.num_vertices(), edges, u, v);
}

std::uint64_t count_trees_mod(std::size_t num_vertices, std::span<const Edge> edges, std::uint64_t p,
                              VertexId removed) {
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    check_vertex(num_vertices, removed);
    const std::size_t n = num_vertices - 1;
    if (n == 0) return 1 % p;
    auto index = [removed](VertexId x) -> std::size_t { return x > removed ? x - 1 : x; };

    std::vector<std::uint64_t> a(n * n, 0);
    auto at = [&](std::size_t i, std::size_t j) -> std::uint64_t& { return a[i * n + j]; };
    for (const Edge& e : edges) {
        check_vertex(num_vertices, e.u);
        check_vertex(num_vertices, e.v);
        if (e.u == e.v) continue;
        const bool keep_u = e.u != removed;
        const bool keep_v = e.v != removed;
        if (keep_u) at(index(e.u), index(e.u)) = (at(index(e.u), index(e.u)) + 1) % p;
        if (keep_v) at(index(e.v), index(e.v)) = (at(index(e.v), index(e.v)) + 1) % p;
        if (keep_u && keep_v) {
            at(index(e.u), index(e.v)) = (at(index(e.u), index(e.v)) + p - 1) % p;
            at(index(e.v), index(e.u)) = (at(index(e.v), index(e.u)) + p - 1) % p;
        }
    }

    // The Laplacian stays sparse under elimination for this family, so only
    // the nonzero columns of the pivot row are touched.
    std::uint64_t det = 1;
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < n; ++k) {
        if (at(k, k) == 0) {
            std::size_t r = k + 1;
            while (r < n && at(r, k) == 0) ++r;
            if (r == n) return 0;
            for (std::size_t j = k; j < n; ++j) std::swap(at(k, j), at(r, j));
            det = (p - det) % p;
        }
        const std::uint64_t pivot = at(k, k);
        det = mulmod(det, pivot, p);
        const std::uint64_t inv = powmod(pivot, p - 2, p);
        support.clear();
        for (std::size_t j = k + 1; j < n; ++j) {
            if (at(k, j) != 0) support.push_back(j);
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            if (at(i, k) == 0) continue;
            const std::uint64_t factor = mulmod(at(i, k), inv, p);
            for (std::size_t j : support) {
                at(i, j) = (at(i, j) + p - mulmod(factor, at(k, j), p)) % p;
            }
            at(i, k) = 0;
        }
    }
    return det;
}

std::uint64_t count_trees_mod(const MGraph& g, std::uint64_t p, VertexId removed) {
    const auto edges = g.edges();
    return count_trees_mod(g.num_vertices(), edges, p, removed);
}

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++r;
    }
    for (std::uint64_t base : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        std::uint64_t x = powmod(base, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r && composite; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

}  // namespace mgraph
