#pragma once

#include "mgraph/bignum.hpp"
#include "mgraph/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace mgraph {

// Dense square matrix of arbitrary-precision integers, row-major.
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(std::size_t n) : n_(n), data_(n * n) {}

    std::size_t size() const { return n_; }
    BigInt& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    // Copy with row and column k removed.
    IntMatrix minor(std::size_t k) const;

private:
    std::size_t n_ = 0;
    std::vector<BigInt> data_;
};

// L = D - A. Parallel edges add up; self-loops are ignored.
IntMatrix laplacian(std::size_t num_vertices, std::span<const Edge> edges);
IntMatrix laplacian(const MGraph& g);

// Exact determinant by Bareiss fraction-free elimination. Each division is
// exact; the pivot is the first nonzero entry at or below the diagonal.
BigInt det_exact(IntMatrix m);

// Matrix-tree theorem: cofactor of L obtained by deleting `removed`.
// Throws DegenerateInputError for disconnected input.
BigInt count_trees(std::size_t num_vertices, std::span<const Edge> edges, VertexId removed = 0);
BigInt count_trees(const MGraph& g, VertexId removed = 0);

// Spanning 2-forests separating u from v, counted as spanning trees of the
// multigraph with u and v identified (edge multiplicities kept, the u-v edge
// dropped). Throws std::invalid_argument if u == v.
BigInt count_separating_2forests(std::size_t num_vertices, std::span<const Edge> edges, VertexId u,
                                 VertexId v);
BigInt count_separating_2forests(const MGraph& g, VertexId u, VertexId v);

// Same cofactor over Z/pZ with ordinary Gaussian elimination. p must be prime.
std::uint64_t count_trees_mod(std::size_t num_vertices, std::span<const Edge> edges, std::uint64_t p,
                              VertexId removed = 0);
std::uint64_t count_trees_mod(const MGraph& g, std::uint64_t p, VertexId removed = 0);

// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace mgraph
