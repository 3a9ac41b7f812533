#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "matchlef/numeric.hpp"

namespace matchlef {

using Vertex = std::int64_t;

/// Strictly increasing, duplicate-free list of vertices. Subsets may be empty;
/// user-facing vertex sets built with make_vertex_set are not.
using VertexSet = std::vector<Vertex>;

/// Validates and sorts a user-supplied vertex set. Throws std::invalid_argument
/// on an empty list or duplicate ids.
VertexSet make_vertex_set(std::vector<Vertex> ids);

/// {1, ..., n}; n must be positive.
VertexSet vertex_range(std::size_t n);

/// An element of C(U,2), always stored with lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  /// Canonicalizes the endpoint order; rejects loops.
  static Edge between(Vertex a, Vertex b);

  bool touches(Vertex v) const { return lo == v || hi == v; }
  bool shares_vertex(const Edge& other) const { return touches(other.lo) || touches(other.hi); }

  auto operator<=>(const Edge&) const = default;
};

/// Pairwise vertex-disjoint edges, sorted by (lo, hi). May be empty.
using Matching = std::vector<Edge>;

std::string to_string(const Edge& e);
std::string to_string(const Matching& m);
std::string to_string(std::span<const Vertex> vertices);

/// All k-element subsets in lexicographic order of the sorted tuples.
std::vector<VertexSet> k_subsets(std::span<const Vertex> vertices, std::size_t k);

/// C(U,2) in lexicographic order.
std::vector<Edge> all_edges(std::span<const Vertex> vertices);

bool is_matching(std::span<const Edge> edges);

/// Every k-edge matching of the complete graph on `vertices`, each sorted, the
/// whole sequence ordered lexicographically by edge list.
std::vector<Matching> matchings(std::span<const Vertex> vertices, std::size_t k);

/// C(u,2k) * (2k-1)!!
Integer matching_count(std::size_t u, std::size_t k);

/// (-1)!! = 0!! = 1. Throws std::invalid_argument for n < -1.
Integer double_factorial(long n);

/// Pairs consecutive elements of the sorted set: {v1v2, v3v4, ...}.
/// Throws std::invalid_argument when |V| is odd.
Matching canonical_matching(std::span<const Vertex> vertices);

VertexSet vertices_of(std::span<const Edge> edges);
VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b);
VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b);
bool disjoint(std::span<const Vertex> a, std::span<const Vertex> b);

}  // namespace matchlef
