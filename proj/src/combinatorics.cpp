#include "matchlef/combinatorics.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace matchlef {

VertexSet make_vertex_set(std::vector<Vertex> ids) {
  if (ids.empty()) throw std::invalid_argument("vertex set must be nonempty");
  std::sort(ids.begin(), ids.end());
  if (std::adjacent_find(ids.begin(), ids.end()) != ids.end()) {
    throw std::invalid_argument("vertex set contains duplicate ids");
  }
  return ids;
}

VertexSet vertex_range(std::size_t n) {
  if (n == 0) throw std::invalid_argument("vertex count must be positive");
  VertexSet out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Vertex>(i + 1);
  return out;
}

Edge Edge::between(Vertex a, Vertex b) {
  if (a == b) throw std::invalid_argument("an edge needs two distinct vertices");
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string to_string(const Edge& e) { return "{" + std::to_string(e.lo) + "," + std::to_string(e.hi) + "}"; }

std::string to_string(const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) out += ",";
    out += to_string(m[i]);
  }
  return out + "}";
}

std::string to_string(std::span<const Vertex> vertices) {
  std::string out = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(vertices[i]);
  }
  return out + "}";
}

std::vector<VertexSet> k_subsets(std::span<const Vertex> vertices, std::size_t k) {
  std::vector<VertexSet> out;
  const std::size_t n = vertices.size();
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    VertexSet subset(k);
    for (std::size_t i = 0; i < k; ++i) subset[i] = vertices[idx[i]];
    out.push_back(std::move(subset));
    // advance to the next combination in lexicographic order
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::vector<Edge> all_edges(std::span<const Vertex> vertices) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) out.push_back(Edge::between(vertices[i], vertices[j]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_matching(std::span<const Edge> edges) {
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (edges[i] != edges[j] && edges[i].shares_vertex(edges[j])) return false;
    }
  }
  return true;
}

namespace {

void extend_matchings(const std::vector<Edge>& edges, std::size_t next, std::size_t remaining, Matching& current,
                      std::vector<Vertex>& used, std::vector<Matching>& out) {
  if (remaining == 0) {
    out.push_back(current);
    return;
  }
  for (std::size_t i = next; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (std::find(used.begin(), used.end(), e.lo) != used.end()) continue;
    if (std::find(used.begin(), used.end(), e.hi) != used.end()) continue;
    current.push_back(e);
    used.push_back(e.lo);
    used.push_back(e.hi);
    extend_matchings(edges, i + 1, remaining - 1, current, used, out);
    used.resize(used.size() - 2);
    current.pop_back();
  }
}

}  // namespace

std::vector<Matching> matchings(std::span<const Vertex> vertices, std::size_t k) {
  std::vector<Matching> out;
  if (2 * k > vertices.size()) return out;
  const std::vector<Edge> edges = all_edges(vertices);
  Matching current;
  std::vector<Vertex> used;
  extend_matchings(edges, 0, k, current, used, out);
  return out;
}

Integer double_factorial(long n) {
  if (n < -1) throw std::invalid_argument("double factorial is defined for n >= -1");
  Integer out = 1;
  for (long i = n; i > 1; i -= 2) out *= i;
  return out;
}

Integer matching_count(std::size_t u, std::size_t k) {
  if (2 * k > u) return 0;
  return binomial(u, 2 * k) * double_factorial(static_cast<long>(2 * k) - 1);
}

Matching canonical_matching(std::span<const Vertex> vertices) {
  if (vertices.size() % 2 != 0) throw std::invalid_argument("canonical matching needs an even vertex set");
  VertexSet sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  Matching out;
  for (std::size_t i = 0; i < sorted.size(); i += 2) out.push_back(Edge::between(sorted[i], sorted[i + 1]));
  return out;
}

VertexSet vertices_of(std::span<const Edge> edges) {
  VertexSet out;
  for (const Edge& e : edges) {
    out.push_back(e.lo);
    out.push_back(e.hi);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

VertexSet set_difference(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

VertexSet set_union(std::span<const Vertex> a, std::span<const Vertex> b) {
  VertexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool disjoint(std::span<const Vertex> a, std::span<const Vertex> b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i == *j) return false;
    if (*i < *j) ++i; else ++j;
  }
  return true;
}

}  // namespace matchlef
