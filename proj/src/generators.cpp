#include "matchlef/generators.hpp"

#include <stdexcept>

namespace matchlef {

Polynomial phi(std::span<const Vertex> vertices, std::size_t k) {
  Polynomial out;
  for (const Matching& m : matchings(vertices, k)) out.add_term(Monomial::of_matching(m), 1);
  return out;
}

Polynomial elementary_symmetric(std::span<const Vertex> vertices, std::size_t k) {
  Polynomial out;
  for (const VertexSet& s : k_subsets(vertices, k)) out.add_term(Monomial::of_subset(s), 1);
  return out;
}

Polynomial matching_monomial(std::span<const Vertex> vertices) {
  return Polynomial::term(Monomial::of_matching(canonical_matching(vertices)));
}

Polynomial edge_monomial(const Matching& edges) { return Polynomial::term(Monomial::of_matching(edges)); }

Polynomial all_ones_form(std::span<const Vertex> vertices) {
  if (vertices.size() < 2) throw std::invalid_argument("the all-ones form needs at least two vertices");
  Polynomial out;
  for (const Edge& e : all_edges(vertices)) out.add_term(Monomial::of(Variable::edge(e)), 1);
  return out;
}

}  // namespace matchlef
