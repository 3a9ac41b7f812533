#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "matchlef/generators.hpp"
#include "oracles.hpp"

using namespace matchlef;

namespace {

Polynomial x(Vertex a, Vertex b) { return Polynomial::variable(Variable::edge(Edge::between(a, b))); }

/// Relabels edge variables by a vertex permutation.
Polynomial relabel(const Polynomial& p, const std::map<Vertex, Vertex>& sigma) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Factor> f;
    for (const auto& [var, e] : m.factors()) {
      f.emplace_back(Variable::edge(Edge::between(sigma.at(var.lo), sigma.at(var.hi))), e);
    }
    out.add_term(Monomial(f), c);
  }
  return out;
}

}  // namespace

TEST_CASE("phi") {
  const Polynomial p = phi(VertexSet{1, 2, 3, 4}, 2);
  CHECK(p == mul(x(1, 2), x(3, 4)) + mul(x(1, 3), x(2, 4)) + mul(x(1, 4), x(2, 3)));
  CHECK(phi(vertex_range(5), 1) == all_ones_form(vertex_range(5)));
  CHECK(phi(VertexSet{1, 2, 3, 4}, 3).is_zero());
  CHECK(phi(vertex_range(3), 0) == Polynomial::constant(1));
}

TEST_CASE("phi shape: term count, square-free, homogeneous") {
  for (std::size_t u = 1; u <= 8; ++u) {
    for (std::size_t k = 0; k <= 4; ++k) {
      const Polynomial p = phi(vertex_range(u), k);
      CHECK(Integer(p.size()) == matching_count(u, k));
      for (const auto& [m, c] : p.terms()) {
        CHECK(c == 1);
        CHECK(m.square_free());
        CHECK(m.degree() == k);
      }
    }
  }
}

TEST_CASE("phi is invariant under vertex permutations") {
  const VertexSet u = vertex_range(6);
  const Polynomial p = phi(u, 2);
  std::mt19937 gen(3);
  VertexSet perm = u;
  for (int trial = 0; trial < 10; ++trial) {
    std::shuffle(perm.begin(), perm.end(), gen);
    std::map<Vertex, Vertex> sigma;
    for (std::size_t i = 0; i < u.size(); ++i) sigma[u[i]] = perm[i];
    CHECK(relabel(p, sigma) == p);
  }
}

TEST_CASE("elementary_symmetric") {
  const auto v = [](Vertex i) { return Polynomial::variable(Variable::vertex(i)); };
  CHECK(elementary_symmetric(VertexSet{1, 2, 3}, 2) == mul(v(1), v(2)) + mul(v(1), v(3)) + mul(v(2), v(3)));
  CHECK(elementary_symmetric(vertex_range(4), 0) == Polynomial::constant(1));
  CHECK(elementary_symmetric(VertexSet{1, 2}, 3).is_zero());
  CHECK(elementary_symmetric(vertex_range(6), 3).size() == 20);
}

TEST_CASE("matching_monomial") {
  CHECK(matching_monomial(VertexSet{1, 2, 3, 4}) == mul(x(1, 2), x(3, 4)));
  CHECK(matching_monomial(VertexSet{2, 5}) == x(2, 5));
  CHECK(matching_monomial(VertexSet{1, 3, 5, 6, 7, 8}) == mul(mul(x(1, 3), x(5, 6)), x(7, 8)));
  CHECK(matching_monomial(VertexSet{}) == Polynomial::constant(1));
  CHECK_THROWS_AS(matching_monomial(VertexSet{1, 2, 3}), std::invalid_argument);
}

TEST_CASE("all_ones_form") {
  CHECK(all_ones_form(VertexSet{1, 2}) == x(1, 2));
  CHECK(all_ones_form(VertexSet{1, 2, 3}) == x(1, 2) + x(1, 3) + x(2, 3));
  CHECK(all_ones_form(vertex_range(5)).size() == 10);
  CHECK_THROWS_AS(all_ones_form(VertexSet{1}), std::invalid_argument);
}

TEST_CASE("differentiating by a canonical matching monomial removes its vertices") {
  for (std::size_t u = 2; u <= 8; ++u) {
    const VertexSet vs = vertex_range(u);
    for (std::size_t k = 0; k <= 4; ++k) {
      const Polynomial p = phi(vs, k);
      for (std::size_t d = 0; d <= k && 2 * d <= u; ++d) {
        for (const VertexSet& v : k_subsets(vs, 2 * d)) {
          CHECK(apply_diff(matching_monomial(v), p) == phi(set_difference(vs, v), k - d));
        }
      }
    }
  }
}
