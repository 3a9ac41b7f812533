#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <stdexcept>

#include "matchlef/generators.hpp"
#include "matchlef/hessian_lefschetz.hpp"
#include "matchlef/inverse_system.hpp"
#include "oracles.hpp"

using namespace matchlef;

namespace {

Polynomial x(Vertex a, Vertex b) { return Polynomial::variable(Variable::edge(Edge::between(a, b))); }

oracle::DensePoly to_dense(const Polynomial& p, int n) {
  const int vars = n * (n - 1) / 2;
  oracle::DensePoly out;
  for (const auto& [m, coeff] : p.terms()) {
    std::vector<int> exps(vars, 0);
    for (const auto& [var, e] : m.factors())
      exps[oracle::edge_index(n, {static_cast<int>(var.lo), static_cast<int>(var.hi)})] = static_cast<int>(e);
    out[exps] = coeff;
  }
  return out;
}

std::vector<std::vector<mpq_class>> dense_of(const ExactMatrix& m) {
  std::vector<std::vector<mpq_class>> out(m.rows(), std::vector<mpq_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m.at(i, j);
  return out;
}

/// Lex-ordered 2d-subsets of {1..n} with their canonical pairing (consecutive elements).
std::vector<std::vector<int>> subsets(int n, int m) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) != m) continue;
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.push_back(i + 1);
    out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("symbolic Hessians of small matching generators") {
  const auto h = matching_hessian(vertex_range(4), 2, 1);
  REQUIRE(h.size() == 6);
  CHECK(h.is_symmetric());
  CHECK(h.labels().front() == "{1,2}");
  // V={1,2}, V'={3,4}: d_12 d_34 Phi_{[4],2} = 1
  CHECK(h.at(0, 5) == Polynomial::constant(1));
  CHECK(h.at(0, 0).is_zero());
  CHECK(h.at(0, 1).is_zero());

  const auto h0 = matching_hessian(vertex_range(4), 2, 0);
  REQUIRE(h0.size() == 1);
  CHECK(h0.at(0, 0) == phi(vertex_range(4), 2));

  // (8,3,1), V={1,2}, V'={3,4}: Phi on {5..8} with one edge
  const auto h8 = matching_hessian(vertex_range(8), 3, 1);
  CHECK(h8.size() == 28);
  CHECK(h8.at(0, 13) == phi(VertexSet{5, 6, 7, 8}, 1));
  CHECK(h8.labels()[13] == "{3,4}");
  CHECK(eval_all_ones(h8.at(0, 13)) == Rational(oracle::matchings_by_bitmask(4, 1).size()));
}

TEST_CASE("matching_hessian rejects inadmissible parameters") {
  CHECK_THROWS_AS(matching_hessian(vertex_range(4), 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(matching_hessian(vertex_range(8), 3, 2), std::invalid_argument);
}

TEST_CASE("Hessian entries agree with dense differentiation") {
  for (int u = 2; u <= 7; ++u) {
    for (int k = 1; k <= 3 && 2 * k <= u; ++k) {
      const auto dense = oracle::dense_phi(u, k);
      for (int d = 0; 2 * d <= k; ++d) {
        const auto h = matching_hessian(vertex_range(u), k, d);
        const auto subs = subsets(u, 2 * d);
        REQUIRE(h.size() == subs.size());
        for (std::size_t i = 0; i < subs.size(); ++i) {
          for (std::size_t j = 0; j < subs.size(); ++j) {
            auto q = dense;
            for (const auto* s : {&subs[i], &subs[j]})
              for (std::size_t t = 0; t < s->size(); t += 2) q = oracle::dense_diff(q, oracle::edge_index(u, {(*s)[t], (*s)[t + 1]}));
            CHECK(to_dense(h.at(i, j), u) == q);
            std::vector<int> both = subs[i];
            both.insert(both.end(), subs[j].begin(), subs[j].end());
            std::sort(both.begin(), both.end());
            const bool apart = std::adjacent_find(both.begin(), both.end()) == both.end();
            if (!apart) CHECK(q.empty());
          }
        }
      }
    }
  }
}

TEST_CASE("all-ones entry value") {
  // number of (k-2d)-edge matchings on u-4d vertices, counted by bitmask
  for (int u = 4; u <= 11; ++u)
    for (int k = 2; 2 * k <= u && k <= 5; ++k)
      for (int d = 1; 2 * d <= k && 4 * d <= u; ++d) {
        const int rest = u - 4 * d;
        if (rest > 7) continue;
        CHECK(hessian_entry_value(u, k, d, true) == Integer(oracle::matchings_by_bitmask(rest, k - 2 * d).size()));
        CHECK(hessian_entry_value(u, k, d, false) == 0);
      }
  CHECK(hessian_entry_value(8, 3, 1, true) == 6);
  CHECK(hessian_entry_value(6, 3, 1, true) == 1);
  CHECK(hessian_entry_value(7, 3, 1, true) == 3);
  CHECK(hessian_entry_value(4, 2, 1, true) == 1);
  CHECK(hessian_entry_value(8, 4, 2, true) == 1);
}

TEST_CASE("disjointness matrix determinants") {
  const auto d4 = disjointness_matrix(vertex_range(4), 2);
  CHECK(det_exact(d4) == -1);
  CHECK(oracle::gauss_det(dense_of(d4)) == -1);
  CHECK(oracle::kneser_det(4, 2) == -1);
  const auto d6 = disjointness_matrix(vertex_range(6), 2);
  CHECK(det_exact(d6) == -1458);
  CHECK(oracle::gauss_det(dense_of(d6)) == -1458);
  CHECK(oracle::kneser_det(6, 2) == -1458);

  for (int u = 1; u <= 10; ++u) {
    for (int d = 0; d <= 2 && 4 * d <= u; ++d) {
      const auto m = disjointness_matrix(vertex_range(u), 2 * d);
      CHECK(dense_of(m) == oracle::disjointness(u, 2 * d));
      const Rational det = det_exact(m);
      CHECK(det == Rational(oracle::kneser_det(u, 2 * d)));
      CHECK(det != 0);
    }
  }
}

TEST_CASE("evaluated Hessians and their determinants") {
  const auto h = matching_hessian(vertex_range(4), 2, 1);
  const ExactMatrix m = hessian_at_point(h, ones_point(vertex_range(4)).as_point());
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) CHECK(m.at(i, j) == (i + j == 5 ? 1 : 0));
  CHECK(det_exact(m) == -1);
  CHECK(det_exact(evaluated_matching_hessian(vertex_range(6), 2, 1, ones_point(vertex_range(6)))) == -1458);
  CHECK(evaluated_matching_hessian(vertex_range(4), 2, 0, ones_point(vertex_range(4))).at(0, 0) == 3);

  Point partial;
  partial[Variable::edge({1, 2})] = 1;
  CHECK_THROWS_AS(hessian_at_point(matching_hessian(vertex_range(6), 3, 1), partial), std::invalid_argument);

  for (int u = 4; u <= 10; ++u)
    for (int k = 2; 2 * k <= u; ++k)
      for (int d = 1; 2 * d <= k && d <= 2 && 4 * d <= u; ++d) {
        const auto ev = evaluated_matching_hessian(vertex_range(u), k, d, ones_point(vertex_range(u)));
        CHECK(det_exact(ev) != 0);
        CHECK(ev.is_symmetric());
      }
}

TEST_CASE("points") {
  const auto ones = ones_point(vertex_range(4));
  CHECK(ones.label == "ones");
  CHECK(ones.values.size() == 6);
  CHECK(ones.linear_form() == all_ones_form(vertex_range(4)));
  CHECK(zero_point(vertex_range(4)).linear_form().is_zero());
  const auto r1 = random_point(vertex_range(6), 5, 1);
  const auto r1b = random_point(vertex_range(6), 5, 1);
  const auto r2 = random_point(vertex_range(6), 5, 2);
  CHECK(r1.label == "random-s5-i1");
  CHECK(r1.values == r1b.values);
  CHECK(r1.values != r2.values);
  for (const auto& [e, v] : r1.values) {
    CHECK(abs(v.get_num()) <= 9);
    CHECK(v.get_den() <= 7);
  }
}

TEST_CASE("strong Lefschetz check at the all-ones point") {
  const auto r = strong_lefschetz_check(vertex_range(8), 4, ones_point(vertex_range(8)));
  REQUIRE(r.degrees.size() == 3);
  CHECK(r.degrees[0].hessian_det == 105);
  CHECK(r.degrees[0].power == 4);
  CHECK(r.degrees[2].hessian_det == -1);
  CHECK(r.degrees[2].power == 0);
  CHECK(r.overall);
  CHECK(r.verdicts_agree());

  for (int u = 2; u <= 8; ++u)
    for (int k = 1; k <= 3 && 2 * k <= u; ++k) {
      const auto rep = strong_lefschetz_check(vertex_range(u), k, ones_point(vertex_range(u)));
      CHECK(rep.overall);
      CHECK(rep.verdicts_agree());
      CHECK(rep.socle_degree == static_cast<std::size_t>(k));
    }
}

TEST_CASE("strong Lefschetz check at the zero and random points") {
  const auto z = strong_lefschetz_check(vertex_range(4), 2, zero_point(vertex_range(4)));
  REQUIRE(z.degrees.size() == 2);
  CHECK(z.degrees[0].hessian_det == 0);
  CHECK_FALSE(z.degrees[0].criterion_bijective);
  CHECK_FALSE(z.degrees[0].oracle_bijective);
  CHECK(z.degrees[0].oracle_kernel_dim == 1);
  CHECK(z.degrees[1].hessian_det == -1);
  CHECK(z.degrees[1].criterion_bijective);
  CHECK_FALSE(z.overall);
  CHECK(z.verdicts_agree());

  for (std::size_t i = 1; i <= 3; ++i) {
    const auto rep = strong_lefschetz_check(vertex_range(6), 3, random_point(vertex_range(6), 0, i));
    CHECK(rep.verdicts_agree());
  }
}

TEST_CASE("determinant factorization") {
  for (int u = 4; u <= 9; ++u)
    for (int k = 2; 2 * k <= u; ++k)
      for (int d = 1; 2 * d <= k && 4 * d <= u; ++d) {
        const auto f = det_factorization_check(vertex_range(u), k, d);
        CHECK(f.match);
        CHECK(f.dmatrix_det == Rational(oracle::kneser_det(u, 2 * d)));
        const Integer c = hessian_entry_value(u, k, d, true);
        CHECK(f.constant == pow(c, static_cast<unsigned>(oracle::choose(u, 2 * d).get_ui())));
        CHECK(f.lhs == Rational(f.constant) * f.dmatrix_det);
      }
}

TEST_CASE("Hessian determinant changes by a square under a change of basis") {
  const Polynomial p = phi(vertex_range(6), 3);
  std::vector<Polynomial> basis;
  for (const auto& e : all_edges(vertex_range(6))) basis.push_back(Polynomial::variable(Variable::edge(e)));
  const Point ones = ones_point(vertex_range(6)).as_point();
  const Rational base = det_exact(hessian_at_point(hessian_matrix(p, basis), ones));
  REQUIRE(base != 0);

  std::mt19937 gen(3);
  for (int trial = 0; trial < 3; ++trial) {
    std::vector<std::vector<mpq_class>> t(15, std::vector<mpq_class>(15));
    for (auto& row : t)
      for (auto& c : row) c = static_cast<long>(gen() % 5) - 2;
    const mpq_class dt = oracle::gauss_det(t);
    if (dt == 0) continue;
    std::vector<Polynomial> changed;
    for (int i = 0; i < 15; ++i) {
      Polynomial f;
      for (int j = 0; j < 15; ++j) f += Polynomial::constant(t[i][j]) * basis[j];
      changed.push_back(f);
    }
    const Rational det = det_exact(hessian_at_point(hessian_matrix(p, changed), ones));
    CHECK(det == base * dt * dt);
  }

  // another matching on each V represents the same class
  const Polynomial p8 = phi(vertex_range(8), 4);
  std::vector<Polynomial> alt;
  for (const auto& s : k_subsets(vertex_range(8), 4))
    alt.push_back(mul(x(s[0], s[2]), x(s[1], s[3])));
  const auto ha = hessian_matrix(p8, alt);
  CHECK(det_exact(hessian_at_point(ha, ones_point(vertex_range(8)).as_point())) == -1);
}

TEST_CASE("Lefschetz report JSON layout") {
  const auto r = strong_lefschetz_check(vertex_range(4), 2, ones_point(vertex_range(4)));
  const auto j = to_json(r);
  CHECK(j.dump() ==
        R"({"u":4,"k":2,"point":"ones","degrees":[{"d":0,"power":2,"det":"3","criterion":true,"oracle":true},{"d":1,"power":0,"det":"-1","criterion":true,"oracle":true}],"strong_lefschetz":true})");
}

TEST_CASE("evaluated Hessians round-trip through the store") {
  const auto dir = std::filesystem::temp_directory_path() / "matchlef_test_hessian_cache";
  std::filesystem::remove_all(dir);
  DirectoryMatrixStore store(dir);
  const auto pt = random_point(vertex_range(6), 9, 1);
  const auto a = evaluated_matching_hessian(vertex_range(6), 3, 1, pt, &store);
  const auto b = evaluated_matching_hessian(vertex_range(6), 3, 1, pt, &store);
  CHECK(store.misses() == 1);
  CHECK(store.hits() == 1);
  CHECK(a == b);
  CHECK(a == evaluated_matching_hessian(vertex_range(6), 3, 1, pt));
  std::filesystem::remove_all(dir);
}
