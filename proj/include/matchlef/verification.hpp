#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "matchlef/combinatorics.hpp"
#include "matchlef/hessian_lefschetz.hpp"
#include "matchlef/inverse_system.hpp"
#include "matchlef/matrix_store.hpp"

namespace matchlef {

enum class ClaimId { dualpoly, generators, hessian_entry, det_factorization, hilbert, criterion, main_theorem };

/// "dualpoly", "generators", "hessian-entry", "det-factorization", "hilbert", "criterion", "main-theorem"
std::string to_string(ClaimId id);
std::optional<ClaimId> parse_claim_id(std::string_view name);
std::vector<ClaimId> all_claims();

enum class Status { verified, refuted, corrected };
std::string to_string(Status s);

/// Verdict on one claim instance. `corrected` means the computation confirms
/// the structure of the claim but a printed constant disagrees with it.
struct VerificationReport {
  ClaimId claim = ClaimId::dualpoly;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::refuted;
  std::optional<std::string> printed_value;
  std::optional<std::string> computed_value;
  std::string detail;
  std::chrono::nanoseconds elapsed{0};
};

/// Report as JSON. `elapsed` is deliberately left out so output is reproducible.
nlohmann::ordered_json to_json(const VerificationReport& r);

/// C(u-2d,2k-4d)(2k-4d-1)!!, the evaluated Hessian entry as printed.
Integer printed_hessian_entry_value(std::size_t u, std::size_t k, std::size_t d);
/// (C(2k,0), C(2k,2), ..., C(2k,2k)) as printed.
HilbertFunction printed_hilbert_series(std::size_t k);
/// h_d = C(u, 2 min(d, k-d)) from the matching basis and Gorenstein symmetry.
HilbertFunction predicted_hilbert_series(std::size_t u, std::size_t k);

/// d(x^M) Phi_{U,k} == Phi_{U\V,k-d} for every V in C(U,2d) and every M in M(V,d).
VerificationReport verify_dualpoly(std::span<const Vertex> vertices, std::size_t k, std::size_t d);

/// Every element of G0 (squares), G1 (non-matchings up to degree k) and G2
/// (differences x^M - x^M' over a common vertex set) annihilates Phi_{U,k}.
VerificationReport verify_annihilator_generators(std::span<const Vertex> vertices, std::size_t k);

VerificationReport verify_hessian_entry(std::span<const Vertex> vertices, std::size_t k, std::size_t d);

VerificationReport verify_det_factorization(std::span<const Vertex> vertices, std::size_t k, std::size_t d,
                                            MatrixStore* store = nullptr);

VerificationReport verify_hilbert(std::span<const Vertex> vertices, std::size_t k, MatrixStore* store = nullptr);

VerificationReport verify_criterion(std::span<const Vertex> vertices, std::size_t k, const EdgePoint& point,
                                    MatrixStore* store = nullptr);

VerificationReport verify_main_theorem(std::span<const Vertex> vertices, std::size_t k, MatrixStore* store = nullptr);

/// The points the criterion is checked at: all ones, three seeded random
/// points, and the zero form.
std::vector<EdgePoint> criterion_points(std::span<const Vertex> vertices, std::uint64_t seed);

struct SweepConfig {
  std::optional<VertexSet> vertices;  // default: U = {1..u} for u = 1..7
  std::optional<std::size_t> k;       // default: 0..3
  std::optional<std::size_t> d;       // default: every admissible d
  std::uint64_t seed = 0;
};

/// Runs the selected claims, ordered by claim then (u, k, d, point). With
/// explicit parameters that violate a claim's preconditions, throws
/// std::invalid_argument; sweeps skip inadmissible combinations.
std::vector<VerificationReport> run_verification(std::span<const ClaimId> claims, const SweepConfig& config,
                                                 MatrixStore* store = nullptr);

}  // namespace matchlef
