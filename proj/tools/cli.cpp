#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "matchlef/combinatorics.hpp"
#include "matchlef/generators.hpp"
#include "matchlef/hessian_lefschetz.hpp"
#include "matchlef/inverse_system.hpp"
#include "matchlef/matrix_store.hpp"
#include "matchlef/verification.hpp"

namespace matchlef::cli {

namespace {

using json = nlohmann::ordered_json;

/// Thrown for argument combinations CLI11 cannot validate on its own.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CliConfig {
  std::optional<std::size_t> n;
  std::string vertices;
  std::optional<std::size_t> k;
  std::optional<std::size_t> d;
  bool at_ones = false;
  bool det = false;
  std::string format = "text";
  std::string out;
  std::uint64_t seed = 0;
  bool strict_paper = false;
  std::string cache_dir;
  bool no_cache = false;
  std::string lemma = "all";
  std::string point = "ones";
  std::string strategy = "matching-monomials";
  std::string dump;
  bool timing = false;

  bool json() const { return format == "json"; }
};

std::optional<VertexSet> resolve_vertices(const CliConfig& cfg) {
  if (!cfg.vertices.empty()) {
    if (cfg.n) throw UsageError("--n and --vertices are mutually exclusive");
    std::vector<Vertex> ids;
    std::stringstream ss(cfg.vertices);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        const long long v = std::stoll(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
        ids.push_back(v);
      } catch (const std::exception&) {
        throw UsageError("--vertices expects a comma-separated list of integers");
      }
    }
    try {
      return make_vertex_set(std::move(ids));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  if (cfg.n) {
    if (*cfg.n == 0) throw UsageError("--n must be at least 1");
    return vertex_range(*cfg.n);
  }
  return std::nullopt;
}

VertexSet require_vertices(const CliConfig& cfg) {
  auto v = resolve_vertices(cfg);
  if (!v) throw UsageError("one of --n or --vertices is required");
  return *v;
}

std::size_t require_k(const CliConfig& cfg) {
  if (!cfg.k) throw UsageError("--k is required");
  return *cfg.k;
}

std::unique_ptr<MatrixStore> open_store(const CliConfig& cfg) {
  if (cfg.cache_dir.empty() || cfg.no_cache) return nullptr;
  return std::make_unique<DirectoryMatrixStore>(cfg.cache_dir);
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

std::string render_vertices(const VertexSet& v) {
  return to_string(std::span<const Vertex>(v));
}

struct Outcome {
  std::string text;
  int code = kExitOk;
};

Outcome cmd_phi(const CliConfig& cfg) {
  const VertexSet vertices = require_vertices(cfg);
  const std::size_t k = require_k(cfg);
  const Polynomial p = phi(vertices, k);
  if (cfg.json()) {
    json j;
    j["u"] = vertices.size();
    j["k"] = k;
    j["term_count"] = p.size();
    j["polynomial"] = to_json(p);
    return {render_json(j)};
  }
  return {to_string(p) + " (" + std::to_string(p.size()) + " terms)\n"};
}

Outcome cmd_count(const CliConfig& cfg) {
  const VertexSet vertices = require_vertices(cfg);
  const std::size_t k = require_k(cfg);
  const Integer count = matching_count(vertices.size(), k);
  if (cfg.json()) {
    json j;
    j["u"] = vertices.size();
    j["k"] = k;
    j["count"] = to_decimal(count);
    return {render_json(j)};
  }
  return {to_decimal(count) + "\n"};
}

Outcome cmd_hilbert(const CliConfig& cfg) {
  const VertexSet vertices = require_vertices(cfg);
  const std::size_t k = require_k(cfg);
  if (2 * k > vertices.size()) throw UsageError("hilbert needs 2k <= n");
  ColumnStrategy strategy;
  if (cfg.strategy == "matching-monomials") {
    strategy = ColumnStrategy::matching_monomials;
  } else if (cfg.strategy == "all-monomials") {
    strategy = ColumnStrategy::all_monomials;
  } else {
    throw UsageError("--strategy must be matching-monomials or all-monomials");
  }
  const auto store = open_store(cfg);
  const HilbertFunction h = hilbert_function(phi(vertices, k), strategy, store.get());
  const HilbertFunction printed = printed_hilbert_series(k);
  if (cfg.json()) {
    json j;
    j["u"] = vertices.size();
    j["k"] = k;
    j["strategy"] = to_string(strategy);
    j["hilbert"] = h.dims;
    j["printed"] = printed.dims;
    j["matches_printed"] = h == printed;
    return {render_json(j)};
  }
  std::string text = to_string(h);
  if (!(h == printed)) text += " [printed " + to_string(printed) + "]";
  return {text + "\n"};
}

Outcome cmd_hessian(const CliConfig& cfg) {
  const VertexSet vertices = require_vertices(cfg);
  const std::size_t k = require_k(cfg);
  if (!cfg.d) throw UsageError("--d is required");
  const std::size_t d = *cfg.d;
  if (2 * k > vertices.size() || 2 * d > k) throw UsageError("hessian needs 2d <= k and 2k <= n");

  const auto store = open_store(cfg);
  const bool need_symbolic = !cfg.at_ones && !cfg.det;
  std::optional<HessianMatrix> symbolic;
  if (need_symbolic) symbolic = matching_hessian(vertices, k, d);
  std::optional<ExactMatrix> evaluated;
  if (cfg.at_ones || cfg.det || !cfg.dump.empty()) {
    evaluated = evaluated_matching_hessian(vertices, k, d, ones_point(vertices), store.get());
  }
  std::optional<Rational> det;
  if (cfg.det) det = det_exact(*evaluated);

  if (!cfg.dump.empty()) {
    std::ofstream dump(cfg.dump, std::ios::trunc);
    if (!dump) throw std::runtime_error("cannot write " + cfg.dump);
    const bool csv = cfg.dump.size() >= 4 && cfg.dump.compare(cfg.dump.size() - 4, 4, ".csv") == 0;
    dump << (csv ? to_csv(*evaluated) : render_json(to_json(*evaluated)));
  }

  if (cfg.json()) {
    json j;
    j["u"] = vertices.size();
    j["k"] = k;
    j["d"] = d;
    if (cfg.at_ones) j["matrix"] = to_json(*evaluated);
    if (symbolic) {
      json rows = json::array();
      for (std::size_t i = 0; i < symbolic->size(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < symbolic->size(); ++c) row.push_back(to_string(symbolic->at(i, c)));
        rows.push_back(std::move(row));
      }
      j["labels"] = symbolic->labels();
      j["symbolic"] = std::move(rows);
    }
    if (det) j["det"] = to_decimal(*det);
    return {render_json(j)};
  }

  std::string text;
  if (cfg.at_ones) text += to_text(*evaluated);
  if (symbolic) {
    for (std::size_t i = 0; i < symbolic->size(); ++i) {
      text += "[";
      for (std::size_t c = 0; c < symbolic->size(); ++c) {
        if (c) text += ", ";
        text += to_string(symbolic->at(i, c));
      }
      text += "]\n";
    }
  }
  if (det) text += to_decimal(*det) + "\n";
  return {text};
}

EdgePoint resolve_point(const CliConfig& cfg, const VertexSet& vertices) {
  if (cfg.point == "ones") return ones_point(vertices);
  if (cfg.point == "zero") return zero_point(vertices);
  if (cfg.point == "random") return random_point(vertices, cfg.seed, 1);
  throw UsageError("--point must be ones, zero or random");
}

Outcome cmd_lefschetz(const CliConfig& cfg) {
  const VertexSet vertices = require_vertices(cfg);
  const std::size_t k = require_k(cfg);
  if (2 * k > vertices.size()) throw UsageError("lefschetz needs 2k <= n");
  const auto store = open_store(cfg);
  const LefschetzReport report = strong_lefschetz_check(vertices, k, resolve_point(cfg, vertices), store.get());
  const int code = report.overall ? kExitOk : kExitFailure;
  if (cfg.json()) return {render_json(to_json(report)), code};

  std::string text = "U=" + render_vertices(vertices) + " k=" + std::to_string(k) + " point=" + report.point_label + "\n";
  for (const DegreeRecord& rec : report.degrees) {
    text += "d=" + std::to_string(rec.d) + " power=" + std::to_string(rec.power) +
            " det=" + to_decimal(rec.hessian_det) +
            " criterion=" + (rec.criterion_bijective ? "bijective" : "not-bijective") +
            " oracle=" + (rec.oracle_bijective ? "bijective" : "not-bijective") + "\n";
  }
  text += std::string("strong_lefschetz: ") + (report.overall ? "true" : "false") + "\n";
  return {text, code};
}

Outcome cmd_verify(const CliConfig& cfg, std::ostream& err) {
  std::vector<ClaimId> claims;
  if (cfg.lemma == "all") {
    claims = all_claims();
  } else if (auto id = parse_claim_id(cfg.lemma)) {
    claims.push_back(*id);
  } else {
    throw UsageError("unknown --lemma selector: " + cfg.lemma);
  }

  SweepConfig sweep;
  sweep.vertices = resolve_vertices(cfg);
  sweep.k = cfg.k;
  sweep.d = cfg.d;
  sweep.seed = cfg.seed;
  const auto store = open_store(cfg);
  std::vector<VerificationReport> reports;
  try {
    reports = run_verification(claims, sweep, store.get());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }

  bool refuted = false;
  bool corrected = false;
  for (const auto& r : reports) {
    refuted = refuted || r.status == Status::refuted;
    corrected = corrected || r.status == Status::corrected;
    if (cfg.timing) {
      err << to_string(r.claim) << " " << r.params.dump() << " "
          << std::chrono::duration<double, std::milli>(r.elapsed).count() << " ms\n";
    }
  }
  const int code = (refuted || (cfg.strict_paper && corrected)) ? kExitFailure : kExitOk;

  if (cfg.json()) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    return {render_json(arr), code};
  }
  std::string text;
  for (const auto& r : reports) {
    text += to_string(r.claim);
    for (const auto& [key, value] : r.params.items()) {
      text += " " + key + "=" + (value.is_string() ? value.get<std::string>() : value.dump());
    }
    text += ": " + to_string(r.status);
    if (r.printed_value) text += " printed=" + *r.printed_value;
    if (r.computed_value) text += " computed=" + *r.computed_value;
    text += "\n";
  }
  return {text, code};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching generating polynomials, their Gorenstein algebras, and the strong Lefschetz property", "matchlef"};
  app.require_subcommand(1, 1);
  CliConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "vertex count; U = {1..n}");
    sub->add_option("--vertices", cfg.vertices, "explicit vertex ids, comma separated");
    sub->add_option("--k", cfg.k, "number of edges in a matching (degree of Phi)");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", cfg.out, "write output to this file instead of stdout");
  };
  auto add_cache = [&](CLI::App* sub) {
    sub->add_option("--cache-dir", cfg.cache_dir, "directory for cached evaluated matrices");
    sub->add_flag("--no-cache", cfg.no_cache, "ignore --cache-dir");
  };

  auto* phi_cmd = app.add_subcommand("phi", "print the matching generating polynomial Phi_{U,k}");
  add_common(phi_cmd);
  auto* count_cmd = app.add_subcommand("count", "number of k-edge matchings of K_U");
  add_common(count_cmd);
  auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert function of P/Ann(Phi_{U,k})");
  add_common(hilbert_cmd);
  add_cache(hilbert_cmd);
  hilbert_cmd->add_option("--strategy", cfg.strategy, "catalecticant columns: matching-monomials or all-monomials");
  auto* hessian_cmd = app.add_subcommand("hessian", "the matching Hessian H_{U,k,d}");
  add_common(hessian_cmd);
  add_cache(hessian_cmd);
  hessian_cmd->add_option("--d", cfg.d, "Hessian degree");
  hessian_cmd->add_flag("--at-ones", cfg.at_ones, "print the matrix evaluated at x_e = 1");
  hessian_cmd->add_flag("--det", cfg.det, "print the determinant at x_e = 1");
  hessian_cmd->add_option("--dump", cfg.dump, "write the evaluated matrix to a .csv or .json file");
  auto* lefschetz_cmd = app.add_subcommand("lefschetz", "strong Lefschetz check for Phi_{U,k}");
  add_common(lefschetz_cmd);
  add_cache(lefschetz_cmd);
  lefschetz_cmd->add_option("--point", cfg.point, "Lefschetz element coefficients: ones, zero or random");
  lefschetz_cmd->add_option("--seed", cfg.seed, "seed for --point random");
  auto* verify_cmd = app.add_subcommand("verify", "re-derive the claims on small instances");
  add_common(verify_cmd);
  add_cache(verify_cmd);
  verify_cmd->add_option("--d", cfg.d, "degree for d-dependent claims");
  verify_cmd->add_option("--lemma", cfg.lemma,
                         "dualpoly, generators, hessian-entry, det-factorization, hilbert, criterion, main-theorem or all");
  verify_cmd->add_option("--seed", cfg.seed, "seed for the random criterion points");
  verify_cmd->add_flag("--strict-paper", cfg.strict_paper, "treat corrected printed values as failures");
  verify_cmd->add_flag("--timing", cfg.timing, "report elapsed time per claim on stderr");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  Outcome outcome;
  try {
    if (phi_cmd->parsed()) {
      outcome = cmd_phi(cfg);
    } else if (count_cmd->parsed()) {
      outcome = cmd_count(cfg);
    } else if (hilbert_cmd->parsed()) {
      outcome = cmd_hilbert(cfg);
    } else if (hessian_cmd->parsed()) {
      outcome = cmd_hessian(cfg);
    } else if (lefschetz_cmd->parsed()) {
      outcome = cmd_lefschetz(cfg);
    } else {
      outcome = cmd_verify(cfg, err);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }

  if (cfg.out.empty()) {
    out << outcome.text;
  } else {
    std::ofstream file(cfg.out, std::ios::trunc);
    if (!file) {
      err << "error: cannot write " << cfg.out << "\n";
      return kExitFailure;
    }
    file << outcome.text;
  }
  return outcome.code;
}

}  // namespace matchlef::cli
