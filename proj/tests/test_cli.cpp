#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = matchlef::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("matchlef_test_cli_" + name);
  std::filesystem::remove_all(p);
  return p;
}

bool round_trips(const std::string& json_text) {
  return nlohmann::ordered_json::parse(json_text).dump(2) + "\n" == json_text;
}

}  // namespace

TEST_CASE("phi") {
  auto r = run({"phi", "--n", "4", "--k", "2", "--format", "text"});
  CHECK(r.code == 0);
  CHECK(r.out == "x[1,2]x[3,4] + x[1,3]x[2,4] + x[1,4]x[2,3] (3 terms)\n");
  CHECK(run({"phi", "--n", "4", "--k", "3"}).out == "0 (0 terms)\n");
  CHECK(run({"phi", "--n", "3", "--k", "1"}).out == "x[1,2] + x[1,3] + x[2,3] (3 terms)\n");
  CHECK(run({"phi", "--vertices", "2,5,9", "--k", "1"}).out == "x[2,5] + x[2,9] + x[5,9] (3 terms)\n");
}

TEST_CASE("count") {
  CHECK(run({"count", "--n", "6", "--k", "2"}).out == "45\n");
  CHECK(run({"count", "--n", "8", "--k", "4"}).out == "105\n");
}

TEST_CASE("hilbert") {
  CHECK(run({"hilbert", "--n", "6", "--k", "3"}).out == "(1,15,15,1)\n");
  CHECK(run({"hilbert", "--n", "6", "--k", "2"}).out == "(1,15,1) [printed (1,6,1)]\n");
  CHECK(run({"hilbert", "--n", "4", "--k", "2"}).out == "(1,6,1)\n");
  CHECK(run({"hilbert", "--n", "6", "--k", "2", "--strategy", "all-monomials"}).out ==
        "(1,15,1) [printed (1,6,1)]\n");
  CHECK(run({"hilbert", "--n", "3", "--k", "2"}).code == 2);
}

TEST_CASE("hessian") {
  const auto r = run({"hessian", "--n", "4", "--k", "2", "--d", "1", "--at-ones", "--det"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("\n-1\n"));
  CHECK(r.out.starts_with("[0 0 0 0 0 1]\n"));
  CHECK(run({"hessian", "--n", "6", "--k", "2", "--d", "1", "--det"}).out == "-1458\n");
  CHECK(run({"hessian", "--n", "4", "--k", "2", "--d", "0", "--at-ones"}).out == "[3]\n");
  CHECK(run({"hessian", "--n", "4", "--k", "2", "--d", "2", "--det"}).code == 2);
  CHECK(run({"hessian", "--n", "4", "--k", "3", "--d", "1", "--det"}).code == 2);

  const auto csv = scratch("dump.csv");
  CHECK(run({"hessian", "--n", "4", "--k", "2", "--d", "1", "--dump", csv.string()}).code == 0);
  CHECK(slurp(csv).starts_with(",\"{1,2}\",\"{1,3}\","));
  const auto js = scratch("dump.json");
  CHECK(run({"hessian", "--n", "4", "--k", "2", "--d", "1", "--dump", js.string()}).code == 0);
  const auto parsed = nlohmann::ordered_json::parse(slurp(js));
  CHECK(parsed.at("entries").at(0).at(5) == "1");
  std::filesystem::remove(csv);
  std::filesystem::remove(js);
}

TEST_CASE("lefschetz") {
  auto r = run({"lefschetz", "--n", "4", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.ends_with("strong_lefschetz: true\n"));
  CHECK(run({"lefschetz", "--n", "6", "--k", "3"}).out.ends_with("strong_lefschetz: true\n"));
  const auto j = run({"lefschetz", "--n", "8", "--k", "3", "--format", "json"});
  CHECK(j.code == 0);
  const auto parsed = nlohmann::ordered_json::parse(j.out);
  CHECK(parsed.at("strong_lefschetz") == true);
  CHECK(parsed.at("degrees").size() == 2);
  CHECK(parsed.at("degrees").at(0).at("det") == "420");
  CHECK(round_trips(j.out));
  const auto z = run({"lefschetz", "--n", "4", "--k", "2", "--point", "zero"});
  CHECK(z.code == 1);
  CHECK(z.out.ends_with("strong_lefschetz: false\n"));
  const auto a = run({"lefschetz", "--n", "6", "--k", "2", "--point", "random", "--seed", "4"});
  CHECK(a.out == run({"lefschetz", "--n", "6", "--k", "2", "--point", "random", "--seed", "4"}).out);
}

TEST_CASE("verify") {
  const auto all = run({"verify", "--n", "6", "--k", "2", "--lemma", "all", "--format", "json"});
  CHECK(all.code == 0);
  const auto parsed = nlohmann::ordered_json::parse(all.out);
  bool saw_hilbert = false;
  for (const auto& r : parsed) {
    if (r.at("claim_id") == "hilbert") {
      saw_hilbert = true;
      CHECK(r.at("status") == "corrected");
    } else if (r.at("claim_id") != "hessian-entry") {
      CHECK(r.at("status") == "verified");
    }
  }
  CHECK(saw_hilbert);
  CHECK(round_trips(all.out));

  CHECK(run({"verify", "--n", "4", "--k", "2", "--lemma", "hessian-entry"}).code == 0);
  const auto strict = run({"verify", "--n", "8", "--k", "3", "--lemma", "hessian-entry", "--strict-paper"});
  CHECK(strict.code == 1);
  CHECK(strict.out.find("corrected") != std::string::npos);
  CHECK(run({"verify", "--n", "8", "--k", "3", "--lemma", "hessian-entry"}).code == 0);
  CHECK(run({"verify", "--lemma", "nonsense"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"phi", "--n", "0", "--k", "1"}).code == 2);
  CHECK(run({"phi", "--n", "4", "--k", "1", "--format", "xml"}).code == 2);
  CHECK(run({"phi", "--vertices", "1,1,2", "--k", "1"}).code == 2);
  CHECK(run({"lefschetz", "--n", "3", "--k", "2"}).code == 2);
  CHECK(run({"lefschetz", "--n", "4", "--k", "2", "--point", "middle"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"phi", "--n", "5", "--k", "2", "--format", "json"},
           {"count", "--n", "7", "--k", "3", "--format", "json"},
           {"hilbert", "--n", "6", "--k", "2", "--format", "json"},
           {"hessian", "--n", "6", "--k", "2", "--d", "1", "--at-ones", "--det", "--format", "json"},
           {"lefschetz", "--n", "6", "--k", "3", "--format", "json"},
           {"verify", "--n", "5", "--k", "2", "--format", "json"}}) {
    const auto r = run(args);
    CHECK(r.code == 0);
    CHECK(round_trips(r.out));
  }
}

TEST_CASE("--out writes the same bytes as stdout") {
  const auto path = scratch("out.json");
  const std::vector<std::string> base{"lefschetz", "--n", "6", "--k", "2", "--format", "json"};
  const auto direct = run(base);
  auto with_out = base;
  with_out.insert(with_out.end(), {"--out", path.string()});
  const auto r = run(with_out);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  CHECK(slurp(path) == direct.out);
  std::filesystem::remove(path);
}

TEST_CASE("cached and uncached runs are byte-identical") {
  const auto dir = scratch("cache");
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"verify", "--lemma", "all", "--format", "json"},
           {"hilbert", "--n", "7", "--k", "3", "--format", "json"},
           {"lefschetz", "--vertices", "3,5,8,13,21,34", "--k", "3", "--format", "json"}}) {
    auto cached = args;
    cached.insert(cached.end(), {"--cache-dir", dir.string()});
    auto bypass = cached;
    bypass.push_back("--no-cache");
    const auto plain = run(args);
    const auto cold = run(cached);
    const auto warm = run(cached);
    const auto skipped = run(bypass);
    CHECK(plain.code == 0);
    CHECK(cold.out == plain.out);
    CHECK(warm.out == plain.out);
    CHECK(skipped.out == plain.out);
  }
  CHECK(std::filesystem::exists(dir));
  CHECK_FALSE(std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST_CASE("explicit vertex lists") {
  const auto r = run({"lefschetz", "--vertices", "-4,0,7,100", "--k", "2", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::ordered_json::parse(r.out).at("strong_lefschetz") == true);
  CHECK(run({"hilbert", "--vertices", "10,20,30,40,50,60", "--k", "2"}).out == "(1,15,1) [printed (1,6,1)]\n");
}
