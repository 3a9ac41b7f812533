#include "matchlef/matrix_store.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace matchlef {

DirectoryMatrixStore::DirectoryMatrixStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path DirectoryMatrixStore::path_for(const std::string& key) const {
  std::string name;
  for (char c : key) {
    const bool safe = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' || c == '_';
    name += safe ? c : '_';
  }
  return dir_ / (name + ".json");
}

std::optional<ExactMatrix> DirectoryMatrixStore::load(const std::string& key) {
  std::ifstream in(path_for(key));
  if (!in) {
    ++misses_;
    return std::nullopt;
  }
  const auto j = nlohmann::ordered_json::parse(in);
  // the file name is sanitized, so the stored key disambiguates collisions
  if (j.at("key").get<std::string>() != key) {
    ++misses_;
    return std::nullopt;
  }
  ++hits_;
  return exact_matrix_from_json(j.at("matrix"));
}

void DirectoryMatrixStore::save(const std::string& key, const ExactMatrix& m) {
  std::filesystem::create_directories(dir_);
  const auto target = path_for(key);
  const auto staging = target.string() + ".tmp";
  {
    std::ofstream out(staging, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + staging);
    nlohmann::ordered_json j;
    j["key"] = key;
    j["matrix"] = to_json(m);
    out << j.dump() << "\n";
  }
  std::filesystem::rename(staging, target);
}

}  // namespace matchlef
