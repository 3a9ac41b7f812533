#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "matchlef/exact_matrix.hpp"

namespace matchlef {

/// Key-value store for computed matrices (evaluated Hessians, catalecticants).
/// A hit must reproduce the recomputed matrix exactly.
class MatrixStore {
 public:
  virtual ~MatrixStore() = default;
  virtual std::optional<ExactMatrix> load(const std::string& key) = 0;
  virtual void save(const std::string& key, const ExactMatrix& m) = 0;
};

/// One JSON file per key inside a directory (created on first save).
class DirectoryMatrixStore final : public MatrixStore {
 public:
  explicit DirectoryMatrixStore(std::filesystem::path dir);

  std::optional<ExactMatrix> load(const std::string& key) override;
  void save(const std::string& key, const ExactMatrix& m) override;

  std::filesystem::path path_for(const std::string& key) const;
  std::size_t hits() const { return hits_; }
  std::size_t misses() const { return misses_; }

 private:
  std::filesystem::path dir_;
  std::size_t hits_ = 0;
  std::size_t misses_ = 0;
};

/// Load-or-compute helper; `store` may be null.
template <typename Compute>
ExactMatrix cached_matrix(MatrixStore* store, const std::string& key, Compute&& compute) {
  if (store != nullptr) {
    if (auto hit = store->load(key)) return *std::move(hit);
  }
  ExactMatrix m = compute();
  if (store != nullptr) store->save(key, m);
  return m;
}

}  // namespace matchlef
