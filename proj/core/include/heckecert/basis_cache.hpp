#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "heckecert/qseries.hpp"

namespace heckecert {

/// Miller basis of S_w together with the precision it was computed at.
struct MillerBasis {
  int weight = 0;
  std::size_t prec = 0;
  std::vector<QSeries> rows;
};

MillerBasis compute_basis(int weight, std::size_t prec);

/// Text serialisation:
///   heckecert-miller-basis 1
///   weight W prec P dim D
///   D lines of P+1 decimal integers
///   checksum crc32 XXXXXXXX      (over every preceding byte)
std::string serialize_basis(const MillerBasis& basis);
/// Throws Error(Io) on a malformed file or a checksum mismatch.
MillerBasis parse_basis(const std::string& text);

/// Writes through a temporary file in the same directory and renames it over the target.
void write_basis_file(const std::filesystem::path& path, const MillerBasis& basis);
MillerBasis read_basis_file(const std::filesystem::path& path);

/// Thread-safe memo of bases keyed by weight, optionally persisted to a directory.
/// A request is served by any stored basis of the same weight with prec >= the request.
class BasisCache {
 public:
  BasisCache() = default;
  explicit BasisCache(std::filesystem::path directory);

  std::shared_ptr<const MillerBasis> get(int weight, std::size_t prec);

  const std::optional<std::filesystem::path>& directory() const noexcept { return directory_; }

  static std::filesystem::path file_name(int weight, std::size_t prec);

 private:
  std::shared_ptr<const MillerBasis> load_from_disk(int weight, std::size_t prec) const;

  std::optional<std::filesystem::path> directory_;
  std::mutex mutex_;
  std::map<int, std::shared_ptr<const MillerBasis>> memo_;
};

/// Process-wide cache without disk persistence.
BasisCache& default_basis_cache();

}  // namespace heckecert
