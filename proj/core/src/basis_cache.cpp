#include "heckecert/basis_cache.hpp"

#include <boost/crc.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <thread>

#include "heckecert/error.hpp"

namespace heckecert {

namespace {

constexpr std::string_view kMagic = "heckecert-miller-basis";
constexpr int kFormatVersion = 1;

std::uint32_t crc32_of(std::string_view bytes) {
  boost::crc_32_type crc;
  crc.process_bytes(bytes.data(), bytes.size());
  return crc.checksum();
}

std::string hex8(std::uint32_t v) {
  char buf[9];
  std::snprintf(buf, sizeof buf, "%08x", v);
  return buf;
}

}  // namespace

MillerBasis compute_basis(int weight, std::size_t prec) { return {weight, prec, miller_basis(weight, prec)}; }

std::string serialize_basis(const MillerBasis& basis) {
  std::ostringstream os;
  os << kMagic << ' ' << kFormatVersion << '\n';
  os << "weight " << basis.weight << " prec " << basis.prec << " dim " << basis.rows.size() << '\n';
  for (const auto& row : basis.rows) {
    bool first = true;
    for (const auto& c : row.coeffs()) {
      if (!first) os << ' ';
      os << c.get_str();
      first = false;
    }
    os << '\n';
  }
  std::string body = os.str();
  body += "checksum crc32 " + hex8(crc32_of(body)) + "\n";
  return body;
}

MillerBasis parse_basis(const std::string& text) {
  const auto trailer = text.rfind("checksum crc32 ");
  require(trailer != std::string::npos, ErrorKind::Io, "basis file has no checksum trailer");
  const std::string_view body(text.data(), trailer);
  std::string expected = text.substr(trailer + 15);
  while (!expected.empty() && (expected.back() == '\n' || expected.back() == '\r')) expected.pop_back();
  require(expected == hex8(crc32_of(body)), ErrorKind::Io, "basis file checksum mismatch");

  std::istringstream is{std::string(body)};
  std::string magic, w_tag, p_tag, d_tag;
  int version = 0;
  MillerBasis basis;
  std::size_t dim = 0;
  is >> magic >> version >> w_tag >> basis.weight >> p_tag >> basis.prec >> d_tag >> dim;
  require(is && magic == kMagic && w_tag == "weight" && p_tag == "prec" && d_tag == "dim", ErrorKind::Io,
          "malformed basis file header");
  require(version == kFormatVersion, ErrorKind::Io, "unsupported basis file version " + std::to_string(version));
  basis.rows.reserve(dim);
  std::string token;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<BigInt> coeffs(basis.prec + 1);
    for (auto& c : coeffs) {
      require(static_cast<bool>(is >> token), ErrorKind::Io, "truncated basis file");
      require(c.set_str(token, 10) == 0, ErrorKind::Io, "bad integer '" + token + "' in basis file");
    }
    basis.rows.emplace_back(std::move(coeffs));
  }
  require(!(is >> token), ErrorKind::Io, "trailing data in basis file");
  return basis;
}

void write_basis_file(const std::filesystem::path& path, const MillerBasis& basis) {
  namespace fs = std::filesystem;
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id();
  fs::path tmp = path;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    require(static_cast<bool>(out), ErrorKind::Io, "cannot open " + tmp.string() + " for writing");
    out << serialize_basis(basis);
    out.flush();
    require(static_cast<bool>(out), ErrorKind::Io, "write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    fail(ErrorKind::Io, "cannot rename basis file into " + path.string());
  }
}

MillerBasis read_basis_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), ErrorKind::Io, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse_basis(ss.str());
  } catch (const Error& e) {
    fail(ErrorKind::Io, path.string() + ": " + e.what());
  }
}

BasisCache::BasisCache(std::filesystem::path directory) : directory_(std::move(directory)) {
  std::filesystem::create_directories(*directory_);
}

std::filesystem::path BasisCache::file_name(int weight, std::size_t prec) {
  return "basis-w" + std::to_string(weight) + "-p" + std::to_string(prec) + ".txt";
}

std::shared_ptr<const MillerBasis> BasisCache::load_from_disk(int weight, std::size_t prec) const {
  namespace fs = std::filesystem;
  if (!directory_) return nullptr;
  const std::string prefix = "basis-w" + std::to_string(weight) + "-p";
  std::optional<std::pair<std::size_t, fs::path>> best;
  std::error_code ec;
  for (const auto& entry : fs::directory_iterator(*directory_, ec)) {
    const std::string name = entry.path().filename().string();
    if (name.rfind(prefix, 0) != 0 || name.size() < prefix.size() + 5 || !name.ends_with(".txt")) continue;
    const std::string digits = name.substr(prefix.size(), name.size() - prefix.size() - 4);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) continue;
    const std::size_t p = std::stoull(digits);
    if (p >= prec && (!best || p < best->first)) best = {p, entry.path()};
  }
  if (!best) return nullptr;
  auto basis = std::make_shared<MillerBasis>(read_basis_file(best->second));
  require(basis->weight == weight && basis->prec == best->first, ErrorKind::Io,
          "basis file " + best->second.string() + " does not match its name");
  return basis;
}

std::shared_ptr<const MillerBasis> BasisCache::get(int weight, std::size_t prec) {
  {
    std::lock_guard lock(mutex_);
    auto it = memo_.find(weight);
    if (it != memo_.end() && it->second->prec >= prec) return it->second;
  }
  std::shared_ptr<const MillerBasis> basis = load_from_disk(weight, prec);
  if (!basis) {
    basis = std::make_shared<MillerBasis>(compute_basis(weight, prec));
    if (directory_) write_basis_file(*directory_ / file_name(weight, prec), *basis);
  }
  std::lock_guard lock(mutex_);
  auto& slot = memo_[weight];
  if (!slot || slot->prec < basis->prec) slot = basis;
  return basis;
}

BasisCache& default_basis_cache() {
  static BasisCache cache;
  return cache;
}

}  // namespace heckecert
