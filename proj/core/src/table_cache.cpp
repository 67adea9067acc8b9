#include <fstream>
#include <json.hpp>
#include <system_error>

#include "jmwg/characters.hpp"

namespace jmwg::detail {

namespace {
constexpr int kCacheFormatVersion = 1;
constexpr const char* kCacheFormatName = "jmwg-character-table";
}  // namespace

std::filesystem::path cached_table_path(const std::filesystem::path& dir, int n) {
  return dir / ("chartable-v" + std::to_string(kCacheFormatVersion) + "-n" + std::to_string(n) + ".json");
}

std::optional<std::vector<std::int64_t>> load_cached_table(const std::filesystem::path& dir, int n) {
  std::ifstream in(cached_table_path(dir, n));
  if (!in) return std::nullopt;
  try {
    const auto doc = nlohmann::json::parse(in);
    if (doc.at("format").get<std::string>() != kCacheFormatName) return std::nullopt;
    if (doc.at("version").get<int>() != kCacheFormatVersion) return std::nullopt;
    if (doc.at("n").get<int>() != n) return std::nullopt;

    const auto& parts = partitions_of(n);
    const auto& labels = doc.at("partitions");
    if (labels.size() != parts.size()) return std::nullopt;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      if (labels[i].get<std::string>() != parts[i].to_string()) return std::nullopt;
    }
    std::vector<std::int64_t> entries;
    entries.reserve(parts.size() * parts.size());
    const auto& rows = doc.at("rows");
    if (rows.size() != parts.size()) return std::nullopt;
    for (const auto& row : rows) {
      if (row.size() != parts.size()) return std::nullopt;
      for (const auto& value : row) entries.push_back(value.get<std::int64_t>());
    }
    return entries;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void store_cached_table(const std::filesystem::path& dir, int n, std::span<const std::int64_t> entries) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) return;

  const auto& parts = partitions_of(n);
  nlohmann::json doc;
  doc["format"] = kCacheFormatName;
  doc["version"] = kCacheFormatVersion;
  doc["n"] = n;
  doc["partitions"] = nlohmann::json::array();
  for (const auto& p : parts) doc["partitions"].push_back(p.to_string());
  doc["rows"] = nlohmann::json::array();
  for (std::size_t i = 0; i < parts.size(); ++i) {
    doc["rows"].push_back(std::vector<std::int64_t>(entries.begin() + static_cast<std::ptrdiff_t>(i * parts.size()),
                                                    entries.begin() + static_cast<std::ptrdiff_t>((i + 1) * parts.size())));
  }
  // Write-then-rename so a concurrent reader never sees a torn file.
  const auto target = cached_table_path(dir, n);
  auto tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) return;
    out << doc.dump() << '\n';
    if (!out) return;
  }
  std::filesystem::rename(tmp, target, ec);
}

}  // namespace jmwg::detail
