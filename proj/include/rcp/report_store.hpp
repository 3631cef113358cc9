#pragma once

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <utility>

#include "rcp/extremal.hpp"

namespace rcp {

/// Append-only store of extremal reports, one JSON record per line in
/// `<dir>/extremal.ndjson`, keyed by (graph6, k). Reopening a directory
/// resumes from whatever records it already holds.
class ResultStore {
 public:
  explicit ResultStore(std::filesystem::path dir);

  std::optional<ExtremalReport> find(const std::string& graph6, std::size_t k) const;
  /// No-op if the key is already present.
  void put(const ExtremalReport& report);
  std::size_t size() const;
  const std::filesystem::path& file() const { return file_; }

 private:
  std::filesystem::path file_;
  mutable std::mutex mutex_;
  std::map<std::pair<std::string, std::size_t>, ExtremalReport> records_;
};

/// Serve reports from `store`, computing and recording misses with `fallback`.
ReportProvider stored_provider(ResultStore& store, ReportProvider fallback);

}  // namespace rcp
