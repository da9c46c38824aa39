#pragma once

#include <atomic>
#include <chrono>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>

namespace opa::corpus {

/// Environment variable substituted for `{APIKEY}` in source URLs.
inline constexpr const char* kApiKeyEnv = "OPA_API_KEY";
inline constexpr std::string_view kApiKeyPlaceholder = "{APIKEY}";

struct FetchOptions {
  /// Empty disables the cache.
  std::filesystem::path cacheDir;
  bool offline = false;
  std::chrono::seconds connectTimeout{10};
  std::chrono::seconds readTimeout{30};
};

struct FetchResult {
  bool ok = false;
  bool fromCache = false;
  std::string body;
  /// Failure reason when !ok. Never contains the API key.
  std::string error;
};

bool isUrl(std::string_view source);

/// Lower-case hex SHA-256.
std::string sha256Hex(std::string_view data);

/// HTTP(S) GET with an on-disk cache keyed by the digest of the URL as
/// written (before `{APIKEY}` expansion, so the key never reaches the disk).
/// Safe to share between threads.
class Fetcher {
 public:
  explicit Fetcher(FetchOptions options = {});

  FetchResult fetch(const std::string& url);

  std::filesystem::path cachePath(std::string_view url) const;
  /// GET requests actually sent, cache hits excluded.
  std::size_t networkRequests() const { return requests_.load(); }
  const FetchOptions& options() const { return options_; }

 private:
  FetchOptions options_;
  std::atomic<std::size_t> requests_{0};
};

}  // namespace opa::corpus
