#include "opa/corpus/Fetcher.h"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include <httplib.h>

namespace opa::corpus {

namespace fs = std::filesystem;

bool isUrl(std::string_view source) {
  return source.rfind("http://", 0) == 0 || source.rfind("https://", 0) == 0;
}

std::string sha256Hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int size = 0;
  if (!EVP_Digest(data.data(), data.size(), digest, &size, EVP_sha256(), nullptr)) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(size * 2);
  for (unsigned int i = 0; i < size; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

namespace {

std::string expandApiKey(std::string url) {
  auto at = url.find(kApiKeyPlaceholder);
  if (at == std::string::npos) return url;
  const char* key = std::getenv(kApiKeyEnv);
  if (!key || !*key) throw std::runtime_error(std::string(kApiKeyEnv) + " is not set");
  while (at != std::string::npos) {
    url.replace(at, kApiKeyPlaceholder.size(), key);
    at = url.find(kApiKeyPlaceholder, at + std::strlen(key));
  }
  return url;
}

bool readFile(const fs::path& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buffer;
  buffer << in.rdbuf();
  out = std::move(buffer).str();
  return true;
}

// Write to a private temporary then rename, so readers never see a partial
// body and concurrent writers of one key just race on the rename.
void writeAtomically(const fs::path& path, std::string_view body) {
  static std::atomic<std::uint64_t> counter{0};
  std::ostringstream suffix;
  suffix << ".tmp." << std::this_thread::get_id() << "." << counter.fetch_add(1);
  fs::path tmp = path;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw std::runtime_error("cannot store cache file " + path.string());
  }
}

}  // namespace

Fetcher::Fetcher(FetchOptions options) : options_(std::move(options)) {}

fs::path Fetcher::cachePath(std::string_view url) const {
  if (options_.cacheDir.empty()) return {};
  return options_.cacheDir / (sha256Hex(url) + ".body");
}

FetchResult Fetcher::fetch(const std::string& url) {
  FetchResult result;
  fs::path cached = cachePath(url);
  if (!cached.empty() && readFile(cached, result.body)) {
    result.ok = true;
    result.fromCache = true;
    return result;
  }
  if (options_.offline) {
    result.error = "offline";
    return result;
  }
  if (!isUrl(url)) {
    result.error = "not an http(s) URL";
    return result;
  }

  std::string target;
  try {
    target = expandApiKey(url);
  } catch (const std::exception& e) {
    result.error = e.what();
    return result;
  }
  auto slash = target.find('/', target.find("://") + 3);
  std::string origin = target.substr(0, slash);
  std::string path = slash == std::string::npos ? "/" : target.substr(slash);

  httplib::Client client(origin);
  if (!client.is_valid()) {
    result.error = "unsupported URL";
    return result;
  }
  client.set_follow_location(true);
  client.set_connection_timeout(options_.connectTimeout);
  client.set_read_timeout(options_.readTimeout);

  ++requests_;
  auto response = client.Get(path);
  if (!response) {
    result.error = "request failed: " + httplib::to_string(response.error());
    return result;
  }
  if (response->status < 200 || response->status >= 300) {
    result.error = "HTTP " + std::to_string(response->status);
    return result;
  }
  result.body = std::move(response->body);
  result.ok = true;
  if (!cached.empty()) {
    try {
      fs::create_directories(options_.cacheDir);
      writeAtomically(cached, result.body);
    } catch (const std::exception&) {
      // An unwritable cache costs a refetch next time, nothing more.
    }
  }
  return result;
}

}  // namespace opa::corpus
