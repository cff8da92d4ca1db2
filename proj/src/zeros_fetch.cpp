#include <fcntl.h>
#include <httplib.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <sstream>

#include "glab/error.hpp"
#include "glab/zeros.hpp"

namespace glab {

std::string sha256_hex(std::string_view bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    fail(ErrorKind::integrity, "sha256 computation failed");
  std::ostringstream hex;
  for (unsigned i = 0; i < len; ++i)
    hex << std::hex << std::setw(2) << std::setfill('0') << static_cast<int>(digest[i]);
  return hex.str();
}

namespace {

class DirLock {
public:
  explicit DirLock(const std::filesystem::path& dir) {
    const auto path = (dir / ".lock").string();
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0) fail(ErrorKind::io, "cannot open lock file " + path);
    if (::flock(fd_, LOCK_EX) != 0) {
      ::close(fd_);
      fail(ErrorKind::io, "cannot lock " + path);
    }
  }
  ~DirLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  DirLock(const DirLock&) = delete;
  DirLock& operator=(const DirLock&) = delete;

private:
  int fd_ = -1;
};

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::io, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
  const auto tmp = path.string() + ".part";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorKind::io, "cannot write " + tmp);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) fail(ErrorKind::io, "short write to " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

std::string utc_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string download(const std::string& url, const FetchOptions& opts) {
  const auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) fail(ErrorKind::fetch, "not an http(s) URL: " + url);
  const auto path_start = url.find('/', scheme_end + 3);
  const std::string origin = url.substr(0, path_start);
  const std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);

  httplib::Client client(origin);
  client.set_follow_location(true);
  client.set_connection_timeout(opts.timeout_seconds, 0);
  client.set_read_timeout(opts.timeout_seconds, 0);
  auto res = client.Get(path);
  if (!res) fail(ErrorKind::fetch, "GET " + url + ": " + httplib::to_string(res.error()));
  if (res->status != 200)
    fail(ErrorKind::fetch, "GET " + url + ": HTTP status " + std::to_string(res->status));
  return res->body;
}

}  // namespace

ZeroTable fetch_zeros(const std::string& url, const std::filesystem::path& cache_dir,
                      const FetchOptions& opts) {
  std::filesystem::create_directories(cache_dir);
  DirLock lock(cache_dir);

  const std::string key = sha256_hex(url);
  const auto raw_path = cache_dir / (key + ".txt");
  const auto meta_path = cache_dir / (key + ".json");

  if (std::filesystem::exists(meta_path)) {
    nlohmann::json meta;
    try {
      meta = nlohmann::json::parse(read_file(meta_path));
    } catch (const nlohmann::json::exception& e) {
      fail(ErrorKind::integrity, "unreadable cache metadata " + meta_path.string());
    }
    if (!std::filesystem::exists(raw_path))
      fail(ErrorKind::integrity, "cache metadata without table: " + raw_path.string());
    const std::string body = read_file(raw_path);
    if (meta.value("sha256", std::string{}) != sha256_hex(body))
      fail(ErrorKind::integrity, "cached table does not match recorded sha256: " + raw_path.string());
    return parse_zeros(body, url);
  }

  if (!opts.allow_network) fail(ErrorKind::fetch, "network disabled and no cached copy of " + url);
  const std::string body = download(url, opts);
  // Parse before committing so a bad download never lands in the cache.
  ZeroTable table = parse_zeros(body, url);
  write_file(raw_path, body);
  const nlohmann::json meta = {{"url", url}, {"sha256", sha256_hex(body)}, {"fetched_at", utc_now()}};
  write_file(meta_path, meta.dump(2) + "\n");
  return table;
}

}  // namespace glab
