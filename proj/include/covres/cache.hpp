#pragma once

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>

#include "covres/util.hpp"

namespace covres {

// On-disk memo for expensive scalar computations.  One file per entry, named
// by the key hash; entries carry a checksum so a damaged file is simply
// recomputed, never trusted.  Disabled unless a directory is configured (the
// COVRES_CACHE_DIR environment variable seeds one at startup).
class DiskCache {
 public:
  static DiskCache& instance() {
    static DiskCache c;
    return c;
  }

  void configure(std::optional<std::string> dir) {
    std::lock_guard<std::mutex> lk(mx_);
    if (dir && !dir->empty()) {
      dir_ = *dir;
      std::error_code ec;
      std::filesystem::create_directories(dir_, ec);
      enabled_ = !ec;
    } else {
      enabled_ = false;
      dir_.clear();
    }
  }

  void disable() { configure(std::nullopt); }
  bool enabled() const { return enabled_; }

  std::optional<std::string> get(const std::string& key) {
    std::lock_guard<std::mutex> lk(mx_);
    if (!enabled_) return std::nullopt;
    std::ifstream in(path_for(key));
    if (!in) return std::nullopt;
    std::string stored_key, value, checksum;
    if (!read_field(in, stored_key) || !read_field(in, value) ||
        !read_field(in, checksum))
      return std::nullopt;
    if (stored_key != key) return std::nullopt;
    std::ostringstream want;
    want << std::hex << fnv64(key + "\x1f" + value);
    if (checksum != want.str()) return std::nullopt;
    return value;
  }

  void put(const std::string& key, const std::string& value) {
    std::lock_guard<std::mutex> lk(mx_);
    if (!enabled_) return;
    std::ostringstream sum;
    sum << std::hex << fnv64(key + "\x1f" + value);
    std::string tmp = path_for(key) + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) return;
      write_field(out, key);
      write_field(out, value);
      write_field(out, sum.str());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path_for(key), ec);
  }

 private:
  DiskCache() {
    if (const char* env = std::getenv("COVRES_CACHE_DIR"))
      configure(std::string(env));
  }

  std::string path_for(const std::string& key) const {
    std::ostringstream name;
    name << std::hex << fnv64(key);
    return (std::filesystem::path(dir_) / name.str()).string();
  }

  // length-prefixed fields keep arbitrary value bytes safe
  static void write_field(std::ofstream& out, const std::string& s) {
    out << s.size() << '\n' << s << '\n';
  }

  static bool read_field(std::ifstream& in, std::string& s) {
    std::size_t n = 0;
    if (!(in >> n)) return false;
    if (n > (1u << 26)) return false;
    in.get();
    s.resize(n);
    if (n && !in.read(s.data(), static_cast<std::streamsize>(n))) return false;
    return in.get() == '\n';
  }

  mutable std::mutex mx_;
  std::string dir_;
  bool enabled_ = false;
};

}  // namespace covres
