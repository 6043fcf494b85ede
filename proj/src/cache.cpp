#include "dharm/cache.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>

namespace dharm {

namespace fs = std::filesystem;

namespace {
std::string& global_root() {
  static std::string root = [] {
    const char* env = std::getenv("DHARMONIC_CACHE");
    return std::string(env ? env : "");
  }();
  return root;
}
std::mutex& global_mutex() {
  static std::mutex mu;
  return mu;
}
}  // namespace

CacheStore& CacheStore::global() {
  static CacheStore store("");
  std::lock_guard<std::mutex> lock(global_mutex());
  store.root_ = global_root();
  return store;
}

void CacheStore::set_global_root(const std::string& root) {
  std::lock_guard<std::mutex> lock(global_mutex());
  global_root() = root;
}

std::optional<std::string> CacheStore::get(const std::string& key) const {
  if (!enabled()) return std::nullopt;
  std::ifstream in(fs::path(root_) / key);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void CacheStore::put(const std::string& key, const std::string& value) const {
  if (!enabled()) return;
  fs::path target = fs::path(root_) / key;
  fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << value;
  }
  fs::rename(tmp, target);
}

void CacheStore::clear() const {
  if (!enabled() || !fs::exists(root_)) return;
  for (const auto& entry : fs::directory_iterator(root_)) fs::remove_all(entry.path());
}

}  // namespace dharm
