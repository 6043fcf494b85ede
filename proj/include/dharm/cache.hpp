#pragma once

#include <optional>
#include <string>

namespace dharm {

/// Flat text cache under a root directory. Writes go to a temp file in the
/// same directory and are renamed into place. Keys are relative file names;
/// callers embed a format-version component in the key.
class CacheStore {
 public:
  explicit CacheStore(std::string root) : root_(std::move(root)) {}

  /// Root from the DHARMONIC_CACHE environment variable; disabled (all
  /// misses, stores dropped) when unset and no override was installed.
  static CacheStore& global();
  static void set_global_root(const std::string& root);

  bool enabled() const { return !root_.empty(); }
  std::optional<std::string> get(const std::string& key) const;
  void put(const std::string& key, const std::string& value) const;
  void clear() const;
  const std::string& root() const { return root_; }

 private:
  std::string root_;
};

}  // namespace dharm
