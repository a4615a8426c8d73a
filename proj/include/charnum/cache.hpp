#pragma once

#include "charnum/constraint.hpp"
#include "charnum/rational.hpp"

#include <atomic>
#include <cstddef>
#include <fstream>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <unordered_map>

namespace charnum {

enum class CountTag { R, W, RR2, NR, N, J };

std::string_view tag_name(CountTag tag);

/// Identifies one characteristic number.  Fields a family does not use stay
/// at their zero defaults, so equal quantities always produce equal keys.
struct CountKey {
  CountTag tag = CountTag::R;
  int r = 0;
  int d1 = 0;
  int d2 = 0;
  Constraint c1;
  Constraint c2;
  int u = 0;  // marked point codim
  int v = 0;  // special tangent count
  int k = 0;  // A=B node codim
  int l = 0;  // C node codim

  friend bool operator==(const CountKey&, const CountKey&) = default;
};

/// Text form `TAG|r|d1|d2|u|v|k|l|c1|c2` with constraints in canonical text.
std::string to_string(const CountKey& key);
CountKey parse_count_key(std::string_view text);

struct CountKeyHash {
  std::size_t operator()(const CountKey& key) const noexcept;
};

/// Process-wide memo table with optional append-only persistence.
class CountCache {
 public:
  CountCache() = default;
  CountCache(const CountCache&) = delete;
  CountCache& operator=(const CountCache&) = delete;

  std::optional<Rational> find(const CountKey& key) const;
  /// Stores `value` unless the key is already present; returns the stored value.
  Rational insert(const CountKey& key, const Rational& value);

  template <class Compute>
  Rational get_or_compute(const CountKey& key, Compute&& compute) {
    if (auto hit = find(key)) {
      hits_.fetch_add(1, std::memory_order_relaxed);
      return *hit;
    }
    misses_.fetch_add(1, std::memory_order_relaxed);
    return insert(key, compute());
  }

  /// Loads records from `path` (if it exists) and appends new records to it.
  /// Unreadable or unwritable files leave the cache in memory-only mode.
  void attach_file(const std::string& path);
  void detach_file();
  void clear();

  std::size_t size() const;
  std::size_t hits() const { return hits_.load(); }
  std::size_t misses() const { return misses_.load(); }
  std::size_t skipped_records() const { return skipped_; }

 private:
  mutable std::shared_mutex mutex_;
  std::unordered_map<CountKey, Rational, CountKeyHash> map_;
  std::mutex file_mutex_;
  std::ofstream out_;
  std::atomic<std::size_t> hits_{0};
  std::atomic<std::size_t> misses_{0};
  std::size_t skipped_ = 0;
};

CountCache& global_cache();

/// Path from the CHARNUM_CACHE environment variable, if set and nonempty.
std::optional<std::string> cache_path_from_env();

}  // namespace charnum
