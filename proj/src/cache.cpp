#include "charnum/cache.hpp"

#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <vector>

namespace charnum {

namespace {

constexpr CountTag kTags[] = {CountTag::R,  CountTag::W, CountTag::RR2,
                              CountTag::NR, CountTag::N, CountTag::J};

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = s.find(sep);
    out.push_back(s.substr(0, pos));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

int to_int(std::string_view s) {
  std::size_t used = 0;
  const int v = std::stoi(std::string(s), &used);
  if (used != s.size()) throw std::invalid_argument("bad integer field");
  return v;
}

}  // namespace

std::string_view tag_name(CountTag tag) {
  switch (tag) {
    case CountTag::R: return "R";
    case CountTag::W: return "W";
    case CountTag::RR2: return "RR2";
    case CountTag::NR: return "NR";
    case CountTag::N: return "N";
    case CountTag::J: return "J";
  }
  return "?";
}

std::string to_string(const CountKey& key) {
  std::string s(tag_name(key.tag));
  for (int v : {key.r, key.d1, key.d2, key.u, key.v, key.k, key.l}) s += "|" + std::to_string(v);
  s += "|" + format_constraint(key.c1);
  s += "|" + format_constraint(key.c2);
  return s;
}

CountKey parse_count_key(std::string_view text) {
  const auto f = split(text, '|');
  if (f.size() != 10) throw std::invalid_argument("count key needs 10 fields");
  CountKey key;
  bool found = false;
  for (CountTag t : kTags)
    if (tag_name(t) == f[0]) {
      key.tag = t;
      found = true;
    }
  if (!found) throw std::invalid_argument("unknown count tag");
  key.r = to_int(f[1]);
  key.d1 = to_int(f[2]);
  key.d2 = to_int(f[3]);
  key.u = to_int(f[4]);
  key.v = to_int(f[5]);
  key.k = to_int(f[6]);
  key.l = to_int(f[7]);
  for (int i : {8, 9}) {
    auto parsed = parse_constraint(f[static_cast<std::size_t>(i)], kMaxDim);
    if (parsed.hyperplanes != 0) throw std::invalid_argument("hyperplanes in count key");
    (i == 8 ? key.c1 : key.c2) = parsed.constraint;
  }
  return key;
}

std::size_t CountKeyHash::operator()(const CountKey& key) const noexcept {
  ConstraintHash ch;
  std::size_t h = static_cast<std::size_t>(key.tag) + 0x51ED27ULL;
  for (int v : {key.r, key.d1, key.d2, key.u, key.v, key.k, key.l})
    h = (h ^ static_cast<std::size_t>(v + 11)) * 0x100000001B3ULL;
  h ^= ch(key.c1) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  h ^= ch(key.c2) + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
  return h;
}

std::optional<Rational> CountCache::find(const CountKey& key) const {
  std::shared_lock lock(mutex_);
  const auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

Rational CountCache::insert(const CountKey& key, const Rational& value) {
  {
    std::unique_lock lock(mutex_);
    auto [it, inserted] = map_.emplace(key, value);
    if (!inserted) return it->second;
  }
  std::lock_guard file_lock(file_mutex_);
  if (out_.is_open()) {
    out_ << to_string(key) << '\t' << numerator(value) << '/' << denominator(value) << '\n';
    out_.flush();
    if (!out_) {
      std::cerr << "warning: cache write failed, continuing in memory only\n";
      out_.close();
    }
  }
  return value;
}

void CountCache::attach_file(const std::string& path) {
  {
    std::ifstream in(path);
    std::string line;
    std::size_t lineno = 0;
    while (in && std::getline(in, line)) {
      ++lineno;
      if (line.empty()) continue;
      try {
        const auto tab = line.find('\t');
        if (tab == std::string::npos) throw std::invalid_argument("missing tab");
        const CountKey key = parse_count_key(std::string_view(line).substr(0, tab));
        const Rational value = parse_rational(std::string_view(line).substr(tab + 1));
        std::unique_lock lock(mutex_);
        map_[key] = value;
      } catch (const std::exception& e) {
        ++skipped_;
        std::cerr << "warning: skipping cache record " << path << ":" << lineno << " ("
                  << e.what() << ")\n";
      }
    }
  }
  std::lock_guard file_lock(file_mutex_);
  out_.close();
  out_.clear();
  out_.open(path, std::ios::app);
  if (!out_) std::cerr << "warning: cannot open cache file " << path << ", memory only\n";
}

void CountCache::detach_file() {
  std::lock_guard file_lock(file_mutex_);
  out_.close();
}

void CountCache::clear() {
  std::unique_lock lock(mutex_);
  map_.clear();
}

std::size_t CountCache::size() const {
  std::shared_lock lock(mutex_);
  return map_.size();
}

CountCache& global_cache() {
  static CountCache cache;
  return cache;
}

std::optional<std::string> cache_path_from_env() {
  const char* env = std::getenv("CHARNUM_CACHE");
  if (env == nullptr || *env == '\0') return std::nullopt;
  return std::string(env);
}

}  // namespace charnum
