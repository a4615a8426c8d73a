#include "charnum/constraint.hpp"

#include <charconv>
#include <stdexcept>
#include <tuple>

namespace charnum {

int Constraint::non_hyperplane_count() const {
  int n = 0;
  for (int c = 2; c <= kMaxDim; ++c) n += count(c);
  return n;
}

int Constraint::rank_value() const {
  int v = 0;
  for (int c = 2; c <= kMaxDim; ++c) v -= count(c) * c * c;
  return v;
}

int Constraint::load() const {
  int v = tangencies;
  for (int c = 2; c <= kMaxDim; ++c) v += count(c) * (c - 1);
  return v;
}

bool Constraint::empty() const { return tangencies == 0 && non_hyperplane_count() == 0; }

Constraint& Constraint::add(int codim, int n) {
  if (codim < 2 || codim > kMaxDim)
    throw std::out_of_range("incidence codimension out of range: " + std::to_string(codim));
  incidences[static_cast<std::size_t>(codim)] += n;
  return *this;
}

Constraint& Constraint::remove(int codim, int n) {
  if (codim < 2 || codim > kMaxDim || count(codim) < n)
    throw std::logic_error("cannot remove codim-" + std::to_string(codim) + " incidence");
  incidences[static_cast<std::size_t>(codim)] -= n;
  return *this;
}

RankKey rank_key(const Constraint& c) {
  return {c.tangencies, c.non_hyperplane_count(), c.rank_value()};
}

std::weak_ordering compare(const Constraint& a, const Constraint& b) {
  const auto ka = std::make_tuple(-a.tangencies, a.non_hyperplane_count(), a.rank_value());
  const auto kb = std::make_tuple(-b.tangencies, b.non_hyperplane_count(), b.rank_value());
  if (auto cmp = ka <=> kb; cmp != 0) return cmp;
  if (auto cmp = a.incidences <=> b.incidences; cmp != 0) return cmp;
  const int na = a.node_codim.value_or(-1);
  const int nb = b.node_codim.value_or(-1);
  return na <=> nb;
}

std::int64_t add_point_condition(Constraint& c, int r, int codim, int degree) {
  if (codim <= 0 || codim > r) return 0;
  if (codim == 1) return degree;
  c.add(codim);
  return 1;
}

std::vector<Split> partitions(const Constraint& c) {
  std::vector<Split> out;
  for_each_split(c, [&](const Constraint& a, const Constraint& b, std::int64_t m) {
    out.push_back({a, b, m});
  });
  return out;
}

std::pair<Constraint, Rational> normalize_hyperplanes(std::span<const int> raw, int r,
                                                      int degree) {
  if (degree < 1) throw std::invalid_argument("degree must be positive");
  const auto n = static_cast<int>(raw.size());
  if (n != r + 1 && n != r + 2)
    throw std::invalid_argument("tuple must have r+1 or r+2 entries");
  Constraint c;
  c.tangencies = raw[0];
  const int hyperplanes = raw[1];
  for (int i = 2; i <= r; ++i) c.incidences[static_cast<std::size_t>(i)] = raw[static_cast<std::size_t>(i)];
  if (n == r + 2) c.node_codim = raw[static_cast<std::size_t>(r + 1)];
  for (int v : raw)
    if (v < 0) throw std::invalid_argument("negative entry in constraint tuple");
  Rational mult = 1;
  for (int i = 0; i < hyperplanes; ++i) mult *= degree;
  return {c, mult};
}

Constraint from_codim2_tuple(std::span<const int> tuple, int r) {
  if (static_cast<int>(tuple.size()) != r)
    throw std::invalid_argument("table tuple must have r entries");
  Constraint c;
  c.tangencies = tuple[0];
  for (int i = 2; i <= r; ++i)
    c.incidences[static_cast<std::size_t>(i)] = tuple[static_cast<std::size_t>(i - 1)];
  return c;
}

int expected_dimension(const FamilyHandle& f, const Constraint& c) {
  const int r = f.r;
  const int d = f.degree;
  const int base = (r + 1) * d + r - 3 - c.load();
  switch (f.kind) {
    case FamilyKind::Rational:
      return base;
    case FamilyKind::Nodal:
      return base + 2 - r - c.node_codim.value_or(0);
    case FamilyKind::SpecialTangent:
      return base + 1 - f.marked_codim - f.special;
    case FamilyKind::TwoPointed:
      return base + 2;
  }
  return base;
}

namespace {

int parse_int(std::string_view s) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || v < 0)
    throw std::invalid_argument("bad count '" + std::string(s) + "'");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

ParsedConstraint parse_constraint(std::string_view text, int r) {
  ParsedConstraint out;
  text = trim(text);
  while (!text.empty()) {
    const auto semi = text.find_first_of(";, ");
    const std::string_view item = trim(text.substr(0, semi));
    text = semi == std::string_view::npos ? std::string_view{} : text.substr(semi + 1);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("expected key:value in '" + std::string(item) + "'");
    const std::string_view key = trim(item.substr(0, colon));
    const int value = parse_int(trim(item.substr(colon + 1)));
    if (key == "t") {
      out.constraint.tangencies += value;
    } else if (key == "node") {
      if (value > r) throw std::invalid_argument("node codimension exceeds r");
      out.constraint.node_codim = value;
    } else if (key.size() >= 2 && key[0] == 'c') {
      const int codim = parse_int(key.substr(1));
      if (codim < 1 || codim > r)
        throw std::invalid_argument("codimension " + std::to_string(codim) +
                                    " outside 1.." + std::to_string(r));
      if (codim == 1)
        out.hyperplanes += value;
      else
        out.constraint.add(codim, value);
    } else {
      throw std::invalid_argument("unknown key '" + std::string(key) + "'");
    }
  }
  return out;
}

std::string format_constraint(const Constraint& c) {
  std::string s = "t:" + std::to_string(c.tangencies);
  for (int i = 2; i <= kMaxDim; ++i)
    if (c.count(i) > 0) s += ";c" + std::to_string(i) + ":" + std::to_string(c.count(i));
  if (c.node_codim) s += ";node:" + std::to_string(*c.node_codim);
  return s;
}

std::size_t ConstraintHash::operator()(const Constraint& c) const noexcept {
  std::size_t h = static_cast<std::size_t>(c.tangencies) * 0x9E3779B97F4A7C15ULL;
  for (int v : c.incidences) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001B3ULL;
  h ^= static_cast<std::size_t>(c.node_codim.value_or(-1) + 7) << 3;
  return h;
}

}  // namespace charnum
