#pragma once

#include "charnum/rational.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

namespace charnum {

/// Exponents of h^a k^b e^c.
struct Monomial {
  int h = 0;
  int k = 0;
  int e = 0;
  int degree() const { return h + k + e; }
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Chow ring of the blowup of P^r x P^r along the diagonal.
///
/// Normal form: h^a k^b with a, b <= r, or h^a e^c with 1 <= c <= r-1 and
/// a <= r.  Products of normal-form monomials are tabulated when the ring is
/// built, so a constructed ring is immutable and safe to share.
template <class Scalar>
class BlowupRing {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Sparse = std::vector<std::pair<int, Scalar>>;

  explicit BlowupRing(int r) : r_(r) {
    if (r < 1) throw std::invalid_argument("blowup ring needs r >= 1");
    for (int a = 0; a <= r; ++a)
      for (int b = 0; b <= r; ++b) add_basis({a, b, 0});
    for (int c = 1; c <= r - 1; ++c)
      for (int a = 0; a <= r; ++a) add_basis({a, 0, c});
    const int n = size();
    table_.resize(static_cast<std::size_t>(n * n));
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        const Monomial& x = basis_[static_cast<std::size_t>(i)];
        const Monomial& y = basis_[static_cast<std::size_t>(j)];
        table_[static_cast<std::size_t>(i * n + j)] = reduce_raw(x.h + y.h, x.k + y.k, x.e + y.e);
        table_[static_cast<std::size_t>(j * n + i)] = table_[static_cast<std::size_t>(i * n + j)];
      }
  }

  int r() const { return r_; }
  int size() const { return static_cast<int>(basis_.size()); }
  const std::vector<Monomial>& basis() const { return basis_; }

  /// Index of a normal-form monomial, or -1.
  int index_of(const Monomial& m) const {
    const auto it = index_.find(m);
    return it == index_.end() ? -1 : it->second;
  }

  /// All normal-form monomials of total degree `codim`.
  std::vector<Monomial> monomial_basis(int codim) const {
    std::vector<Monomial> out;
    for (const auto& m : basis_)
      if (m.degree() == codim) out.push_back(m);
    return out;
  }

  Vector zero() const { return Vector::Zero(size()); }
  Vector one() const { return monomial(0, 0, 0); }

  /// Normal form of h^a k^b e^c.
  Vector monomial(int a, int b, int c) const { return densify(reduce_raw(a, b, c)); }

  Vector multiply(const Vector& x, const Vector& y) const {
    const int n = size();
    Vector out = zero();
    for (int i = 0; i < n; ++i) {
      if (x(i) == Scalar(0)) continue;
      for (int j = 0; j < n; ++j) {
        if (y(j) == Scalar(0)) continue;
        const Scalar f = x(i) * y(j);
        for (const auto& [idx, c] : table_[static_cast<std::size_t>(i * n + j)]) out(idx) += f * c;
      }
    }
    return out;
  }

  Vector power(const Vector& x, int n) const {
    Vector out = one();
    for (int i = 0; i < n; ++i) out = multiply(out, x);
    return out;
  }

  /// Total degree if `x` is homogeneous and nonzero; -1 for zero; throws
  /// std::domain_error otherwise.
  int homogeneous_degree(const Vector& x) const {
    int deg = -1;
    for (int i = 0; i < size(); ++i) {
      if (x(i) == Scalar(0)) continue;
      const int d = basis_[static_cast<std::size_t>(i)].degree();
      if (deg >= 0 && d != deg) throw std::domain_error("class is not homogeneous");
      deg = d;
    }
    return deg;
  }

  /// Degree of a top-dimensional class (coefficient of h^r k^r).
  Scalar integrate(const Vector& x) const {
    const int deg = homogeneous_degree(x);
    if (deg == -1) return Scalar(0);
    if (deg != 2 * r_)
      throw std::domain_error("integrate needs a class of degree " + std::to_string(2 * r_) +
                              ", got " + std::to_string(deg));
    return x(index_of({r_, r_, 0}));
  }

  /// Signed monomial sum, e-exponent descending, then h-exponent descending.
  std::string render(const Vector& x) const {
    std::vector<int> order;
    for (int i = 0; i < size(); ++i)
      if (x(i) != Scalar(0)) order.push_back(i);
    if (order.empty()) return "0";
    std::sort(order.begin(), order.end(), [&](int i, int j) {
      const Monomial& a = basis_[static_cast<std::size_t>(i)];
      const Monomial& b = basis_[static_cast<std::size_t>(j)];
      return std::make_tuple(-a.e, -a.degree(), -a.h) < std::make_tuple(-b.e, -b.degree(), -b.h);
    });
    std::string s;
    bool first = true;
    for (int i : order) {
      Scalar c = x(i);
      const bool negative = c < Scalar(0);
      if (negative) c = -c;
      if (first)
        s += negative ? "-" : "";
      else
        s += negative ? " - " : " + ";
      first = false;
      const std::string mono = monomial_text(basis_[static_cast<std::size_t>(i)]);
      if (c != Scalar(1) || mono.empty()) s += scalar_text(c);
      s += mono;
    }
    return s;
  }

  /// Parses a polynomial in h, k, e with rational coefficients, e.g.
  /// `(2(h^2k+hk^2)-6h^2e+2he^2)^2`, and returns its normal form.
  Vector parse(std::string_view text) const {
    Parser p{*this, text, 0};
    Vector v = p.expr();
    p.skip_space();
    if (p.pos != text.size())
      throw std::invalid_argument("unexpected '" + std::string(1, text[p.pos]) + "' in class");
    return v;
  }

 private:
  int r_;
  std::vector<Monomial> basis_;
  std::map<Monomial, int> index_;
  std::vector<Sparse> table_;

  void add_basis(Monomial m) {
    index_[m] = size();
    basis_.push_back(m);
  }

  Vector densify(const Sparse& s) const {
    Vector v = zero();
    for (const auto& [i, c] : s) v(i) += c;
    return v;
  }

  static void accumulate(Sparse& into, const Sparse& from, const Scalar& f) {
    for (const auto& [i, c] : from) {
      auto it = std::find_if(into.begin(), into.end(), [&](const auto& p) { return p.first == i; });
      if (it == into.end())
        into.emplace_back(i, f * c);
      else
        it->second += f * c;
    }
    into.erase(std::remove_if(into.begin(), into.end(),
                              [](const auto& p) { return p.second == Scalar(0); }),
               into.end());
  }

  Sparse reduce_raw(int a, int b, int c) const {
    if (c == 0) {
      if (a > r_ || b > r_) return {};
      return {{index_of({a, b, 0}), Scalar(1)}};
    }
    a += b;  // ke = he
    if (a > r_) return {};
    if (c <= r_ - 1) return {{index_of({a, 0, c}), Scalar(1)}};
    Sparse out;
    for (int i = 1; i <= r_ - 1; ++i) {
      Scalar coef(static_cast<long>(binomial(r_ + 1, i)));
      if ((i - 1) % 2 != 0) coef = -coef;
      accumulate(out, reduce_raw(a + i, 0, c - i), coef);
    }
    const Scalar sign = (r_ - 1) % 2 == 0 ? Scalar(1) : Scalar(-1);
    for (int i = 0; i <= r_; ++i) accumulate(out, reduce_raw(a + i, r_ - i, c - r_), sign);
    return out;
  }

  static std::string monomial_text(const Monomial& m) {
    std::string s;
    auto put = [&](char g, int n) {
      if (n == 0) return;
      s += g;
      if (n > 1) s += "^" + std::to_string(n);
    };
    put('h', m.h);
    put('k', m.k);
    put('e', m.e);
    return s;
  }

  static std::string scalar_text(const Scalar& c) {
    if constexpr (std::is_same_v<Scalar, Rational>) {
      return to_string(c);
    } else {
      return std::to_string(c);
    }
  }

  struct Parser {
    const BlowupRing& ring;
    std::string_view text;
    std::size_t pos;

    void skip_space() {
      while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool at(char ch) {
      skip_space();
      return pos < text.size() && text[pos] == ch;
    }
    bool starts_factor() {
      skip_space();
      if (pos >= text.size()) return false;
      const char ch = text[pos];
      return ch == '(' || ch == 'h' || ch == 'k' || ch == 'e' || ch == '*' ||
             std::isdigit(static_cast<unsigned char>(ch));
    }
    int integer() {
      skip_space();
      const std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("expected integer in class");
      return std::stoi(std::string(text.substr(start, pos - start)));
    }
    Vector expr() {
      Vector acc = ring.zero();
      bool negate = false;
      if (at('+')) {
        ++pos;
      } else if (at('-')) {
        ++pos;
        negate = true;
      }
      Vector t = term();
      acc += negate ? Vector(-t) : t;
      while (at('+') || at('-')) {
        negate = text[pos] == '-';
        ++pos;
        t = term();
        acc += negate ? Vector(-t) : t;
      }
      return acc;
    }
    Vector term() {
      Vector acc = factor();
      while (starts_factor()) {
        if (at('*')) ++pos;
        acc = ring.multiply(acc, factor());
      }
      return acc;
    }
    Vector factor() {
      Vector base = primary();
      if (at('^')) {
        ++pos;
        base = ring.power(base, integer());
      }
      return base;
    }
    Vector primary() {
      skip_space();
      if (pos >= text.size()) throw std::invalid_argument("unexpected end of class");
      const char ch = text[pos];
      if (ch == '(') {
        ++pos;
        Vector v = expr();
        if (!at(')')) throw std::invalid_argument("missing ')' in class");
        ++pos;
        return v;
      }
      if (ch == 'h' || ch == 'k' || ch == 'e') {
        ++pos;
        return ring.monomial(ch == 'h', ch == 'k', ch == 'e');
      }
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        const Scalar num(integer());
        Scalar value = num;
        if (pos < text.size() && text[pos] == '/') {
          ++pos;
          const int den = integer();
          if (den == 0) throw std::invalid_argument("zero denominator in class");
          value = num / Scalar(den);
        }
        return Vector(ring.one() * value);
      }
      throw std::invalid_argument("unexpected '" + std::string(1, ch) + "' in class");
    }
  };
};

/// Shared exact rings for 1 <= r <= 5.
const BlowupRing<Rational>& blowup_ring(int r);

}  // namespace charnum
