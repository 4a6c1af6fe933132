#pragma once

#include "crnbinom/variable.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace crnbinom {

/// Power product of variables with positive integer exponents. Factors are
/// kept sorted by (kind, index); the empty product is the monomial 1.
class Monomial {
public:
  using Factor = std::pair<Variable, int>;

  Monomial() = default;

  static Monomial one() { return Monomial{}; }

  static Monomial variable(Variable v, int exponent = 1) {
    if (exponent < 1) throw std::invalid_argument("Monomial::variable: exponent must be positive");
    Monomial m;
    m.factors_.emplace_back(v, exponent);
    return m;
  }

  /// Normalizes an arbitrary factor list: sorts, merges repeated variables,
  /// rejects nonpositive exponents.
  static Monomial from_factors(std::vector<Factor> factors) {
    for (const auto& [v, e] : factors) {
      if (e < 1) throw std::invalid_argument("Monomial::from_factors: exponent must be positive");
    }
    std::sort(factors.begin(), factors.end(),
              [](const Factor& a, const Factor& b) { return a.first < b.first; });
    Monomial m;
    for (const auto& [v, e] : factors) {
      if (!m.factors_.empty() && m.factors_.back().first == v) {
        m.factors_.back().second += e;
      } else {
        m.factors_.emplace_back(v, e);
      }
    }
    return m;
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }

  int degree() const {
    int d = 0;
    for (const auto& [v, e] : factors_) d += e;
    return d;
  }

  int exponent(Variable v) const {
    auto it = std::lower_bound(factors_.begin(), factors_.end(), v,
                               [](const Factor& f, Variable x) { return f.first < x; });
    return (it != factors_.end() && it->first == v) ? it->second : 0;
  }

  Monomial times(const Monomial& o) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + o.factors_.size());
    auto a = factors_.begin(), ae = factors_.end();
    auto b = o.factors_.begin(), be = o.factors_.end();
    while (a != ae || b != be) {
      if (b == be || (a != ae && a->first < b->first)) {
        out.factors_.push_back(*a++);
      } else if (a == ae || b->first < a->first) {
        out.factors_.push_back(*b++);
      } else {
        out.factors_.emplace_back(a->first, a->second + b->second);
        ++a;
        ++b;
      }
    }
    return out;
  }

  /// Whether *this divides o.
  bool divides(const Monomial& o) const {
    for (const auto& [v, e] : factors_) {
      if (o.exponent(v) < e) return false;
    }
    return true;
  }

  /// Exact quotient *this / d. Throws if d does not divide *this.
  Monomial divided_by(const Monomial& d) const {
    if (!d.divides(*this)) throw std::domain_error("Monomial::divided_by: not divisible");
    Monomial out;
    for (const auto& [v, e] : factors_) {
      int r = e - d.exponent(v);
      if (r > 0) out.factors_.emplace_back(v, r);
    }
    return out;
  }

  static Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out;
    auto i = a.factors_.begin(), ie = a.factors_.end();
    auto j = b.factors_.begin(), je = b.factors_.end();
    while (i != ie || j != je) {
      if (j == je || (i != ie && i->first < j->first)) {
        out.factors_.push_back(*i++);
      } else if (i == ie || j->first < i->first) {
        out.factors_.push_back(*j++);
      } else {
        out.factors_.emplace_back(i->first, std::max(i->second, j->second));
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Whether gcd(*this, o) == 1, i.e. no shared variable.
  bool coprime_with(const Monomial& o) const {
    for (const auto& [v, e] : factors_) {
      if (o.exponent(v) > 0) return false;
    }
    return true;
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;

private:
  std::vector<Factor> factors_;
};

/// Degree-reverse-lexicographic monomial order.
///
/// The default ("ambient") order ranks species variables above rate
/// constants, each kind by ascending index, so x1 > x2 > ... > k0 > k1 > ...
/// Ties in total degree are broken by scanning from the least significant
/// variable: at the first exponent difference, the monomial with the
/// smaller exponent is the larger one.
class TermOrder {
public:
  TermOrder() = default;

  /// Degrevlex over an explicit significance ranking, most significant
  /// variable first. Comparing a monomial that mentions an unranked
  /// variable throws.
  static TermOrder degrevlex(std::vector<Variable> most_significant_first) {
    TermOrder o;
    o.priority_ = std::move(most_significant_first);
    return o;
  }

  bool is_ambient() const { return !priority_.has_value(); }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    if (priority_.has_value()) return compare_ranked(a, b);
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    // Factors are sorted ascending by (kind, index), which is descending
    // significance, so reverse iteration visits variables least significant
    // first: exactly degrevlex scanning order.
    auto ia = a.factors().rbegin(), ea = a.factors().rend();
    auto ib = b.factors().rbegin(), eb = b.factors().rend();
    while (ia != ea || ib != eb) {
      if (ia == ea) return std::strong_ordering::greater;
      if (ib == eb) return std::strong_ordering::less;
      if (ia->first == ib->first) {
        if (ia->second != ib->second) {
          return ia->second < ib->second ? std::strong_ordering::greater
                                         : std::strong_ordering::less;
        }
        ++ia;
        ++ib;
        continue;
      }
      // The side holding the less significant variable has the first
      // positive exponent in scanning order, so it is the smaller monomial.
      return ia->first > ib->first ? std::strong_ordering::less
                                   : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  bool equal(const Monomial& a, const Monomial& b) const { return compare(a, b) == 0; }

private:
  std::strong_ordering compare_ranked(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da <=> db;
    const auto& order = *priority_;
    std::vector<int> ea(order.size(), 0), eb(order.size(), 0);
    fill_exponents(a, order, ea);
    fill_exponents(b, order, eb);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (ea[k] != eb[k]) {
        return ea[k] < eb[k] ? std::strong_ordering::greater : std::strong_ordering::less;
      }
    }
    return std::strong_ordering::equal;
  }

  static void fill_exponents(const Monomial& m, const std::vector<Variable>& order,
                             std::vector<int>& out) {
    for (const auto& [v, e] : m.factors()) {
      auto it = std::find(order.begin(), order.end(), v);
      if (it == order.end()) throw std::invalid_argument("TermOrder: variable not ranked");
      out[static_cast<std::size_t>(it - order.begin())] = e;
    }
  }

  std::optional<std::vector<Variable>> priority_;
};

}  // namespace crnbinom
