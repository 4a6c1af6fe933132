#pragma once

#include "crnbinom/monomial.hpp"
#include "crnbinom/rational.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace crnbinom {

/// Sparse multivariate polynomial over Q. Terms are kept normalized:
/// sorted strictly descending under the ambient term order, no zero
/// coefficients, no repeated monomials. The empty term list is zero.
class Polynomial {
public:
  using Term = std::pair<Rational, Monomial>;

  Polynomial() = default;

  static Polynomial zero() { return Polynomial{}; }

  static Polynomial constant(Rational c) { return term(std::move(c), Monomial::one()); }

  static Polynomial variable(Variable v) {
    return term(Rational(1), Monomial::variable(v));
  }

  static Polynomial term(Rational c, Monomial m) {
    Polynomial p;
    if (c != 0) p.terms_.emplace_back(std::move(c), std::move(m));
    return p;
  }

  static Polynomial from_terms(std::vector<Term> terms) {
    const TermOrder& ord = ambient_order();
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.greater(a.second, b.second);
    });
    Polynomial p;
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().second == t.second) {
        p.terms_.back().first += t.first;
        if (p.terms_.back().first == 0) p.terms_.pop_back();
      } else if (t.first != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  /// Exactly two terms.
  bool is_binomial() const { return terms_.size() == 2; }

  bool is_monomial() const { return terms_.size() == 1; }

  /// Largest term under the given order (ambient by default).
  /// Throws for the zero polynomial.
  const Term& leading_term(const TermOrder& order = TermOrder{}) const {
    if (terms_.empty()) throw std::domain_error("leading_term of zero polynomial");
    if (order.is_ambient()) return terms_.front();
    const Term* best = &terms_.front();
    for (const Term& t : terms_) {
      if (order.greater(t.second, best->second)) best = &t;
    }
    return *best;
  }

  const Monomial& leading_monomial(const TermOrder& order = TermOrder{}) const {
    return leading_term(order).second;
  }

  Polynomial scaled(const Rational& c) const {
    if (c == 0) return zero();
    Polynomial out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.emplace_back(t.first * c, t.second);
    return out;
  }

  /// Multiplies every term by a monomial. Term order is preserved:
  /// m*a > m*b whenever a > b in any degrevlex order.
  Polynomial times_monomial(const Monomial& m) const {
    Polynomial out;
    out.terms_.reserve(terms_.size());
    for (const Term& t : terms_) out.terms_.emplace_back(t.first, t.second.times(m));
    return out;
  }

  friend Polynomial operator-(const Polynomial& p) { return p.scaled(Rational(-1)); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const TermOrder& ord = ambient_order();
    Polynomial out;
    out.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin(), ie = a.terms_.end();
    auto j = b.terms_.begin(), je = b.terms_.end();
    while (i != ie || j != je) {
      if (j == je) {
        out.terms_.push_back(*i++);
      } else if (i == ie) {
        out.terms_.push_back(*j++);
      } else {
        auto cmp = ord.compare(i->second, j->second);
        if (cmp > 0) {
          out.terms_.push_back(*i++);
        } else if (cmp < 0) {
          out.terms_.push_back(*j++);
        } else {
          Rational c = i->first + j->first;
          if (c != 0) out.terms_.emplace_back(std::move(c), i->second);
          ++i;
          ++j;
        }
      }
    }
    return out;
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    std::vector<Term> cross;
    cross.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& s : a.terms_) {
      for (const Term& t : b.terms_) {
        cross.emplace_back(s.first * t.first, s.second.times(t.second));
      }
    }
    return from_terms(std::move(cross));
  }

  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  static const TermOrder& ambient_order() {
    static const TermOrder order{};
    return order;
  }

  std::vector<Term> terms_;
};

/// Display names for ring variables, indexed by (kind, index).
struct VariableNames {
  std::vector<std::string> species;
  std::vector<std::string> rates;

  const std::string& name_of(Variable v) const {
    const auto& table = v.kind == VarKind::Species ? species : rates;
    if (v.index < 0 || static_cast<std::size_t>(v.index) >= table.size()) {
      throw std::out_of_range("VariableNames: unknown variable");
    }
    return table[static_cast<std::size_t>(v.index)];
  }
};

/// Renders a power product with rate factors first, then species factors,
/// each group by ascending index: "k12*x1*x2", "x3^2". The unit monomial
/// renders as "1".
inline std::string render(const Monomial& m, const VariableNames& names) {
  if (m.is_one()) return "1";
  std::string out;
  auto append_kind = [&](VarKind kind) {
    for (const auto& [v, e] : m.factors()) {
      if (v.kind != kind) continue;
      if (!out.empty()) out += "*";
      out += names.name_of(v);
      if (e != 1) {
        out += "^";
        out += std::to_string(e);
      }
    }
  };
  append_kind(VarKind::Rate);
  append_kind(VarKind::Species);
  return out;
}

/// Renders terms in stored (descending) order, joining with " + " / " - ",
/// eliding unit coefficients: "-k12*x1*x2 + k21*x3*x4". Zero renders "0".
inline std::string render(const Polynomial& p, const VariableNames& names) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [c, m] : p.terms()) {
    bool negative = c < 0;
    Rational mag = abs(c);
    std::string piece;
    if (m.is_one()) {
      piece = to_string(mag);
    } else if (mag == 1) {
      piece = render(m, names);
    } else {
      piece = to_string(mag) + "*" + render(m, names);
    }
    if (first) {
      out = negative ? "-" + piece : piece;
      first = false;
    } else {
      out += negative ? " - " : " + ";
      out += piece;
    }
  }
  return out;
}

}  // namespace crnbinom
