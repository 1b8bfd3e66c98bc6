#include "modulidim/laurent.hpp"

#include "modulidim/errors.hpp"

#include <algorithm>
#include <sstream>

namespace modulidim {

LaurentPoly LaurentPoly::constant(const Rational& c) {
  LaurentPoly p;
  p.add_term(Exponents{}, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, const Exponents& e) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly LaurentPoly::t_power(std::int64_t e) {
  return monomial(Rational(1), Exponents{0, e, 0});
}

bool LaurentPoly::is_univariate_t() const {
  for (const auto& [e, c] : terms_) {
    if (e.s != 0 || e.u != 0) return false;
  }
  return true;
}

void LaurentPoly::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Exponents e{checked_add(ea.s, eb.s), checked_add(ea.t, eb.t), checked_add(ea.u, eb.u)};
      p.add_term(e, ca * cb);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly p;
  if (c == 0) return p;
  for (const auto& [e, coeff] : terms_) p.terms_.emplace(e, coeff * c);
  return p;
}

LaurentPoly LaurentPoly::shifted(const Exponents& e) const {
  LaurentPoly p;
  for (const auto& [e0, c] : terms_) {
    p.terms_.emplace(Exponents{checked_add(e0.s, e.s), checked_add(e0.t, e.t),
                               checked_add(e0.u, e.u)},
                     c);
  }
  return p;
}

Rational LaurentPoly::eval(const Rational& sv, const Rational& tv, const Rational& uv) const {
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    acc += c * rational_pow(sv, e.s) * rational_pow(tv, e.t) * rational_pow(uv, e.u);
  }
  return acc;
}

Rational LaurentPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::int64_t LaurentPoly::max_t_degree() const {
  std::int64_t m = terms_.begin()->first.t;
  for (const auto& [e, c] : terms_) m = std::max(m, e.t);
  return m;
}

namespace {

std::string monomial_string(const Exponents& e) {
  std::ostringstream os;
  bool first = true;
  auto put = [&](const char* name, std::int64_t exp) {
    if (exp == 0) return;
    if (!first) os << " ";
    first = false;
    os << name;
    if (exp != 1) os << "^" << exp;
  };
  put("s", e.s);
  put("t", e.t);
  put("u", e.u);
  return os.str();
}

} // namespace

std::string LaurentPoly::pretty() const {
  if (terms_.empty()) return "0";
  bool all_negative = true;
  for (const auto& [e, c] : terms_) {
    if (c > 0) {
      all_negative = false;
      break;
    }
  }
  if (all_negative) return "-(" + (-*this).pretty() + ")";

  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? "-" : "+");
    }
    std::string mono = monomial_string(e);
    if (mono.empty()) {
      os << rational_to_string(a);
    } else {
      if (a != 1) os << rational_to_string(a) << "*";
      os << mono;
    }
  }
  return os.str();
}

std::vector<std::string> LaurentPoly::term_strings() const {
  std::vector<std::string> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    std::string mono = monomial_string(e);
    if (mono.empty()) {
      out.push_back(rational_to_string(c));
    } else {
      out.push_back(rational_to_string(c) + " * " + mono);
    }
  }
  return out;
}

Rational eval_at_one(const LaurentPoly& p) {
  if (!p.is_univariate_t()) {
    throw ValidationError("eval_at_one expects a polynomial in t alone");
  }
  Rational acc(0);
  for (const auto& [e, c] : p.terms()) acc += c;
  return acc;
}

} // namespace modulidim
