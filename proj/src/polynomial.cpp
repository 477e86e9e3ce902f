#include "linkalg/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "linkalg/errors.hpp"

namespace linkalg {

Polynomial::Polynomial(RingPtr ring, std::vector<Term> terms) : ring_(std::move(ring)) {
  const auto& ord = ring_->order();
  std::sort(terms.begin(), terms.end(),
            [&](const Term& a, const Term& b) { return ord.compare(a.mono, b.mono) > 0; });
  for (auto& t : terms) {
    if (t.mono.size() != ring_->nvars()) throw PreconditionError("monomial length does not match ring");
    if (!terms_.empty() && terms_.back().mono == t.mono) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
  Polynomial p(ring);
  if (c != 0) p.terms_.push_back({Monomial(ring->nvars()), c});
  return p;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, const Rational& c) {
  Polynomial p(ring);
  if (m.size() != ring->nvars()) throw PreconditionError("monomial length does not match ring");
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t index) {
  return monomial(ring, Monomial::variable(ring->nvars(), index), 1);
}

bool Polynomial::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto d = terms_[0].mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const Term& t) { return t.mono.degree() == d; });
}

void Polynomial::check_ring(const Polynomial& g) const {
  if (!ring_ || !g.ring_) throw PreconditionError("polynomial without ring");
  if (ring_ != g.ring_ && !ring_->same_ring(*g.ring_)) throw PreconditionError("ring context mismatch");
}

namespace {

std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b, bool subtract,
                              const MonomialOrder& ord) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    int c = 0;
    if (i == a.size()) c = -1;
    else if (j == b.size()) c = 1;
    else c = ord.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (subtract) out.back().coeff = -out.back().coeff;
    } else {
      Rational s = subtract ? Rational(a[i].coeff - b[j].coeff) : Rational(a[i].coeff + b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Polynomial Polynomial::operator+(const Polynomial& g) const {
  check_ring(g);
  Polynomial r(ring_);
  r.terms_ = merge_terms(terms_, g.terms_, false, ring_->order());
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& g) const {
  check_ring(g);
  Polynomial r(ring_);
  r.terms_ = merge_terms(terms_, g.terms_, true, ring_->order());
  return r;
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
  check_ring(g);
  if (is_zero() || g.is_zero()) return Polynomial(ring_);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * g.terms_.size());
  for (const auto& s : terms_)
    for (const auto& t : g.terms_) prod.push_back({s.mono * t.mono, s.coeff * t.coeff});
  return Polynomial(ring_, std::move(prod));
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& c) const {
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  // multiplication by a monomial preserves a multiplicative order
  for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / lead_coeff();
  return scaled(inv);
}

Polynomial Polynomial::pow(unsigned e) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

Polynomial Polynomial::mapped(const RingPtr& target, const std::vector<int>& var_map) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (var_map.at(i) < 0) throw PreconditionError("polynomial uses a variable absent from the target ring");
      m[static_cast<std::size_t>(var_map[i])] += t.mono[i];
    }
    out.push_back({std::move(m), t.coeff});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::reordered(const RingPtr& target) const {
  if (!target->same_variables(*ring_)) throw PreconditionError("reordered: variable lists differ");
  if (target->order() == ring_->order()) {
    Polynomial r(*this);
    r.ring_ = target;
    return r;
  }
  return Polynomial(target, terms_);
}

std::string rational_to_string(const Rational& q) { return q.get_str(); }

std::string monomial_to_string(const Monomial& m, const Ring& ring) {
  std::string s;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += ring.name(i);
    if (m[i] > 1) s += "^" + std::to_string(m[i]);
  }
  return s.empty() ? "1" : s;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    if (t.mono.is_one()) {
      out += rational_to_string(c);
    } else {
      if (c != 1) out += rational_to_string(c) + "*";
      out += monomial_to_string(t.mono, *ring_);
    }
  }
  return out;
}

Polynomial exact_divide(const Polynomial& h, const Polynomial& g) {
  if (g.is_zero()) throw PreconditionError("division by the zero polynomial");
  const auto& ring = h.ring();
  Polynomial rem = h;
  std::vector<Term> quot;
  const Monomial& lg = g.lead_monomial();
  while (!rem.is_zero()) {
    const Term& lt = rem.lead();
    if (!lg.divides(lt.mono)) throw PreconditionError("exact_divide: divisor does not divide");
    Monomial q = lt.mono.quotient(lg);
    Rational c = lt.coeff / g.lead_coeff();
    quot.push_back({q, c});
    rem = rem - g.times_term(q, c);
  }
  return Polynomial(ring, std::move(quot));
}

namespace {

class Parser {
 public:
  Parser(const std::string& text, const RingPtr& ring) : s_(text), ring_(ring) {}

  Polynomial parse_all() {
    skip_ws();
    if (pos_ == s_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail(std::string("unexpected character '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("parse error at offset " + std::to_string(pos_) + " in \"" + s_ + "\": " + msg);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_factor(char c) const {
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
           c == '_' || c == '(';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      Polynomial t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        ++pos_;
        Polynomial d = factor();
        if (!d.is_constant()) fail("division by a non-constant");
        if (d.is_zero()) fail("division by zero");
        acc = acc.scaled(1 / d.lead_coeff());
      } else if (starts_factor(c)) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (c == '+') {
      ++pos_;
      return factor();
    }
    Polynomial base = primary();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      const std::string digits = s_.substr(start, pos_ - start);
      if (digits.size() > 6) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      mpz_class z(s_.substr(start, pos_ - start));
      return Polynomial::constant(ring_, Rational(z));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string name = s_.substr(start, pos_ - start);
      int idx = ring_->index_of(name);
      if (idx < 0) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial::variable(ring_, static_cast<std::size_t>(idx));
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const RingPtr& ring) { return Parser(text, ring).parse_all(); }

std::vector<Polynomial> parse_poly_list(const std::string& text, const RingPtr& ring) {
  std::vector<Polynomial> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    bool blank = std::all_of(cur.begin(), cur.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
    if (!blank) out.push_back(parse_poly(cur, ring));
    else if (!out.empty() || !cur.empty()) throw InputError("empty entry in polynomial list \"" + text + "\"");
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) flush();
    else cur.push_back(c);
  }
  bool blank = std::all_of(cur.begin(), cur.end(), [](char ch) { return std::isspace(static_cast<unsigned char>(ch)); });
  if (!blank || !out.empty()) flush();
  return out;
}

}  // namespace linkalg
