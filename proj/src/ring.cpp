#include "linkalg/ring.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "linkalg/errors.hpp"

namespace linkalg {

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_[index] = power;
  return m;
}

std::uint64_t Monomial::degree() const {
  std::uint64_t d = 0;
  for (auto e : exps_) d += e;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

std::uint64_t Monomial::support() const {
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0) mask |= (std::uint64_t{1} << i);
  return mask;
}

bool Monomial::is_pure_power() const {
  int count = 0;
  for (auto e : exps_)
    if (e != 0) ++count;
  return count <= 1;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) throw PreconditionError("monomial quotient: divisor does not divide");
  Monomial q(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] -= divisor.exps_[i];
  return q;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += other.exps_[i];
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(*this);
  for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  return r;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  return true;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto e : m.exponents()) {
    h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

int compare_degrevlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  switch (kind_) {
    case Kind::lex:
      for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      return 0;
    case Kind::degrevlex:
      return compare_degrevlex(a, b, 0, a.size());
    case Kind::block: {
      const std::size_t k = std::min(block_, a.size());
      if (int c = compare_degrevlex(a, b, 0, k); c != 0) return c;
      return compare_degrevlex(a, b, k, a.size());
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind_) {
    case Kind::lex: return "lex";
    case Kind::degrevlex: return "degrevlex";
    case Kind::block: return "block(" + std::to_string(block_) + ")";
  }
  return "?";
}

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

Ring::Ring(std::vector<std::string> names, MonomialOrder order)
    : names_(std::move(names)), order_(order) {}

RingPtr Ring::make(std::vector<std::string> names, MonomialOrder order) {
  if (names.empty()) throw InputError("ring needs at least one variable");
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!valid_identifier(n)) throw InputError("invalid variable name '" + n + "'");
    if (!seen.insert(n).second) throw InputError("duplicate variable name '" + n + "'");
  }
  if (names.size() > 64) throw InputError("at most 64 variables are supported");
  return RingPtr(new Ring(std::move(names), order));
}

RingPtr Ring::from_list(const std::string& comma_separated, MonomialOrder order) {
  std::vector<std::string> names;
  std::string cur;
  auto flush = [&] {
    std::string t;
    for (char c : cur)
      if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
    if (!t.empty()) names.push_back(t);
    cur.clear();
  };
  for (char c : comma_separated) {
    if (c == ',') flush();
    else cur.push_back(c);
  }
  flush();
  return make(std::move(names), order);
}

int Ring::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

RingPtr Ring::with_order(MonomialOrder order) const { return RingPtr(new Ring(names_, order)); }

RingPtr Ring::with_elimination_vars(const std::vector<std::string>& hints) const {
  std::vector<std::string> names;
  std::set<std::string> used(names_.begin(), names_.end());
  for (const auto& h : hints) {
    std::string cand = h;
    for (int k = 0; used.count(cand); ++k) cand = h + "_" + std::to_string(k);
    used.insert(cand);
    names.push_back(cand);
  }
  const std::size_t k = names.size();
  names.insert(names.end(), names_.begin(), names_.end());
  if (names.size() > 64) throw InputError("at most 64 variables are supported");
  return RingPtr(new Ring(std::move(names), MonomialOrder::block(k)));
}

RingPtr Ring::subring(const std::vector<std::size_t>& keep) const {
  std::vector<std::string> names;
  for (auto i : keep) names.push_back(names_.at(i));
  if (names.empty()) throw PreconditionError("subring must keep at least one variable");
  return RingPtr(new Ring(std::move(names), MonomialOrder::degrevlex()));
}

std::string Ring::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < names_.size(); ++i) os << (i ? "," : "") << names_[i];
  return os.str();
}

}  // namespace linkalg
