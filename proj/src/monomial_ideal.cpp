#include "linkalg/monomial_ideal.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "linkalg/errors.hpp"

namespace linkalg {

MonomialPrime MonomialPrime::from_indices(std::size_t nvars, const std::vector<std::size_t>& idx) {
  std::uint64_t mask = 0;
  for (auto i : idx) {
    if (i >= nvars) throw PreconditionError("prime variable index out of range");
    mask |= std::uint64_t{1} << i;
  }
  return MonomialPrime(nvars, mask);
}

MonomialPrime MonomialPrime::maximal(std::size_t nvars) {
  std::uint64_t mask = nvars >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nvars) - 1);
  return MonomialPrime(nvars, mask);
}

std::size_t MonomialPrime::height() const { return static_cast<std::size_t>(std::popcount(mask_)); }

std::vector<std::size_t> MonomialPrime::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < nvars_; ++i)
    if (has(i)) out.push_back(i);
  return out;
}

std::vector<std::string> MonomialPrime::var_names(const Ring& ring) const {
  std::vector<std::string> out;
  for (auto i : indices()) out.push_back(ring.name(i));
  return out;
}

std::string MonomialPrime::to_string(const Ring& ring) const {
  std::string s = "(";
  auto names = var_names(ring);
  if (names.empty()) s += "0";
  for (std::size_t i = 0; i < names.size(); ++i) s += (i ? "," : "") + names[i];
  return s + ")";
}

bool operator<(const MonomialPrime& a, const MonomialPrime& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.indices() < b.indices();
}

PrimeSet::PrimeSet(std::vector<MonomialPrime> primes) : primes_(std::move(primes)) {
  std::sort(primes_.begin(), primes_.end());
  primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
}

bool PrimeSet::contains(const MonomialPrime& p) const {
  return std::binary_search(primes_.begin(), primes_.end(), p);
}

bool PrimeSet::subset_of(const PrimeSet& other) const {
  return std::all_of(primes_.begin(), primes_.end(), [&](const MonomialPrime& p) { return other.contains(p); });
}

PrimeSet set_union(const PrimeSet& a, const PrimeSet& b) {
  std::vector<MonomialPrime> v = a.primes_;
  v.insert(v.end(), b.primes_.begin(), b.primes_.end());
  return PrimeSet(std::move(v));
}

PrimeSet set_intersection(const PrimeSet& a, const PrimeSet& b) {
  std::vector<MonomialPrime> v;
  for (const auto& p : a.primes_)
    if (b.contains(p)) v.push_back(p);
  return PrimeSet(std::move(v));
}

PrimeSet set_difference(const PrimeSet& a, const PrimeSet& b) {
  std::vector<MonomialPrime> v;
  for (const auto& p : a.primes_)
    if (!b.contains(p)) v.push_back(p);
  return PrimeSet(std::move(v));
}

std::string PrimeSet::to_string(const Ring& ring) const {
  std::string s = "{";
  for (std::size_t i = 0; i < primes_.size(); ++i) s += (i ? ", " : "") + primes_[i].to_string(ring);
  return s + "}";
}

MonomialIdeal minimalize(std::size_t nvars, const std::vector<Monomial>& gens) {
  return MonomialIdeal(nvars, gens);
}

MonomialIdeal::MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens) : nvars_(nvars) {
  for (const auto& g : gens)
    if (g.size() != nvars) throw PreconditionError("monomial length does not match ideal");
  // sorting by degree first lets a single forward pass keep only minimal elements
  std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  for (auto& g : gens) {
    bool redundant = std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& h) { return h.divides(g); });
    if (!redundant) gens_.push_back(std::move(g));
  }
  std::sort(gens_.begin(), gens_.end());
}

MonomialIdeal MonomialIdeal::of_prime(const MonomialPrime& p) {
  std::vector<Monomial> gens;
  for (auto i : p.indices()) gens.push_back(Monomial::variable(p.nvars(), i));
  return MonomialIdeal(p.nvars(), std::move(gens));
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::is_irreducible_form() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_pure_power(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const Monomial& g) { return contains(g); });
}

std::vector<std::string> MonomialIdeal::gen_strings(const Ring& ring) const {
  std::vector<std::string> out;
  for (const auto& g : gens_) {
    std::string s;
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += ring.name(i);
      if (g[i] > 1) s += "^" + std::to_string(g[i]);
    }
    out.push_back(s.empty() ? "1" : s);
  }
  return out;
}

std::string MonomialIdeal::to_string(const Ring& ring) const {
  auto gs = gen_strings(ring);
  std::string s = "(";
  if (gs.empty()) s += "0";
  for (std::size_t i = 0; i < gs.size(); ++i) s += (i ? ", " : "") + gs[i];
  return s + ")";
}

namespace {

void check_same(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.nvars() != b.nvars()) throw PreconditionError("monomial ideals live in different rings");
}

}  // namespace

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  std::vector<Monomial> g = a.gens();
  g.insert(g.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  std::vector<Monomial> g;
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) g.push_back(u * v);
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  std::vector<Monomial> g;
  for (const auto& u : a.gens())
    for (const auto& v : b.gens()) g.push_back(u.lcm(v));
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_colon(const MonomialIdeal& a, const Monomial& m) {
  std::vector<Monomial> g;
  for (const auto& u : a.gens()) g.push_back(u.quotient(u.gcd(m)));
  return MonomialIdeal(a.nvars(), std::move(g));
}

MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  check_same(a, b);
  MonomialIdeal acc = MonomialIdeal::unit(a.nvars());
  for (const auto& m : b.gens()) acc = mono_intersect(acc, mono_colon(a, m));
  return acc;
}

MonomialIdeal mono_radical(const MonomialIdeal& a) {
  std::vector<Monomial> g;
  for (const auto& u : a.gens()) {
    Monomial s(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) s[i] = u[i] ? 1 : 0;
    g.push_back(std::move(s));
  }
  return MonomialIdeal(a.nvars(), std::move(g));
}

namespace {

using Memo = std::map<std::vector<Monomial>, std::vector<MonomialIdeal>>;

void split(const MonomialIdeal& a, Memo& memo, std::vector<MonomialIdeal>& out) {
  if (auto it = memo.find(a.gens()); it != memo.end()) {
    out.insert(out.end(), it->second.begin(), it->second.end());
    return;
  }
  std::vector<MonomialIdeal> local;
  auto pivot = std::find_if(a.gens().begin(), a.gens().end(), [](const Monomial& m) { return !m.is_pure_power(); });
  if (pivot == a.gens().end()) {
    local.push_back(a);
  } else {
    const Monomial& m = *pivot;
    std::size_t var = 0;
    while (m[var] == 0) ++var;
    Monomial u = Monomial::variable(m.size(), var, m[var]);
    Monomial v = m.quotient(u);
    split(mono_sum(a, MonomialIdeal(a.nvars(), {u})), memo, local);
    split(mono_sum(a, MonomialIdeal(a.nvars(), {v})), memo, local);
  }
  memo.emplace(a.gens(), local);
  out.insert(out.end(), local.begin(), local.end());
}

}  // namespace

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& a) {
  if (a.is_zero()) throw PreconditionError("irreducible decomposition of the zero ideal");
  if (a.is_unit()) throw PreconditionError("irreducible decomposition of the unit ideal");
  Memo memo;
  std::vector<MonomialIdeal> comps;
  split(a, memo, comps);
  std::sort(comps.begin(), comps.end());
  comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
  // a component containing another one is redundant in the intersection
  std::vector<MonomialIdeal> irredundant;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
      if (i != j && comps[i].contains(comps[j])) redundant = true;
    if (!redundant) irredundant.push_back(comps[i]);
  }
  return irredundant;
}

PrimeSet associated_primes(const MonomialIdeal& a) {
  if (a.is_unit()) throw PreconditionError("associated primes of the unit ideal");
  if (a.is_zero()) return PrimeSet({MonomialPrime(a.nvars(), 0)});
  std::vector<MonomialPrime> ps;
  for (const auto& c : irreducible_decomposition(a)) {
    std::uint64_t mask = 0;
    for (const auto& g : c.gens()) mask |= g.support();
    ps.emplace_back(a.nvars(), mask);
  }
  return PrimeSet(std::move(ps));
}

PrimeSet minimal_primes(const MonomialIdeal& a) {
  PrimeSet ass = associated_primes(a);
  std::vector<MonomialPrime> mins;
  for (const auto& p : ass) {
    bool minimal = std::none_of(ass.begin(), ass.end(), [&](const MonomialPrime& q) { return q != p && p.contains(q); });
    if (minimal) mins.push_back(p);
  }
  return PrimeSet(std::move(mins));
}

PrimeData min_assh_dim(const MonomialIdeal& a) {
  PrimeData d;
  d.ass = associated_primes(a);
  d.min_primes = minimal_primes(a);
  std::size_t min_h = a.nvars();
  for (const auto& p : d.min_primes) min_h = std::min(min_h, p.height());
  d.height = static_cast<int>(min_h);
  d.dim = static_cast<int>(a.nvars() - min_h);
  std::vector<MonomialPrime> top;
  for (const auto& p : d.min_primes)
    if (p.height() == min_h) top.push_back(p);
  d.assh = PrimeSet(std::move(top));
  return d;
}

int krull_dim(const MonomialIdeal& a) { return min_assh_dim(a).dim; }
int height(const MonomialIdeal& a) { return min_assh_dim(a).height; }

Polarization polarize(const MonomialIdeal& a, const Ring& ring) {
  const std::size_t n = a.nvars();
  if (ring.nvars() != n) throw PreconditionError("polarize: ring does not match ideal");
  std::vector<Exponent> maxexp(n, 0);
  for (const auto& g : a.gens())
    for (std::size_t i = 0; i < n; ++i) maxexp[i] = std::max(maxexp[i], g[i]);

  std::set<std::string> used(ring.names().begin(), ring.names().end());
  std::vector<std::string> names;
  Polarization out;
  out.copies.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (maxexp[i] <= 1) {
      out.copies[i].push_back(names.size());
      names.push_back(ring.name(i));
      continue;
    }
    used.erase(ring.name(i));
    for (Exponent k = 1; k <= maxexp[i]; ++k) {
      std::string cand = ring.name(i) + "_" + std::to_string(k);
      while (used.count(cand)) cand += "p";
      used.insert(cand);
      out.copies[i].push_back(names.size());
      names.push_back(cand);
    }
    out.added += maxexp[i] - 1;
  }
  out.ring = Ring::make(names);
  std::vector<Monomial> gens;
  for (const auto& g : a.gens()) {
    Monomial m(names.size());
    for (std::size_t i = 0; i < n; ++i)
      for (Exponent k = 0; k < g[i]; ++k) m[out.copies[i][k]] = 1;
    gens.push_back(std::move(m));
  }
  out.ideal = MonomialIdeal(names.size(), std::move(gens));
  return out;
}

QuotientImage image_mod_prime(const MonomialIdeal& a, const MonomialPrime& p) {
  QuotientImage img;
  for (std::size_t i = 0; i < a.nvars(); ++i)
    if (!p.has(i)) img.kept_vars.push_back(i);
  std::vector<Monomial> gens;
  for (const auto& g : a.gens()) {
    if (g.support() & p.mask()) continue;
    Monomial m(img.kept_vars.size());
    for (std::size_t k = 0; k < img.kept_vars.size(); ++k) m[k] = g[img.kept_vars[k]];
    gens.push_back(std::move(m));
  }
  img.ideal = MonomialIdeal(img.kept_vars.size(), std::move(gens));
  return img;
}

}  // namespace linkalg
