#include "linkalg/groebner.hpp"

#include <algorithm>

#include "linkalg/errors.hpp"
#include "linkalg/gb_engine.hpp"

namespace linkalg {

namespace {

std::vector<Polynomial> compute_gb(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  std::vector<gb::Vec> vecs;
  vecs.reserve(gens.size());
  for (const auto& g : gens) vecs.push_back(gb::from_polynomial(g));
  gb::Options opts;
  opts.product_criterion = true;
  auto basis = gb::reduced_basis(std::move(vecs), ring->order(), opts);
  std::vector<Polynomial> out;
  out.reserve(basis.size());
  for (const auto& v : basis) out.push_back(gb::to_polynomial(v, ring));
  return out;
}

void require_same_ring(const Ideal& I, const Ideal& J) {
  if (I.ring() != J.ring() && !I.ring()->same_ring(*J.ring())) throw PreconditionError("ideals live in different rings");
}

void require_same_ring(const Ideal& I, const Polynomial& f) {
  if (I.ring() != f.ring() && !I.ring()->same_ring(*f.ring()))
    throw PreconditionError("polynomial and ideal live in different rings");
}

std::vector<int> shift_map(std::size_t n, int shift) {
  std::vector<int> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<int>(i) + shift;
  return m;
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.ring() != ring_ && !g.ring()->same_ring(*ring_)) {
      if (!g.ring()->same_variables(*ring_)) throw PreconditionError("generator from a different ring");
      g = g.reordered(ring_);
    }
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  auto one = Polynomial::constant(ring, 1);
  return Ideal(std::move(ring), {one});
}

Ideal Ideal::parse(const std::string& comma_separated, const RingPtr& ring) {
  return Ideal(ring, parse_poly_list(comma_separated, ring));
}

Ideal Ideal::from_monomial(const MonomialIdeal& m, const RingPtr& ring) {
  if (m.nvars() != ring->nvars()) throw PreconditionError("monomial ideal does not match ring");
  std::vector<Polynomial> gens;
  for (const auto& g : m.gens()) gens.push_back(Polynomial::monomial(ring, g));
  return Ideal(ring, std::move(gens));
}

const std::vector<Polynomial>& Ideal::gb() const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  if (!cache_->gb) cache_->gb = compute_gb(gens_, ring_);
  return *cache_->gb;
}

bool Ideal::is_unit() const {
  const auto& g = gb();
  return g.size() == 1 && g[0].is_constant();
}

bool Ideal::is_monomial() const {
  const auto& g = gb();
  return std::all_of(g.begin(), g.end(), [](const Polynomial& p) { return p.is_term(); });
}

std::optional<MonomialIdeal> Ideal::as_monomial() const {
  if (!is_monomial()) return std::nullopt;
  std::vector<Monomial> m;
  for (const auto& p : gb()) m.push_back(p.lead_monomial());
  return MonomialIdeal(ring_->nvars(), std::move(m));
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  require_same_ring(*this, f);
  std::vector<gb::Vec> basis;
  for (const auto& g : gb()) basis.push_back(gb::from_polynomial(g));
  Polynomial ff = f.ring() == ring_ ? f : f.reordered(ring_);
  return gb::to_polynomial(gb::normal_form(gb::from_polynomial(ff), basis, ring_->order()), ring_);
}

bool Ideal::contains(const Polynomial& f) const { return f.is_zero() || normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  require_same_ring(*this, other);
  return std::all_of(other.gens().begin(), other.gens().end(), [&](const Polynomial& g) { return contains(g); });
}

bool Ideal::equals(const Ideal& other) const {
  require_same_ring(*this, other);
  return gb() == other.gb();
}

std::vector<std::string> Ideal::gb_strings() const {
  std::vector<std::string> out;
  for (const auto& g : gb()) out.push_back(g.to_string());
  return out;
}

std::string Ideal::to_string() const {
  auto gs = gb_strings();
  std::string s = "(";
  if (gs.empty()) s += "0";
  for (std::size_t i = 0; i < gs.size(); ++i) s += (i ? ", " : "") + gs[i];
  return s + ")";
}

std::vector<Polynomial> reduced_gb(const Ideal& I, const MonomialOrder& ord) {
  if (ord == I.ring()->order()) return I.gb();
  auto ring = I.ring()->with_order(ord);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.reordered(ring));
  return compute_gb(gens, ring);
}

bool ideal_member(const Polynomial& f, const Ideal& I) { return I.contains(f); }

Ideal ideal_sum(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> g = I.gens();
  g.insert(g.end(), J.gens().begin(), J.gens().end());
  return Ideal(I.ring(), std::move(g));
}

Ideal ideal_product(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  std::vector<Polynomial> g;
  for (const auto& a : I.gens())
    for (const auto& b : J.gens()) g.push_back(a * b);
  return Ideal(I.ring(), std::move(g));
}

Ideal map_ideal(const Ideal& I, const RingPtr& target, const std::vector<int>& var_map) {
  std::vector<Polynomial> g;
  for (const auto& p : I.gens()) g.push_back(p.mapped(target, var_map));
  return Ideal(target, std::move(g));
}

namespace {

/// GB elements of `gens` (in `ext`, first `k` variables eliminated) free of those
/// variables, mapped back to `base`.
std::vector<Polynomial> eliminated_part(const std::vector<Polynomial>& gens, const RingPtr& ext, std::size_t k,
                                        const RingPtr& base, const std::vector<int>& back_map) {
  Ideal E(ext, gens);
  std::vector<Polynomial> out;
  for (const auto& g : E.gb()) {
    bool free = std::all_of(g.terms().begin(), g.terms().end(), [&](const Term& t) {
      for (std::size_t i = 0; i < k; ++i)
        if (t.mono[i] != 0) return false;
      return true;
    });
    if (free) out.push_back(g.mapped(base, back_map));
  }
  return out;
}

}  // namespace

Ideal ideal_intersect(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  const auto& ring = I.ring();
  if (I.is_zero() || J.is_zero()) return Ideal::zero(ring);
  auto ext = ring->with_elimination_vars({"t"});
  const std::size_t n = ring->nvars();
  auto up = shift_map(n, 1);
  auto t = Polynomial::variable(ext, 0);
  auto one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : I.gens()) gens.push_back(t * f.mapped(ext, up));
  for (const auto& g : J.gens()) gens.push_back(one_minus_t * g.mapped(ext, up));
  std::vector<int> down(n + 1);
  down[0] = -1;
  for (std::size_t i = 0; i < n; ++i) down[i + 1] = static_cast<int>(i);
  return Ideal(ring, eliminated_part(gens, ext, 1, ring, down));
}

Ideal ideal_quotient(const Ideal& I, const Polynomial& g) {
  require_same_ring(I, g);
  if (g.is_zero()) return Ideal::unit(I.ring());
  if (I.is_zero()) return Ideal::zero(I.ring());
  Ideal inter = ideal_intersect(I, Ideal(I.ring(), {g}));
  std::vector<Polynomial> q;
  for (const auto& h : inter.gens()) q.push_back(exact_divide(h, g));
  return Ideal(I.ring(), std::move(q));
}

Ideal ideal_quotient(const Ideal& I, const Ideal& J) {
  require_same_ring(I, J);
  if (J.is_zero()) return Ideal::unit(I.ring());
  std::optional<Ideal> acc;
  for (const auto& g : J.gens()) {
    Ideal q = ideal_quotient(I, g);
    acc = acc ? ideal_intersect(*acc, q) : q;
    if (acc->equals(I)) break;  // cannot shrink below I
  }
  return *acc;
}

Ideal saturate(const Ideal& I, const Polynomial& f) {
  require_same_ring(I, f);
  if (f.is_zero()) throw PreconditionError("saturation by the zero polynomial");
  const auto& ring = I.ring();
  auto ext = ring->with_elimination_vars({"t"});
  const std::size_t n = ring->nvars();
  auto up = shift_map(n, 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.mapped(ext, up));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, 0) * f.mapped(ext, up));
  std::vector<int> down(n + 1);
  down[0] = -1;
  for (std::size_t i = 0; i < n; ++i) down[i + 1] = static_cast<int>(i);
  return Ideal(ring, eliminated_part(gens, ext, 1, ring, down));
}

bool radical_member(const Polynomial& f, const Ideal& I) {
  require_same_ring(I, f);
  if (f.is_zero()) return true;
  const auto& ring = I.ring();
  auto ext = ring->with_elimination_vars({"t"});
  auto up = shift_map(ring->nvars(), 1);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.mapped(ext, up));
  gens.push_back(Polynomial::constant(ext, 1) - Polynomial::variable(ext, 0) * f.mapped(ext, up));
  return Ideal(ext, std::move(gens)).is_unit();
}

Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars) {
  const auto& ring = I.ring();
  const std::size_t n = ring->nvars();
  std::vector<bool> drop(n, false);
  for (auto v : drop_vars) {
    if (v >= n) throw PreconditionError("eliminate: variable index out of range");
    drop[v] = true;
  }
  std::vector<std::size_t> keep;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i)
    if (drop[i]) names.push_back(ring->name(i));
  const std::size_t k = names.size();
  for (std::size_t i = 0; i < n; ++i)
    if (!drop[i]) {
      keep.push_back(i);
      names.push_back(ring->name(i));
    }
  if (keep.empty()) throw PreconditionError("eliminate: cannot drop every variable");
  auto ext = Ring::make(names, MonomialOrder::block(k));
  std::vector<int> to_ext(n);
  {
    std::size_t d = 0, kk = k;
    for (std::size_t i = 0; i < n; ++i) to_ext[i] = static_cast<int>(drop[i] ? d++ : kk++);
  }
  auto sub = ring->subring(keep);
  std::vector<int> back(n, -1);
  for (std::size_t j = 0; j < keep.size(); ++j) back[k + j] = static_cast<int>(j);
  std::vector<Polynomial> gens;
  for (const auto& g : I.gens()) gens.push_back(g.mapped(ext, to_ext));
  return Ideal(sub, eliminated_part(gens, ext, k, sub, back));
}

bool radical_is_maximal(const Ideal& I) {
  for (std::size_t i = 0; i < I.ring()->nvars(); ++i)
    if (!radical_member(Polynomial::variable(I.ring(), i), I)) return false;
  return true;
}

bool satisfies_spair_criterion(const std::vector<Polynomial>& basis) {
  if (basis.empty()) return true;
  const auto& ring = basis.front().ring();
  std::vector<gb::Vec> vecs;
  for (const auto& g : basis) vecs.push_back(gb::from_polynomial(g));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      const auto& f = basis[i];
      const auto& g = basis[j];
      Monomial l = f.lead_monomial().lcm(g.lead_monomial());
      Polynomial s = f.times_term(l.quotient(f.lead_monomial()), 1 / f.lead_coeff()) -
                     g.times_term(l.quotient(g.lead_monomial()), 1 / g.lead_coeff());
      if (!gb::normal_form(gb::from_polynomial(s), vecs, ring->order()).empty()) return false;
    }
  return true;
}

}  // namespace linkalg
