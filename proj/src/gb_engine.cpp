#include "linkalg/gb_engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>

#include "linkalg/errors.hpp"

namespace linkalg::gb {

namespace {
std::atomic<std::uint64_t> g_default_budget{100000};
// steady_clock ticks; 0 means no deadline
std::atomic<std::int64_t> g_deadline{0};

bool past_deadline() {
  const auto d = g_deadline.load(std::memory_order_relaxed);
  return d != 0 && std::chrono::steady_clock::now().time_since_epoch().count() > d;
}
}  // namespace

std::uint64_t default_spair_budget() { return g_default_budget.load(); }
void set_default_spair_budget(std::uint64_t budget) { g_default_budget.store(budget); }

void set_soft_timeout(std::uint64_t ms) {
  if (ms == 0) {
    g_deadline.store(0);
    return;
  }
  auto t = std::chrono::steady_clock::now() + std::chrono::milliseconds(ms);
  g_deadline.store(t.time_since_epoch().count());
}

int pot_compare(std::uint32_t pa, const Monomial& a, std::uint32_t pb, const Monomial& b, const MonomialOrder& ord) {
  if (pa != pb) return pa < pb ? 1 : -1;
  return ord.compare(a, b);
}

Vec canonical(std::vector<VTerm> terms, const MonomialOrder& ord) {
  std::sort(terms.begin(), terms.end(), [&](const VTerm& x, const VTerm& y) {
    return pot_compare(x.pos, x.mono, y.pos, y.mono, ord) > 0;
  });
  Vec out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().pos == t.pos && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  return out;
}

Vec sub_scaled(const Vec& a, std::size_t a_from, const Vec& b, const Monomial& m, const Rational& c,
               const MonomialOrder& ord) {
  Vec out;
  out.reserve(a.size() - a_from + b.size());
  std::size_t i = a_from, j = 0;
  Monomial bm;
  bool have_bm = false;
  Rational tmp;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_bm) {
      bm = b[j].mono * m;
      have_bm = true;
    }
    int cmp;
    if (i == a.size()) cmp = -1;
    else if (j == b.size()) cmp = 1;
    else cmp = pot_compare(a[i].pos, a[i].mono, b[j].pos, bm, ord);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      tmp = -c * b[j].coeff;
      out.push_back({b[j].pos, std::move(bm), tmp});
      have_bm = false;
      ++j;
    } else {
      tmp = a[i].coeff - c * b[j].coeff;
      if (tmp != 0) out.push_back({a[i].pos, a[i].mono, tmp});
      ++i;
      ++j;
      have_bm = false;
    }
  }
  return out;
}

Vec scaled(const Vec& a, const Monomial& m, const Rational& c) {
  Vec out;
  if (c == 0) return out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back({t.pos, t.mono * m, t.coeff * c});
  return out;
}

Vec make_monic(Vec a) {
  if (a.empty() || a.front().coeff == 1) return a;
  Rational inv = 1 / a.front().coeff;
  for (auto& t : a) t.coeff *= inv;
  return a;
}

namespace {

const Vec* find_reducer(const VTerm& t, const std::vector<Vec>& basis, std::size_t skip = SIZE_MAX) {
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (k == skip) continue;
    const Vec& g = basis[k];
    if (g.empty() || g.front().pos != t.pos) continue;
    if (g.front().mono.divides(t.mono)) return &g;
  }
  return nullptr;
}

Vec normal_form_skip(const Vec& f, const std::vector<Vec>& basis, const MonomialOrder& ord, std::size_t skip) {
  Vec h = f;
  std::size_t start = 0;
  Vec rem;
  while (start < h.size()) {
    const VTerm& t = h[start];
    const Vec* g = find_reducer(t, basis, skip);
    if (!g) {
      rem.push_back(t);
      ++start;
      continue;
    }
    Monomial q = t.mono.quotient(g->front().mono);
    Rational c = t.coeff / g->front().coeff;
    h = sub_scaled(h, start, *g, q, c, ord);
    start = 0;
  }
  return rem;
}

/// Lead-only reduction: stops as soon as the lead is irreducible.
Vec top_reduce(Vec h, const std::vector<Vec>& basis, const MonomialOrder& ord) {
  while (!h.empty()) {
    const Vec* g = find_reducer(h.front(), basis);
    if (!g) break;
    Monomial q = h.front().mono.quotient(g->front().mono);
    Rational c = h.front().coeff / g->front().coeff;
    h = sub_scaled(h, 0, *g, q, c, ord);
  }
  return h;
}

struct Pair {
  std::size_t i, j;
  std::uint32_t pos;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const MonomialOrder& ord, const Options& opts)
      : ord_(ord), opts_(opts), budget_(opts.spair_budget ? opts.spair_budget : default_spair_budget()) {}

  void add(Vec h) {
    h = top_reduce(std::move(h), basis_, ord_);
    if (h.empty()) return;
    h = make_monic(std::move(h));
    basis_.push_back(std::move(h));
    active_.push_back(true);
    update(basis_.size() - 1);
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        int c = pot_compare(pairs_[best].pos, pairs_[best].lcm, pairs_[k].pos, pairs_[k].lcm, ord_);
        if (c > 0) best = k;
      }
      Pair p = std::move(pairs_[best]);
      pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
      if (++spairs_ > budget_) throw ResourceError("S-pair budget exceeded (" + std::to_string(budget_) + ")");
      if (past_deadline()) throw ResourceError("soft timeout reached");
      add(spoly(p));
    }
  }

  std::vector<Vec> reduced() const {
    std::vector<Vec> minimal;
    for (std::size_t k = 0; k < basis_.size(); ++k)
      if (active_[k]) minimal.push_back(basis_[k]);
    for (std::size_t k = 0; k < minimal.size(); ++k) minimal[k] = make_monic(normal_form_skip(minimal[k], minimal, ord_, k));
    std::sort(minimal.begin(), minimal.end(), [&](const Vec& a, const Vec& b) {
      return pot_compare(a.front().pos, a.front().mono, b.front().pos, b.front().mono, ord_) > 0;
    });
    return minimal;
  }

 private:
  Vec spoly(const Pair& p) const {
    const Vec& f = basis_[p.i];
    const Vec& g = basis_[p.j];
    Vec sf = scaled(f, p.lcm.quotient(f.front().mono), 1 / f.front().coeff);
    return sub_scaled(sf, 0, g, p.lcm.quotient(g.front().mono), 1 / g.front().coeff, ord_);
  }

  void update(std::size_t k) {
    const Vec& h = basis_[k];
    const std::uint32_t pos = h.front().pos;
    const Monomial& lh = h.front().mono;

    std::vector<Pair> cand;
    for (std::size_t i = 0; i < k; ++i) {
      if (!active_[i] || basis_[i].front().pos != pos) continue;
      cand.push_back({i, k, pos, basis_[i].front().mono.lcm(lh)});
    }
    auto coprime = [&](const Pair& p) { return opts_.product_criterion && basis_[p.i].front().mono.coprime(lh); };

    std::vector<Pair> kept;
    for (std::size_t c = 0; c < cand.size(); ++c) {
      const Pair& p = cand[c];
      bool keep = coprime(p);
      if (!keep) {
        bool dominated = false;
        for (std::size_t d = c + 1; d < cand.size() && !dominated; ++d)
          if (cand[d].lcm.divides(p.lcm)) dominated = true;
        for (const auto& q : kept)
          if (!dominated && q.lcm.divides(p.lcm)) dominated = true;
        keep = !dominated;
      }
      if (keep) kept.push_back(p);
    }

    std::vector<Pair> next;
    next.reserve(pairs_.size() + kept.size());
    for (auto& p : pairs_) {
      if (p.pos == pos && lh.divides(p.lcm)) {
        Monomial li = basis_[p.i].front().mono.lcm(lh);
        Monomial lj = basis_[p.j].front().mono.lcm(lh);
        if (li != p.lcm && lj != p.lcm) continue;
      }
      next.push_back(std::move(p));
    }
    for (auto& p : kept)
      if (!coprime(p)) next.push_back(std::move(p));
    pairs_ = std::move(next);

    for (std::size_t i = 0; i < k; ++i)
      if (active_[i] && basis_[i].front().pos == pos && lh.divides(basis_[i].front().mono)) active_[i] = false;
  }

  const MonomialOrder& ord_;
  Options opts_;
  std::uint64_t budget_;
  std::uint64_t spairs_ = 0;
  std::vector<Vec> basis_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

std::vector<Vec> reduced_basis(std::vector<Vec> gens, const MonomialOrder& ord, const Options& opts) {
  Buchberger engine(ord, opts);
  // degree-ascending insertion keeps intermediate reductions short
  std::stable_sort(gens.begin(), gens.end(), [&](const Vec& a, const Vec& b) {
    if (a.empty() || b.empty()) return !a.empty() && b.empty();
    return pot_compare(a.front().pos, a.front().mono, b.front().pos, b.front().mono, ord) < 0;
  });
  for (auto& g : gens)
    if (!g.empty()) engine.add(std::move(g));
  engine.run();
  return engine.reduced();
}

Vec normal_form(const Vec& f, const std::vector<Vec>& basis, const MonomialOrder& ord) {
  return normal_form_skip(f, basis, ord, SIZE_MAX);
}

Vec from_polynomial(const Polynomial& f, std::uint32_t pos) {
  Vec v;
  v.reserve(f.size());
  for (const auto& t : f.terms()) v.push_back({pos, t.mono, t.coeff});
  return v;
}

Polynomial to_polynomial(const Vec& v, const RingPtr& ring) {
  std::vector<Term> terms;
  terms.reserve(v.size());
  for (const auto& t : v) {
    if (t.pos != 0) throw PreconditionError("to_polynomial: vector has a nonzero position");
    terms.push_back({t.mono, t.coeff});
  }
  return Polynomial(ring, std::move(terms));
}

}  // namespace linkalg::gb
