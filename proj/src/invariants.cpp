#include "linkalg/invariants.hpp"

#include <algorithm>

#include "linkalg/errors.hpp"
#include "linkalg/stanley_reisner.hpp"

namespace linkalg {

namespace {

template <class Pred>
PrimeSet filter(const PrimeSet& s, Pred pred) {
  std::vector<MonomialPrime> out;
  for (const auto& p : s)
    if (pred(p)) out.push_back(p);
  return PrimeSet(std::move(out));
}

void check_vars(const MonomialIdeal& a, const CyclicModule& M) {
  if (a.nvars() != M.ring()->nvars()) throw PreconditionError("ideal and module have different variable counts");
}

}  // namespace

PrimeSet ass(const CyclicModule& M) { return associated_primes(M.monomial()); }

PrimeSet assh(const CyclicModule& M) { return min_assh_dim(M.monomial()).assh; }

bool reaches_maximal(const MonomialIdeal& a, const MonomialPrime& p) {
  auto r = mono_radical(mono_sum(a, MonomialIdeal::of_prime(p)));
  return r == MonomialIdeal::maximal(a.nvars());
}

bool reaches_maximal(const Ideal& a, const MonomialPrime& p) {
  auto P = Ideal::from_monomial(MonomialIdeal::of_prime(p), a.ring());
  return radical_is_maximal(ideal_sum(a, P));
}

PrimeSet att_top_H(const MonomialIdeal& a, const CyclicModule& M) {
  check_vars(a, M);
  if (a.is_unit()) throw PreconditionError("a must be proper");
  return filter(assh(M), [&](const MonomialPrime& p) { return reaches_maximal(a, p); });
}

PrimeSet att_top_H(const Ideal& a, const CyclicModule& M) {
  if (auto m = a.as_monomial()) return att_top_H(*m, M);
  if (a.is_unit()) throw PreconditionError("a must be proper");
  return filter(assh(M), [&](const MonomialPrime& p) { return reaches_maximal(a, p); });
}

PrimeSet att_top_H_via_cd(const MonomialIdeal& a, const CyclicModule& M) {
  check_vars(a, M);
  if (!a.is_squarefree()) throw PreconditionError("cd path needs a squarefree ideal; radicalize first");
  if (a.is_unit()) throw PreconditionError("a must be proper");
  const int d = M.dim();
  return filter(ass(M), [&](const MonomialPrime& p) {
    auto q = cd_on_quotient(a, p);
    return !q.unit_image && q.cd == d;
  });
}

PrimeSet ass_F0(const MonomialIdeal& a, const CyclicModule& M) {
  check_vars(a, M);
  return filter(ass(M), [&](const MonomialPrime& p) { return reaches_maximal(a, p); });
}

int ht_M(const MonomialPrime& p, const CyclicModule& M) {
  int best = -1;
  for (const auto& q : minimal_primes(M.monomial()))
    if (p.contains(q)) best = std::max(best, static_cast<int>(p.height() - q.height()));
  if (best < 0) throw PreconditionError("prime is outside Supp M");
  return best;
}

bool is_equidimensional(const CyclicModule& M) {
  auto mins = minimal_primes(M.monomial());
  return std::all_of(mins.begin(), mins.end(), [&](const MonomialPrime& p) { return p.height() == mins.begin()->height(); });
}

}  // namespace linkalg
