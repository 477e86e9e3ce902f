#include "linkalg/theorem_lab.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <thread>

#include "draw.hpp"
#include "linkalg/errors.hpp"
#include "linkalg/stanley_reisner.hpp"

namespace linkalg {

using detail::Draw;

namespace {

/// Conjunction of named sub-claims, recorded as witnesses["parts"].
struct Parts {
  Json j = Json::object();
  bool ok = true;
  void set(const std::string& name, bool value) {
    j[name] = value;
    ok = ok && value;
  }
};

Verdict start(const std::string& claim) {
  Verdict v;
  v.claim = claim;
  v.notes.push_back(kGradedConvention);
  return v;
}

Verdict& mark(Verdict& v, Status s, const std::string& note) {
  v.status = s;
  v.notes.push_back(note);
  return v;
}

void finish(Verdict& v, const Parts& parts, const Json& instance) {
  v.witnesses["parts"] = parts.j;
  v.settle(parts.ok, instance);
}

std::optional<MonomialIdeal> plus_J(const Ideal& x, const CyclicModule& M) {
  return ideal_sum(x, M.J()).as_monomial();
}

bool is_zero_mod_J(const Ideal& I, const CyclicModule& M) { return M.J().contains(I); }

Json mono_json(const MonomialIdeal& a, const Ring& R) {
  if (a.is_zero()) return Json::array();
  return a.gen_strings(R);
}

RingPtr lab_ring(std::size_t n) {
  if (n == 0 || n > 16) throw PreconditionError("vars must be between 1 and 16");
  std::vector<std::string> names;
  const char* small = "xyzw";
  for (std::size_t i = 0; i < n; ++i)
    names.push_back(n <= 4 ? std::string(1, small[i]) : "x" + std::to_string(i + 1));
  return Ring::make(names);
}

MonomialPrime random_prime(Draw& d, std::size_t n, std::size_t h) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  for (std::size_t i = 0; i < h; ++i) std::swap(idx[i], idx[i + d.below(n - i)]);
  idx.resize(h);
  return MonomialPrime::from_indices(n, idx);
}

MonomialIdeal power(const MonomialIdeal& a, unsigned e) {
  MonomialIdeal out = a;
  for (unsigned k = 1; k < e; ++k) out = mono_product(out, a);
  return out;
}

/// Generators of degree 2..maxdeg, so M never kills a variable outright.
MonomialIdeal random_J(Draw& d, std::size_t n, unsigned maxdeg) {
  std::vector<Monomial> gens;
  const std::size_t k = d.between(1, 3);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(d.monomial(n, static_cast<unsigned>(d.between(2, std::max(2u, maxdeg)))));
  return minimalize(n, gens);
}

MonomialIdeal random_ideal(Draw& d, std::size_t n, unsigned maxdeg) {
  std::vector<Monomial> gens;
  const std::size_t k = d.between(1, 2);
  for (std::size_t i = 0; i < k; ++i) gens.push_back(d.monomial(n, static_cast<unsigned>(d.between(1, std::max(1u, maxdeg)))));
  return minimalize(n, gens);
}

/// Intersection of 2..3 monomial primes of height < n; equal heights when asked.
MonomialIdeal random_reduced(Draw& d, std::size_t n, bool equal_height) {
  const std::size_t top = std::max<std::size_t>(1, n - 1);
  const std::size_t h0 = d.between(1, top);
  const std::size_t k = d.between(2, 3);
  MonomialIdeal out;
  for (std::size_t i = 0; i < k; ++i) {
    auto p = MonomialIdeal::of_prime(random_prime(d, n, equal_height ? h0 : d.between(1, top)));
    out = i == 0 ? p : mono_intersect(out, p);
  }
  return out;
}

PrimeSet primes_of_height(const PrimeSet& s, std::size_t h, bool equal) {
  std::vector<MonomialPrime> keep;
  for (const auto& p : s)
    if ((p.height() == h) == equal) keep.push_back(p);
  return PrimeSet(keep);
}

MonomialIdeal intersect_primes(const PrimeSet& s, std::size_t n) {
  if (s.empty()) return MonomialIdeal::unit(n);
  MonomialIdeal out;
  bool first = true;
  for (const auto& p : s) {
    auto q = MonomialIdeal::of_prime(p);
    out = first ? q : mono_intersect(out, q);
    first = false;
  }
  return out;
}

}  // namespace

Verdict check_l1_i(const LinkageCertificate& cert) {
  Verdict v = start("l1_i");
  if (!cert.linked) return mark(v, Status::skipped, "certificate is not linked");
  const auto& M = cert.M;
  auto K = plus_J(cert.I, M), A = plus_J(cert.a, M);
  if (!M.is_monomial() || !K || !A) return mark(v, Status::not_checkable, "needs monomial J, I + J and a + J");
  const auto& R = *M.ring();
  auto ass_I = associated_primes(*K);
  if (!(ass_I == minimal_primes(*K))) return mark(v, Status::skipped, "pre: Ass M/IM has embedded primes");
  const int grade = koszul_grade(cert.a, M);
  v.witnesses["grade_a"] = grade;
  v.witnesses["grade_I"] = cert.grade_I;
  Parts parts;
  Json heights = Json::object();
  for (const auto& p : associated_primes(*A)) {
    const int h = ht_M(p, M);
    heights[p.to_string(R)] = h;
    parts.set("ht " + p.to_string(R), h == grade);
  }
  v.witnesses["ht_M"] = heights;
  finish(v, parts, cert.instance_json());
  return v;
}

Verdict check_l1_ii(const CyclicModule& R_prime, const Ideal& a, const Ideal& b) {
  Verdict v = start("l1_ii");
  const auto& R = *R_prime.ring();
  Json instance{{"ring", R.names()}, {"J", ideal_json(R_prime.J())}, {"a", ideal_json(a)}, {"b", ideal_json(b)}};
  if (R_prime.is_free()) return mark(v, Status::skipped, "pre: R' = R has no 0-links");
  auto A = plus_J(a, R_prime), B = plus_J(b, R_prime);
  if (!R_prime.is_monomial() || !A || !B) return mark(v, Status::not_checkable, "needs monomial J, a + J and b + J");
  const auto J = R_prime.monomial();
  if (!(associated_primes(J) == minimal_primes(J))) return mark(v, Status::skipped, "pre: Ass R' has embedded primes");
  auto cert = check_linked(a, b, Ideal::zero(R_prime.ring()), R_prime);
  if (!cert.linked) return mark(v, Status::skipped, "pre: a and b are not linked by 0");
  Parts parts;
  auto one_side = [&](const Ideal& x, const MonomialIdeal& X, const MonomialIdeal& Y, const std::string& tag) {
    FPModule E = ext1_selfdual(x, R_prime.J());
    PrimeSet lhs = E.is_zero() ? PrimeSet() : ass_monomial(E);
    PrimeSet rhs = set_intersection(associated_primes(Y), associated_primes(X));
    v.witnesses["ass_ext_" + tag] = primes_json(lhs, R);
    v.witnesses["expected_" + tag] = primes_json(rhs, R);
    parts.set(tag, lhs == rhs);
  };
  one_side(a, *A, *B, "a");
  one_side(b, *B, *A, "b");
  finish(v, parts, instance);
  return v;
}

Verdict check_t2_decomposition(const MonomialIdeal& a, const Ring& ring) {
  Verdict v = start("t2_decomposition");
  const std::size_t n = a.nvars();
  Json instance{{"ring", ring.names()}, {"a", mono_json(a, ring)}};
  if (a.is_zero() || a.is_unit()) return mark(v, Status::skipped, "pre: a must be proper and nonzero");
  auto mins = minimal_primes(a);
  const std::size_t h = static_cast<std::size_t>(height(a));
  PrimeSet low = primes_of_height(mins, h, true), rest = primes_of_height(mins, h, false);
  if (rest.empty()) return mark(v, Status::skipped, "pre: minimal primes of one height, b would be the unit ideal");
  const std::size_t t = h + 1;
  MonomialIdeal a1 = intersect_primes(low, n), b = intersect_primes(rest, n);
  v.witnesses["t"] = t;
  v.witnesses["radical"] = mono_radical(a) == a;
  v.witnesses["a_prime"] = mono_json(a1, ring);
  v.witnesses["b"] = mono_json(b, ring);
  Parts parts;
  parts.set("ass_a_prime", associated_primes(a1) == low);
  parts.set("radical_is_a_prime_cap_b", mono_radical(a) == mono_intersect(a1, b));
  parts.set("ht_b_exceeds_t_minus_1", static_cast<std::size_t>(height(b)) > t - 1);
  parts.set("ht_sum_exceeds_t", static_cast<std::size_t>(height(mono_sum(a1, b))) > t);
  finish(v, parts, instance);
  return v;
}

Verdict check_p1(const LinkageCertificate& cert) {
  Verdict v = start("p1");
  if (!cert.linked) return mark(v, Status::skipped, "certificate is not linked");
  if (!cert.M.is_free()) return mark(v, Status::skipped, "pre: M = R");
  if (cert.grade_I != 1) return mark(v, Status::skipped, "pre: grade 1");
  const auto& R = *cert.M.ring();
  Parts parts;
  for (const auto& [x, tag] : {std::pair{&cert.a, "a"}, std::pair{&cert.b, "b"}}) {
    auto X = x->as_monomial();
    if (!X) return mark(v, Status::not_checkable, "needs monomial a and b");
    const std::string t(tag);
    auto mins = minimal_primes(*X);
    parts.set(t + "_min_primes_height_1",
              std::all_of(mins.begin(), mins.end(), [](const MonomialPrime& p) { return p.height() == 1; }));
    auto rad = mono_radical(*X);
    v.witnesses["radical_" + t] = rad.gen_strings(R);
    parts.set(t + "_radical_principal", rad.gens().size() == 1);
    parts.set(t + "_cd_at_most_1", cd_squarefree(rad) <= 1);
    if (R.nvars() == 2) parts.set(t + "_H2_vanishes", att_top_H(*X, cert.M).empty());
  }
  finish(v, parts, cert.instance_json());
  return v;
}

Verdict check_l08(const MonomialIdeal& a, const MonomialIdeal& b, const CyclicModule& M) {
  Verdict v = start("l08");
  const auto& R = *M.ring();
  if (!M.is_monomial()) return mark(v, Status::not_checkable, "needs monomial J");
  const auto J = M.monomial();
  Json instance{{"ring", R.names()}, {"J", mono_json(J, R)}, {"a", mono_json(a, R)}, {"b", mono_json(b, R)}};
  if (mono_sum(a, J).is_unit() || mono_sum(b, J).is_unit()) return mark(v, Status::skipped, "pre: aM and bM proper");
  Parts parts;
  auto att_a = att_top_H(a, M), att_b = att_top_H(b, M);
  auto f0_a = ass_F0(a, M), f0_b = ass_F0(b, M);
  const auto cap = mono_intersect(a, b);
  parts.set("i", att_top_H(cap, M) == set_intersection(att_a, att_b));
  parts.set("iv", ass_F0(cap, M) == set_intersection(f0_a, f0_b));
  const bool ab_in_J = J.contains(mono_product(a, b));
  v.witnesses["ab_in_J"] = ab_in_J;
  if (ab_in_J) {
    const auto sum = mono_sum(a, b);
    parts.set("v", att_top_H(sum, M) == set_union(att_a, att_b));
    parts.set("vi", ass_F0(sum, M) == set_union(f0_a, f0_b));
  }
  v.witnesses["att_a"] = primes_json(att_a, R);
  v.witnesses["att_b"] = primes_json(att_b, R);
  finish(v, parts, instance);
  return v;
}

MaximalSequence find_maximal_sequence(const CyclicModule& M, std::uint64_t seed, std::size_t budget) {
  MaximalSequence out;
  const auto& R = M.ring();
  const std::size_t n = R->nvars();
  Draw d(seed);
  const Ideal m = Ideal::from_monomial(MonomialIdeal::maximal(n), R);
  Ideal running = M.J();
  std::size_t tries = 0;
  auto candidate = [&](std::size_t t) {
    if (t < n) return Polynomial::variable(R, t);
    if (t == n) {
      Polynomial f(R);
      for (std::size_t i = 0; i < n; ++i) f = f + Polynomial::variable(R, i);
      return f;
    }
    return d.below(3) == 0 ? d.element(R, 2) : d.linear_form(R);
  };
  for (;;) {
    if (!ideal_quotient(running, m).equals(running)) {
      out.found = true;
      break;
    }
    bool extended = false;
    while (!extended && tries < budget) {
      Polynomial f = candidate(tries++);
      if (running.contains(f) || !ideal_quotient(running, f).equals(running)) continue;
      Ideal next = ideal_sum(running, Ideal(R, {f}));
      if (next.is_unit()) continue;
      out.seq.push_back(f);
      running = next;
      extended = true;
    }
    if (!extended) break;
  }
  if (out.found) {
    if (auto mono = running.as_monomial())
      out.ass_is_min = associated_primes(*mono) == minimal_primes(*mono);
    else
      out.ass_is_min = radical_is_maximal(running);  // m is associated, so Ass = Min iff √ = m
  }
  return out;
}

Verdict check_t6(const CyclicModule& M, std::uint64_t seed, unsigned maxdeg) {
  Verdict v = start("t6");
  const auto& R = M.ring();
  Json instance{{"ring", R->names()}, {"J", ideal_json(M.J())}, {"seed", seed}};
  if (!M.is_monomial()) return mark(v, Status::not_checkable, "needs monomial J");
  const int d = M.dim(), depth = M.depth();
  const bool cm = depth == d;
  v.witnesses["dim"] = d;
  v.witnesses["depth"] = depth;
  v.witnesses["cm"] = cm;
  Parts parts;

  // (ii) => (i): intersecting top attached primes force CM
  LinkParams lp;
  lp.count = 3;
  lp.maxdeg = maxdeg;
  lp.seed = detail::mix_seed(seed);
  std::size_t intersecting = 0, pairs = 0;
  for (const auto& c : random_linked_pairs(M, lp).certificates) {
    ++pairs;
    if (!set_intersection(att_top_H(c.a, M), att_top_H(c.b, M)).empty()) {
      ++intersecting;
      if (!cm) v.witnesses["offending_pair"] = c.instance_json();
    }
  }
  v.witnesses["pairs"] = pairs;
  v.witnesses["intersecting_pairs"] = intersecting;
  parts.set("A_intersecting_implies_cm", cm || intersecting == 0);

  auto ms = find_maximal_sequence(M, detail::mix_seed(seed + 1));
  v.witnesses["maximal_sequence_found"] = ms.found;
  bool inconclusive = false;
  if (ms.found) {
    Json seq = Json::array();
    for (const auto& f : ms.seq) seq.push_back(f.to_string());
    v.witnesses["maximal_sequence"] = seq;
    v.witnesses["criterion"] = ms.ass_is_min;
    parts.set("maximal_length_is_depth", static_cast<int>(ms.seq.size()) == depth);
    parts.set("C_criterion_matches_cm", ms.ass_is_min == cm);
  } else {
    inconclusive = true;
  }

  if (cm && ms.found) {
    // witness pair a = m, b = (x^2 + J) : m; squaring keeps x maximal and avoids x + J = m
    const Ideal m = Ideal::from_monomial(MonomialIdeal::maximal(R->nvars()), R);
    std::vector<Polynomial> squares;
    for (const auto& f : ms.seq) squares.push_back(f * f);
    const Ideal I(R, squares);
    if (ideal_sum(I, M.J()).equals(m)) {
      v.notes.push_back("M is the residue field: every candidate link has bM = M");
    } else {
      try {
        auto lo = link_of(m, I, M);
        parts.set("B_linked", lo.certificate.linked);
        parts.set("B_att_intersect", !set_intersection(att_top_H(m, M), att_top_H(lo.b, M)).empty());
        parts.set("B_iv", ms.ass_is_min);
        parts.set("B_v", ass_F0(MonomialIdeal::maximal(R->nvars()), M) == ass(M));
        v.witnesses["witness_pair"] = lo.certificate.instance_json();
      } catch (const PreconditionError& e) {
        parts.set("B_linked", false);
        v.notes.push_back(e.what());
      }
    }
  }
  finish(v, parts, instance);
  if (inconclusive && v.holds()) mark(v, Status::inconclusive, "no maximal regular sequence within the search budget");
  return v;
}

Verdict check_r1(const LinkageCertificate& cert) {
  Verdict v = start("r1");
  if (!cert.linked) return mark(v, Status::skipped, "certificate is not linked");
  const auto& M = cert.M;
  if (!is_zero_mod_J(cert.I, M)) return mark(v, Status::skipped, "pre: I = 0");
  if (!cert.geometric) return mark(v, Status::skipped, "pre: geometric link");
  if (!M.is_monomial()) return mark(v, Status::not_checkable, "needs monomial J");
  if (!is_equidimensional(M)) return mark(v, Status::skipped, "pre: M equidimensional");
  auto A = plus_J(cert.a, M), B = plus_J(cert.b, M);
  if (!A || !B) return mark(v, Status::not_checkable, "needs monomial a + J and b + J");
  Parts parts;
  for (const auto& [X, tag] : {std::pair{&*A, "a"}, std::pair{&*B, "b"}}) {
    auto mins = minimal_primes(*X);
    const auto h = mins.begin()->height();
    const std::string t(tag);
    parts.set(t + "_equidimensional",
              std::all_of(mins.begin(), mins.end(), [&](const MonomialPrime& p) { return p.height() == h; }));
    parts.set(t + "_dim_is_dim_M", krull_dim(*X) == M.dim());
  }
  finish(v, parts, cert.instance_json());
  return v;
}

Verdict check_l15(const LinkageCertificate& cert) {
  Verdict v = start("l15");
  if (!cert.linked) return mark(v, Status::skipped, "certificate is not linked");
  const auto& M = cert.M;
  if (!is_zero_mod_J(cert.I, M)) return mark(v, Status::skipped, "pre: I = 0");
  if (!M.is_monomial()) return mark(v, Status::not_checkable, "needs monomial J");
  const int n = M.dim();
  if (n == 0) return mark(v, Status::skipped, "pre: dim M > 0");
  auto A = plus_J(cert.a, M), B = plus_J(cert.b, M);
  if (!A || !B) return mark(v, Status::not_checkable, "needs monomial a + J and b + J");
  const auto& R = *M.ring();
  const auto pa = min_assh_dim(*A), pb = min_assh_dim(*B);
  const auto att_a = att_top_H(*A, M), att_b = att_top_H(*B, M);
  const auto att_m = att_top_H(MonomialIdeal::maximal(R.nvars()), M);
  const auto assh_M = assh(M);
  v.witnesses["att_a"] = primes_json(att_a, R);
  v.witnesses["att_b"] = primes_json(att_b, R);
  v.witnesses["assh_a"] = primes_json(pa.assh, R);
  v.witnesses["assh_b"] = primes_json(pb.assh, R);
  v.witnesses["geometric"] = cert.geometric;
  Parts parts;
  parts.set("i_a", att_a.subset_of(pb.assh));
  parts.set("i_b", att_b.subset_of(pa.assh));
  if (pa.dim != pb.dim) parts.set("ii_one_vanishes", att_a.empty() || att_b.empty());
  if (ass_F0(*A, M) == assh_M) parts.set("ii_particular_a", att_a == att_m && att_b.empty());
  if (ass_F0(*B, M) == assh_M) parts.set("ii_particular_b", att_b == att_m && att_a.empty());
  if (cert.geometric && is_equidimensional(M))
    parts.set("iii_equivalence", (att_a == pb.assh) == (att_b == pa.assh));
  finish(v, parts, cert.instance_json());
  return v;
}

Verdict check_t26(const LinkageCertificate& cert) {
  Verdict v = start("t26");
  if (!cert.linked) return mark(v, Status::skipped, "certificate is not linked");
  auto s = support_identity(cert);
  auto m = minass_in_ass_I(cert);
  Parts parts;
  parts.set("support_identity", s.holds());
  if (m.status != Status::not_checkable) parts.set("minass_in_ass_I", m.holds());
  v.witnesses["support_identity"] = s.witnesses;
  v.witnesses["minass_in_ass_I"] = m.witnesses;
  finish(v, parts, cert.instance_json());
  return v;
}

const std::vector<std::string>& verify_targets() {
  static const std::vector<std::string> t{"l1", "l1ii", "t2", "p1", "l08", "t6", "r1", "l15", "t26"};
  return t;
}

namespace {

std::optional<LinkageCertificate> sample_link(const CyclicModule& M, unsigned maxdeg, std::uint64_t seed, int max_length,
                                              bool want_geometric) {
  LinkParams p;
  p.count = want_geometric ? 4 : 1;
  p.maxdeg = maxdeg;
  p.seed = seed;
  p.max_attempts = 80;
  p.max_length = max_length;
  auto s = random_linked_pairs(M, p);
  for (const auto& c : s.certificates)
    if (!want_geometric || c.geometric) return c;
  if (!s.certificates.empty()) return s.certificates.front();
  return std::nullopt;
}

Verdict run_instance(const std::string& target, const InstanceParams& P, std::uint64_t seed) {
  const auto R = lab_ring(P.vars);
  const std::size_t n = P.vars;
  const unsigned maxdeg = std::max(1u, P.maxdeg);
  Draw d(seed);
  std::optional<CyclicModule> fixed;
  if (P.module) fixed = CyclicModule::parse(*P.module, R);
  auto mono_module = [&](const MonomialIdeal& J) { return CyclicModule(Ideal::from_monomial(J, R)); };

  if (target == "t2") {
    for (int round = 0; round < 10; ++round) {
      // two heights at least, optionally squared components
      const std::size_t k = d.between(2, 4);
      MonomialIdeal a;
      for (std::size_t i = 0; i < k; ++i) {
        auto q = power(MonomialIdeal::of_prime(random_prime(d, n, d.between(1, n))), d.below(3) == 0 ? 2 : 1);
        a = i == 0 ? q : mono_intersect(a, q);
      }
      auto mins = minimal_primes(a);
      if (mins.begin()->height() != std::prev(mins.end())->height() || round == 9) return check_t2_decomposition(a, *R);
    }
  }
  if (target == "l08") {
    auto a = random_ideal(d, n, maxdeg), b = random_ideal(d, n, maxdeg);
    if (fixed) return check_l08(a, b, *fixed);
    auto J = random_J(d, n, maxdeg);
    if (seed & 1u) J = d.below(2) ? mono_product(a, b) : mono_sum(mono_product(a, b), J);
    return check_l08(a, b, mono_module(J));
  }
  if (target == "t6") {
    if (fixed) return check_t6(*fixed, seed, maxdeg);
    switch (d.below(4)) {
      case 0: return check_t6(mono_module(random_reduced(d, n, d.below(2) == 0)), seed, maxdeg);
      case 1: return check_t6(CyclicModule::free(R), seed, maxdeg);
      default: return check_t6(mono_module(random_J(d, n, maxdeg)), seed, maxdeg);
    }
  }

  // linkage-based targets
  const bool zero_links = target == "r1" || target == "l15" || target == "l1ii";
  for (int round = 0; round < 4; ++round) {
    CyclicModule M = CyclicModule::free(R);
    if (fixed) {
      M = *fixed;
    } else if (zero_links) {
      const auto pick = d.below(4);
      M = mono_module(pick < 2 ? random_reduced(d, n, pick == 0 || target == "r1") : random_J(d, n, maxdeg));
    } else if (target != "p1" && d.below(4) != 0) {
      M = mono_module(random_J(d, n, maxdeg));
    }
    const int max_length = zero_links ? 0 : target == "p1" ? 1 : -1;
    auto cert = sample_link(M, maxdeg, detail::mix_seed(seed + static_cast<std::uint64_t>(round)), max_length,
                            target == "r1" || target == "l15");
    if (!cert) continue;
    if (target == "l1") return check_l1_i(*cert);
    if (target == "l1ii") return check_l1_ii(M, cert->a, cert->b);
    if (target == "p1") return check_p1(*cert);
    if (target == "r1") return check_r1(*cert);
    if (target == "l15") return check_l15(*cert);
    return check_t26(*cert);
  }
  Verdict v = start(target);
  return mark(v, Status::skipped, "no linked pair found for this instance");
}

}  // namespace

Json run_verify(const std::string& target, const InstanceParams& P) {
  const auto& targets = verify_targets();
  if (std::find(targets.begin(), targets.end(), target) == targets.end())
    throw InputError("unknown verify target '" + target + "'");
  if (P.spair_budget) gb::set_default_spair_budget(P.spair_budget);
  lab_ring(P.vars);

  std::vector<Verdict> results(P.count);
  std::atomic<std::size_t> next{0};
  const auto t0 = std::chrono::steady_clock::now();
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < P.count;) {
      Verdict& v = results[k];
      if (P.timeout_soft_ms) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0).count();
        if (static_cast<std::uint64_t>(ms) > P.timeout_soft_ms) {
          v = start(target);
          mark(v, Status::inconclusive, "soft timeout reached before this instance started");
          continue;
        }
      }
      const std::uint64_t seed = detail::mix_seed(P.seed * 0x100000001B3ull + k);
      try {
        v = run_instance(target, P, seed);
      } catch (const ResourceError& e) {
        v = start(target);
        mark(v, Status::inconclusive, std::string("budget: ") + e.what());
      } catch (const PreconditionError& e) {
        v = start(target);
        mark(v, Status::skipped, e.what());
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(P.jobs, P.count));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < jobs; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::map<Status, std::size_t> tally;
  std::map<std::string, std::pair<std::size_t, std::size_t>> part_tally;
  Json counterexamples = Json::array(), verdicts = Json::array();
  for (std::size_t k = 0; k < results.size(); ++k) {
    const auto& v = results[k];
    ++tally[v.status];
    if (v.witnesses.contains("parts"))
      for (const auto& [name, val] : v.witnesses["parts"].items()) {
        auto& slot = part_tally[name];
        (val.get<bool>() ? slot.first : slot.second) += 1;
      }
    if (v.fails()) {
      Json c = v.to_json();
      c["instance_id"] = k;
      counterexamples.push_back(c);
    }
    if (P.details) {
      Json j = v.to_json();
      j["instance_id"] = k;
      verdicts.push_back(j);
    }
  }
  Json parts = Json::object();
  for (const auto& [name, c] : part_tally) parts[name] = {{"holds", c.first}, {"fails", c.second}};

  Json report;
  report["target"] = target;
  report["convention"] = kGradedConvention;
  report["params"] = {{"vars", P.vars}, {"maxdeg", P.maxdeg}, {"seed", P.seed}, {"count", P.count}};
  if (P.module) report["params"]["module"] = *P.module;
  report["instances"] = P.count;
  report["passes"] = tally[Status::holds];
  report["fails"] = tally[Status::fails];
  report["skips"] = tally[Status::skipped];
  report["inconclusive"] = tally[Status::inconclusive];
  report["not_checkable"] = tally[Status::not_checkable];
  report["parts"] = parts;
  report["counterexamples"] = counterexamples;
  if (P.details) report["verdicts"] = verdicts;
  return report;
}

}  // namespace linkalg
