#include "linkalg/linkage.hpp"

#include <algorithm>
#include <set>

#include "draw.hpp"
#include "linkalg/errors.hpp"

namespace linkalg {

using detail::Draw;

namespace {

Ideal plus_J(const Ideal& x, const CyclicModule& M) { return ideal_sum(x, M.J()); }

/// Generators of the reduced GB that are not already in J.
Ideal drop_J(const Ideal& x, const CyclicModule& M) {
  std::vector<Polynomial> keep;
  for (const auto& g : x.gb())
    if (!M.J().contains(g)) keep.push_back(g);
  return Ideal(x.ring(), keep);
}

Json gens_json(const Ideal& I) {
  Json out = Json::array();
  for (const auto& g : I.gens()) out.push_back(g.to_string());
  return out;
}

void check_same_ring(const Ideal& x, const CyclicModule& M) {
  if (!x.ring()->same_variables(*M.ring())) throw PreconditionError("ideal and module live in different rings");
}

}  // namespace

Json LinkageCertificate::instance_json() const {
  Json j;
  j["ring"] = M.ring()->names();
  j["J"] = ideal_json(M.J());
  j["a"] = ideal_json(a);
  j["b"] = ideal_json(b);
  j["I"] = gens_json(I);
  return j;
}

Json LinkageCertificate::to_json() const {
  Json j = instance_json();
  j["linked"] = linked;
  j["geometric"] = geometric;
  j["selflinked"] = selflinked;
  j["grade_I"] = grade_I;
  Json sub;
  sub["I_in_a_and_b"] = contained;
  sub["a_proper"] = a_proper;
  sub["b_proper"] = b_proper;
  sub["regular_sequence"] = regseq.regular;
  sub["colon_a_is_b"] = colon_a;
  sub["colon_b_is_a"] = colon_b;
  j["checks"] = sub;
  Json steps = Json::array();
  for (const auto& s : regseq.steps) steps.push_back({{"element", s.element}, {"nonzerodivisor", s.nonzerodivisor}});
  j["regseq_witness"] = steps;
  if (!reason.empty()) j["reason"] = reason;
  return j;
}

LinkageCertificate check_linked(const Ideal& a, const Ideal& b, const Ideal& I, const CyclicModule& M) {
  check_same_ring(a, M);
  check_same_ring(b, M);
  check_same_ring(I, M);
  LinkageCertificate c;
  c.a = a;
  c.b = b;
  c.I = I;
  c.M = M;
  const Ideal A = plus_J(a, M), B = plus_J(b, M), K = plus_J(I, M);
  c.a_proper = !A.is_unit();
  c.b_proper = !B.is_unit();
  c.contained = A.contains(I) && B.contains(I);
  c.regseq = is_regular_sequence(I.gens(), M);
  c.colon_a = ideal_quotient(K, A).equals(B);
  c.colon_b = ideal_quotient(K, B).equals(A);
  if (c.regseq.regular)
    c.grade_I = static_cast<int>(I.gens().size());
  else if (!K.is_unit())
    c.grade_I = koszul_grade(I, M);

  if (!c.a_proper) c.reason = "aM = M";
  else if (!c.b_proper) c.reason = "bM = M";
  else if (!c.contained) c.reason = "I is not contained in a and b";
  else if (!c.regseq.regular)
    c.reason = c.regseq.failing_step >= 0 ? "I is not M-regular at step " + std::to_string(c.regseq.failing_step)
                                          : "IM = M";
  else if (!c.colon_a) c.reason = "IM :_M a differs from bM";
  else if (!c.colon_b) c.reason = "IM :_M b differs from aM";
  c.linked = c.reason.empty();
  c.geometric = c.linked && ideal_intersect(A, B).equals(K);
  c.selflinked = c.linked && A.equals(B);
  return c;
}

LinkOf link_of(const Ideal& a, const Ideal& I, const CyclicModule& M) {
  check_same_ring(a, M);
  check_same_ring(I, M);
  const Ideal A = plus_J(a, M), K = plus_J(I, M);
  if (!A.contains(I)) throw PreconditionError("I is not contained in a");
  if (A.is_unit()) throw PreconditionError("aM = M");
  auto rs = is_regular_sequence(I.gens(), M);
  if (!rs.regular) throw PreconditionError("I is not generated by an M-regular sequence");
  Ideal colon = ideal_quotient(K, A);
  if (colon.is_unit()) throw PreconditionError("IM :_M a = M, so bM = M");
  LinkOf out;
  out.b = drop_J(colon, M);
  out.certificate = check_linked(a, out.b, I, M);
  out.closes = out.certificate.colon_b;
  return out;
}

LinkSample random_linked_pairs(const CyclicModule& M, const LinkParams& params) {
  LinkSample out;
  const auto& R = M.ring();
  const std::size_t n = R->nvars();
  const std::size_t budget = params.max_attempts ? params.max_attempts : 40 * params.count;
  const unsigned maxdeg = std::max(1u, params.maxdeg);
  const int max_len = params.max_length >= 0 ? params.max_length : M.dim();
  Draw draw(params.seed);
  std::set<std::string> seen;
  while (out.certificates.size() < params.count && out.attempts < budget) {
    ++out.attempts;
    try {
      // regular sequence I; over R itself the zero ideal never links
      int len = static_cast<int>(draw.below(static_cast<std::uint64_t>(max_len) + 1));
      if (M.is_free() && len == 0) len = std::min(1, max_len);
      std::vector<Polynomial> seq;
      Ideal running = M.J();
      for (int k = 0; k < len; ++k) {
        for (int tries = 0; tries < 8; ++tries) {
          Polynomial f = draw.element(R, maxdeg);
          if (running.contains(f)) continue;
          if (!ideal_quotient(running, f).equals(running)) continue;
          Ideal next = ideal_sum(running, Ideal(R, {f}));
          if (next.is_unit()) continue;
          seq.push_back(f);
          running = next;
          break;
        }
      }
      const Ideal I(R, seq);
      const Ideal K = running;
      Ideal a;
      if (draw.below(2) == 0) {
        Polynomial c = Polynomial::monomial(R, draw.monomial(n, 1 + static_cast<unsigned>(draw.below(maxdeg))));
        if (K.contains(c)) continue;
        a = drop_J(ideal_quotient(K, c), M);
      } else {
        std::vector<Polynomial> gens = seq;
        std::size_t extra = 1 + draw.below(2);
        for (std::size_t k = 0; k < extra; ++k)
          gens.push_back(Polynomial::monomial(R, draw.monomial(n, 1 + static_cast<unsigned>(draw.below(maxdeg)))));
        a = drop_J(Ideal(R, gens), M);
      }
      const Ideal A = plus_J(a, M);
      if (A.is_unit() || A.equals(K)) continue;
      Ideal colon = ideal_quotient(K, A);
      if (colon.is_unit()) continue;
      Ideal b = drop_J(colon, M);
      if (!ideal_quotient(K, plus_J(b, M)).equals(A)) continue;
      auto cert = check_linked(a, b, I, M);
      if (!cert.linked) continue;
      std::string key = cert.instance_json().dump();
      if (!seen.insert(key).second) continue;
      out.certificates.push_back(std::move(cert));
    } catch (const ResourceError&) {
      ++out.budget_rejections;
    }
  }
  return out;
}

bool same_radical(const Ideal& A, const Ideal& B) {
  auto inside = [](const Ideal& X, const Ideal& Y) {
    return std::all_of(X.gens().begin(), X.gens().end(), [&](const Polynomial& f) { return radical_member(f, Y); });
  };
  return inside(A, B) && inside(B, A);
}

Verdict support_identity(const LinkageCertificate& cert) {
  Verdict v;
  v.claim = "support_identity";
  if (!cert.linked) {
    v.status = Status::skipped;
    v.notes.push_back("certificate is not linked");
    return v;
  }
  const Ideal A = plus_J(cert.I, cert.M), B = plus_J(cert.a, cert.M), C = plus_J(cert.b, cert.M);
  auto ma = A.as_monomial(), mb = B.as_monomial(), mc = C.as_monomial();
  const auto& R = *cert.M.ring();
  if (ma && mb && mc) {
    auto lhs = mono_radical(*ma);
    auto rhs = mono_intersect(mono_radical(*mb), mono_radical(*mc));
    v.witnesses["radical_I"] = lhs.gen_strings(R);
    v.witnesses["radical_a_cap_radical_b"] = rhs.gen_strings(R);
    v.settle(lhs == rhs, cert.instance_json());
  } else {
    v.notes.push_back("general path: radical membership both ways");
    v.settle(same_radical(A, ideal_product(B, C)), cert.instance_json());
  }
  return v;
}

Verdict minass_in_ass_I(const LinkageCertificate& cert) {
  Verdict v;
  v.claim = "minass_in_ass_I";
  if (!cert.linked) {
    v.status = Status::skipped;
    v.notes.push_back("certificate is not linked");
    return v;
  }
  auto A = plus_J(cert.a, cert.M).as_monomial();
  auto K = plus_J(cert.I, cert.M).as_monomial();
  if (!A || !K) {
    v.status = Status::not_checkable;
    v.notes.push_back("needs monomial a + J and I + J");
    return v;
  }
  const auto& R = *cert.M.ring();
  auto mins = minimal_primes(*A);
  auto ass = associated_primes(*K);
  v.witnesses["min_a"] = primes_json(mins, R);
  v.witnesses["ass_I"] = primes_json(ass, R);
  v.settle(mins.subset_of(ass), cert.instance_json());
  return v;
}

}  // namespace linkalg
