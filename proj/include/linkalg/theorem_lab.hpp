#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "linkalg/invariants.hpp"
#include "linkalg/linkage.hpp"
#include "linkalg/verdict.hpp"

namespace linkalg {

struct InstanceParams {
  std::size_t vars = 3;
  unsigned maxdeg = 2;
  std::size_t count = 20;
  std::uint64_t seed = 1;
  /// S-pair budget per Gröbner computation; 0 keeps the global default.
  std::uint64_t spair_budget = 0;
  std::size_t jobs = 1;
  /// Fixed defining ideal for M (generator text); random per instance otherwise.
  std::optional<std::string> module;
  /// Instances not started after this many milliseconds are reported inconclusive; 0 disables.
  std::uint64_t timeout_soft_ms = 0;
  /// Include every verdict in the report.
  bool details = false;
};

/// Every p ∈ Ass(M/aM) has ht_M p = grade_M a, gated on Ass(M/IM) = Min(M/IM).
Verdict check_l1_i(const LinkageCertificate& cert);
/// Ass Ext^1_{R'}(R'/a, R'/a) = Ass R'/b ∩ Ass R'/a over R' = R/J, with a ~ b by 0, and
/// the same for (b, a).  Gated on Ass R' = Min R'.
Verdict check_l1_ii(const CyclicModule& R_prime, const Ideal& a, const Ideal& b);
/// a' = intersection of the minimal primes of minimal height, b = the rest; checks
/// Ass R/a', √a = a' ∩ b, ht b > t - 1 and ht(a' + b) > t with t = ht a + 1.
Verdict check_t2_decomposition(const MonomialIdeal& a, const Ring& ring);
/// Over R with grade a = 1: minimal primes of height 1, √a principal, cd(√a) ≤ 1, and
/// no top attached primes when n = 2.
Verdict check_p1(const LinkageCertificate& cert);
/// Top attached primes and Ass F^0 against intersections, and against sums when ab ⊆ J.
Verdict check_l08(const MonomialIdeal& a, const MonomialIdeal& b, const CyclicModule& M);
/// Linked pairs with intersecting top attached primes force CM; CM modules get a witness
/// link; the maximal-sequence criterion matches the CM status.
Verdict check_t6(const CyclicModule& M, std::uint64_t seed, unsigned maxdeg);
/// Geometric 0-links over equidimensional M give equidimensional quotients of dim M.
Verdict check_r1(const LinkageCertificate& cert);
/// Top attached primes of 0-linked ideals: inclusion, vanishing, and the geometric equivalence.
Verdict check_l15(const LinkageCertificate& cert);
/// Support identity and Min Ass R/(a+J) ⊆ Ass R/(I+J) on one certificate.
Verdict check_t26(const LinkageCertificate& cert);

struct MaximalSequence {
  bool found = false;
  std::vector<Polynomial> seq;
  /// Ass R/(J + x) = Min R/(J + x).
  bool ass_is_min = false;
};

/// Greedy search for a maximal M-regular sequence; maximality is certified by m ∈ Ass.
MaximalSequence find_maximal_sequence(const CyclicModule& M, std::uint64_t seed, std::size_t budget = 80);

const std::vector<std::string>& verify_targets();

/// Runs `count` seeded instances of a target and returns the JSON report.
Json run_verify(const std::string& target, const InstanceParams& params);

}  // namespace linkalg
