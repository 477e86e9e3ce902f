#pragma once

#include "linkalg/module_algebra.hpp"
#include "linkalg/monomial_ideal.hpp"

namespace linkalg {

/// Graded model of the local statements: m is the ideal of all variables and
/// √(a + p) = m is decided variable by variable.
inline constexpr const char* kGradedConvention = "graded model: m = (all variables), local hypotheses read in the graded sense";

/// {p ∈ Ass R/J : dim R/p = dim R/J}.  Requires monomial J.
PrimeSet assh(const CyclicModule& M);
/// Ass R/J.  Requires monomial J.
PrimeSet ass(const CyclicModule& M);

/// √(a + p) = m for a monomial prime p.
bool reaches_maximal(const MonomialIdeal& a, const MonomialPrime& p);
bool reaches_maximal(const Ideal& a, const MonomialPrime& p);

/// Attached primes of H^{dim M}_a(M): {p ∈ Assh M : √(a + p) = m}.
PrimeSet att_top_H(const MonomialIdeal& a, const CyclicModule& M);
/// Same formula with a general ideal a (radical membership path).
PrimeSet att_top_H(const Ideal& a, const CyclicModule& M);
/// {p ∈ Ass M : cd(a, R/p) = dim M}, cd from the squarefree path.  Requires squarefree a.
PrimeSet att_top_H_via_cd(const MonomialIdeal& a, const CyclicModule& M);

/// Ass F^0_a(M) = {p ∈ Ass M : √(a + p) = m}.
PrimeSet ass_F0(const MonomialIdeal& a, const CyclicModule& M);

/// dim M_p = max over minimal primes q ⊆ p of |p| - |q|.  Requires p ∈ Supp M.
int ht_M(const MonomialPrime& p, const CyclicModule& M);

/// All minimal primes of J have the same dimension.
bool is_equidimensional(const CyclicModule& M);

}  // namespace linkalg
