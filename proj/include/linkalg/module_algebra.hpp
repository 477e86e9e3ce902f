#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "linkalg/gb_engine.hpp"
#include "linkalg/groebner.hpp"

namespace linkalg {

/// A vector of polynomials, one entry per free generator.
using ModuleElement = std::vector<Polynomial>;

/// M = R/J.  J = 0 gives M = R.  dim and depth are cached after first use.
class CyclicModule {
 public:
  CyclicModule() = default;
  explicit CyclicModule(Ideal J);
  static CyclicModule free(const RingPtr& ring) { return CyclicModule(Ideal::zero(ring)); }
  static CyclicModule parse(const std::string& gens, const RingPtr& ring);

  const RingPtr& ring() const { return J_.ring(); }
  const Ideal& J() const { return J_; }
  bool is_free() const { return J_.is_zero(); }
  bool is_monomial() const { return J_.is_monomial(); }
  /// The defining ideal as a monomial ideal; throws PreconditionError otherwise.
  MonomialIdeal monomial() const;

  /// Krull dimension, read off the initial ideal.
  int dim() const;
  /// depth_monomial on monomial data, Koszul grade of m otherwise.
  int depth() const;
  bool is_cohen_macaulay() const { return depth() == dim(); }

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<int> dim, depth;
  };
  Ideal J_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// R^rank / (relations + base·R^rank).
class FPModule {
 public:
  FPModule() = default;
  FPModule(RingPtr ring, std::size_t rank, std::vector<ModuleElement> relations, Ideal base);
  static FPModule cyclic(const Ideal& J) { return FPModule(J.ring(), 1, {}, J); }
  static FPModule free(const RingPtr& ring, std::size_t rank) { return FPModule(ring, rank, {}, Ideal::zero(ring)); }

  const RingPtr& ring() const { return ring_; }
  std::size_t rank() const { return rank_; }
  const std::vector<ModuleElement>& relations() const { return relations_; }
  const Ideal& base() const { return base_; }

  /// Gröbner basis of relations + base·R^rank.
  const std::vector<gb::Vec>& relation_gb() const;
  /// v is zero in the module.
  bool is_zero_element(const ModuleElement& v) const;
  bool is_zero() const;

  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<std::vector<gb::Vec>> gb;
  };
  RingPtr ring_;
  std::size_t rank_ = 0;
  std::vector<ModuleElement> relations_;
  Ideal base_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

gb::Vec to_vec(const ModuleElement& v, std::uint32_t offset = 0);
ModuleElement from_vec(const gb::Vec& v, const RingPtr& ring, std::size_t rank, std::uint32_t offset = 0);
std::string element_to_string(const ModuleElement& v);

struct ModuleGB {
  std::size_t rank = 0;
  /// Reduced basis of gens + base·R^rank under position-over-term order.
  std::vector<ModuleElement> basis;
  /// Generators of {c : sum c_i gens_i ∈ base·R^rank}, when requested.
  std::vector<ModuleElement> syzygies;
};

/// Submodule Gröbner basis of `gens` in R^rank over R/base.
ModuleGB module_gb(const RingPtr& ring, std::size_t rank, const std::vector<ModuleElement>& gens, const Ideal& base,
                   bool with_syzygies = false);

/// Kernel of R^s → R^t / (target_relations + base·R^t), the map given by its s columns.
/// Generators are a submodule Gröbner basis and include base·R^s.
std::vector<ModuleElement> kernel(const RingPtr& ring, const std::vector<ModuleElement>& columns, std::size_t target_rank,
                                  const std::vector<ModuleElement>& target_relations, const Ideal& base);

/// K(f_1..f_s): differentials d[i] : K_i → K_{i-1} for i = 1..s, stored as column lists
/// (d[0] is empty).  Basis of K_i is the i-subsets of {0..s-1} in lexicographic order.
struct KoszulComplex {
  RingPtr ring;
  std::vector<Polynomial> seq;
  std::vector<std::vector<ModuleElement>> d;
  std::size_t rank(std::size_t i) const;
};

KoszulComplex koszul_complex(const std::vector<Polynomial>& seq, const RingPtr& ring);
/// Matrix product of column lists: (A∘B) for B : R^a → R^b and A : R^b → R^c.
std::vector<ModuleElement> compose(const std::vector<ModuleElement>& A, const std::vector<ModuleElement>& B,
                                   std::size_t target_rank, const RingPtr& ring);

/// H_i(f; R/J) = 0, decided by reducing kernel generators modulo image + J.
bool koszul_homology_vanishes(const KoszulComplex& K, std::size_t i, const Ideal& J);

/// grade(a, M) = s - max{i : H_i(a; M) ≠ 0}.  Requires aM ≠ M.
int koszul_grade(const std::vector<Polynomial>& a_gens, const CyclicModule& M);
int koszul_grade(const Ideal& a, const CyclicModule& M);

struct RegSeqStep {
  std::string element;
  /// (J' : f) == J' with J' the running ideal before this step.
  bool nonzerodivisor = false;
};

struct RegSeqResult {
  bool regular = false;
  /// Index of the first failing element, or -1 (also -1 when only the final
  /// properness check fails).
  int failing_step = -1;
  bool proper = false;
  std::vector<RegSeqStep> steps;
  /// Set only with all_permutations: every ordering agrees with the given one.
  std::optional<bool> permutation_consistent;
};

RegSeqResult is_regular_sequence(const std::vector<Polynomial>& seq, const CyclicModule& M, bool all_permutations = false);

/// Hom_R(R/a, N) = {n ∈ N : a·n = 0}, presented over N's base.
FPModule hom_cyclic(const Ideal& a, const FPModule& N);

/// Ann_R(N) = ∩_k (relations + base·F) :_R e_k.
Ideal annihilator(const FPModule& N);

/// Shifts d_k with every relation and base generator homogeneous for the Z^n grading
/// deg(x^u e_k) = u + d_k exist.
bool is_multigraded(const FPModule& N);

/// p ∈ Ass N, decided as Ann Hom(R/p, N) ⊆ p.  Requires a multigraded N.
bool ass_member(const MonomialPrime& p, const FPModule& N);

/// All monomial primes p ⊇ Ann N with ass_member(p, N), canonically ordered.
PrimeSet ass_monomial(const FPModule& N);

/// Ext^1_{R'}(R'/a, R'/a) as Hom_{R'}(a, R'/a), where R' = R/J and a is given by generators
/// in R.  Requires a + J proper.
FPModule ext1_selfdual(const Ideal& a, const Ideal& J);

}  // namespace linkalg
