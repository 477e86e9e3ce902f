#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkalg/ring.hpp"

namespace linkalg {

/// Prime ideal generated by a subset of the variables.  The empty subset is the zero prime.
class MonomialPrime {
 public:
  MonomialPrime() = default;
  MonomialPrime(std::size_t nvars, std::uint64_t mask) : nvars_(nvars), mask_(mask) {}
  static MonomialPrime from_indices(std::size_t nvars, const std::vector<std::size_t>& idx);
  static MonomialPrime maximal(std::size_t nvars);

  std::size_t nvars() const { return nvars_; }
  std::uint64_t mask() const { return mask_; }
  std::size_t height() const;
  bool is_zero() const { return mask_ == 0; }
  bool has(std::size_t var) const { return (mask_ >> var) & 1u; }
  bool contains(const MonomialPrime& q) const { return (q.mask_ & ~mask_) == 0; }
  std::vector<std::size_t> indices() const;

  /// "x,y" style sorted variable list; "" for the zero prime.
  std::vector<std::string> var_names(const Ring& ring) const;
  std::string to_string(const Ring& ring) const;

  friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
  /// Canonical order: by height, then by sorted index list.
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b);

 private:
  std::size_t nvars_ = 0;
  std::uint64_t mask_ = 0;
};

/// Sorted, duplicate-free set of monomial primes.
class PrimeSet {
 public:
  PrimeSet() = default;
  explicit PrimeSet(std::vector<MonomialPrime> primes);

  const std::vector<MonomialPrime>& primes() const { return primes_; }
  std::size_t size() const { return primes_.size(); }
  bool empty() const { return primes_.empty(); }
  bool contains(const MonomialPrime& p) const;
  bool subset_of(const PrimeSet& other) const;
  auto begin() const { return primes_.begin(); }
  auto end() const { return primes_.end(); }

  friend PrimeSet set_union(const PrimeSet& a, const PrimeSet& b);
  friend PrimeSet set_intersection(const PrimeSet& a, const PrimeSet& b);
  friend PrimeSet set_difference(const PrimeSet& a, const PrimeSet& b);
  friend bool operator==(const PrimeSet&, const PrimeSet&) = default;

  std::string to_string(const Ring& ring) const;

 private:
  std::vector<MonomialPrime> primes_;
};

/// Monomial ideal stored by its minimal generators (a divisibility antichain, sorted).
/// No generators means the zero ideal; the generator 1 means the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  MonomialIdeal(std::size_t nvars, std::vector<Monomial> gens);
  static MonomialIdeal zero(std::size_t nvars) { return MonomialIdeal(nvars, {}); }
  static MonomialIdeal unit(std::size_t nvars) { return MonomialIdeal(nvars, {Monomial(nvars)}); }
  static MonomialIdeal of_prime(const MonomialPrime& p);
  static MonomialIdeal maximal(std::size_t nvars) { return of_prime(MonomialPrime::maximal(nvars)); }

  std::size_t nvars() const { return nvars_; }
  const std::vector<Monomial>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_squarefree() const;
  /// Every generator is a pure power of one variable.
  bool is_irreducible_form() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  std::string to_string(const Ring& ring) const;
  std::vector<std::string> gen_strings(const Ring& ring) const;

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
  friend bool operator<(const MonomialIdeal& a, const MonomialIdeal& b) { return a.gens_ < b.gens_; }

 private:
  std::size_t nvars_ = 0;
  std::vector<Monomial> gens_;
};

MonomialIdeal minimalize(std::size_t nvars, const std::vector<Monomial>& gens);

MonomialIdeal mono_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_colon(const MonomialIdeal& a, const Monomial& m);
MonomialIdeal mono_colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal mono_radical(const MonomialIdeal& a);

/// Irredundant irreducible decomposition by generator splitting.  Requires a proper nonzero ideal.
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& a);

/// Ass(R/a).  The zero ideal yields {(0)}; the unit ideal is rejected.
PrimeSet associated_primes(const MonomialIdeal& a);
PrimeSet minimal_primes(const MonomialIdeal& a);

struct PrimeData {
  PrimeSet ass;
  PrimeSet min_primes;
  PrimeSet assh;
  int dim = 0;
  int height = 0;
};

PrimeData min_assh_dim(const MonomialIdeal& a);
int krull_dim(const MonomialIdeal& a);
int height(const MonomialIdeal& a);

struct Polarization {
  MonomialIdeal ideal;
  RingPtr ring;
  std::size_t added = 0;
  /// For each original variable, the indices of its copies in the new ring.
  std::vector<std::vector<std::size_t>> copies;
};

/// Standard polarization; the first copy of every variable keeps the position order.
Polarization polarize(const MonomialIdeal& a, const Ring& ring);

/// Image of `a` in R/p: generators divisible by a variable of p are killed and the
/// surviving ones are re-expressed in the remaining variables.
struct QuotientImage {
  MonomialIdeal ideal;
  std::vector<std::size_t> kept_vars;
};
QuotientImage image_mod_prime(const MonomialIdeal& a, const MonomialPrime& p);

}  // namespace linkalg
