#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "linkalg/monomial_ideal.hpp"
#include "linkalg/polynomial.hpp"

namespace linkalg {

/// Ideal of Q[x] given by generators.  An empty generator list is the zero ideal.
/// The reduced Gröbner basis for the ring's order is computed once and shared
/// between copies.
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr ring, std::vector<Polynomial> gens);
  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring), {}); }
  static Ideal unit(RingPtr ring);
  static Ideal parse(const std::string& comma_separated, const RingPtr& ring);
  static Ideal from_monomial(const MonomialIdeal& m, const RingPtr& ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }

  /// Reduced Gröbner basis in the ring's term order.
  const std::vector<Polynomial>& gb() const;

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const;
  /// All reduced-GB elements are monomials.
  bool is_monomial() const;
  std::optional<MonomialIdeal> as_monomial() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;
  /// Same reduced Gröbner basis.
  bool equals(const Ideal& other) const;

  /// Generators of the reduced GB, printed.
  std::vector<std::string> gb_strings() const;
  std::string to_string() const;

 private:
  struct Cache {
    std::mutex mu;
    std::optional<std::vector<Polynomial>> gb;
  };
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Reduced GB of I under another order (same variables).
std::vector<Polynomial> reduced_gb(const Ideal& I, const MonomialOrder& ord);

bool ideal_member(const Polynomial& f, const Ideal& I);
Ideal ideal_sum(const Ideal& I, const Ideal& J);
Ideal ideal_product(const Ideal& I, const Ideal& J);
/// I ∩ J through elimination of a tag variable from t·I + (1-t)·J.
Ideal ideal_intersect(const Ideal& I, const Ideal& J);
/// I : (g) = (I ∩ (g)) / g.
Ideal ideal_quotient(const Ideal& I, const Polynomial& g);
/// I : J, intersecting the single-generator quotients.
Ideal ideal_quotient(const Ideal& I, const Ideal& J);
/// I : f^∞ by eliminating t from I + (1 - t f).
Ideal saturate(const Ideal& I, const Polynomial& f);
/// f ∈ √I  ⟺  1 ∈ I + (1 - t f).
bool radical_member(const Polynomial& f, const Ideal& I);
/// I ∩ Q[remaining variables]; the result lives in the subring of kept variables.
Ideal eliminate(const Ideal& I, const std::vector<std::size_t>& drop_vars);
/// Image of I under the variable map of Polynomial::mapped.
Ideal map_ideal(const Ideal& I, const RingPtr& target, const std::vector<int>& var_map);

/// √I = (x_1..x_n)? decided variable by variable with radical_member.
bool radical_is_maximal(const Ideal& I);

/// Every S-polynomial of pairs in `basis` reduces to zero modulo `basis`.
bool satisfies_spair_criterion(const std::vector<Polynomial>& basis);

}  // namespace linkalg
