#pragma once

#include <cstdint>
#include <vector>

#include "linkalg/polynomial.hpp"

/// Buchberger engine shared by ideal and submodule computations.  Elements are
/// sparse vectors over Q[x] in a free module; position-over-term order where a
/// smaller position index is larger.  A polynomial is a vector supported on position 0.
namespace linkalg::gb {

struct VTerm {
  std::uint32_t pos = 0;
  Monomial mono;
  Rational coeff;
  friend bool operator==(const VTerm&, const VTerm&) = default;
};

/// Terms strictly decreasing in position-over-term order, no zero coefficients.
using Vec = std::vector<VTerm>;

int pot_compare(std::uint32_t pa, const Monomial& a, std::uint32_t pb, const Monomial& b, const MonomialOrder& ord);

/// Sorts and merges arbitrary terms into canonical form.
Vec canonical(std::vector<VTerm> terms, const MonomialOrder& ord);

/// a - c * m * b
Vec sub_scaled(const Vec& a, std::size_t a_from, const Vec& b, const Monomial& m, const Rational& c,
               const MonomialOrder& ord);

Vec scaled(const Vec& a, const Monomial& m, const Rational& c);
Vec make_monic(Vec a);

struct Options {
  /// Coprime-lead criterion; valid only for ideals (rank-one, single position).
  bool product_criterion = false;
  /// Maximum number of S-pair reductions; 0 means the global default.
  std::uint64_t spair_budget = 0;
};

/// Reduced Gröbner basis (monic, interreduced, sorted by decreasing lead).  Throws
/// ResourceError when the S-pair budget is exceeded.
std::vector<Vec> reduced_basis(std::vector<Vec> gens, const MonomialOrder& ord, const Options& opts = {});

/// Full normal form of f with respect to `basis` (any generating set; the answer is
/// canonical only when `basis` is a Gröbner basis).
Vec normal_form(const Vec& f, const std::vector<Vec>& basis, const MonomialOrder& ord);

/// Global default S-pair budget (initially 100000).
std::uint64_t default_spair_budget();
void set_default_spair_budget(std::uint64_t budget);
/// Gröbner computations running past now + ms throw ResourceError; 0 clears the deadline.
void set_soft_timeout(std::uint64_t ms);

Vec from_polynomial(const Polynomial& f, std::uint32_t pos = 0);
Polynomial to_polynomial(const Vec& v, const RingPtr& ring);

}  // namespace linkalg::gb
