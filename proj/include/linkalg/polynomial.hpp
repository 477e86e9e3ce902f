#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "linkalg/ring.hpp"

namespace linkalg {

using Rational = mpq_class;

struct Term {
  Monomial mono;
  Rational coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial with exact rational coefficients.  Terms are stored strictly
/// decreasing in the ring's order with no zero coefficients; values are immutable.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}
  /// Takes arbitrary terms: sorts, merges equal monomials, drops zeros.
  Polynomial(RingPtr ring, std::vector<Term> terms);

  static Polynomial constant(RingPtr ring, const Rational& c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, const Rational& c = 1);
  static Polynomial variable(RingPtr ring, std::size_t index);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Exactly one term.
  bool is_term() const { return terms_.size() == 1; }

  /// Requires nonzero.
  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  const Rational& lead_coeff() const { return terms_.front().coeff; }

  std::uint64_t total_degree() const;
  bool is_homogeneous() const;

  Polynomial operator+(const Polynomial& g) const;
  Polynomial operator-(const Polynomial& g) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& g) const;
  Polynomial scaled(const Rational& c) const;
  Polynomial times_term(const Monomial& m, const Rational& c) const;
  Polynomial monic() const;
  Polynomial pow(unsigned e) const;

  /// Re-expresses the polynomial in `target`: variable i is sent to variable var_map[i]
  /// (-1 means the variable must not occur).
  Polynomial mapped(const RingPtr& target, const std::vector<int>& var_map) const;
  /// Same variables, possibly a different order.
  Polynomial reordered(const RingPtr& target) const;

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void check_ring(const Polynomial& g) const;
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// Exact quotient h / g; throws PreconditionError when g does not divide h.
Polynomial exact_divide(const Polynomial& h, const Polynomial& g);

/// Parses the text grammar: sums of products of rational numbers, variables,
/// parenthesized expressions and `^` with a nonnegative integer exponent.
/// `*` may be omitted between juxtaposed factors.
Polynomial parse_poly(const std::string& text, const RingPtr& ring);

/// Comma-separated list of polynomials (commas inside parentheses are not separators).
std::vector<Polynomial> parse_poly_list(const std::string& text, const RingPtr& ring);

std::string monomial_to_string(const Monomial& m, const Ring& ring);
std::string rational_to_string(const Rational& q);

}  // namespace linkalg
