#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "linkalg/monomial_ideal.hpp"

namespace linkalg {

/// Simplicial complex on vertices 0..n-1, faces as bitmasks.  No facets is the void
/// complex {}; the single empty facet is the irrelevant complex {∅}.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Facets are maximalized; masks outside the vertex range are rejected.
  SimplicialComplex(std::size_t nvertices, std::vector<std::uint64_t> facets);

  static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n, {}); }
  static SimplicialComplex irrelevant(std::size_t n) { return SimplicialComplex(n, {0}); }
  static SimplicialComplex simplex(std::size_t n);

  std::size_t nvertices() const { return n_; }
  const std::vector<std::uint64_t>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  /// -1 for {∅}; undefined (returns -2) for the void complex.
  int dim() const;
  bool has_face(std::uint64_t face) const;

  /// Faces of cardinality k.
  std::vector<std::uint64_t> faces_of_size(std::size_t k) const;
  /// All faces, the empty face included, by increasing size.
  std::vector<std::uint64_t> faces() const;
  /// f-vector indexed by cardinality (entry 0 is the empty face).
  std::vector<std::size_t> f_vector() const;

  SimplicialComplex link(std::uint64_t face) const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> facets_;
};

/// Ranks of reduced cohomology over Q, by degree j >= -1 (zero entries omitted).
struct CohomologyProfile {
  std::map<int, std::size_t> ranks;
  std::size_t rank(int j) const {
    auto it = ranks.find(j);
    return it == ranks.end() ? 0 : it->second;
  }
  /// Σ (-1)^j rank_j.
  long euler_characteristic() const;
};

/// Stanley–Reisner complex: faces are supports of squarefree monomials outside I.
SimplicialComplex complex_of(const MonomialIdeal& squarefree);

CohomologyProfile reduced_cohomology(const SimplicialComplex& complex);
/// Rank of reduced cohomology in one degree.
std::size_t reduced_cohomology_rank(const SimplicialComplex& complex, int j);

/// depth R/I by Hochster's formula.  Requires squarefree, proper I.
int depth_squarefree(const MonomialIdeal& squarefree);
/// Complex of F outside {j : a_j < 0} such that x^a avoids J with the variables of
/// F and of the negative part of a inverted.  Its reduced cohomology in degree
/// i - #neg - 1 is the degree-a piece of the i-th local cohomology of R/J.
SimplicialComplex degree_complex(const MonomialIdeal& J, const std::vector<int>& a);
/// depth R/J from degree complexes, with a_j in -1..(max exponent of x_j) - 1.
/// Squarefree input goes through depth_squarefree.  Requires proper J.
int depth_monomial(const MonomialIdeal& J);
/// depth R'/pol(J) - (added variables).  Same value; slow once polarization adds many vertices.
int depth_monomial_polarized(const MonomialIdeal& J);
/// depth R/J == dim R/J.
bool is_cohen_macaulay(const MonomialIdeal& J);

/// cd(a, R) = n - depth R/√a.  Requires proper nonzero a; non-squarefree input is radicalized.
int cd_squarefree(const MonomialIdeal& a);

struct CdOnQuotient {
  int cd = 0;
  /// The image of a in R/p is the unit ideal (cd reported as 0 by convention).
  bool unit_image = false;
  /// The image of a in R/p is zero.
  bool zero_image = false;
};

/// cd(a, R/p) computed from the image of a in R/p ≅ Q[remaining variables].
CdOnQuotient cd_on_quotient(const MonomialIdeal& a, const MonomialPrime& p);

}  // namespace linkalg
