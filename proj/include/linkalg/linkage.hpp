#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linkalg/module_algebra.hpp"
#include "linkalg/verdict.hpp"

namespace linkalg {

/// Record of a ~ b by I over M = R/J, with every sub-verdict.  Colon conditions are
/// evaluated on preimages in R: IM :_M a corresponds to (I + J) : a.
struct LinkageCertificate {
  Ideal a, b, I;
  CyclicModule M;
  RegSeqResult regseq;
  bool contained = false;   // I ⊆ (a ∩ b) + J
  bool a_proper = false;    // a + J ≠ (1)
  bool b_proper = false;
  bool colon_a = false;     // (I + J) : a == b + J
  bool colon_b = false;     // (I + J) : b == a + J
  bool linked = false;
  bool geometric = false;   // (a + J) ∩ (b + J) == I + J
  bool selflinked = false;  // a + J == b + J
  /// grade of I on M; -1 when undefined (IM = M)
  int grade_I = -1;
  /// first failed condition, empty when linked
  std::string reason;

  Json to_json() const;
  /// Instance fields only, enough to re-run check_linked.
  Json instance_json() const;
};

LinkageCertificate check_linked(const Ideal& a, const Ideal& b, const Ideal& I, const CyclicModule& M);

struct LinkOf {
  Ideal b;
  LinkageCertificate certificate;
  /// (I + J) : b == a + J
  bool closes = false;
};

/// b = (I + J) : a, generators lying in J dropped.  Throws PreconditionError when I ⊄ a + J,
/// I is not M-regular, aM = M, or the colon is the unit ideal.
LinkOf link_of(const Ideal& a, const Ideal& I, const CyclicModule& M);

struct LinkParams {
  std::size_t count = 10;
  unsigned maxdeg = 2;
  std::uint64_t seed = 1;
  /// Give up after this many candidate draws (0 means 40 per requested certificate).
  std::size_t max_attempts = 0;
  /// Upper bound on the length of I; negative means dim M.
  int max_length = -1;
};

struct LinkSample {
  std::vector<LinkageCertificate> certificates;
  std::size_t attempts = 0;
  /// Candidates dropped because the S-pair budget tripped.
  std::size_t budget_rejections = 0;
};

/// Deterministic per seed.  Draws an M-regular sequence I from monomials, variable sums and
/// binomials, then either a = (I + J) : c or a = I + random monomials, keeping pairs whose
/// double colon closes.
LinkSample random_linked_pairs(const CyclicModule& M, const LinkParams& params);

/// √(I + J) = √(a + J) ∩ √(b + J).
Verdict support_identity(const LinkageCertificate& cert);
/// Min Ass R/(a + J) ⊆ Ass R/(I + J).  Monomial data only.
Verdict minass_in_ass_I(const LinkageCertificate& cert);

/// Equality of radicals through radical membership both ways.
bool same_radical(const Ideal& A, const Ideal& B);

}  // namespace linkalg
