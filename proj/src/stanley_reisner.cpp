#include "linkalg/stanley_reisner.hpp"

#include <algorithm>
#include <bit>
#include <memory>
#include <unordered_map>

#include <gmpxx.h>

#include "linkalg/errors.hpp"

namespace linkalg {

namespace {

std::size_t popcount(std::uint64_t m) { return static_cast<std::size_t>(std::popcount(m)); }

std::uint64_t full_mask(std::size_t n) { return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1); }

std::vector<std::uint64_t> maximalize(std::vector<std::uint64_t> sets) {
  std::sort(sets.begin(), sets.end(), [](std::uint64_t a, std::uint64_t b) {
    if (popcount(a) != popcount(b)) return popcount(a) > popcount(b);
    return a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<std::uint64_t> out;
  for (auto s : sets) {
    bool covered = std::any_of(out.begin(), out.end(), [s](std::uint64_t f) { return (s & ~f) == 0; });
    if (!covered) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// Rank over Q of a sparse matrix given row by row; rows are (column, value) sorted by column.
class SparseRank {
 public:
  using Row = std::vector<std::pair<std::uint32_t, mpq_class>>;

  void add(Row row) {
    while (!row.empty()) {
      auto it = pivots_.find(row.front().first);
      if (it == pivots_.end()) {
        pivots_.emplace(row.front().first, std::move(row));
        return;
      }
      const Row& p = it->second;
      mpq_class f = row.front().second / p.front().second;
      Row next;
      next.reserve(row.size() + p.size());
      std::size_t i = 0, j = 0;
      while (i < row.size() || j < p.size()) {
        if (j == p.size() || (i < row.size() && row[i].first < p[j].first)) {
          next.push_back(std::move(row[i++]));
        } else if (i == row.size() || p[j].first < row[i].first) {
          next.push_back({p[j].first, -f * p[j].second});
          ++j;
        } else {
          mpq_class v = row[i].second - f * p[j].second;
          if (v != 0) next.push_back({row[i].first, v});
          ++i;
          ++j;
        }
      }
      row = std::move(next);
    }
  }

  std::size_t rank() const { return pivots_.size(); }

 private:
  std::unordered_map<std::uint32_t, Row> pivots_;
};

/// Boundary ranks of one complex, computed on demand.
class ChainData {
 public:
  explicit ChainData(const SimplicialComplex& c) : c_(&c) {}

  const std::vector<std::uint64_t>& faces(std::size_t k) {
    auto it = faces_.find(k);
    if (it == faces_.end()) it = faces_.emplace(k, c_->faces_of_size(k)).first;
    return it->second;
  }

  /// rank of the boundary map from faces of size k to faces of size k-1.
  std::size_t boundary_rank(std::size_t k) {
    if (k == 0) return 0;
    auto it = ranks_.find(k);
    if (it != ranks_.end()) return it->second;
    const auto& src = faces(k);
    const auto& dst = faces(k - 1);
    std::unordered_map<std::uint64_t, std::uint32_t> index;
    for (std::uint32_t i = 0; i < dst.size(); ++i) index.emplace(dst[i], i);
    SparseRank sr;
    for (auto f : src) {
      SparseRank::Row row;
      int sign = 1;
      for (std::size_t v = 0; v < c_->nvertices(); ++v) {
        if (!((f >> v) & 1u)) continue;
        row.push_back({index.at(f & ~(std::uint64_t{1} << v)), mpq_class(sign)});
        sign = -sign;
      }
      std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
      sr.add(std::move(row));
    }
    ranks_.emplace(k, sr.rank());
    return sr.rank();
  }

  std::size_t cohomology_rank(int j) {
    if (j < -1) return 0;
    const std::size_t size = static_cast<std::size_t>(j + 1);
    const std::size_t f = faces(size).size();
    if (f == 0) return 0;
    return f - boundary_rank(size) - boundary_rank(size + 1);
  }

 private:
  const SimplicialComplex* c_;
  std::unordered_map<std::size_t, std::vector<std::uint64_t>> faces_;
  std::unordered_map<std::size_t, std::size_t> ranks_;
};

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t nvertices, std::vector<std::uint64_t> facets) : n_(nvertices) {
  if (nvertices > 64) throw PreconditionError("simplicial complexes support at most 64 vertices");
  const auto mask = full_mask(nvertices);
  for (auto f : facets)
    if (f & ~mask) throw PreconditionError("facet uses a vertex outside the vertex set");
  facets_ = maximalize(std::move(facets));
}

SimplicialComplex SimplicialComplex::simplex(std::size_t n) { return SimplicialComplex(n, {full_mask(n)}); }

int SimplicialComplex::dim() const {
  if (facets_.empty()) return -2;
  std::size_t best = 0;
  for (auto f : facets_) best = std::max(best, popcount(f));
  return static_cast<int>(best) - 1;
}

bool SimplicialComplex::has_face(std::uint64_t face) const {
  return std::any_of(facets_.begin(), facets_.end(), [face](std::uint64_t f) { return (face & ~f) == 0; });
}

std::vector<std::uint64_t> SimplicialComplex::faces_of_size(std::size_t k) const {
  std::vector<std::uint64_t> out;
  for (auto f : facets_) {
    if (popcount(f) < k) continue;
    // enumerate submasks of f
    std::uint64_t s = f;
    while (true) {
      if (popcount(s) == k) out.push_back(s);
      if (s == 0) break;
      s = (s - 1) & f;
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<std::uint64_t> SimplicialComplex::faces() const {
  std::vector<std::uint64_t> out;
  for (int k = 0; k <= dim() + 1; ++k) {
    auto fk = faces_of_size(static_cast<std::size_t>(k));
    out.insert(out.end(), fk.begin(), fk.end());
  }
  return out;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> out;
  for (int k = 0; k <= dim() + 1; ++k) out.push_back(faces_of_size(static_cast<std::size_t>(k)).size());
  return out;
}

SimplicialComplex SimplicialComplex::link(std::uint64_t face) const {
  std::vector<std::uint64_t> parts;
  for (auto f : facets_)
    if ((face & ~f) == 0) parts.push_back(f & ~face);
  return SimplicialComplex(n_, std::move(parts));
}

long CohomologyProfile::euler_characteristic() const {
  long chi = 0;
  for (const auto& [j, r] : ranks) chi += ((j % 2 == 0) ? 1 : -1) * static_cast<long>(r);
  return chi;
}

SimplicialComplex complex_of(const MonomialIdeal& I) {
  if (!I.is_squarefree()) throw PreconditionError("Stanley-Reisner complex needs a squarefree ideal");
  if (I.is_unit()) throw PreconditionError("Stanley-Reisner complex of the unit ideal");
  const std::size_t n = I.nvars();
  if (I.is_zero()) return SimplicialComplex::simplex(n);
  std::vector<std::uint64_t> facets;
  for (const auto& p : minimal_primes(I)) facets.push_back(full_mask(n) & ~p.mask());
  return SimplicialComplex(n, std::move(facets));
}

CohomologyProfile reduced_cohomology(const SimplicialComplex& complex) {
  CohomologyProfile prof;
  if (complex.is_void()) return prof;
  ChainData chain(complex);
  for (int j = -1; j <= complex.dim(); ++j)
    if (auto r = chain.cohomology_rank(j); r != 0) prof.ranks[j] = r;
  return prof;
}

std::size_t reduced_cohomology_rank(const SimplicialComplex& complex, int j) {
  if (complex.is_void()) return 0;
  ChainData chain(complex);
  return chain.cohomology_rank(j);
}

int depth_squarefree(const MonomialIdeal& I) {
  const SimplicialComplex delta = complex_of(I);
  // a facet F has link {∅}, contributing |F|
  std::size_t cap = SIZE_MAX;
  for (auto f : delta.facets()) cap = std::min(cap, popcount(f));
  // Search candidate values d = |W| + 1 + j upward; small d only touches low-dimensional faces.
  struct Link {
    explicit Link(SimplicialComplex c) : complex(std::move(c)), chain(complex) {}
    SimplicialComplex complex;
    ChainData chain;
  };
  std::unordered_map<std::uint64_t, std::unique_ptr<Link>> links;
  auto chain_of = [&](std::uint64_t w) -> ChainData& {
    auto it = links.find(w);
    if (it == links.end()) it = links.emplace(w, std::make_unique<Link>(delta.link(w))).first;
    return it->second->chain;
  };
  for (std::size_t d = 1; d < cap; ++d) {
    for (std::size_t size = 0; size < d; ++size) {
      const int j = static_cast<int>(d - size - 1);
      for (auto w : delta.faces_of_size(size))
        if (chain_of(w).cohomology_rank(j) != 0) return static_cast<int>(d);
    }
  }
  return static_cast<int>(cap);
}

SimplicialComplex degree_complex(const MonomialIdeal& J, const std::vector<int>& a) {
  const std::size_t n = J.nvars();
  std::uint64_t neg = 0;
  for (std::size_t j = 0; j < n; ++j)
    if (a[j] < 0) neg |= std::uint64_t{1} << j;
  const std::uint64_t free = full_mask(n) & ~neg;
  // F is a face iff x^a stays outside J after inverting the variables of F and neg
  auto is_face = [&](std::uint64_t F) {
    const std::uint64_t inv = F | neg;
    for (const auto& u : J.gens()) {
      bool divides = true;
      for (std::size_t j = 0; j < n && divides; ++j)
        if (!((inv >> j) & 1u) && static_cast<int>(u[j]) > a[j]) divides = false;
      if (divides) return false;
    }
    return true;
  };
  std::vector<std::uint64_t> faces;
  std::uint64_t F = free;
  while (true) {
    if (is_face(F)) faces.push_back(F);
    if (F == 0) break;
    F = (F - 1) & free;
  }
  return SimplicialComplex(n, std::move(faces));
}

int depth_monomial(const MonomialIdeal& J) {
  if (J.is_unit()) throw PreconditionError("depth of the zero module (unit ideal)");
  if (J.is_squarefree()) return depth_squarefree(J);
  const std::size_t n = J.nvars();
  std::vector<int> rho(n, 0);
  for (const auto& u : J.gens())
    for (std::size_t j = 0; j < n; ++j) rho[j] = std::max(rho[j], static_cast<int>(u[j]));
  // local cohomology in degree a is read off the degree complex; a_j ranges over -1..rho_j-1
  int best = static_cast<int>(n);
  std::vector<int> a(n, -1);
  while (true) {
    int negs = 0;
    for (int v : a) negs += v < 0;
    if (negs < best) {
      auto cx = degree_complex(J, a);
      if (!cx.is_void()) {
        ChainData chain(cx);
        for (int j = -1; j + negs + 1 < best; ++j)
          if (chain.cohomology_rank(j) != 0) {
            best = j + negs + 1;
            break;
          }
      }
    }
    std::size_t k = 0;
    while (k < n && a[k] == rho[k] - 1) a[k++] = -1;
    if (k == n) break;
    ++a[k];
  }
  return best;
}

int depth_monomial_polarized(const MonomialIdeal& J) {
  if (J.is_unit()) throw PreconditionError("depth of the zero module (unit ideal)");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < J.nvars(); ++i) names.push_back("v" + std::to_string(i));
  auto ring = Ring::make(names);
  auto pol = polarize(J, *ring);
  return depth_squarefree(pol.ideal) - static_cast<int>(pol.added);
}

bool is_cohen_macaulay(const MonomialIdeal& J) { return depth_monomial(J) == krull_dim(J); }

int cd_squarefree(const MonomialIdeal& a) {
  if (a.is_zero()) throw PreconditionError("cohomological dimension of the zero ideal");
  if (a.is_unit()) throw PreconditionError("cohomological dimension of the unit ideal");
  // cd only sees the radical
  if (!a.is_squarefree()) return cd_squarefree(mono_radical(a));
  return static_cast<int>(a.nvars()) - depth_squarefree(a);
}

CdOnQuotient cd_on_quotient(const MonomialIdeal& a, const MonomialPrime& p) {
  CdOnQuotient out;
  auto img = image_mod_prime(mono_radical(a), p);
  if (img.ideal.is_zero() || img.kept_vars.empty()) {
    out.zero_image = true;
    return out;
  }
  if (img.ideal.is_unit()) {
    out.unit_image = true;
    return out;
  }
  out.cd = cd_squarefree(img.ideal);
  return out;
}

}  // namespace linkalg
