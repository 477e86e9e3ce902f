#include "linkalg/module_algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "linkalg/errors.hpp"
#include "linkalg/stanley_reisner.hpp"

namespace linkalg {

namespace {

/// i-subsets of {0..s-1} as bitmasks, lexicographic by sorted index list.
std::vector<std::uint64_t> subsets(std::size_t s, std::size_t i) {
  std::vector<std::vector<std::size_t>> lists;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == i) {
      lists.push_back(cur);
      return;
    }
    for (std::size_t k = start; k < s; ++k) {
      cur.push_back(k);
      self(self, k + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  std::vector<std::uint64_t> out;
  for (const auto& l : lists) {
    std::uint64_t m = 0;
    for (auto k : l) m |= std::uint64_t{1} << k;
    out.push_back(m);
  }
  return out;
}

void check_rank(const ModuleElement& v, std::size_t rank) {
  if (v.size() != rank) throw PreconditionError("module element has length " + std::to_string(v.size()) + ", expected " + std::to_string(rank));
}

/// base·e_k for k in [offset, offset + rank).
void append_base(std::vector<gb::Vec>& out, const Ideal& base, std::size_t rank, std::uint32_t offset = 0) {
  for (const auto& g : base.gens())
    for (std::size_t k = 0; k < rank; ++k) out.push_back(gb::from_polynomial(g, offset + static_cast<std::uint32_t>(k)));
}

ModuleElement zero_element(const RingPtr& ring, std::size_t rank) { return ModuleElement(rank, Polynomial(ring)); }

bool in_monomial_prime(const Polynomial& f, const MonomialPrime& p) {
  for (const auto& t : f.terms()) {
    bool hit = false;
    for (std::size_t v = 0; v < t.mono.size() && !hit; ++v) hit = t.mono[v] > 0 && p.has(v);
    if (!hit) return false;
  }
  return true;
}

}  // namespace

gb::Vec to_vec(const ModuleElement& v, std::uint32_t offset) {
  std::vector<gb::VTerm> terms;
  for (std::size_t k = 0; k < v.size(); ++k)
    for (const auto& t : v[k].terms()) terms.push_back({offset + static_cast<std::uint32_t>(k), t.mono, t.coeff});
  if (v.empty()) return {};
  return gb::canonical(std::move(terms), v.front().ring()->order());
}

ModuleElement from_vec(const gb::Vec& v, const RingPtr& ring, std::size_t rank, std::uint32_t offset) {
  std::vector<std::vector<Term>> parts(rank);
  for (const auto& t : v) {
    if (t.pos < offset || t.pos - offset >= rank) throw PreconditionError("vector term outside the requested positions");
    parts[t.pos - offset].push_back({t.mono, t.coeff});
  }
  ModuleElement out;
  out.reserve(rank);
  for (auto& p : parts) out.emplace_back(ring, std::move(p));
  return out;
}

std::string element_to_string(const ModuleElement& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ", ";
    s += v[k].to_string();
  }
  return s + ")";
}

// ---------------------------------------------------------------- CyclicModule

CyclicModule::CyclicModule(Ideal J) : J_(std::move(J)) {
  if (J_.is_unit()) throw PreconditionError("cyclic module R/J needs a proper ideal J");
}

CyclicModule CyclicModule::parse(const std::string& gens, const RingPtr& ring) {
  return CyclicModule(Ideal::parse(gens, ring));
}

MonomialIdeal CyclicModule::monomial() const {
  auto m = J_.as_monomial();
  if (!m) throw PreconditionError("defining ideal is not monomial");
  return *m;
}

int CyclicModule::dim() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->dim) {
    std::vector<Monomial> leads;
    for (const auto& g : J_.gb()) leads.push_back(g.lead_monomial());
    cache_->dim = krull_dim(MonomialIdeal(ring()->nvars(), leads));
  }
  return *cache_->dim;
}

int CyclicModule::depth() const {
  {
    std::lock_guard lock(cache_->mu);
    if (cache_->depth) return *cache_->depth;
  }
  int d;
  if (is_monomial()) {
    d = depth_monomial(monomial());
  } else {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring()->nvars(); ++i) vars.push_back(Polynomial::variable(ring(), i));
    d = koszul_grade(vars, *this);
  }
  std::lock_guard lock(cache_->mu);
  cache_->depth = d;
  return d;
}

std::string CyclicModule::to_string() const {
  if (is_free()) return "R";
  return "R/" + J_.to_string();
}

// ---------------------------------------------------------------- FPModule

FPModule::FPModule(RingPtr ring, std::size_t rank, std::vector<ModuleElement> relations, Ideal base)
    : ring_(std::move(ring)), rank_(rank), relations_(std::move(relations)), base_(std::move(base)) {
  if (!base_.ring() || !base_.ring()->same_variables(*ring_)) throw PreconditionError("base ideal lives in another ring");
  if (base_.is_unit()) throw PreconditionError("base ideal must be proper");
  for (const auto& r : relations_) check_rank(r, rank_);
}

const std::vector<gb::Vec>& FPModule::relation_gb() const {
  std::lock_guard lock(cache_->mu);
  if (!cache_->gb) {
    std::vector<gb::Vec> gens;
    for (const auto& r : relations_) gens.push_back(to_vec(r));
    append_base(gens, base_, rank_);
    cache_->gb = gb::reduced_basis(std::move(gens), ring_->order());
  }
  return *cache_->gb;
}

bool FPModule::is_zero_element(const ModuleElement& v) const {
  check_rank(v, rank_);
  return gb::normal_form(to_vec(v), relation_gb(), ring_->order()).empty();
}

bool FPModule::is_zero() const {
  for (std::size_t k = 0; k < rank_; ++k) {
    auto e = zero_element(ring_, rank_);
    e[k] = Polynomial::constant(ring_, 1);
    if (!is_zero_element(e)) return false;
  }
  return true;
}

std::string FPModule::to_string() const {
  std::ostringstream os;
  os << "R^" << rank_;
  if (!relations_.empty()) {
    os << " / <";
    for (std::size_t i = 0; i < relations_.size(); ++i) os << (i ? ", " : "") << element_to_string(relations_[i]);
    os << ">";
  }
  if (!base_.is_zero()) os << " over R/" << base_.to_string();
  return os.str();
}

// ---------------------------------------------------------------- Gröbner bases and kernels

ModuleGB module_gb(const RingPtr& ring, std::size_t rank, const std::vector<ModuleElement>& gens, const Ideal& base,
                   bool with_syzygies) {
  for (const auto& g : gens) check_rank(g, rank);
  ModuleGB out;
  out.rank = rank;
  std::vector<gb::Vec> vecs;
  for (const auto& g : gens) vecs.push_back(to_vec(g));
  append_base(vecs, base, rank);
  for (const auto& v : gb::reduced_basis(vecs, ring->order())) out.basis.push_back(from_vec(v, ring, rank));
  if (with_syzygies) out.syzygies = kernel(ring, gens, rank, {}, base);
  return out;
}

std::vector<ModuleElement> kernel(const RingPtr& ring, const std::vector<ModuleElement>& columns, std::size_t target_rank,
                                  const std::vector<ModuleElement>& target_relations, const Ideal& base) {
  const std::size_t s = columns.size();
  const auto t = static_cast<std::uint32_t>(target_rank);
  for (const auto& c : columns) check_rank(c, target_rank);
  for (const auto& r : target_relations) check_rank(r, target_rank);
  if (s == 0) return {};
  // (A_i, e_i), (N_j, 0), (J e_k, 0); top positions rank first, so elements with zero top
  // part are exactly the basis elements whose lead sits in the tag block
  std::vector<gb::Vec> vecs;
  for (std::size_t i = 0; i < s; ++i) {
    gb::Vec v = to_vec(columns[i]);
    auto tag = gb::from_polynomial(Polynomial::constant(ring, 1), t + static_cast<std::uint32_t>(i));
    v.insert(v.end(), tag.begin(), tag.end());
    vecs.push_back(gb::canonical(std::move(v), ring->order()));
  }
  for (const auto& r : target_relations) vecs.push_back(to_vec(r));
  append_base(vecs, base, target_rank);
  std::vector<ModuleElement> out;
  for (const auto& v : gb::reduced_basis(std::move(vecs), ring->order()))
    if (!v.empty() && v.front().pos >= t) out.push_back(from_vec(v, ring, s, t));
  return out;
}

// ---------------------------------------------------------------- Koszul

std::size_t KoszulComplex::rank(std::size_t i) const {
  const std::size_t s = seq.size();
  if (i > s) return 0;
  std::size_t r = 1;
  for (std::size_t k = 0; k < i; ++k) r = r * (s - k) / (k + 1);
  return r;
}

KoszulComplex koszul_complex(const std::vector<Polynomial>& seq, const RingPtr& ring) {
  KoszulComplex K;
  K.ring = ring;
  K.seq = seq;
  const std::size_t s = seq.size();
  K.d.resize(s + 1);
  for (std::size_t i = 1; i <= s; ++i) {
    auto src = subsets(s, i);
    auto dst = subsets(s, i - 1);
    std::map<std::uint64_t, std::size_t> index;
    for (std::size_t k = 0; k < dst.size(); ++k) index[dst[k]] = k;
    for (auto S : src) {
      ModuleElement col = zero_element(ring, dst.size());
      int sign = 1;
      for (std::size_t j = 0; j < s; ++j) {
        if (!((S >> j) & 1u)) continue;
        auto& entry = col[index.at(S & ~(std::uint64_t{1} << j))];
        entry = entry + seq[j].scaled(sign);
        sign = -sign;
      }
      K.d[i].push_back(std::move(col));
    }
  }
  return K;
}

std::vector<ModuleElement> compose(const std::vector<ModuleElement>& A, const std::vector<ModuleElement>& B,
                                   std::size_t target_rank, const RingPtr& ring) {
  std::vector<ModuleElement> out;
  for (const auto& b : B) {
    if (b.size() != A.size()) throw PreconditionError("compose: dimension mismatch");
    ModuleElement col = zero_element(ring, target_rank);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j].is_zero()) continue;
      check_rank(A[j], target_rank);
      for (std::size_t r = 0; r < target_rank; ++r) col[r] = col[r] + A[j][r] * b[j];
    }
    out.push_back(std::move(col));
  }
  return out;
}

bool koszul_homology_vanishes(const KoszulComplex& K, std::size_t i, const Ideal& J) {
  const std::size_t s = K.seq.size();
  if (i > s) return true;
  const std::size_t r = K.rank(i);
  std::vector<ModuleElement> cycles;
  if (i == 0) {
    cycles.push_back(ModuleElement{Polynomial::constant(K.ring, 1)});
  } else {
    cycles = kernel(K.ring, K.d[i], K.rank(i - 1), {}, J);
  }
  std::vector<gb::Vec> image;
  if (i < s)
    for (const auto& c : K.d[i + 1]) image.push_back(to_vec(c));
  append_base(image, J, r);
  auto basis = gb::reduced_basis(std::move(image), K.ring->order());
  return std::all_of(cycles.begin(), cycles.end(),
                     [&](const ModuleElement& z) { return gb::normal_form(to_vec(z), basis, K.ring->order()).empty(); });
}

int koszul_grade(const std::vector<Polynomial>& a_gens, const CyclicModule& M) {
  std::vector<Polynomial> seq;
  for (const auto& f : a_gens) {
    if (!f.ring()->same_variables(*M.ring())) throw PreconditionError("ideal and module live in different rings");
    if (!f.is_zero()) seq.push_back(f);
  }
  if (ideal_sum(Ideal(M.ring(), seq), M.J()).is_unit()) throw PreconditionError("aM = M: grade is infinite");
  auto K = koszul_complex(seq, M.ring());
  for (std::size_t i = seq.size(); i >= 1; --i)
    if (!koszul_homology_vanishes(K, i, M.J())) return static_cast<int>(seq.size() - i);
  return static_cast<int>(seq.size());
}

int koszul_grade(const Ideal& a, const CyclicModule& M) { return koszul_grade(a.gens(), M); }

namespace {

RegSeqResult regular_in_order(const std::vector<Polynomial>& seq, const CyclicModule& M) {
  RegSeqResult res;
  Ideal running = M.J();
  res.regular = true;
  for (std::size_t k = 0; k < seq.size(); ++k) {
    RegSeqStep step;
    step.element = seq[k].to_string();
    step.nonzerodivisor = ideal_quotient(running, seq[k]).equals(running);
    res.steps.push_back(step);
    if (!step.nonzerodivisor) {
      res.regular = false;
      res.failing_step = static_cast<int>(k);
      break;
    }
    running = ideal_sum(running, Ideal(M.ring(), {seq[k]}));
  }
  res.proper = !ideal_sum(M.J(), Ideal(M.ring(), seq)).is_unit();
  if (!res.proper) res.regular = false;
  return res;
}

}  // namespace

RegSeqResult is_regular_sequence(const std::vector<Polynomial>& seq, const CyclicModule& M, bool all_permutations) {
  RegSeqResult res = regular_in_order(seq, M);
  if (all_permutations) {
    std::vector<std::size_t> perm(seq.size());
    std::iota(perm.begin(), perm.end(), 0);
    bool consistent = true;
    while (std::next_permutation(perm.begin(), perm.end()) && consistent) {
      std::vector<Polynomial> p;
      for (auto i : perm) p.push_back(seq[i]);
      consistent = regular_in_order(p, M).regular == res.regular;
    }
    res.permutation_consistent = consistent;
  }
  return res;
}

// ---------------------------------------------------------------- Hom, Ann, Ass

FPModule hom_cyclic(const Ideal& a, const FPModule& N) {
  if (!a.ring()->same_variables(*N.ring())) throw PreconditionError("ideal and module live in different rings");
  const auto& ring = N.ring();
  const std::size_t r = N.rank();
  const std::size_t k = a.gens().size();
  if (k == 0) return N;
  if (r == 0) return N;
  // n ↦ (g_1 n, ..., g_k n) into N^k
  std::vector<ModuleElement> columns;
  for (std::size_t j = 0; j < r; ++j) {
    ModuleElement col = zero_element(ring, k * r);
    for (std::size_t i = 0; i < k; ++i) col[i * r + j] = a.gens()[i].reordered(ring);
    columns.push_back(std::move(col));
  }
  std::vector<ModuleElement> target_rel;
  for (const auto& rel : N.relations())
    for (std::size_t i = 0; i < k; ++i) {
      ModuleElement v = zero_element(ring, k * r);
      for (std::size_t j = 0; j < r; ++j) v[i * r + j] = rel[j];
      target_rel.push_back(std::move(v));
    }
  std::vector<ModuleElement> gens;
  for (auto& v : kernel(ring, columns, k * r, target_rel, N.base()))
    if (!N.is_zero_element(v)) gens.push_back(std::move(v));
  if (gens.empty()) return FPModule(ring, 0, {}, N.base());
  auto rels = kernel(ring, gens, r, N.relations(), N.base());
  return FPModule(ring, gens.size(), std::move(rels), N.base());
}

Ideal annihilator(const FPModule& N) {
  const auto& ring = N.ring();
  Ideal acc = Ideal::unit(ring);
  for (std::size_t k = 0; k < N.rank(); ++k) {
    ModuleElement e = zero_element(ring, N.rank());
    e[k] = Polynomial::constant(ring, 1);
    std::vector<Polynomial> gens;
    for (const auto& v : kernel(ring, {e}, N.rank(), N.relations(), N.base())) gens.push_back(v[0]);
    acc = ideal_intersect(acc, Ideal(ring, gens));
  }
  return acc;
}

bool is_multigraded(const FPModule& N) {
  if (!N.base().is_zero() && !N.base().is_monomial()) return false;
  const std::size_t n = N.ring()->nvars();
  // weighted union-find: shift[k] = d_k - d_root
  std::vector<std::size_t> parent(N.rank());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::vector<long>> shift(N.rank(), std::vector<long>(n, 0));
  auto find = [&](std::size_t k) {
    std::vector<long> acc(n, 0);
    while (parent[k] != k) {
      for (std::size_t i = 0; i < n; ++i) acc[i] += shift[k][i];
      k = parent[k];
    }
    return std::pair{k, acc};
  };
  for (const auto& rel : N.relations()) {
    // one term per position; d_k + u_k constant across positions
    std::optional<std::pair<std::size_t, Monomial>> first;
    for (std::size_t k = 0; k < rel.size(); ++k) {
      if (rel[k].is_zero()) continue;
      if (rel[k].size() != 1) return false;
      const Monomial& u = rel[k].lead_monomial();
      if (!first) {
        first = {k, u};
        continue;
      }
      auto [ra, sa] = find(first->first);
      auto [rb, sb] = find(k);
      // want d_k - d_first = u_first - u_k
      std::vector<long> want(n);
      for (std::size_t i = 0; i < n; ++i)
        want[i] = static_cast<long>(first->second[i]) - static_cast<long>(u[i]);
      if (ra == rb) {
        for (std::size_t i = 0; i < n; ++i)
          if (sb[i] - sa[i] != want[i]) return false;
      } else {
        // d_rb - d_ra = want + sa - sb
        parent[rb] = ra;
        for (std::size_t i = 0; i < n; ++i) shift[rb][i] = want[i] + sa[i] - sb[i];
      }
    }
  }
  return true;
}

bool ass_member(const MonomialPrime& p, const FPModule& N) {
  if (!is_multigraded(N)) throw PreconditionError("Ass membership is certified only for multigraded modules");
  if (p.nvars() != N.ring()->nvars()) throw PreconditionError("prime lives in another ring");
  auto P = Ideal::from_monomial(MonomialIdeal::of_prime(p), N.ring());
  auto H = hom_cyclic(P, N);
  if (H.rank() == 0 || H.is_zero()) return false;
  auto ann = annihilator(H);
  return std::all_of(ann.gens().begin(), ann.gens().end(), [&](const Polynomial& f) { return in_monomial_prime(f, p); });
}

PrimeSet ass_monomial(const FPModule& N) {
  const std::size_t n = N.ring()->nvars();
  if (N.rank() == 0 || N.is_zero()) return PrimeSet{};
  auto ann = annihilator(N);
  std::vector<MonomialPrime> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    MonomialPrime p(n, mask);
    bool supp = std::all_of(ann.gens().begin(), ann.gens().end(), [&](const Polynomial& f) { return in_monomial_prime(f, p); });
    if (supp && ass_member(p, N)) out.push_back(p);
  }
  return PrimeSet(std::move(out));
}

FPModule ext1_selfdual(const Ideal& a, const Ideal& J) {
  const auto& ring = J.ring();
  if (!a.ring()->same_variables(*ring)) throw PreconditionError("ideal and base live in different rings");
  const Ideal B = ideal_sum(a, J);
  if (B.is_unit()) throw PreconditionError("a + J is the unit ideal");
  std::vector<Polynomial> g;
  for (const auto& f : a.gens())
    if (!J.contains(f)) g.push_back(f.reordered(ring));
  if (g.empty()) return FPModule(ring, 0, {}, B);
  const std::size_t k = g.size();
  // presentation of a over R' = R/J: syzygies of g modulo J
  std::vector<ModuleElement> columns;
  for (const auto& f : g) columns.push_back(ModuleElement{f});
  std::vector<ModuleElement> syz;
  for (auto& s : kernel(ring, columns, 1, {}, J))
    if (!std::all_of(s.begin(), s.end(), [&](const Polynomial& c) { return B.contains(c); })) syz.push_back(std::move(s));
  // Hom(a, R'/a): tuples h in (R/B)^k with s·h ∈ B for every syzygy s
  std::vector<ModuleElement> hom_cols;
  for (std::size_t i = 0; i < k; ++i) {
    ModuleElement col = zero_element(ring, syz.size());
    for (std::size_t j = 0; j < syz.size(); ++j) col[j] = syz[j][i];
    hom_cols.push_back(std::move(col));
  }
  std::vector<ModuleElement> gens;
  if (syz.empty()) {
    for (std::size_t i = 0; i < k; ++i) {
      ModuleElement e = zero_element(ring, k);
      e[i] = Polynomial::constant(ring, 1);
      gens.push_back(std::move(e));
    }
  } else {
    FPModule ambient(ring, k, {}, B);
    for (auto& v : kernel(ring, hom_cols, syz.size(), {}, B))
      if (!ambient.is_zero_element(v)) gens.push_back(std::move(v));
  }
  if (gens.empty()) return FPModule(ring, 0, {}, B);
  auto rels = kernel(ring, gens, k, {}, B);
  return FPModule(ring, gens.size(), std::move(rels), B);
}

}  // namespace linkalg
