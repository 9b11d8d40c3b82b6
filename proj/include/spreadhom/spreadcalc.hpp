#pragma once

// Spread families over a finite poset: enumeration, combinatorial
// irreducible-morphism criteria, the radical-square oracle with the quiver it
// induces, and the staircase Koszul complex on square grids.

#include <spreadhom/rep.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace spreadhom {

struct TooLarge : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FamilyKind {
  projectives,
  segments,
  hooks,
  single_source_spreads,
  spreads,
  upsets,
  fp_upsets,
  custom,
};

inline std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::projectives: return "projectives";
    case FamilyKind::segments: return "segments";
    case FamilyKind::hooks: return "hooks";
    case FamilyKind::single_source_spreads: return "single_source_spreads";
    case FamilyKind::spreads: return "spreads";
    case FamilyKind::upsets: return "upsets";
    case FamilyKind::fp_upsets: return "fp_upsets";
    case FamilyKind::custom: return "custom";
  }
  throw std::logic_error("unknown family kind");
}

inline FamilyKind family_kind_from_string(const std::string& s) {
  for (FamilyKind k : {FamilyKind::projectives, FamilyKind::segments, FamilyKind::hooks,
                       FamilyKind::single_source_spreads, FamilyKind::spreads, FamilyKind::upsets,
                       FamilyKind::fp_upsets, FamilyKind::custom})
    if (to_string(k) == s) return k;
  throw std::invalid_argument("unknown family kind: " + s);
}

inline constexpr std::size_t kFamilyCap = 200000;

inline bool is_cover(const Poset& p, int x, int y) {
  const auto& c = p.covers_up(x);
  return std::find(c.begin(), c.end(), y) != c.end();
}

// All antichains of the subposet induced on `points` (sorted ids), the empty
// one included.
inline std::vector<std::vector<int>> antichains_in(const Poset& p, const std::vector<int>& points,
                                                   std::size_t cap = kFamilyCap) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == points.size()) {
      if (out.size() >= cap) throw TooLarge("antichain enumeration exceeds cap");
      out.push_back(cur);
      return;
    }
    self(self, i + 1);
    int x = points[i];
    for (int y : cur)
      if (p.leq(x, y) || p.leq(y, x)) return;
    cur.push_back(x);
    self(self, i + 1);
    cur.pop_back();
  };
  rec(rec, 0);
  return out;
}

// All connected subsets, grown one comparable point at a time from singletons;
// convexity is filtered at collection so no spread is missed.
inline std::vector<std::vector<int>> connected_subsets(const Poset& p,
                                                       std::size_t cap = kFamilyCap) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  for (int x = 0; x < p.size(); ++x) {
    seen.insert({x});
    queue.push_back({x});
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    std::vector<int> s = queue[qi];
    for (int y = 0; y < p.size(); ++y) {
      if (set_contains(s, y)) continue;
      bool touches = false;
      for (int x : s)
        if (p.leq(x, y) || p.leq(y, x)) {
          touches = true;
          break;
        }
      if (!touches) continue;
      std::vector<int> t = s;
      t.insert(std::lower_bound(t.begin(), t.end(), y), y);
      if (seen.insert(t).second) {
        if (seen.size() > cap) throw TooLarge("connected subset enumeration exceeds cap");
        queue.push_back(std::move(t));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

struct Family {
  std::shared_ptr<const Poset> poset;
  FamilyKind kind = FamilyKind::custom;
  std::vector<std::vector<int>> supports;  // canonical descriptor order
  std::vector<PersModule> members;         // spread modules, aligned with supports

  Index size() const { return static_cast<Index>(supports.size()); }

  std::optional<std::size_t> find(const std::vector<int>& support) const {
    auto it = index_.find(support);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  // sort supports by their canonical (lower, upper) descriptor, then materialize
  void finish() {
    std::vector<std::pair<std::pair<std::vector<int>, std::vector<int>>, std::vector<int>>> keyed;
    for (auto& s : supports) {
      SpreadForm f = spread_form(*poset, s);
      keyed.push_back({{std::move(f.lower), std::move(f.upper)}, std::move(s)});
    }
    std::sort(keyed.begin(), keyed.end());
    supports.clear();
    for (auto& [key, s] : keyed) supports.push_back(std::move(s));
    finish_ordered();
  }

  // materialize keeping the stated support order
  void finish_ordered() {
    members.clear();
    index_.clear();
    for (auto& s : supports) {
      index_[s] = members.size();
      members.push_back(spread_module(poset, s));
    }
  }

 private:
  std::map<std::vector<int>, std::size_t> index_;
};

inline Family enumerate_family(const std::shared_ptr<const Poset>& p, FamilyKind kind,
                               std::size_t cap = kFamilyCap) {
  const Poset& q = *p;
  std::set<std::vector<int>> supports;
  auto add = [&](std::vector<int> s) {
    supports.insert(std::move(s));
    if (supports.size() > cap) throw TooLarge("family exceeds member cap");
  };
  std::vector<int> all(static_cast<std::size_t>(q.size()));
  for (int x = 0; x < q.size(); ++x) all[static_cast<std::size_t>(x)] = x;
  switch (kind) {
    case FamilyKind::projectives:
      for (int x = 0; x < q.size(); ++x) add(up_set(q, {x}));
      break;
    case FamilyKind::segments:
      for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
          if (q.leq(a, b)) add(segment_set(q, a, b));
      break;
    case FamilyKind::hooks:
      for (int a = 0; a < q.size(); ++a)
        for (int b = 0; b < q.size(); ++b)
          if (q.lt(a, b)) add(set_minus(up_set(q, {a}), up_set(q, {b})));
      break;
    case FamilyKind::single_source_spreads:
      for (int a = 0; a < q.size(); ++a) {
        std::vector<int> above = set_minus(up_set(q, {a}), {a});
        for (auto& upper : antichains_in(q, above, cap))
          add(set_minus(up_set(q, {a}), up_set(q, upper)));
      }
      break;
    case FamilyKind::spreads:
      for (auto& s : connected_subsets(q, cap))
        if (is_convex(q, s)) add(std::move(s));
      break;
    case FamilyKind::upsets:
      if (maximals(q, all).size() != 1)
        throw std::invalid_argument("upsets family needs a unique maximal element");
      for (auto& a : antichains_in(q, all, cap))
        if (!a.empty()) add(up_set(q, a));
      break;
    case FamilyKind::fp_upsets:
      for (auto& a : antichains_in(q, all, cap)) {
        if (a.empty()) continue;
        std::vector<int> u = up_set(q, a);
        if (is_connected(q, u)) add(std::move(u));
      }
      break;
    case FamilyKind::custom:
      throw std::invalid_argument("custom families are built from explicit supports");
  }
  Family fam;
  fam.poset = p;
  fam.kind = kind;
  fam.supports.assign(supports.begin(), supports.end());
  fam.finish();
  return fam;
}

inline Family make_custom_family(const std::shared_ptr<const Poset>& p,
                                 const std::vector<std::vector<int>>& supports) {
  std::set<std::vector<int>> dedup;
  for (auto s : supports) {
    std::sort(s.begin(), s.end());
    if (!is_spread(*p, s)) throw NotASpread("custom family member is not a spread");
    dedup.insert(std::move(s));
  }
  Family fam;
  fam.poset = p;
  fam.kind = FamilyKind::custom;
  fam.supports.assign(dedup.begin(), dedup.end());
  fam.finish();
  return fam;
}

// Members of `a` in their order, then members of `b` not already present, so a
// union taken in kind order stays sorted by (kind, descriptor).
inline Family union_families(const Family& a, const Family& b) {
  if (a.poset != b.poset) throw std::invalid_argument("family union across different posets");
  Family fam;
  fam.poset = a.poset;
  fam.kind = FamilyKind::custom;
  fam.supports = a.supports;
  for (auto& s : b.supports)
    if (!a.find(s)) fam.supports.push_back(s);
  fam.finish_ordered();
  return fam;
}

// The enumerated family, with the indecomposable projectives adjoined when the
// kind does not already produce all of them.
inline Family family_with_projectives(const std::shared_ptr<const Poset>& p, FamilyKind kind,
                                      std::size_t cap = kFamilyCap) {
  Family fam = enumerate_family(p, kind, cap);
  Family proj = enumerate_family(p, FamilyKind::projectives, cap);
  for (auto& s : proj.supports)
    if (!fam.find(s)) return union_families(proj, fam);
  return fam;
}

// <a,B> single-source closed form to the canonical open form <a,B'<.
inline std::vector<int> normalize_single_source(const Poset& p, int a,
                                                const std::vector<int>& b) {
  std::vector<int> s = closed_between(p, {a}, b);
  if (s.empty() || minimals(p, s) != std::vector<int>{a})
    throw std::invalid_argument("<a,B> is not a single-source spread");
  return spread_form(p, s).upper;
}

enum class IrredTag { injective, surjective };

inline std::string to_string(IrredTag t) {
  return t == IrredTag::injective ? "injective" : "surjective";
}

// Morphisms I_src -> I_tgt between upset modules are the inclusions
// src <= tgt; the irreducible ones extend by exactly one point.
inline bool irreducible_upsets(const Poset& p, const std::vector<int>& src,
                               const std::vector<int>& tgt) {
  if (src != up_set(p, src) || tgt != up_set(p, tgt))
    throw std::invalid_argument("irreducible_upsets needs upsets");
  return src.size() + 1 == tgt.size() &&
         std::includes(tgt.begin(), tgt.end(), src.begin(), src.end());
}

// f: I_<a,b> -> I_<c,d>; nonzero morphisms need c <= a <= d <= b.
inline std::optional<IrredTag> irreducible_segments(const Poset& p, int a, int b, int c, int d) {
  if (!p.leq(a, b) || !p.leq(c, d)) throw std::invalid_argument("segment bounds out of order");
  if (is_cover(p, c, a) && p.leq(a, d) && d == b) return IrredTag::injective;
  if (c == a && p.leq(a, d) && is_cover(p, d, b)) return IrredTag::surjective;
  return std::nullopt;
}

// f: I_<a,b< -> I_<c,d<; nonzero morphisms need c <= a, a not >= d, d <= b.
inline std::optional<IrredTag> irreducible_hooks(const Poset& p, int a, int b, int c, int d) {
  if (!p.lt(a, b) || !p.lt(c, d)) throw std::invalid_argument("hook bounds out of order");
  if (is_cover(p, c, a) && !p.leq(d, a) && d == b) return IrredTag::injective;
  if (c == a && !p.leq(d, a) && is_cover(p, d, b)) return IrredTag::surjective;
  return std::nullopt;
}

// f: I_src -> I_tgt between single-source spreads: either drop one maximal
// element of the source, or extend the source minimum down one cover with the
// same canonical upper bound.
inline std::optional<IrredTag> irreducible_single_source(const Poset& p,
                                                         const std::vector<int>& src,
                                                         const std::vector<int>& tgt) {
  std::vector<int> amin = minimals(p, src), cmin = minimals(p, tgt);
  if (amin.size() != 1 || cmin.size() != 1)
    throw std::invalid_argument("irreducible_single_source needs single-source spreads");
  if (src.size() == tgt.size() + 1 &&
      std::includes(src.begin(), src.end(), tgt.begin(), tgt.end())) {
    int b = set_minus(src, tgt)[0];
    if (set_contains(maximals(p, src), b)) return IrredTag::surjective;
  }
  if (is_cover(p, cmin[0], amin[0]) &&
      spread_form(p, src).upper == spread_form(p, tgt).upper)
    return IrredTag::injective;
  return std::nullopt;
}

// f: I_src -> I_tgt between arbitrary spreads: either the source adds a cohook
// through a point covering the target, or the source is a connected component
// of the target minus one minimal element whose hook fills the rest.
inline std::optional<IrredTag> irreducible_spreads(const Poset& p, const std::vector<int>& src,
                                                   const std::vector<int>& tgt) {
  if (!is_spread(p, src) || !is_spread(p, tgt))
    throw std::invalid_argument("irreducible_spreads needs spreads");
  if (src.size() > tgt.size()) {
    std::vector<int> dmax = maximals(p, tgt);
    for (int x = 0; x < p.size(); ++x) {
      if (!set_covered_by_point(p, tgt, x)) continue;
      if (set_union(tgt, cohook_set(p, dmax, {x})) == src) return IrredTag::surjective;
    }
  }
  if (src.size() < tgt.size()) {
    for (int c : minimals(p, tgt)) {
      auto comps = connected_components(p, set_minus(tgt, {c}));
      if (std::find(comps.begin(), comps.end(), src) == comps.end()) continue;
      std::vector<int> hook = set_minus(up_set(p, {c}), up_set(p, minimals(p, src)));
      if (set_union(src, hook) == tgt) return IrredTag::injective;
    }
  }
  return std::nullopt;
}

// Pairwise hom bases between family members plus the radical-square spans they
// generate.  Distinct supports mean non-isomorphic bricks, so rad(X,Y) is the
// whole hom space off the diagonal and zero on it.
class FamilyHom {
 public:
  explicit FamilyHom(const Family& fam) : fam_(&fam), n_(fam.supports.size()) {
    basis_.resize(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j)
        basis_[i * n_ + j] = hom_basis(fam.members[i], fam.members[j]);
  }

  const Family& family() const { return *fam_; }

  const std::vector<ModMorphism>& basis(std::size_t i, std::size_t j) const {
    return basis_[i * n_ + j];
  }

  Index hom_dim(std::size_t i, std::size_t j) const {
    return static_cast<Index>(basis(i, j).size());
  }

  // span of {h o g : g in Hom(i,k), h in Hom(k,j), k != i, k != j}
  IncrementalSpan rad2_span(std::size_t i, std::size_t j) const {
    const PersModule& src = fam_->members[i];
    const PersModule& tgt = fam_->members[j];
    Index flat = 0;
    for (int x = 0; x < src.poset().size(); ++x) flat += src.dim(x) * tgt.dim(x);
    IncrementalSpan span(flat);
    for (std::size_t k = 0; k < n_; ++k) {
      if (k == i || k == j) continue;
      for (const ModMorphism& g : basis(i, k))
        for (const ModMorphism& h : basis(k, j)) span.add(flatten(compose(h, g)));
    }
    return span;
  }

  Index quiver_multiplicity(std::size_t i, std::size_t j) const {
    if (i == j) return 0;
    Index d = hom_dim(i, j);
    if (d == 0) return 0;
    return d - rad2_span(i, j).dim();
  }

 private:
  const Family* fam_;
  std::size_t n_;
  std::vector<std::vector<ModMorphism>> basis_;
};

inline std::vector<int> module_support(const PersModule& m) {
  std::vector<int> s;
  for (int x = 0; x < m.poset().size(); ++x)
    if (m.dim(x) > 0) s.push_back(x);
  return s;
}

// f lies outside the square of the radical of add(family).
inline bool irreducible_oracle(const Poset& p, const FamilyHom& fh, const ModMorphism& f) {
  (void)p;
  auto i = fh.family().find(module_support(f.source()));
  auto j = fh.family().find(module_support(f.target()));
  if (!i || !j) throw std::invalid_argument("morphism endpoints are not family members");
  if (*i == *j) throw std::invalid_argument("oracle needs non-isomorphic endpoints");
  return !fh.rad2_span(*i, *j).contains(flatten(f));
}

inline bool irreducible_oracle(const Poset& p, const Family& fam, const ModMorphism& f) {
  return irreducible_oracle(p, FamilyHom(fam), f);
}

struct QuiverArrow {
  std::size_t src = 0, tgt = 0;
  Index multiplicity = 0;
};

struct QuiverReport {
  std::vector<SpreadForm> vertices;
  std::vector<QuiverArrow> arrows;  // multiplicity >= 1, no loops
};

inline QuiverReport end_quiver(const Family& fam) {
  FamilyHom fh(fam);
  QuiverReport rep;
  for (auto& s : fam.supports) rep.vertices.push_back(spread_form(*fam.poset, s));
  for (std::size_t i = 0; i < fam.supports.size(); ++i)
    for (std::size_t j = 0; j < fam.supports.size(); ++j) {
      Index m = fh.quiver_multiplicity(i, j);
      if (m > 0) rep.arrows.push_back({i, j, m});
    }
  return rep;
}

struct CochainComplex {
  std::vector<PersModule> terms;
  std::vector<ModMorphism> diffs;  // diffs[p]: terms[p] -> terms[p+1]
};

// zero composites plus pointwise rank exactness at every term, ends included
inline bool is_exact_complex(const CochainComplex& c) {
  if (c.terms.empty()) return true;
  const Poset& p = c.terms[0].poset();
  for (std::size_t i = 0; i + 1 < c.diffs.size(); ++i)
    if (!is_zero(compose(c.diffs[i + 1], c.diffs[i]))) return false;
  for (int x = 0; x < p.size(); ++x)
    for (std::size_t t = 0; t < c.terms.size(); ++t) {
      Index in = t > 0 ? rank(c.diffs[t - 1].at(x)) : 0;
      Index out = t < c.diffs.size() ? rank(c.diffs[t].at(x)) : 0;
      if (in + out != c.terms[t].dim(x)) return false;
    }
  return true;
}

// Apply Hom(-, I_Y) for every family member Y and require the resulting
// reversed sequence of vector spaces to be exact at Hom(U^p, Y) for all
// p >= 1.  The node p = 0 is exempt: its cokernel is the module the induced
// projective resolution resolves.
inline bool check_relative_exact_contra(const CochainComplex& c, const Family& fam) {
  std::size_t n = c.terms.size();
  for (const PersModule& y : fam.members) {
    std::vector<std::vector<ModMorphism>> hb;
    for (auto& t : c.terms) hb.push_back(hom_basis(t, y));
    // mat[p]: coordinates of (- o diffs[p]) from Hom(terms[p+1], Y) to Hom(terms[p], Y)
    std::vector<Mat> mat;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      Index flat = flatten(zero_morphism(c.terms[p], y)).size();
      Mat basis = Mat::Zero(flat, static_cast<Index>(hb[p].size()));
      for (std::size_t k = 0; k < hb[p].size(); ++k)
        basis.col(static_cast<Index>(k)) = flatten(hb[p][k]);
      Mat m(static_cast<Index>(hb[p].size()), static_cast<Index>(hb[p + 1].size()));
      for (std::size_t k = 0; k < hb[p + 1].size(); ++k) {
        Vec v = flatten(compose(hb[p + 1][k], c.diffs[p]));
        auto coeff = solve(basis, Mat(v));
        if (!coeff) return false;  // cannot happen: the basis spans Hom(terms[p], Y)
        m.col(static_cast<Index>(k)) = coeff->col(0);
      }
      mat.push_back(std::move(m));
    }
    for (std::size_t p = 1; p < n; ++p) {
      Index in = p < n - 1 ? rank(mat[p]) : 0;   // from Hom(terms[p+1], Y)
      Index out = rank(mat[p - 1]);              // to Hom(terms[p-1], Y)
      if (in + out != static_cast<Index>(hb[p].size())) return false;
    }
  }
  return true;
}

struct KoszulComplex {
  std::shared_ptr<const Poset> poset;
  std::vector<int> b_ids;                                // x_1..x_n by first coordinate
  std::vector<int> staircase;                            // support of S = down(B)
  std::vector<std::vector<std::vector<std::size_t>>> subsets;  // per degree: B' indices, lex
  std::vector<std::vector<std::vector<int>>> summand_supports;
  std::vector<DirectSum> sums;
  CochainComplex complex;
};

// Staircase complex on the n x n grid: S = <(1,1), B> with B the antidiagonal,
// U^p the sum of I_{S \ B'} over p-subsets B' of B, and differentials built
// from the canonical surjections with alternating signs along each B'.
inline KoszulComplex koszul_complex(int n, const std::shared_ptr<const Poset>& grid = nullptr) {
  if (n < 2) throw std::invalid_argument("koszul_complex needs n >= 2");
  KoszulComplex kc;
  kc.poset = grid ? grid : std::make_shared<const Poset>(Poset::grid({n, n}));
  const Poset& p = *kc.poset;
  if (p.sizes() != std::vector<int>{n, n})
    throw std::invalid_argument("koszul_complex needs the n x n grid");
  for (int i = 1; i <= n; ++i) kc.b_ids.push_back(p.id({i - 1, n - i}));
  kc.staircase = down_set(p, kc.b_ids);

  std::vector<std::vector<std::size_t>> cur{{}};
  for (int deg = 0; deg <= n; ++deg) {
    kc.subsets.push_back(cur);
    std::vector<std::vector<int>> sup;
    for (auto& sub : cur) {
      std::vector<int> removed;
      for (std::size_t t : sub) removed.push_back(kc.b_ids[t]);
      std::sort(removed.begin(), removed.end());
      sup.push_back(set_minus(kc.staircase, removed));
    }
    kc.summand_supports.push_back(sup);
    std::vector<PersModule> mods;
    for (auto& s : sup) mods.push_back(spread_module(kc.poset, s));
    std::vector<const PersModule*> ptrs;
    for (auto& m : mods) ptrs.push_back(&m);
    kc.sums.push_back(direct_sum(kc.poset, ptrs));
    kc.complex.terms.push_back(kc.sums.back().module);
    // next degree: extend each subset lexicographically
    std::vector<std::vector<std::size_t>> next;
    for (auto& sub : cur)
      for (std::size_t t = sub.empty() ? 0 : sub.back() + 1; t < static_cast<std::size_t>(n); ++t) {
        auto e = sub;
        e.push_back(t);
        next.push_back(std::move(e));
      }
    cur = std::move(next);
  }

  for (int deg = 0; deg < n; ++deg) {
    const auto& src_subs = kc.subsets[static_cast<std::size_t>(deg)];
    const auto& tgt_subs = kc.subsets[static_cast<std::size_t>(deg) + 1];
    std::map<std::vector<std::size_t>, std::size_t> src_index;
    for (std::size_t a = 0; a < src_subs.size(); ++a) src_index[src_subs[a]] = a;
    const DirectSum& ssum = kc.sums[static_cast<std::size_t>(deg)];
    const DirectSum& tsum = kc.sums[static_cast<std::size_t>(deg) + 1];
    std::vector<Mat> mats;
    for (int x = 0; x < p.size(); ++x)
      mats.push_back(Mat::Zero(tsum.module.dim(x), ssum.module.dim(x)));
    for (std::size_t tt = 0; tt < tgt_subs.size(); ++tt) {
      const auto& sub = tgt_subs[tt];
      for (std::size_t j = 0; j < sub.size(); ++j) {
        auto dropped = sub;
        dropped.erase(dropped.begin() + static_cast<std::ptrdiff_t>(j));
        std::size_t aa = src_index.at(dropped);
        Fp sign = (j % 2 == 0) ? Fp(1) : -Fp(1);
        for (int x : kc.summand_supports[static_cast<std::size_t>(deg) + 1][tt])
          mats[static_cast<std::size_t>(x)](tsum.offsets[tt][static_cast<std::size_t>(x)],
                                            ssum.offsets[aa][static_cast<std::size_t>(x)]) = sign;
      }
    }
    kc.complex.diffs.emplace_back(ssum.module, tsum.module, std::move(mats));
  }
  return kc;
}

// Certify that Hom(-, G) of the complex is a minimal projective resolution
// over the family's endomorphism algebra: terms lie in add(family), the
// complex is exact and family-exact on the contravariant side, and no
// differential component is an isomorphism.  Returns the resolution length.
inline std::optional<int> contravariant_resolution_length(const KoszulComplex& kc,
                                                          const Family& fam) {
  for (auto& degree : kc.summand_supports)
    for (auto& s : degree)
      if (!fam.find(s)) return std::nullopt;
  for (std::size_t deg = 0; deg + 1 < kc.summand_supports.size(); ++deg)
    for (auto& tgt : kc.summand_supports[deg + 1])
      for (auto& src : kc.summand_supports[deg])
        if (src == tgt) return std::nullopt;  // component between equal summands could be an iso
  if (!is_exact_complex(kc.complex)) return std::nullopt;
  if (!check_relative_exact_contra(kc.complex, fam)) return std::nullopt;
  return static_cast<int>(kc.complex.diffs.size());
}

inline std::string point_label(const Poset& p, int x) {
  if (!p.is_grid()) return std::to_string(x);
  std::string s = "(";
  const Pt& c = p.coords(x);
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

inline std::string spread_label(const Poset& p, const std::vector<int>& support) {
  SpreadForm f = spread_form(p, support);
  std::string s = "<";
  for (std::size_t i = 0; i < f.lower.size(); ++i) {
    if (i) s += ",";
    s += point_label(p, f.lower[i]);
  }
  s += ";";
  if (f.upper.empty())
    s += "inf";
  else
    for (std::size_t i = 0; i < f.upper.size(); ++i) {
      if (i) s += ",";
      s += point_label(p, f.upper[i]);
    }
  return s + "<";
}

}  // namespace spreadhom
