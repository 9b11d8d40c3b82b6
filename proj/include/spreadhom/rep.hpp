#pragma once

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "spreadhom/linalg.hpp"
#include "spreadhom/poset.hpp"

namespace spreadhom {

// Pointwise finite-dimensional functor P -> Vect, stored as dims per point and
// one matrix per hasse edge.  Construction verifies that all cover-path
// compositions between comparable points agree.
class PersModule {
 public:
  PersModule(std::shared_ptr<const Poset> poset, std::vector<Index> dims,
             std::map<std::pair<int, int>, Mat> maps)
      : poset_(std::move(poset)), dims_(std::move(dims)), maps_(std::move(maps)) {
    const Poset& p = *poset_;
    if (static_cast<int>(dims_.size()) != p.size())
      throw std::invalid_argument("dimension vector has wrong length");
    for (auto& [e, m] : maps_) {
      auto [x, y] = e;
      if (m.rows() != dim(y) || m.cols() != dim(x))
        throw std::invalid_argument("edge matrix has wrong shape");
    }
    for (auto& [x, y] : p.hasse()) {
      auto it = maps_.find({x, y});
      if (it == maps_.end()) maps_.emplace(std::pair{x, y}, Mat::Zero(dim(y), dim(x)));
    }
    validate();
  }

  static PersModule zero(std::shared_ptr<const Poset> poset) {
    std::vector<Index> d(static_cast<size_t>(poset->size()), 0);
    return PersModule(std::move(poset), std::move(d), {});
  }

  const Poset& poset() const { return *poset_; }
  const std::shared_ptr<const Poset>& poset_ptr() const { return poset_; }

  Index dim(int x) const { return dims_[static_cast<size_t>(x)]; }
  const std::vector<Index>& dims() const { return dims_; }

  Index total_dim() const {
    Index t = 0;
    for (Index d : dims_) t += d;
    return t;
  }

  bool is_zero() const { return total_dim() == 0; }

  const Mat& edge_map(int x, int y) const { return maps_.at({x, y}); }

  // structure map for any x <= y, composed along a cover path
  Mat map(int x, int y) const {
    if (!poset_->leq(x, y)) throw std::invalid_argument("map requested against the order");
    Mat m = Mat::Identity(dim(x), dim(x));
    int cur = x;
    while (cur != y) {
      for (int c : poset_->covers_up(cur))
        if (poset_->leq(c, y)) {
          m = edge_map(cur, c) * m;
          cur = c;
          break;
        }
    }
    return m;
  }

  friend bool operator==(const PersModule& a, const PersModule& b) {
    return a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  void validate() const {
    const Poset& p = *poset_;
    for (int x = 0; x < p.size(); ++x) {
      std::vector<std::optional<Mat>> to(static_cast<size_t>(p.size()));
      to[static_cast<size_t>(x)] = Mat::Identity(dim(x), dim(x));
      for (int y : p.topo()) {
        if (!p.leq(x, y) || y == x) continue;
        std::optional<Mat> agreed;
        for (int z : p.covers_down(y)) {
          if (!p.leq(x, z)) continue;
          Mat cand = edge_map(z, y) * *to[static_cast<size_t>(z)];
          if (!agreed)
            agreed = cand;
          else if (!(*agreed == cand))
            throw std::invalid_argument("edge maps are not functorial");
        }
        to[static_cast<size_t>(y)] = std::move(*agreed);
      }
    }
  }

  std::shared_ptr<const Poset> poset_;
  std::vector<Index> dims_;
  std::map<std::pair<int, int>, Mat> maps_;
};

class ModMorphism {
 public:
  ModMorphism(PersModule src, PersModule tgt, std::vector<Mat> mats)
      : src_(std::move(src)), tgt_(std::move(tgt)), mats_(std::move(mats)) {
    const Poset& p = src_.poset();
    if (static_cast<int>(mats_.size()) != p.size())
      throw std::invalid_argument("morphism needs one matrix per point");
    for (int x = 0; x < p.size(); ++x)
      if (mats_[static_cast<size_t>(x)].rows() != tgt_.dim(x) ||
          mats_[static_cast<size_t>(x)].cols() != src_.dim(x))
        throw std::invalid_argument("morphism matrix has wrong shape");
    for (auto& [x, y] : p.hasse())
      if (!(Mat(tgt_.edge_map(x, y) * at(x)) == Mat(at(y) * src_.edge_map(x, y))))
        throw std::invalid_argument("morphism is not natural");
  }

  const PersModule& source() const { return src_; }
  const PersModule& target() const { return tgt_; }
  const Mat& at(int x) const { return mats_[static_cast<size_t>(x)]; }

 private:
  PersModule src_, tgt_;
  std::vector<Mat> mats_;
};

inline ModMorphism zero_morphism(const PersModule& src, const PersModule& tgt) {
  std::vector<Mat> mats;
  for (int x = 0; x < src.poset().size(); ++x) mats.push_back(Mat::Zero(tgt.dim(x), src.dim(x)));
  return ModMorphism(src, tgt, std::move(mats));
}

inline ModMorphism identity_morphism(const PersModule& m) {
  std::vector<Mat> mats;
  for (int x = 0; x < m.poset().size(); ++x) mats.push_back(Mat::Identity(m.dim(x), m.dim(x)));
  return ModMorphism(m, m, std::move(mats));
}

inline ModMorphism compose(const ModMorphism& g, const ModMorphism& f) {
  std::vector<Mat> mats;
  for (int x = 0; x < f.source().poset().size(); ++x) mats.push_back(Mat(g.at(x) * f.at(x)));
  return ModMorphism(f.source(), g.target(), std::move(mats));
}

inline ModMorphism scale(Fp c, const ModMorphism& f) {
  std::vector<Mat> mats;
  for (int x = 0; x < f.source().poset().size(); ++x) mats.push_back(Mat(f.at(x) * c));
  return ModMorphism(f.source(), f.target(), std::move(mats));
}

inline ModMorphism add(const ModMorphism& f, const ModMorphism& g) {
  std::vector<Mat> mats;
  for (int x = 0; x < f.source().poset().size(); ++x) mats.push_back(Mat(f.at(x) + g.at(x)));
  return ModMorphism(f.source(), f.target(), std::move(mats));
}

inline bool is_pointwise_injective(const ModMorphism& f) {
  for (int x = 0; x < f.source().poset().size(); ++x)
    if (rank(f.at(x)) != f.source().dim(x)) return false;
  return true;
}

inline bool is_pointwise_surjective(const ModMorphism& f) {
  for (int x = 0; x < f.source().poset().size(); ++x)
    if (rank(f.at(x)) != f.target().dim(x)) return false;
  return true;
}

inline bool is_isomorphism(const ModMorphism& f) {
  return is_pointwise_injective(f) && is_pointwise_surjective(f);
}

inline bool is_zero(const ModMorphism& f) {
  for (int x = 0; x < f.source().poset().size(); ++x)
    if (!is_zero_mat(f.at(x))) return false;
  return true;
}

// entries of all point matrices, column-major per point; the coordinate system
// shared by hom_basis and the span arithmetic built on it
inline Vec flatten(const ModMorphism& f) {
  Index total = 0;
  for (int x = 0; x < f.source().poset().size(); ++x)
    total += f.source().dim(x) * f.target().dim(x);
  Vec v(total);
  Index off = 0;
  for (int x = 0; x < f.source().poset().size(); ++x) {
    const Mat& m = f.at(x);
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r) v(off++) = m(r, c);
  }
  return v;
}

inline ModMorphism unflatten(const PersModule& src, const PersModule& tgt, const Vec& v) {
  std::vector<Mat> mats;
  Index off = 0;
  for (int x = 0; x < src.poset().size(); ++x) {
    Mat m(tgt.dim(x), src.dim(x));
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r) m(r, c) = v(off++);
    mats.push_back(std::move(m));
  }
  return ModMorphism(src, tgt, std::move(mats));
}

// Basis of Hom(M,N): kernel of the stacked naturality system over all hasse
// edges, one variable per entry of each point matrix.
inline std::vector<ModMorphism> hom_basis(const PersModule& m, const PersModule& n) {
  const Poset& p = m.poset();
  std::vector<Index> off(static_cast<size_t>(p.size()) + 1, 0);
  for (int x = 0; x < p.size(); ++x)
    off[static_cast<size_t>(x) + 1] = off[static_cast<size_t>(x)] + m.dim(x) * n.dim(x);
  Index vars = off.back();
  Index rows = 0;
  for (auto& [x, y] : p.hasse()) rows += m.dim(x) * n.dim(y);
  Mat sys = Mat::Zero(rows, vars);
  Index row0 = 0;
  for (auto& [x, y] : p.hasse()) {
    const Mat& a = n.edge_map(x, y);  // n(y) x n(x)
    const Mat& b = m.edge_map(x, y);  // m(y) x m(x)
    // N(x,y) f_x - f_y M(x,y) = 0, entry (r,c) with r < n.dim(y), c < m.dim(x)
    for (Index c = 0; c < m.dim(x); ++c)
      for (Index r = 0; r < n.dim(y); ++r) {
        Index row = row0 + c * n.dim(y) + r;
        for (Index k = 0; k < n.dim(x); ++k)
          sys(row, off[static_cast<size_t>(x)] + c * n.dim(x) + k) += a(r, k);
        for (Index k = 0; k < m.dim(y); ++k)
          sys(row, off[static_cast<size_t>(y)] + k * n.dim(y) + r) -= b(k, c);
      }
    row0 += m.dim(x) * n.dim(y);
  }
  Mat ker = kernel_basis(sys);
  std::vector<ModMorphism> basis;
  for (Index j = 0; j < ker.cols(); ++j) basis.push_back(unflatten(m, n, Vec(ker.col(j))));
  return basis;
}

inline Index hom_dim(const PersModule& m, const PersModule& n) {
  return static_cast<Index>(hom_basis(m, n).size());
}

inline PersModule spread_module(const std::shared_ptr<const Poset>& p, const std::vector<int>& s) {
  if (!is_spread(*p, s)) throw NotASpread("support is not a spread");
  std::vector<Index> dims(static_cast<size_t>(p->size()), 0);
  for (int x : s) dims[static_cast<size_t>(x)] = 1;
  std::map<std::pair<int, int>, Mat> maps;
  for (auto& [x, y] : p->hasse())
    if (set_contains(s, x) && set_contains(s, y)) maps[{x, y}] = Mat::Identity(1, 1);
  return PersModule(p, std::move(dims), std::move(maps));
}

inline PersModule projective(const std::shared_ptr<const Poset>& p, int x) {
  return spread_module(p, up_set(*p, {x}));
}

inline PersModule simple(const std::shared_ptr<const Poset>& p, int x) {
  return spread_module(p, {x});
}

struct HomSpreads {
  Index dim;
  std::vector<std::vector<int>> images;  // qualifying components of the intersection
};

// Combinatorial Hom dimension between spread modules: components U of the
// intersection with everything of S below U inside U and everything of T above
// U inside U; each such U is the image support of a basis morphism.
inline HomSpreads hom_dim_spreads(const Poset& p, const std::vector<int>& s,
                                  const std::vector<int>& t) {
  HomSpreads h{0, {}};
  for (auto& u : connected_components(p, set_intersect(s, t))) {
    bool ok = true;
    for (int x : s)
      if (point_leq_set(p, x, u) && !set_contains(u, x)) {
        ok = false;
        break;
      }
    if (ok)
      for (int y : t)
        if (set_leq_point(p, u, y) && !set_contains(u, y)) {
          ok = false;
          break;
        }
    if (ok) {
      ++h.dim;
      h.images.push_back(u);
    }
  }
  return h;
}

// indicator of U as a morphism I_S -> I_T
inline ModMorphism spread_witness(const std::shared_ptr<const Poset>& p, const std::vector<int>& s,
                                  const std::vector<int>& t, const std::vector<int>& u) {
  PersModule ms = spread_module(p, s), mt = spread_module(p, t);
  std::vector<Mat> mats;
  for (int x = 0; x < p->size(); ++x) {
    Mat m = Mat::Zero(mt.dim(x), ms.dim(x));
    if (set_contains(u, x)) m(0, 0) = Fp(1);
    mats.push_back(std::move(m));
  }
  return ModMorphism(std::move(ms), std::move(mt), std::move(mats));
}

struct SubQuot {
  PersModule module;
  ModMorphism map;  // kernel: K -> src ; cokernel: tgt -> C
};

inline SubQuot kernel(const ModMorphism& f) {
  const auto& p = f.source().poset_ptr();
  std::vector<Index> dims;
  std::vector<Mat> incl;
  for (int x = 0; x < p->size(); ++x) {
    incl.push_back(kernel_basis(f.at(x)));
    dims.push_back(incl.back().cols());
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (auto& [x, y] : p->hasse()) {
    auto sol = solve(incl[static_cast<size_t>(y)],
                     Mat(f.source().edge_map(x, y) * incl[static_cast<size_t>(x)]));
    maps[{x, y}] = *sol;
  }
  PersModule k(p, std::move(dims), std::move(maps));
  ModMorphism j(k, f.source(), std::move(incl));
  return {std::move(k), std::move(j)};
}

inline SubQuot cokernel(const ModMorphism& f) {
  const auto& p = f.source().poset_ptr();
  std::vector<Index> dims;
  std::vector<Mat> proj, sect;
  for (int x = 0; x < p->size(); ++x) {
    Cokernel ck = cokernel_projection(f.at(x));
    dims.push_back(ck.proj.rows());
    Mat s = Mat::Zero(f.target().dim(x), ck.proj.rows());
    for (Index j = 0; j < ck.proj.rows(); ++j) s(ck.complement[static_cast<size_t>(j)], j) = Fp(1);
    proj.push_back(std::move(ck.proj));
    sect.push_back(std::move(s));
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (auto& [x, y] : p->hasse())
    maps[{x, y}] = proj[static_cast<size_t>(y)] * f.target().edge_map(x, y) * sect[static_cast<size_t>(x)];
  PersModule c(p, std::move(dims), std::move(maps));
  ModMorphism q(f.target(), c, std::move(proj));
  return {std::move(c), std::move(q)};
}

struct ImageParts {
  PersModule module;
  ModMorphism incl;  // image -> target
  ModMorphism proj;  // source -> image
};

inline ImageParts image(const ModMorphism& f) {
  const auto& p = f.source().poset_ptr();
  std::vector<Index> dims;
  std::vector<Mat> incl, proj;
  for (int x = 0; x < p->size(); ++x) {
    Mat b = image_basis(f.at(x));
    dims.push_back(b.cols());
    proj.push_back(*solve(b, f.at(x)));
    incl.push_back(std::move(b));
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (auto& [x, y] : p->hasse()) {
    auto sol = solve(incl[static_cast<size_t>(y)],
                     Mat(f.target().edge_map(x, y) * incl[static_cast<size_t>(x)]));
    maps[{x, y}] = *sol;
  }
  PersModule im(p, std::move(dims), std::move(maps));
  ModMorphism ji(im, f.target(), std::move(incl));
  ModMorphism jq(f.source(), im, std::move(proj));
  return {std::move(im), std::move(ji), std::move(jq)};
}

struct ShortExactSeq {
  ModMorphism inj;   // L -> M
  ModMorphism surj;  // M -> N
};

inline ShortExactSeq make_ses(ModMorphism inj, ModMorphism surj) {
  if (!is_pointwise_injective(inj) || !is_pointwise_surjective(surj))
    throw std::invalid_argument("sequence ends are not mono/epi");
  for (int x = 0; x < inj.source().poset().size(); ++x) {
    if (!is_zero_mat(surj.at(x) * inj.at(x)))
      throw std::invalid_argument("composite of the sequence is nonzero");
    if (inj.source().dim(x) + surj.target().dim(x) != inj.target().dim(x))
      throw std::invalid_argument("sequence is not exact in the middle");
  }
  return {std::move(inj), std::move(surj)};
}

struct DirectSum {
  PersModule module;
  std::vector<std::vector<Index>> offsets;  // per summand, per point
};

inline DirectSum direct_sum(const std::shared_ptr<const Poset>& p,
                            const std::vector<const PersModule*>& parts) {
  std::vector<Index> dims(static_cast<size_t>(p->size()), 0);
  std::vector<std::vector<Index>> offs;
  for (const PersModule* m : parts) {
    std::vector<Index> o;
    for (int x = 0; x < p->size(); ++x) {
      o.push_back(dims[static_cast<size_t>(x)]);
      dims[static_cast<size_t>(x)] += m->dim(x);
    }
    offs.push_back(std::move(o));
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (auto& [x, y] : p->hasse()) {
    Mat m = Mat::Zero(dims[static_cast<size_t>(y)], dims[static_cast<size_t>(x)]);
    for (size_t k = 0; k < parts.size(); ++k) {
      const Mat& e = parts[k]->edge_map(x, y);
      m.block(offs[k][static_cast<size_t>(y)], offs[k][static_cast<size_t>(x)], e.rows(), e.cols()) = e;
    }
    maps[{x, y}] = std::move(m);
  }
  return {PersModule(p, std::move(dims), std::move(maps)), std::move(offs)};
}

inline ModMorphism summand_inclusion(const DirectSum& ds, const PersModule& part, size_t k) {
  std::vector<Mat> mats;
  for (int x = 0; x < part.poset().size(); ++x) {
    Mat m = Mat::Zero(ds.module.dim(x), part.dim(x));
    for (Index i = 0; i < part.dim(x); ++i) m(ds.offsets[k][static_cast<size_t>(x)] + i, i) = Fp(1);
    mats.push_back(std::move(m));
  }
  return ModMorphism(part, ds.module, std::move(mats));
}

inline ModMorphism summand_projection(const DirectSum& ds, const PersModule& part, size_t k) {
  std::vector<Mat> mats;
  for (int x = 0; x < part.poset().size(); ++x) {
    Mat m = Mat::Zero(part.dim(x), ds.module.dim(x));
    for (Index i = 0; i < part.dim(x); ++i) m(i, ds.offsets[k][static_cast<size_t>(x)] + i) = Fp(1);
    mats.push_back(std::move(m));
  }
  return ModMorphism(ds.module, part, std::move(mats));
}

// Cokernel of a random map between sums of projectives: finitely presented by
// construction and reproducible from the seed.
inline PersModule random_module(const std::shared_ptr<const Poset>& p, int gens, int rels,
                                std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pt(0, p->size() - 1);
  std::uniform_int_distribution<std::uint32_t> coef(0, Fp::modulus() - 1);
  std::vector<int> gpts, rpts;
  for (int i = 0; i < gens; ++i) gpts.push_back(pt(rng));
  for (int j = 0; j < rels; ++j) rpts.push_back(pt(rng));
  std::vector<PersModule> gmods, rmods;
  for (int g : gpts) gmods.push_back(projective(p, g));
  for (int r : rpts) rmods.push_back(projective(p, r));
  std::vector<const PersModule*> gptrs, rptrs;
  for (auto& m : gmods) gptrs.push_back(&m);
  for (auto& m : rmods) rptrs.push_back(&m);
  DirectSum gsum = direct_sum(p, gptrs), rsum = direct_sum(p, rptrs);
  std::vector<std::vector<Fp>> c(gpts.size(), std::vector<Fp>(rpts.size(), Fp(0)));
  for (size_t i = 0; i < gpts.size(); ++i)
    for (size_t j = 0; j < rpts.size(); ++j)
      c[i][j] = p->leq(gpts[i], rpts[j]) ? Fp(coef(rng)) : Fp(0);
  std::vector<Mat> mats;
  for (int x = 0; x < p->size(); ++x) {
    Mat m = Mat::Zero(gsum.module.dim(x), rsum.module.dim(x));
    for (size_t i = 0; i < gpts.size(); ++i)
      for (size_t j = 0; j < rpts.size(); ++j)
        if (p->leq(rpts[j], x) && p->leq(gpts[i], x))
          m(gsum.offsets[i][static_cast<size_t>(x)], rsum.offsets[j][static_cast<size_t>(x)]) = c[i][j];
    mats.push_back(std::move(m));
  }
  ModMorphism phi(rsum.module, gsum.module, std::move(mats));
  return cokernel(phi).module;
}

struct SpreadPresentation {
  std::vector<int> gens;              // minimal elements A
  std::vector<int> rels;              // pairwise joins A'
  ModMorphism syzygy;                 // sum of P_rel -> sum of P_gen
  ModMorphism onto_upset;             // sum of P_gen -> I_<A,inf<
  std::optional<ShortExactSeq> hook;  // 0 -> I_<B,inf< -> I_<A,inf< -> I_<A,B< -> 0
};

// Presentation of I_<A,inf< by projectives at A and their pairwise joins; for
// finite B additionally the quotient sequence cutting the spread out of the
// upset.  Grid posets only (joins required).
inline SpreadPresentation spread_presentation(const std::shared_ptr<const Poset>& p,
                                              const std::vector<int>& support) {
  if (!p->is_grid()) throw std::invalid_argument("presentation needs a grid poset");
  SpreadForm f = spread_form(*p, support);
  std::vector<int> gens = f.lower;
  std::vector<int> rels;
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j) rels.push_back(p->join(gens[i], gens[j]));
  std::sort(rels.begin(), rels.end());

  std::vector<PersModule> gmods, rmods;
  for (int g : gens) gmods.push_back(projective(p, g));
  for (int r : rels) rmods.push_back(projective(p, r));
  std::vector<const PersModule*> gptrs, rptrs;
  for (auto& m : gmods) gptrs.push_back(&m);
  for (auto& m : rmods) rptrs.push_back(&m);
  DirectSum gsum = direct_sum(p, gptrs), rsum = direct_sum(p, rptrs);

  // P_{x v y} -> P_x - P_y over the pairs in the same order rels was built
  std::vector<Mat> syz;
  for (int x = 0; x < p->size(); ++x)
    syz.push_back(Mat::Zero(gsum.module.dim(x), rsum.module.dim(x)));
  {
    std::vector<int> joined;
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j) joined.push_back(p->join(gens[i], gens[j]));
    // map each pair to the column of its join, respecting multiset order
    std::vector<int> sorted = joined;
    std::sort(sorted.begin(), sorted.end());
    std::vector<char> used(sorted.size(), 0);
    size_t pair_idx = 0;
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = i + 1; j < gens.size(); ++j, ++pair_idx) {
        size_t col = 0;
        for (; col < sorted.size(); ++col)
          if (!used[col] && sorted[col] == joined[pair_idx]) break;
        used[col] = 1;
        for (int x = 0; x < p->size(); ++x) {
          if (!p->leq(joined[pair_idx], x)) continue;
          syz[static_cast<size_t>(x)](gsum.offsets[i][static_cast<size_t>(x)],
                                      rsum.offsets[col][static_cast<size_t>(x)]) = Fp(1);
          syz[static_cast<size_t>(x)](gsum.offsets[j][static_cast<size_t>(x)],
                                      rsum.offsets[col][static_cast<size_t>(x)]) = Fp(-1);
        }
      }
  }
  ModMorphism syzygy(rsum.module, gsum.module, std::move(syz));

  std::vector<int> upset = up_set(*p, gens);
  PersModule iup = spread_module(p, upset);
  std::vector<Mat> onto;
  for (int x = 0; x < p->size(); ++x) {
    Mat m = Mat::Zero(iup.dim(x), gsum.module.dim(x));
    for (size_t i = 0; i < gens.size(); ++i)
      if (p->leq(gens[i], x)) m(0, gsum.offsets[i][static_cast<size_t>(x)]) = Fp(1);
    onto.push_back(std::move(m));
  }
  ModMorphism onto_upset(gsum.module, iup, std::move(onto));

  std::optional<ShortExactSeq> hook;
  if (!f.upper.empty()) {
    PersModule ib = spread_module(p, up_set(*p, f.upper));
    PersModule is = spread_module(p, support);
    std::vector<Mat> inc, quo;
    for (int x = 0; x < p->size(); ++x) {
      inc.push_back(ib.dim(x) ? Mat(Mat::Identity(1, 1)) : Mat(Mat::Zero(iup.dim(x), 0)));
      Mat q = Mat::Zero(is.dim(x), iup.dim(x));
      if (is.dim(x)) q(0, 0) = Fp(1);
      quo.push_back(std::move(q));
    }
    hook = make_ses(ModMorphism(ib, iup, std::move(inc)), ModMorphism(iup, is, std::move(quo)));
  }
  return {std::move(gens), std::move(rels), std::move(syzygy), std::move(onto_upset),
          std::move(hook)};
}

}  // namespace spreadhom
