#pragma once

// Change of grid along an aligned subgrid: restriction, extension, and
// contraction of persistence modules, the unit and counit joining them,
// finitely presented modules with window independent bases, and the checks a
// family must pass to resolve through local grids.

#include <spreadhom/rha.hpp>
#include <spreadhom/subgrid.hpp>

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spreadhom {

struct SupportOutsideQPlus : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::shared_ptr<const Poset> grid_poset(const std::vector<int>& sizes) {
  return std::make_shared<const Poset>(Poset::grid(sizes));
}

inline AlignedSubgrid full_window(const Poset& p) {
  if (!p.is_grid()) throw std::invalid_argument("grid poset required");
  return AlignedSubgrid::full(p.sizes());
}

// q rewritten in the local coordinates of a window containing it.
inline AlignedSubgrid localize(const AlignedSubgrid& q, const AlignedSubgrid& window) {
  if (!window.contains_grid(q)) throw std::invalid_argument("subgrid leaves the window");
  std::vector<std::vector<int>> axes(q.axes().size());
  for (std::size_t i = 0; i < axes.size(); ++i) {
    const std::vector<int>& wa = window.axes()[i];
    for (int v : q.axes()[i])
      axes[i].push_back(static_cast<int>(std::lower_bound(wa.begin(), wa.end(), v) - wa.begin()));
  }
  return AlignedSubgrid(axes);
}

// Precomposition with the subgrid inclusion; the result lives over the local
// grid of q.
inline PersModule restrict_module(const PersModule& m, const AlignedSubgrid& q) {
  const Poset& p = m.poset();
  if (!full_window(p).contains_grid(q))
    throw std::invalid_argument("subgrid leaves the ambient grid");
  auto lp = grid_poset(q.sizes());
  auto amb = [&](int y) { return p.id(q.to_ambient(lp->coords(y))); };
  std::vector<Index> dims;
  for (int y = 0; y < lp->size(); ++y) dims.push_back(m.dim(amb(y)));
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& [y, yp] : lp->hasse()) maps[{y, yp}] = m.map(amb(y), amb(yp));
  return PersModule(lp, std::move(dims), std::move(maps));
}

inline ModMorphism restrict_morphism(const ModMorphism& f, const AlignedSubgrid& q) {
  PersModule src = restrict_module(f.source(), q);
  PersModule tgt = restrict_module(f.target(), q);
  const Poset& p = f.source().poset();
  const Poset& lp = src.poset();
  std::vector<Mat> mats;
  for (int y = 0; y < lp.size(); ++y) mats.push_back(f.at(p.id(q.to_ambient(lp.coords(y)))));
  return ModMorphism(std::move(src), std::move(tgt), std::move(mats));
}

// Value at x is n at the floor of x over the upper set of q, zero elsewhere.
inline PersModule extend_module(const PersModule& n, const AlignedSubgrid& q,
                                const AlignedSubgrid& target) {
  if (n.poset().sizes() != q.sizes())
    throw std::invalid_argument("module does not live over the local grid of q");
  if (!target.contains_grid(q)) throw std::invalid_argument("extension target must contain q");
  const Poset& np = n.poset();
  auto tp = grid_poset(target.sizes());
  auto fl = [&](int x) { return np.id(q.to_local(q.floor(target.to_ambient(tp->coords(x))))); };
  std::vector<char> inq(static_cast<std::size_t>(tp->size()), 0);
  std::vector<Index> dims;
  for (int x = 0; x < tp->size(); ++x) {
    inq[static_cast<std::size_t>(x)] = q.in_upper(target.to_ambient(tp->coords(x))) ? 1 : 0;
    dims.push_back(inq[static_cast<std::size_t>(x)] ? n.dim(fl(x)) : 0);
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& [x, xp] : tp->hasse())
    if (inq[static_cast<std::size_t>(x)] && inq[static_cast<std::size_t>(xp)])
      maps[{x, xp}] = n.map(fl(x), fl(xp));
  return PersModule(tp, std::move(dims), std::move(maps));
}

inline ModMorphism extend_morphism(const ModMorphism& f, const AlignedSubgrid& q,
                                   const AlignedSubgrid& target) {
  PersModule src = extend_module(f.source(), q, target);
  PersModule tgt = extend_module(f.target(), q, target);
  const Poset& np = f.source().poset();
  const Poset& tp = src.poset();
  std::vector<Mat> mats;
  for (int x = 0; x < tp.size(); ++x) {
    Pt c = target.to_ambient(tp.coords(x));
    if (q.in_upper(c))
      mats.push_back(f.at(np.id(q.to_local(q.floor(c)))));
    else
      mats.push_back(Mat::Zero(0, 0));
  }
  return ModMorphism(std::move(src), std::move(tgt), std::move(mats));
}

inline void require_support_in_upper(const PersModule& m, const AlignedSubgrid& q) {
  const Poset& p = m.poset();
  for (int x : module_support(m))
    if (!q.in_upper(p.coords(x)))
      throw SupportOutsideQPlus("module support leaves the upper set of the subgrid");
}

struct ContractionData {
  std::shared_ptr<const Poset> local;
  std::vector<int> top;  // ambient id of the ceiling class top per local point
};

inline ContractionData contraction_data(const Poset& p, const AlignedSubgrid& q) {
  AlignedSubgrid window = full_window(p);
  if (!window.contains_grid(q)) throw std::invalid_argument("subgrid leaves the ambient grid");
  ContractionData cd;
  cd.local = grid_poset(q.sizes());
  for (int y = 0; y < cd.local->size(); ++y)
    cd.top.push_back(p.id(ceil_class_max(q, q.to_ambient(cd.local->coords(y)), window)));
  return cd;
}

// The colimit over one ceiling class as a cokernel of the edge relations; it
// must be realized by the structure maps into the class top.
inline void verify_class_colimit(const PersModule& m, const std::vector<Pt>& cls, int top) {
  const Poset& p = m.poset();
  std::vector<int> ids;
  for (const Pt& c : cls) ids.push_back(p.id(c));
  std::sort(ids.begin(), ids.end());
  Index total = 0;
  std::map<int, Index> off;
  for (int u : ids) {
    off[u] = total;
    total += m.dim(u);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u : ids)
    for (int v : ids)
      if (p.lt(u, v)) {
        bool covered = false;
        for (int w : ids)
          if (w != u && w != v && p.lt(u, w) && p.lt(w, v)) {
            covered = true;
            break;
          }
        if (!covered) edges.emplace_back(u, v);
      }
  Index ecols = 0;
  for (const auto& [u, v] : edges) ecols += m.dim(u);
  Mat e = Mat::Zero(total, ecols);
  Index c0 = 0;
  for (const auto& [u, v] : edges) {
    Index d = m.dim(u);
    e.block(off[u], c0, d, d) = Mat::Identity(d, d);
    e.block(off[v], c0, m.dim(v), d) -= m.map(u, v);
    c0 += d;
  }
  Cokernel ck = cokernel_projection(e);
  if (ck.proj.rows() != m.dim(top))
    throw std::logic_error("colimit dimension disagrees with the class top");
  Mat comp = ck.proj.block(0, off[top], ck.proj.rows(), m.dim(top));
  if (static_cast<Index>(rref(comp).pivots.size()) != m.dim(top))
    throw std::logic_error("class top does not realize the colimit");
}

// Filtered colimit over each ceiling class, read off at the class top.
inline PersModule contract_module(const PersModule& m, const AlignedSubgrid& q) {
  const Poset& p = m.poset();
  require_support_in_upper(m, q);
  ContractionData cd = contraction_data(p, q);
  AlignedSubgrid window = full_window(p);
  std::vector<Index> dims;
  for (int y = 0; y < cd.local->size(); ++y) {
    dims.push_back(m.dim(cd.top[static_cast<std::size_t>(y)]));
    verify_class_colimit(m, ceil_class(q, q.to_ambient(cd.local->coords(y)), window),
                         cd.top[static_cast<std::size_t>(y)]);
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& [y, yp] : cd.local->hasse())
    maps[{y, yp}] = m.map(cd.top[static_cast<std::size_t>(y)], cd.top[static_cast<std::size_t>(yp)]);
  return PersModule(cd.local, std::move(dims), std::move(maps));
}

inline ModMorphism contract_morphism(const ModMorphism& f, const AlignedSubgrid& q) {
  PersModule src = contract_module(f.source(), q);
  PersModule tgt = contract_module(f.target(), q);
  ContractionData cd = contraction_data(f.source().poset(), q);
  std::vector<Mat> mats;
  for (int y = 0; y < cd.local->size(); ++y) mats.push_back(f.at(cd.top[static_cast<std::size_t>(y)]));
  return ModMorphism(std::move(src), std::move(tgt), std::move(mats));
}

// Extension of the restriction, mapped into m by the structure maps out of the
// floor; an isomorphism exactly when m is presented inside q.
inline ModMorphism counit(const PersModule& m, const AlignedSubgrid& q) {
  const Poset& p = m.poset();
  PersModule src = extend_module(restrict_module(m, q), q, full_window(p));
  std::vector<Mat> mats;
  for (int x = 0; x < p.size(); ++x) {
    Pt c = p.coords(x);
    if (q.in_upper(c))
      mats.push_back(m.map(p.id(q.floor(c)), x));
    else
      mats.push_back(Mat::Zero(m.dim(x), 0));
  }
  return ModMorphism(std::move(src), PersModule(m), std::move(mats));
}

// Structure maps into the class tops, landing in the extension of the
// contraction; needs the support of m inside the upper set of q.
inline ModMorphism unit(const PersModule& m, const AlignedSubgrid& q) {
  const Poset& p = m.poset();
  require_support_in_upper(m, q);
  PersModule tgt = extend_module(contract_module(m, q), q, full_window(p));
  ContractionData cd = contraction_data(p, q);
  std::vector<Mat> mats;
  for (int x = 0; x < p.size(); ++x) {
    Pt c = p.coords(x);
    if (q.in_upper(c)) {
      int y = cd.local->id(q.to_local(q.floor(c)));
      mats.push_back(m.map(x, cd.top[static_cast<std::size_t>(y)]));
    } else {
      mats.push_back(Mat::Zero(0, m.dim(x)));
    }
  }
  return ModMorphism(PersModule(m), std::move(tgt), std::move(mats));
}

// A finitely presented module recorded by generator and relation points with
// the matrix of the presentation between the corresponding projectives.
struct PresentedModule {
  std::vector<Pt> gens, rels;
  std::vector<std::vector<Fp>> mat;  // gens x rels, zero unless gen <= rel
};

inline void validate_presentation(const PresentedModule& pm) {
  if (pm.mat.size() != pm.gens.size())
    throw std::invalid_argument("presentation matrix has the wrong shape");
  for (const auto& row : pm.mat)
    if (row.size() != pm.rels.size())
      throw std::invalid_argument("presentation matrix has the wrong shape");
  for (std::size_t g = 0; g < pm.gens.size(); ++g)
    for (std::size_t r = 0; r < pm.rels.size(); ++r)
      if (pm.mat[g][r] != Fp(0) && !pt_leq(pm.gens[g], pm.rels[r]))
        throw std::invalid_argument("presentation entry between incomparable points");
}

// Minimal projective presentation extracted from two covers; the points are
// the generators of the projective summands.
inline PresentedModule minimal_presentation(const PersModule& m) {
  auto p = m.poset_ptr();
  if (!p->is_grid()) throw std::invalid_argument("grid poset required");
  Family proj = enumerate_family(p, FamilyKind::projectives);
  FamilyHom fh(proj);
  Cover c0 = cover(m, fh);
  SubQuot k = kernel(c0.map);
  Cover c1 = cover(k.module, fh);
  ModMorphism psi = compose(k.map, c1.map);
  PresentedModule pm;
  for (std::size_t i = 0; i < c0.parts.size(); ++i)
    pm.gens.push_back(p->coords(minimals(*p, proj.supports[c0.parts[i]])[0]));
  for (std::size_t j = 0; j < c1.parts.size(); ++j)
    pm.rels.push_back(p->coords(minimals(*p, proj.supports[c1.parts[j]])[0]));
  pm.mat.assign(pm.gens.size(), std::vector<Fp>(pm.rels.size(), Fp(0)));
  for (std::size_t j = 0; j < c1.parts.size(); ++j) {
    int z = p->id(pm.rels[j]);
    Vec col = psi.at(z).col(c1.sum.offsets[j][static_cast<std::size_t>(z)]);
    for (std::size_t i = 0; i < c0.parts.size(); ++i)
      if (p->leq(p->id(pm.gens[i]), z))
        pm.mat[i][j] = col(c0.sum.offsets[i][static_cast<std::size_t>(z)]);
  }
  return pm;
}

// Grid closure of the generator and relation points; empty for the zero
// module.
inline std::optional<AlignedSubgrid> lgrid(const PresentedModule& pm) {
  std::vector<Pt> pts = pm.gens;
  pts.insert(pts.end(), pm.rels.begin(), pm.rels.end());
  if (pts.empty()) return std::nullopt;
  return AlignedSubgrid::closure(pts);
}

// The same presentation read in the ambient coordinates of q.
inline PresentedModule extend_presented(const PresentedModule& pm, const AlignedSubgrid& q) {
  PresentedModule out;
  for (const Pt& g : pm.gens) out.gens.push_back(q.to_ambient(g));
  for (const Pt& r : pm.rels) out.rels.push_back(q.to_ambient(r));
  out.mat = pm.mat;
  return out;
}

// Pointwise cokernels of the presentation over the window, written in the
// complement bases of the relation image, so realizations over two windows
// agree literally at shared ambient points.
inline PersModule realize_module(const PresentedModule& pm, const AlignedSubgrid& window) {
  validate_presentation(pm);
  for (const Pt& g : pm.gens)
    if (!window.contains(g)) throw std::invalid_argument("window misses a generator point");
  for (const Pt& r : pm.rels)
    if (!window.contains(r)) throw std::invalid_argument("window misses a relation point");
  auto lp = grid_poset(window.sizes());
  int n = lp->size();
  std::vector<std::vector<std::size_t>> alive(static_cast<std::size_t>(n));
  std::vector<Cokernel> cks(static_cast<std::size_t>(n));
  std::vector<Index> dims(static_cast<std::size_t>(n));
  for (int x = 0; x < n; ++x) {
    Pt a = window.to_ambient(lp->coords(x));
    std::vector<std::size_t> rows, cols;
    for (std::size_t g = 0; g < pm.gens.size(); ++g)
      if (pt_leq(pm.gens[g], a)) rows.push_back(g);
    for (std::size_t r = 0; r < pm.rels.size(); ++r)
      if (pt_leq(pm.rels[r], a)) cols.push_back(r);
    Mat b = Mat::Zero(static_cast<Index>(rows.size()), static_cast<Index>(cols.size()));
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols.size(); ++j) b(i, j) = pm.mat[rows[i]][cols[j]];
    cks[static_cast<std::size_t>(x)] = cokernel_projection(b);
    alive[static_cast<std::size_t>(x)] = std::move(rows);
    dims[static_cast<std::size_t>(x)] = cks[static_cast<std::size_t>(x)].proj.rows();
  }
  std::map<std::pair<int, int>, Mat> maps;
  for (const auto& [x, y] : lp->hasse()) {
    const auto& ax = alive[static_cast<std::size_t>(x)];
    const auto& ay = alive[static_cast<std::size_t>(y)];
    Mat s = Mat::Zero(static_cast<Index>(ay.size()), dims[static_cast<std::size_t>(x)]);
    for (Index j = 0; j < dims[static_cast<std::size_t>(x)]; ++j) {
      std::size_t g = ax[static_cast<std::size_t>(cks[static_cast<std::size_t>(x)].complement[static_cast<std::size_t>(j)])];
      std::size_t iy = static_cast<std::size_t>(
          std::lower_bound(ay.begin(), ay.end(), g) - ay.begin());
      s(static_cast<Index>(iy), j) = Fp(1);
    }
    maps[{x, y}] = cks[static_cast<std::size_t>(y)].proj * s;
  }
  return PersModule(lp, std::move(dims), std::move(maps));
}

struct ConditionWitness {
  int condition = 0;
  std::size_t grid = 0;
  std::string detail;
  std::vector<int> member_support;  // on the bound poset, when a member witnesses
  std::optional<Pt> class_point;    // subgrid point whose extended simple receives a hom
};

struct ClassCheckReport {
  std::optional<ConditionWitness> violation;
  std::size_t grids_checked = 0;
  bool pass() const { return !violation.has_value(); }
};

// Conditions for resolving over the bound through the local grids: the family
// and each local family carry the projectives, extensions of local members
// stay in the family and exhaust it, contractions land in the local families,
// members supported outside an upper set admit no homs into extensions, and
// each supplied module is presented inside some grid.  Reports the first
// violation.
inline ClassCheckReport check_extended_class(const std::shared_ptr<const Poset>& bound,
                                             const std::vector<AlignedSubgrid>& grids,
                                             FamilyKind kind,
                                             const std::vector<PersModule>& test_modules = {}) {
  const Poset& p = *bound;
  AlignedSubgrid window = full_window(p);
  for (const auto& q : grids)
    if (!window.contains_grid(q)) throw std::invalid_argument("subgrid leaves the bound");
  for (int x = 0; x < p.size(); ++x) {
    bool hit = false;
    for (const auto& q : grids)
      if (q.contains(p.coords(x))) {
        hit = true;
        break;
      }
    if (!hit) throw std::invalid_argument("grids do not cover the bound");
  }
  Family fam = family_with_projectives(bound, kind);
  std::vector<std::shared_ptr<const Poset>> locals;
  std::vector<Family> locfams;
  for (const auto& q : grids) {
    locals.push_back(grid_poset(q.sizes()));
    locfams.push_back(family_with_projectives(locals.back(), kind));
  }
  ClassCheckReport rep;
  rep.grids_checked = grids.size();
  auto fail = [&](int cond, std::size_t gi, std::string detail, std::vector<int> supp = {},
                  std::optional<Pt> cp = std::nullopt) {
    rep.violation = ConditionWitness{cond, gi, std::move(detail), std::move(supp), std::move(cp)};
  };

  for (int x = 0; x < p.size(); ++x)
    if (!fam.find(up_set(p, {x}))) {
      fail(1, 0, "projective missing over the bound", up_set(p, {x}));
      return rep;
    }
  for (std::size_t gi = 0; gi < grids.size(); ++gi)
    for (int y = 0; y < locals[gi]->size(); ++y)
      if (!locfams[gi].find(up_set(*locals[gi], {y}))) {
        fail(2, gi, "projective missing over a local grid");
        return rep;
      }

  for (std::size_t gi = 0; gi < grids.size(); ++gi)
    for (std::size_t j = 0; j < locfams[gi].size(); ++j) {
      std::vector<int> s = module_support(extend_module(locfams[gi].members[j], grids[gi], window));
      if (!fam.find(s)) {
        fail(3, gi, "extension of a local member leaves the family", s);
        return rep;
      }
    }
  for (std::size_t i = 0; i < fam.size(); ++i) {
    bool arises = false;
    for (std::size_t gi = 0; gi < grids.size() && !arises; ++gi) {
      bool inside = true;
      for (int x : fam.supports[i])
        if (!grids[gi].in_upper(p.coords(x))) {
          inside = false;
          break;
        }
      if (!inside) continue;
      PersModule c = contract_module(fam.members[i], grids[gi]);
      std::vector<int> s = module_support(c);
      if (s.empty() || !locfams[gi].find(s)) continue;
      if (module_support(extend_module(c, grids[gi], window)) == fam.supports[i]) arises = true;
    }
    if (!arises) {
      fail(3, 0, "member is not the extension of any local member", fam.supports[i]);
      return rep;
    }
  }

  for (std::size_t gi = 0; gi < grids.size(); ++gi) {
    for (std::size_t i = 0; i < fam.size(); ++i) {
      bool inside = true;
      for (int x : fam.supports[i])
        if (!grids[gi].in_upper(p.coords(x))) {
          inside = false;
          break;
        }
      if (!inside) continue;
      std::vector<int> s = module_support(contract_module(fam.members[i], grids[gi]));
      if (!s.empty() && !locfams[gi].find(s)) {
        fail(4, gi, "contraction of a member leaves the local family", fam.supports[i]);
        return rep;
      }
    }
    for (std::size_t j = 0; j < locfams[gi].size(); ++j) {
      PersModule e = extend_module(locfams[gi].members[j], grids[gi], window);
      if (module_support(contract_module(e, grids[gi])) != locfams[gi].supports[j]) {
        fail(4, gi, "local member is not recovered from its extension", locfams[gi].supports[j]);
        return rep;
      }
    }
  }

  for (std::size_t gi = 0; gi < grids.size(); ++gi)
    for (std::size_t i = 0; i < fam.size(); ++i) {
      bool inside = true;
      for (int x : fam.supports[i])
        if (!grids[gi].in_upper(p.coords(x))) {
          inside = false;
          break;
        }
      if (inside) continue;
      for (const Pt& y : grids[gi].points()) {
        std::vector<int> cls;
        for (const Pt& c : ceil_class(grids[gi], y, window)) cls.push_back(p.id(c));
        std::sort(cls.begin(), cls.end());
        if (hom_dim(fam.members[i], spread_module(bound, cls)) > 0) {
          fail(5, gi, "member outside the upper set admits a hom into an extended simple",
               fam.supports[i], y);
          return rep;
        }
      }
    }

  for (std::size_t k = 0; k < test_modules.size(); ++k) {
    auto lg = lgrid(minimal_presentation(test_modules[k]));
    if (!lg) continue;
    bool fits = false;
    for (const auto& q : grids)
      if (q.contains_grid(*lg)) {
        fits = true;
        break;
      }
    if (!fits) {
      fail(6, 0, "no grid contains the presentation closure of test module " + std::to_string(k));
      return rep;
    }
  }
  return rep;
}

struct PrecoverProbe {
  std::vector<std::vector<int>> candidates;  // upset supports on the bound poset
  std::vector<std::size_t> chain;            // each entry factors through the next
  std::size_t chain_steps = 0;
  bool chain_verified = false;
  bool clipped = false;           // the ascent only stops at the lowest row of the window
  bool genuine_precover = false;  // a single candidate absorbs every map
};

// Hook <(r,t),(s,t)< against the upsets generated by the hook corner and
// points at first coordinate >= s strictly below it.  Each candidate map
// factors properly through the next larger candidate, so within the window
// only the clipped top absorbs them all.
inline PrecoverProbe upset_precover_probe(const std::shared_ptr<const Poset>& bound, int r,
                                          int s, int t) {
  const Poset& p = *bound;
  if (!p.is_grid() || p.grid_dim() != 2)
    throw std::invalid_argument("two dimensional grid required");
  if (r >= s) throw std::invalid_argument("hook needs r < s");
  int a = p.id({r, t});
  int b = p.id({s, t});
  PersModule x = spread_module(bound, set_minus(up_set(p, {a}), up_set(p, {b})));
  std::vector<int> region;
  for (int u = 0; u < p.size(); ++u)
    if (p.coords(u)[0] >= s && p.coords(u)[1] < t) region.push_back(u);
  PrecoverProbe probe;
  for (auto& ac : antichains_in(p, region, kFamilyCap)) {
    ac.push_back(a);
    std::sort(ac.begin(), ac.end());
    probe.candidates.push_back(up_set(p, ac));
  }
  std::sort(probe.candidates.begin(), probe.candidates.end());
  std::vector<PersModule> mods;
  std::vector<ModMorphism> homs;
  bool ok = true;
  for (const auto& supp : probe.candidates) {
    mods.push_back(spread_module(bound, supp));
    std::vector<ModMorphism> basis = hom_basis(mods.back(), x);
    if (basis.size() != 1) ok = false;
    homs.push_back(basis.empty() ? zero_morphism(mods.back(), x) : basis[0]);
  }
  auto subset = [](const std::vector<int>& u, const std::vector<int>& v) {
    return u.size() < v.size() && std::includes(v.begin(), v.end(), u.begin(), u.end());
  };
  std::size_t n = probe.candidates.size();
  std::vector<std::size_t> len(n, 1), nxt(n, n);
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return probe.candidates[i].size() > probe.candidates[j].size();
  });
  for (std::size_t oi : order)
    for (std::size_t j = 0; j < n; ++j)
      if (subset(probe.candidates[oi], probe.candidates[j]) && len[j] + 1 > len[oi]) {
        len[oi] = len[j] + 1;
        nxt[oi] = j;
      }
  std::size_t start = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (len[i] > len[start]) start = i;
  for (std::size_t i = start; i != n; i = nxt[i]) probe.chain.push_back(i);
  probe.chain_steps = probe.chain.size() - 1;
  for (std::size_t k = 0; k + 1 < probe.chain.size(); ++k) {
    std::size_t i = probe.chain[k], j = probe.chain[k + 1];
    std::vector<ModMorphism> gb = hom_basis(mods[i], mods[j]);
    Mat sys(flatten(homs[i]).size(), static_cast<Index>(gb.size()));
    for (std::size_t c = 0; c < gb.size(); ++c) sys.col(c) = flatten(compose(homs[j], gb[c]));
    if (!solve(sys, Mat(flatten(homs[i])))) ok = false;
  }
  probe.chain_verified = ok;
  for (int g : minimals(p, probe.candidates[probe.chain.back()]))
    if (p.coords(g)[1] == 0 && t > 0) probe.clipped = true;
  probe.genuine_precover = !probe.clipped && n == 1;
  return probe;
}

}  // namespace spreadhom
