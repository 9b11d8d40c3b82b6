#pragma once

// Homological algebra relative to a spread family: minimal right
// approximations, the resolutions they generate, induced invariants, and the
// dimension scan over sampled modules.

#include <spreadhom/spreadcalc.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace spreadhom {

struct Truncated : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::vector<Index> dim_vector(const PersModule& m) {
  std::vector<Index> d;
  for (int x = 0; x < m.poset().size(); ++x) d.push_back(m.dim(x));
  return d;
}

inline std::vector<Index> dim_hom_vector(const PersModule& m, const Family& fam) {
  std::vector<Index> out;
  for (const PersModule& x : fam.members) out.push_back(hom_dim(x, m));
  return out;
}

// Covers need a precovering family; containing every indecomposable projective
// guarantees that and makes every cover pointwise surjective.
inline void require_projectives(const Family& fam) {
  for (int x = 0; x < fam.poset->size(); ++x)
    if (!fam.find(up_set(*fam.poset, {x})))
      throw std::invalid_argument("family must contain every indecomposable projective");
}

struct Cover {
  std::vector<Index> mult;         // per family member
  std::vector<std::size_t> parts;  // family index of each summand, member order
  DirectSum sum;
  ModMorphism map;  // sum.module -> M, the minimal right approximation
};

// Multiplicity of X_i is dim Hom(X_i, M) minus the span of composites through
// the other members; the family members are pairwise non-isomorphic bricks, so
// that span is the radical of Hom(-, M) at X_i.
inline Cover cover(const PersModule& m, const FamilyHom& fh) {
  const Family& fam = fh.family();
  require_projectives(fam);
  std::size_t n = fam.supports.size();
  std::vector<std::vector<ModMorphism>> hb(n);
  for (std::size_t j = 0; j < n; ++j) hb[j] = hom_basis(fam.members[j], m);

  std::vector<Index> mult(n, 0);
  std::vector<std::size_t> parts;
  std::vector<const ModMorphism*> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (hb[i].empty()) continue;
    IncrementalSpan span(flatten(hb[i][0]).size());
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      for (const ModMorphism& g : fh.basis(i, j))
        for (const ModMorphism& h : hb[j]) span.add(flatten(compose(h, g)));
    }
    for (const ModMorphism& h : hb[i])
      if (span.add(flatten(h))) {
        ++mult[i];
        parts.push_back(i);
        gens.push_back(&h);
      }
  }

  std::vector<const PersModule*> ptrs;
  for (std::size_t i : parts) ptrs.push_back(&fam.members[i]);
  DirectSum sum = direct_sum(fam.poset, ptrs);
  std::vector<Mat> mats;
  for (int x = 0; x < fam.poset->size(); ++x) {
    Mat mx = Mat::Zero(m.dim(x), sum.module.dim(x));
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Mat& g = gens[k]->at(x);
      if (g.cols() > 0) mx.block(0, sum.offsets[k][static_cast<std::size_t>(x)], g.rows(), g.cols()) = g;
    }
    mats.push_back(std::move(mx));
  }
  ModMorphism map(sum.module, m, std::move(mats));
  return {std::move(mult), std::move(parts), std::move(sum), std::move(map)};
}

struct Resolution {
  PersModule target;
  std::vector<Cover> steps;        // steps[k] covers the k-th syzygy, steps[0] the target
  std::vector<ModMorphism> diffs;  // diffs[k]: steps[k+1] term -> steps[k] term
  bool complete = true;            // syzygy reached zero within the cap

  // index of the last nonzero term; -1 for the zero module
  int length() const {
    int last = -1;
    for (std::size_t k = 0; k < steps.size(); ++k)
      if (!steps[k].parts.empty()) last = static_cast<int>(k);
    return last;
  }
};

// Iterated covers of kernels; every cover is surjective because the family
// contains the projectives, so the result is an exact sequence of modules.
inline Resolution minimal_resolution(const PersModule& m, const FamilyHom& fh, int max_len = -1) {
  if (max_len < 0) max_len = 2 * m.poset().size();
  Resolution res{m, {}, {}, true};
  PersModule cur = m;
  std::optional<ModMorphism> incl;  // current syzygy -> previous term
  for (int k = 0;; ++k) {
    if (k > max_len) {
      res.complete = false;
      break;
    }
    Cover c = cover(cur, fh);
    if (incl) res.diffs.push_back(compose(*incl, c.map));
    SubQuot ker = kernel(c.map);
    res.steps.push_back(std::move(c));
    if (ker.module.is_zero()) break;
    cur = ker.module;
    incl = std::move(ker.map);
  }
  return res;
}

inline std::optional<int> x_dimension(const PersModule& m, const FamilyHom& fh, int max_len = -1) {
  Resolution r = minimal_resolution(m, fh, max_len);
  if (!r.complete) return std::nullopt;
  return r.length();
}

// Net coefficient of each family member in the Euler characteristic of the
// minimal resolution.
inline std::vector<long> groth_class(const PersModule& m, const FamilyHom& fh, int max_len = -1) {
  Resolution r = minimal_resolution(m, fh, max_len);
  if (!r.complete) throw Truncated("resolution exceeds the length cap");
  std::vector<long> net(static_cast<std::size_t>(fh.family().size()), 0);
  for (std::size_t k = 0; k < r.steps.size(); ++k)
    for (std::size_t i = 0; i < net.size(); ++i)
      net[i] += (k % 2 == 0 ? 1 : -1) * static_cast<long>(r.steps[k].mult[i]);
  return net;
}

struct SignedDecomposition {
  std::vector<std::pair<std::size_t, long>> plus, minus;  // (family index, coefficient > 0)
};

inline SignedDecomposition minimal_signed_decomposition(const PersModule& m, const FamilyHom& fh,
                                                        int max_len = -1) {
  SignedDecomposition d;
  std::vector<long> net = groth_class(m, fh, max_len);
  for (std::size_t i = 0; i < net.size(); ++i) {
    if (net[i] > 0) d.plus.push_back({i, net[i]});
    if (net[i] < 0) d.minus.push_back({i, -net[i]});
  }
  return d;
}

// Membership in add of the family, tested as a section of the cover.
inline bool is_relative_projective(const PersModule& m, const FamilyHom& fh) {
  Cover c = cover(m, fh);
  std::vector<ModMorphism> hs = hom_basis(m, c.sum.module);
  Vec id = flatten(identity_morphism(m));
  Mat sys = Mat::Zero(id.size(), static_cast<Index>(hs.size()));
  for (std::size_t k = 0; k < hs.size(); ++k)
    sys.col(static_cast<Index>(k)) = flatten(compose(c.map, hs[k]));
  return solve(sys, Mat(id)).has_value();
}

// First family member X for which Hom(X, -) fails to keep the sequence exact;
// left exactness is automatic, so only lifting along the surjection is tested.
inline std::optional<std::size_t> fx_exact_violation(const ShortExactSeq& s, const Family& fam) {
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const PersModule& x = fam.members[i];
    Index want = hom_dim(x, s.surj.target());
    if (want == 0) continue;
    IncrementalSpan span(flatten(zero_morphism(x, s.surj.target())).size());
    for (const ModMorphism& h : hom_basis(x, s.surj.source()))
      span.add(flatten(compose(s.surj, h)));
    if (span.dim() < want) return i;
  }
  return std::nullopt;
}

inline bool is_fx_exact(const ShortExactSeq& s, const Family& fam) {
  return !fx_exact_violation(s, fam).has_value();
}

struct RankEntry {
  int x = 0, y = 0;
  Index rank = 0;
  friend bool operator==(const RankEntry&, const RankEntry&) = default;
};

// Rank of the structure map for every pair x <= y; cover steps compose to the
// same map along any maximal chain.
inline std::vector<RankEntry> rank_invariant(const PersModule& m) {
  const Poset& p = m.poset();
  std::vector<RankEntry> out;
  for (int x = 0; x < p.size(); ++x) {
    std::vector<Mat> comp(static_cast<std::size_t>(p.size()));
    comp[static_cast<std::size_t>(x)] = Mat::Identity(m.dim(x), m.dim(x));
    out.push_back({x, x, m.dim(x)});
    for (int y : p.topo()) {
      if (y == x || !p.leq(x, y)) continue;
      for (int z : p.covers_down(y))
        if (p.leq(x, z)) {
          comp[static_cast<std::size_t>(y)] =
              m.edge_map(z, y) * comp[static_cast<std::size_t>(z)];
          break;
        }
      out.push_back({x, y, rank(comp[static_cast<std::size_t>(y)])});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RankEntry& a, const RankEntry& b) { return std::tie(a.x, a.y) < std::tie(b.x, b.y); });
  return out;
}

struct BarcodeBar {
  int birth = 0;
  std::optional<int> death;  // first point outside the bar; nullopt runs to the top
  Index mult = 0;
};

// Interval multiplicities on a totally ordered poset by rank alternation.
// Bars are hook supports up(birth) minus up(death), or up(birth) when open.
inline std::vector<BarcodeBar> barcode_1d(const PersModule& m) {
  const Poset& p = m.poset();
  std::vector<int> ord = p.topo();
  int n = p.size();
  for (std::size_t i = 0; i + 1 < ord.size(); ++i)
    if (!p.leq(ord[i], ord[i + 1]))
      throw std::invalid_argument("barcode needs a totally ordered poset");
  std::vector<int> pos(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(ord[static_cast<std::size_t>(i)])] = i;
  std::vector<Index> table(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
  for (const RankEntry& e : rank_invariant(m))
    table[static_cast<std::size_t>(pos[static_cast<std::size_t>(e.x)]) * static_cast<std::size_t>(n) +
          static_cast<std::size_t>(pos[static_cast<std::size_t>(e.y)])] = e.rank;
  auto rk = [&](int i, int j) -> Index {
    if (i < 0 || j >= n || i > j) return 0;
    return table[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)];
  };
  std::vector<BarcodeBar> bars;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      Index mult = rk(i, j) - rk(i - 1, j) - rk(i, j + 1) + rk(i - 1, j + 1);
      if (mult > 0) {
        std::optional<int> death;
        if (j + 1 < n) death = ord[static_cast<std::size_t>(j + 1)];
        bars.push_back({ord[static_cast<std::size_t>(i)], death, mult});
      }
    }
  return bars;
}

struct ScanReport {
  int max_dim = -1;
  std::string attained_on;  // label of a candidate attaining max_dim
  std::size_t tested = 0;
  std::size_t capped = 0;  // candidates whose resolution hit the length cap
};

// Longest minimal resolution over an explicit candidate list.
inline ScanReport family_gl_dim_scan(const Family& fam, const std::vector<PersModule>& candidates,
                                     int max_len = -1) {
  FamilyHom fh(fam);
  ScanReport rep;
  for (std::size_t k = 0; k < candidates.size(); ++k) {
    ++rep.tested;
    auto d = x_dimension(candidates[k], fh, max_len);
    if (!d) {
      ++rep.capped;
      continue;
    }
    if (*d > rep.max_dim) {
      rep.max_dim = *d;
      rep.attained_on = "candidate " + std::to_string(k);
    }
  }
  return rep;
}

// Lower bound for the relative dimension of the module category: the longest
// minimal resolution over simples, spread modules, and random modules.
inline ScanReport family_gl_dim_scan(const Family& fam, int max_len = -1, int n_random = 100,
                                     std::uint64_t seed = 0) {
  const auto& p = fam.poset;
  FamilyHom fh(fam);
  ScanReport rep;
  auto consider = [&](const PersModule& m, const std::string& label) {
    ++rep.tested;
    auto d = x_dimension(m, fh, max_len);
    if (!d) {
      ++rep.capped;
      return;
    }
    if (*d > rep.max_dim) {
      rep.max_dim = *d;
      rep.attained_on = label;
    }
  };
  for (int x = 0; x < p->size(); ++x) consider(simple(p, x), "simple at " + point_label(*p, x));
  try {
    for (auto& s : enumerate_family(p, FamilyKind::spreads).supports)
      consider(spread_module(p, s), "spread " + spread_label(*p, s));
  } catch (const TooLarge&) {
    // too many spreads to sweep; simples and random modules still apply
  }
  for (int k = 0; k < n_random; ++k)
    consider(random_module(p, 1 + k % 3, 1 + (k / 3) % 3, seed + static_cast<std::uint64_t>(k)),
             "random module " + std::to_string(k));
  return rep;
}

}  // namespace spreadhom
