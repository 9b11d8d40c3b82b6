#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spreadhom {

using Pt = std::vector<int>;

struct NotASpread : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite poset over dense ids 0..n-1.  Grid-built posets carry coordinates
// (product of chains, componentwise order, ids in lexicographic order so id
// order is a linear extension); relation-built posets are purely abstract.
class Poset {
 public:
  static Poset grid(const std::vector<int>& sizes) {
    Poset p;
    if (sizes.empty()) throw std::invalid_argument("grid needs at least one axis");
    int n = 1;
    for (int s : sizes) {
      if (s <= 0) throw std::invalid_argument("grid axis sizes must be positive");
      n *= s;
    }
    p.n_ = n;
    p.sizes_ = sizes;
    p.coords_.resize(n);
    Pt c(sizes.size(), 0);
    for (int i = 0; i < n; ++i) {
      p.coords_[i] = c;
      for (int ax = static_cast<int>(sizes.size()) - 1; ax >= 0; --ax) {
        if (++c[ax] < sizes[ax]) break;
        c[ax] = 0;
      }
    }
    p.leq_.assign(n, std::vector<char>(n, 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        bool le = true;
        for (size_t ax = 0; ax < sizes.size(); ++ax)
          if (p.coords_[a][ax] > p.coords_[b][ax]) {
            le = false;
            break;
          }
        p.leq_[a][b] = le;
      }
    p.finish();
    return p;
  }

  static Poset from_relation(int n, const std::vector<std::pair<int, int>>& pairs) {
    Poset p;
    if (n < 0) throw std::invalid_argument("negative poset size");
    p.n_ = n;
    p.leq_.assign(n, std::vector<char>(n, 0));
    for (int i = 0; i < n; ++i) p.leq_[i][i] = 1;
    for (auto [a, b] : pairs) {
      if (a < 0 || a >= n || b < 0 || b >= n) throw std::invalid_argument("relation point out of range");
      p.leq_[a][b] = 1;
    }
    for (int k = 0; k < n; ++k)
      for (int a = 0; a < n; ++a)
        if (p.leq_[a][k])
          for (int b = 0; b < n; ++b)
            if (p.leq_[k][b]) p.leq_[a][b] = 1;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (p.leq_[a][b] && p.leq_[b][a]) throw std::invalid_argument("relation is not antisymmetric");
    p.finish();
    return p;
  }

  static Poset chain(int n) { return grid({n}); }

  int size() const { return n_; }
  bool leq(int a, int b) const { return leq_[a][b] != 0; }
  bool lt(int a, int b) const { return a != b && leq_[a][b] != 0; }
  const std::vector<int>& covers_up(int a) const { return cup_[a]; }
  const std::vector<int>& covers_down(int a) const { return cdn_[a]; }
  const std::vector<std::pair<int, int>>& hasse() const { return hasse_; }
  const std::vector<int>& topo() const { return topo_; }

  bool is_grid() const { return !sizes_.empty(); }
  const std::vector<int>& sizes() const { return sizes_; }
  int grid_dim() const { return static_cast<int>(sizes_.size()); }

  const Pt& coords(int a) const { return coords_[a]; }

  int id(const Pt& c) const {
    if (c.size() != sizes_.size()) throw std::invalid_argument("wrong coordinate arity");
    int a = 0;
    for (size_t ax = 0; ax < sizes_.size(); ++ax) {
      if (c[ax] < 0 || c[ax] >= sizes_[ax]) throw std::invalid_argument("coordinate out of range");
      a = a * sizes_[ax] + c[ax];
    }
    return a;
  }

  int join(int a, int b) const {
    Pt c(sizes_.size());
    for (size_t ax = 0; ax < sizes_.size(); ++ax) c[ax] = std::max(coords_[a][ax], coords_[b][ax]);
    return id(c);
  }

  int meet(int a, int b) const {
    Pt c(sizes_.size());
    for (size_t ax = 0; ax < sizes_.size(); ++ax) c[ax] = std::min(coords_[a][ax], coords_[b][ax]);
    return id(c);
  }

  int bottom() const { return 0; }
  int top() const { return n_ - 1; }

 private:
  void finish() {
    cup_.assign(n_, {});
    cdn_.assign(n_, {});
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (!lt(a, b)) continue;
        bool cover = true;
        for (int c = 0; c < n_ && cover; ++c)
          if (lt(a, c) && lt(c, b)) cover = false;
        if (cover) {
          cup_[a].push_back(b);
          cdn_[b].push_back(a);
          hasse_.emplace_back(a, b);
        }
      }
    std::sort(hasse_.begin(), hasse_.end());
    // Kahn with smallest id first: deterministic linear extension
    std::vector<int> indeg(n_, 0);
    for (auto& [a, b] : hasse_) ++indeg[b], (void)a;
    std::vector<char> used(n_, 0);
    topo_.reserve(n_);
    for (int step = 0; step < n_; ++step) {
      int pick = -1;
      for (int a = 0; a < n_; ++a)
        if (!used[a] && indeg[a] == 0) {
          pick = a;
          break;
        }
      topo_.push_back(pick);
      used[pick] = 1;
      for (int b : cup_[pick]) --indeg[b];
    }
  }

  int n_ = 0;
  std::vector<std::vector<char>> leq_;
  std::vector<std::vector<int>> cup_, cdn_;
  std::vector<std::pair<int, int>> hasse_;
  std::vector<int> topo_;
  std::vector<int> sizes_;
  std::vector<Pt> coords_;
};

// Point sets are sorted id vectors throughout.

inline bool set_contains(const std::vector<int>& s, int x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline std::vector<int> set_minus(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline std::vector<int> set_intersect(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return r;
}

inline std::vector<int> up_set(const Poset& p, const std::vector<int>& s) {
  std::vector<int> r;
  for (int y = 0; y < p.size(); ++y)
    for (int x : s)
      if (p.leq(x, y)) {
        r.push_back(y);
        break;
      }
  return r;
}

inline std::vector<int> down_set(const Poset& p, const std::vector<int>& s) {
  std::vector<int> r;
  for (int y = 0; y < p.size(); ++y)
    for (int x : s)
      if (p.leq(y, x)) {
        r.push_back(y);
        break;
      }
  return r;
}

inline std::vector<int> minimals(const Poset& p, const std::vector<int>& s) {
  std::vector<int> r;
  for (int x : s) {
    bool min = true;
    for (int y : s)
      if (p.lt(y, x)) {
        min = false;
        break;
      }
    if (min) r.push_back(x);
  }
  return r;
}

inline std::vector<int> maximals(const Poset& p, const std::vector<int>& s) {
  std::vector<int> r;
  for (int x : s) {
    bool max = true;
    for (int y : s)
      if (p.lt(x, y)) {
        max = false;
        break;
      }
    if (max) r.push_back(x);
  }
  return r;
}

inline bool is_antichain(const Poset& p, const std::vector<int>& a) {
  for (int x : a)
    for (int y : a)
      if (x != y && p.leq(x, y)) return false;
  return true;
}

// A <= B iff some a <= b
inline bool antichain_leq(const Poset& p, const std::vector<int>& a, const std::vector<int>& b) {
  for (int x : a)
    for (int y : b)
      if (p.leq(x, y)) return true;
  return false;
}

inline bool set_leq_point(const Poset& p, const std::vector<int>& s, int x) {
  for (int y : s)
    if (p.leq(y, x)) return true;
  return false;
}

inline bool point_leq_set(const Poset& p, int x, const std::vector<int>& s) {
  for (int y : s)
    if (p.leq(x, y)) return true;
  return false;
}

// S covered by x from above: S <= x, x not in S, and everything strictly
// between S and x already lies in S.
inline bool set_covered_by_point(const Poset& p, const std::vector<int>& s, int x) {
  if (set_contains(s, x) || !set_leq_point(p, s, x)) return false;
  for (int y = 0; y < p.size(); ++y)
    if (p.lt(y, x) && set_leq_point(p, s, y) && !set_contains(s, y)) return false;
  return true;
}

// x covered by S from above: x <= S, x not in S, and everything strictly
// between x and S already lies in S.
inline bool point_covered_by_set(const Poset& p, int x, const std::vector<int>& s) {
  if (set_contains(s, x) || !point_leq_set(p, x, s)) return false;
  for (int y = 0; y < p.size(); ++y)
    if (p.lt(x, y) && point_leq_set(p, y, s) && !set_contains(s, y)) return false;
  return true;
}

inline std::vector<int> segment_set(const Poset& p, int a, int b) {
  std::vector<int> r;
  for (int c = 0; c < p.size(); ++c)
    if (p.leq(a, c) && p.leq(c, b)) r.push_back(c);
  return r;
}

// <A,B> = {c | A <= c <= B}
inline std::vector<int> closed_between(const Poset& p, const std::vector<int>& a,
                                       const std::vector<int>& b) {
  std::vector<int> r;
  for (int c = 0; c < p.size(); ++c)
    if (set_leq_point(p, a, c) && point_leq_set(p, c, b)) r.push_back(c);
  return r;
}

// >A,B> = down(B) \ down(A)
inline std::vector<int> cohook_set(const Poset& p, const std::vector<int>& a,
                                   const std::vector<int>& b) {
  return set_minus(down_set(p, b), down_set(p, a));
}

inline bool is_convex(const Poset& p, const std::vector<int>& s) {
  for (int x : s)
    for (int y : s) {
      if (!p.leq(x, y)) continue;
      for (int c = 0; c < p.size(); ++c)
        if (p.lt(x, c) && p.lt(c, y) && !set_contains(s, c)) return false;
    }
  return true;
}

inline std::vector<std::vector<int>> connected_components(const Poset& p,
                                                          const std::vector<int>& s) {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(s.size(), 0);
  for (size_t i = 0; i < s.size(); ++i) {
    if (seen[i]) continue;
    std::vector<size_t> stack{i};
    seen[i] = 1;
    std::vector<int> comp;
    while (!stack.empty()) {
      size_t j = stack.back();
      stack.pop_back();
      comp.push_back(s[j]);
      for (size_t k = 0; k < s.size(); ++k)
        if (!seen[k] && (p.leq(s[j], s[k]) || p.leq(s[k], s[j]))) {
          seen[k] = 1;
          stack.push_back(k);
        }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  std::sort(comps.begin(), comps.end());
  return comps;
}

inline bool is_connected(const Poset& p, const std::vector<int>& s) {
  return connected_components(p, s).size() <= 1;
}

inline bool is_spread(const Poset& p, const std::vector<int>& s) {
  return !s.empty() && is_convex(p, s) && is_connected(p, s);
}

// <A,B< = up(A) \ up(B); B empty encodes infinity.  Validates the result is a
// spread with minimal elements exactly A.
inline std::vector<int> materialize_spread(const Poset& p, const std::vector<int>& a,
                                           const std::vector<int>& b) {
  if (!is_antichain(p, a) || !is_antichain(p, b))
    throw std::invalid_argument("spread bounds must be antichains");
  std::vector<int> s = set_minus(up_set(p, a), up_set(p, b));
  if (s.empty()) throw NotASpread("empty point set");
  if (!is_connected(p, s)) throw NotASpread("disconnected point set");
  std::vector<int> amin = a;
  std::sort(amin.begin(), amin.end());
  if (minimals(p, s) != amin) throw NotASpread("lower bound is not the minimal set");
  return s;
}

struct SpreadForm {
  std::vector<int> lower;  // minimal elements
  std::vector<int> upper;  // min of up(lower) \ support; empty = infinity
};

inline SpreadForm spread_form(const Poset& p, const std::vector<int>& s) {
  SpreadForm f;
  f.lower = minimals(p, s);
  f.upper = minimals(p, set_minus(up_set(p, f.lower), s));
  return f;
}

}  // namespace spreadhom
