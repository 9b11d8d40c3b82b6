#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "spreadhom/poset.hpp"

namespace spreadhom {

inline bool pt_leq(const Pt& a, const Pt& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Pt pt_join(const Pt& a, const Pt& b) {
  Pt c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = std::max(a[i], b[i]);
  return c;
}

// Product of per-axis value subsets inside a conceptual ambient grid; the
// coordinates are ambient integers, not local indices.
class AlignedSubgrid {
 public:
  explicit AlignedSubgrid(std::vector<std::vector<int>> axes) : axes_(std::move(axes)) {
    if (axes_.empty()) throw std::invalid_argument("subgrid needs at least one axis");
    for (auto& ax : axes_) {
      std::sort(ax.begin(), ax.end());
      ax.erase(std::unique(ax.begin(), ax.end()), ax.end());
      if (ax.empty()) throw std::invalid_argument("subgrid axis is empty");
    }
  }

  // Smallest aligned subgrid containing the points: per-axis projections.
  static AlignedSubgrid closure(const std::vector<Pt>& pts) {
    if (pts.empty()) throw std::invalid_argument("closure of no points");
    std::vector<std::vector<int>> axes(pts[0].size());
    for (const Pt& x : pts) {
      if (x.size() != axes.size()) throw std::invalid_argument("mixed point arity");
      for (size_t i = 0; i < axes.size(); ++i) axes[i].push_back(x[i]);
    }
    return AlignedSubgrid(std::move(axes));
  }

  // Rejects point sets that are not exactly a product of projections.
  static AlignedSubgrid from_points(const std::vector<Pt>& pts) {
    AlignedSubgrid g = closure(pts);
    std::set<Pt> have(pts.begin(), pts.end());
    if (static_cast<int>(have.size()) != g.point_count())
      throw std::invalid_argument("point set is not an aligned subgrid");
    return g;
  }

  static AlignedSubgrid full(const std::vector<int>& sizes) {
    std::vector<std::vector<int>> axes(sizes.size());
    for (size_t i = 0; i < sizes.size(); ++i)
      for (int v = 0; v < sizes[i]; ++v) axes[i].push_back(v);
    return AlignedSubgrid(std::move(axes));
  }

  int dim() const { return static_cast<int>(axes_.size()); }
  const std::vector<std::vector<int>>& axes() const { return axes_; }

  std::vector<int> sizes() const {
    std::vector<int> s;
    for (auto& ax : axes_) s.push_back(static_cast<int>(ax.size()));
    return s;
  }

  int point_count() const {
    int n = 1;
    for (auto& ax : axes_) n *= static_cast<int>(ax.size());
    return n;
  }

  std::vector<Pt> points() const {
    std::vector<Pt> pts;
    Pt idx(axes_.size(), 0);
    for (int k = 0; k < point_count(); ++k) {
      Pt x(axes_.size());
      for (size_t i = 0; i < axes_.size(); ++i) x[i] = axes_[i][static_cast<size_t>(idx[i])];
      pts.push_back(std::move(x));
      for (int i = static_cast<int>(axes_.size()) - 1; i >= 0; --i) {
        if (++idx[static_cast<size_t>(i)] < static_cast<int>(axes_[static_cast<size_t>(i)].size())) break;
        idx[static_cast<size_t>(i)] = 0;
      }
    }
    return pts;
  }

  bool contains(const Pt& x) const {
    if (x.size() != axes_.size()) return false;
    for (size_t i = 0; i < axes_.size(); ++i)
      if (!std::binary_search(axes_[i].begin(), axes_[i].end(), x[i])) return false;
    return true;
  }

  bool contains_grid(const AlignedSubgrid& q) const {
    if (q.dim() != dim()) return false;
    for (size_t i = 0; i < axes_.size(); ++i)
      for (int v : q.axes_[i])
        if (!std::binary_search(axes_[i].begin(), axes_[i].end(), v)) return false;
    return true;
  }

  // membership in Q+ = {x | some q in Q has q <= x}
  bool in_upper(const Pt& x) const {
    for (size_t i = 0; i < axes_.size(); ++i)
      if (x[i] < axes_[i].front()) return false;
    return true;
  }

  // max{y in Q | y <= x}, componentwise because Q is a product
  Pt floor(const Pt& x) const {
    if (!in_upper(x)) throw std::domain_error("floor of a point below the subgrid");
    Pt y(axes_.size());
    for (size_t i = 0; i < axes_.size(); ++i) {
      auto it = std::upper_bound(axes_[i].begin(), axes_[i].end(), x[i]);
      y[i] = *std::prev(it);
    }
    return y;
  }

  Poset local() const { return Poset::grid(sizes()); }

  Pt to_local(const Pt& ambient) const {
    Pt l(axes_.size());
    for (size_t i = 0; i < axes_.size(); ++i) {
      auto it = std::lower_bound(axes_[i].begin(), axes_[i].end(), ambient[i]);
      if (it == axes_[i].end() || *it != ambient[i])
        throw std::invalid_argument("point is not on the subgrid");
      l[i] = static_cast<int>(it - axes_[i].begin());
    }
    return l;
  }

  Pt to_ambient(const Pt& local) const {
    Pt x(axes_.size());
    for (size_t i = 0; i < axes_.size(); ++i) x[i] = axes_[i][static_cast<size_t>(local[i])];
    return x;
  }

  friend bool operator==(const AlignedSubgrid& a, const AlignedSubgrid& b) {
    return a.axes_ == b.axes_;
  }

 private:
  std::vector<std::vector<int>> axes_;
};

// {x in bound | floor_Q(x) = y}, truncation of the ceiling class
inline std::vector<Pt> ceil_class(const AlignedSubgrid& q, const Pt& y,
                                  const AlignedSubgrid& bound) {
  if (!q.contains(y)) throw std::invalid_argument("ceiling class of a point outside the subgrid");
  std::vector<Pt> cls;
  for (const Pt& x : bound.points())
    if (q.in_upper(x) && q.floor(x) == y) cls.push_back(x);
  return cls;
}

// top of the truncated class; a join of members, so membership checks that the
// class is a sublattice at its top
inline Pt ceil_class_max(const AlignedSubgrid& q, const Pt& y, const AlignedSubgrid& bound) {
  std::vector<Pt> cls = ceil_class(q, y, bound);
  Pt z = cls.front();
  for (const Pt& x : cls) z = pt_join(z, x);
  if (q.floor(z) != y) throw std::logic_error("ceiling class has no top");
  return z;
}

// Floor against an arbitrary point set: unique maximum of {q | q <= x}, if any.
inline std::optional<Pt> floor_in_set(const std::vector<Pt>& qpts, const Pt& x) {
  std::vector<Pt> below;
  for (const Pt& q : qpts)
    if (pt_leq(q, x)) below.push_back(q);
  if (below.empty()) return std::nullopt;
  for (const Pt& m : below) {
    bool top = true;
    for (const Pt& q : below)
      if (!pt_leq(q, m)) {
        top = false;
        break;
      }
    if (top) return m;
  }
  return std::nullopt;
}

inline std::vector<Pt> ceil_class_in_set(const std::vector<Pt>& qpts, const Pt& y,
                                         const std::vector<Pt>& domain) {
  std::vector<Pt> cls;
  for (const Pt& x : domain) {
    auto f = floor_in_set(qpts, x);
    if (f && *f == y) cls.push_back(x);
  }
  return cls;
}

}  // namespace spreadhom
