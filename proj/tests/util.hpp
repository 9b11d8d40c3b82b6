#pragma once

// Test-side oracles and generators, independent of the library's enumeration.

#include <random>
#include <vector>

#include "spreadhom/poset.hpp"
#include "spreadhom/rep.hpp"

namespace testutil {

using namespace spreadhom;

// every nonempty convex connected subset, by raw subset filtering
inline std::vector<std::vector<int>> all_spreads_brute(const Poset& p) {
  std::vector<std::vector<int>> out;
  int n = p.size();
  for (unsigned long mask = 1; mask < (1ul << n); ++mask) {
    std::vector<int> s;
    for (int i = 0; i < n; ++i)
      if (mask & (1ul << i)) s.push_back(i);
    if (is_spread(p, s)) out.push_back(std::move(s));
  }
  return out;
}

inline std::vector<int> random_spread(const Poset& p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> pick(0, p.size() - 1);
  for (;;) {
    std::vector<int> a;
    int na = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < na; ++i) a.push_back(pick(rng));
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
    a = minimals(p, a);
    std::vector<int> rest = spreadhom::set_minus(up_set(p, a), a);
    std::vector<int> b;
    for (int x : rest)
      if (rng() % 3 == 0) b.push_back(x);
    b = minimals(p, b);
    try {
      return materialize_spread(p, a, b);
    } catch (const NotASpread&) {
    }
  }
}

inline ModMorphism random_hom(const PersModule& m, const PersModule& n, std::mt19937_64& rng) {
  auto basis = hom_basis(m, n);
  ModMorphism f = zero_morphism(m, n);
  std::uniform_int_distribution<std::uint32_t> coef(0, Fp::modulus() - 1);
  for (const auto& b : basis) f = add(f, scale(Fp(coef(rng)), b));
  return f;
}

// 0 -> ker f -> U -> im f -> 0 for a random f out of a random module
inline ShortExactSeq random_ses(const std::shared_ptr<const Poset>& p, std::mt19937_64& rng) {
  for (;;) {
    PersModule u = random_module(p, 2 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), rng());
    PersModule m = random_module(p, 1 + static_cast<int>(rng() % 2), static_cast<int>(rng() % 2), rng());
    ModMorphism f = random_hom(u, m, rng);
    ImageParts im = image(f);
    if (im.module.is_zero() || im.module.total_dim() == u.total_dim()) continue;
    SubQuot k = kernel(f);
    return make_ses(k.map, im.proj);
  }
}

}  // namespace testutil
