#pragma once

// Independent reference implementations used only by the tests.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "flopcalc/f2ring.hpp"

namespace oracle {

/// Rows 0..n of Pascal's triangle reduced mod 2.
inline std::vector<std::vector<bool>> pascal_mod2(int n) {
  std::vector<std::vector<bool>> rows(static_cast<std::size_t>(n + 1));
  rows[0] = {true};
  for (int r = 1; r <= n; ++r) {
    auto& row = rows[static_cast<std::size_t>(r)];
    const auto& prev = rows[static_cast<std::size_t>(r - 1)];
    row.assign(static_cast<std::size_t>(r + 1), false);
    row[0] = row[static_cast<std::size_t>(r)] = true;
    for (int k = 1; k < r; ++k) row[static_cast<std::size_t>(k)] = prev[static_cast<std::size_t>(k - 1)] != prev[static_cast<std::size_t>(k)];
  }
  return rows;
}

/// Legendre: sum of floor(n / 2^i).
inline std::uint64_t legendre2(std::uint64_t n) {
  std::uint64_t s = 0;
  for (std::uint64_t p = 2; p <= n; p *= 2) s += n / p;
  return s;
}

/// Partitions of n by sorting every composition (2^{n-1} of them).
inline std::set<std::vector<int>> partitions_by_compositions(int n) {
  std::set<std::vector<int>> out;
  if (n == 0) {
    out.insert(std::vector<int>{});
    return out;
  }
  for (std::uint32_t cuts = 0; cuts < (1u << (n - 1)); ++cuts) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if ((cuts >> i) & 1u) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    std::sort(parts.rbegin(), parts.rend());
    out.insert(parts);
  }
  return out;
}

/// Elements as sets of exponent vectors; multiplication by exponent
/// addition, truncation, then rewriting u^r with its relation until every
/// bundle exponent is below the rank.
struct NaiveRing {
  std::vector<int> truncation;  // per truncated var
  struct Bundle {
    int rank;
    std::vector<std::set<std::vector<int>>> w;  // w[i-1], exponent vectors on the truncated vars
  };
  std::vector<Bundle> bundles;

  using Elem = std::set<std::vector<int>>;

  std::size_t nt() const { return truncation.size(); }

  void toggle(Elem& e, const std::vector<int>& m) const {
    for (std::size_t i = 0; i < nt(); ++i) {
      if (m[i] > truncation[i]) return;
    }
    if (!e.erase(m)) e.insert(m);
  }

  Elem reduce(Elem e) const {
    while (true) {
      auto it = std::find_if(e.begin(), e.end(), [&](const std::vector<int>& m) {
        for (std::size_t j = 0; j < bundles.size(); ++j) {
          if (m[nt() + j] >= bundles[j].rank) return true;
        }
        return false;
      });
      if (it == e.end()) return e;
      std::vector<int> m = *it;
      e.erase(it);
      std::size_t j = 0;
      while (m[nt() + j] < bundles[j].rank) ++j;
      const int r = bundles[j].rank;
      for (int i = 1; i <= r; ++i) {
        for (const auto& wm : bundles[j].w[static_cast<std::size_t>(i - 1)]) {
          std::vector<int> t = m;
          t[nt() + j] -= i;
          for (std::size_t v = 0; v < nt(); ++v) t[v] += wm[v];
          toggle(e, t);
        }
      }
    }
  }

  Elem mul(const Elem& a, const Elem& b) const {
    Elem out;
    for (const auto& x : a) {
      for (const auto& y : b) {
        std::vector<int> m(x.size());
        for (std::size_t i = 0; i < m.size(); ++i) m[i] = x[i] + y[i];
        toggle(out, m);
      }
    }
    return reduce(out);
  }
};

inline NaiveRing::Elem to_naive(const flopcalc::F2Poly& p) {
  NaiveRing::Elem out;
  for (auto m : p.support()) out.insert(p.ring()->exponents(m));
  return out;
}

inline flopcalc::F2Poly random_element(const flopcalc::RingPtr& R, std::mt19937_64& rng, double density = 0.3) {
  std::vector<flopcalc::MonoIndex> mons;
  std::bernoulli_distribution keep(density);
  for (std::size_t m = 0; m < R->size(); ++m) {
    if (keep(rng)) mons.push_back(static_cast<flopcalc::MonoIndex>(m));
  }
  return flopcalc::F2Poly(R, std::move(mons));
}

}  // namespace oracle
