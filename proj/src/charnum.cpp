#include "flopcalc/charnum.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace flopcalc {

namespace {

const std::vector<Partition>& partition_index(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<const std::vector<Partition>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<const std::vector<Partition>>(partitions(n));
  return *slot;
}

void require_weight(const Space& s, const Partition& I) {
  if (I.weight() != s.dim()) {
    throw std::invalid_argument("partition " + I.to_string() + " has weight " + std::to_string(I.weight()) +
                                " but the space has dimension " + std::to_string(s.dim()));
  }
}

// Walks partitions of `remaining` with parts <= max_part in reverse
// lexicographic order, multiplying one w-class per part.
void walk(const Space& s, const std::vector<F2Poly>& w, const F2Poly& prod, int remaining, int max_part,
          std::vector<bool>& out) {
  if (remaining == 0) {
    out.push_back(coefficient(prod, s.ring()->top_monomial()));
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    walk(s, w, prod.is_zero() ? prod : prod * w[static_cast<std::size_t>(p)], remaining - p, p, out);
  }
}

// Roots with even multiplicity contribute nothing to a power sum.
std::vector<F2Poly> odd_multiplicity(std::vector<F2Poly> roots) {
  std::sort(roots.begin(), roots.end(), [](const F2Poly& a, const F2Poly& b) { return a.support() < b.support(); });
  std::vector<F2Poly> out;
  for (std::size_t i = 0; i < roots.size();) {
    std::size_t j = i;
    while (j < roots.size() && roots[j] == roots[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(roots[i]);
    i = j;
  }
  return out;
}

struct MonomialSymmetric {
  const std::vector<std::vector<F2Poly>>& powers;  // powers[group][root]
  const std::vector<int>& multiplicity;            // per group of equal parts
  std::vector<bool> used;
  F2Poly sum;

  // Chooses an increasing `left`-subset of unused roots for group g,
  // starting at root index `from`.
  void choose(std::size_t g, int left, std::size_t from, const F2Poly& prod) {
    if (prod.is_zero()) return;
    if (g == multiplicity.size()) {
      sum += prod;
      return;
    }
    if (left == 0) {
      std::size_t next = g + 1;
      choose(next, next < multiplicity.size() ? multiplicity[next] : 0, 0, prod);
      return;
    }
    const std::size_t n = used.size();
    for (std::size_t j = from; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      choose(g, left - 1, j + 1, prod * powers[g][j]);
      used[j] = false;
    }
  }
};

std::size_t index_in(const std::vector<Partition>& index, const Partition& p) {
  auto it = std::lower_bound(index.begin(), index.end(), p, std::greater<>());
  return static_cast<std::size_t>(it - index.begin());
}

// For each partition I of p + q, the (A, B) pairs with |A| = p, |B| = q that
// occur an odd number of times when every part k of I is split as a + b.
struct CoproductTable {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> terms;
};

struct CoproductBuilder {
  const std::vector<Partition>& left;
  const std::vector<Partition>& right;
  std::span<const int> parts;
  int p;
  std::vector<int> a, b;
  std::map<std::pair<std::uint32_t, std::uint32_t>, bool> odd;

  void split(std::size_t t, int deg_a, int rest) {
    if (t == parts.size()) {
      std::vector<int> pa, pb;
      for (int x : a) if (x) pa.push_back(x);
      for (int x : b) if (x) pb.push_back(x);
      auto key = std::make_pair(static_cast<std::uint32_t>(index_in(left, Partition(pa))),
                                static_cast<std::uint32_t>(index_in(right, Partition(pb))));
      odd[key] = !odd[key];
      return;
    }
    const int k = parts[t];
    rest -= k;
    for (int x = 0; x <= k; ++x) {
      const int da = deg_a + x;
      if (da > p) break;
      if (da + rest < p) continue;
      a.push_back(x);
      b.push_back(k - x);
      split(t + 1, da, rest);
      a.pop_back();
      b.pop_back();
    }
  }
};

const CoproductTable& coproduct_table(int p, int q) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<const CoproductTable>> cache;
  {
    std::lock_guard lock(mu);
    auto it = cache.find({p, q});
    if (it != cache.end()) return *it->second;
  }
  auto table = std::make_unique<CoproductTable>();
  const auto& whole = partition_index(p + q);
  for (const auto& I : whole) {
    CoproductBuilder builder{partition_index(p), partition_index(q), I.parts(), p, {}, {}, {}};
    builder.split(0, 0, I.weight());
    auto& row = table->terms.emplace_back();
    for (const auto& [key, bit] : builder.odd) {
      if (bit) row.push_back(key);
    }
  }
  std::lock_guard lock(mu);
  auto& slot = cache[{p, q}];
  if (!slot) slot = std::move(table);
  return *slot;
}

}  // namespace

NumberVector::NumberVector() : index_(&partition_index(0)), bits_{false} {}

NumberVector::NumberVector(int n, std::vector<bool> bits) : n_(n), index_(&partition_index(n)), bits_(std::move(bits)) {
  if (bits_.size() != index_->size()) throw std::invalid_argument("NumberVector: wrong number of entries");
}

bool NumberVector::at(const Partition& p) const {
  auto it = std::lower_bound(index_->begin(), index_->end(), p, std::greater<>());
  if (it == index_->end() || *it != p) throw std::invalid_argument("partition " + p.to_string() + " not in this vector");
  return bits_[static_cast<std::size_t>(it - index_->begin())];
}

bool NumberVector::is_zero() const { return std::none_of(bits_.begin(), bits_.end(), [](bool b) { return b; }); }

std::string NumberVector::to_bitstring() const {
  std::string out;
  for (bool b : bits_) out += b ? '1' : '0';
  return out;
}

NumberVector& NumberVector::operator+=(const NumberVector& other) {
  if (n_ != other.n_) throw std::invalid_argument("NumberVector: dimension mismatch");
  for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] = bits_[i] != other.bits_[i];
  return *this;
}

bool sw_number(const Space& s, const Partition& I) {
  require_weight(s, I);
  F2Poly prod = F2Poly::one(s.ring());
  for (int part : I.parts()) {
    prod *= s.w(part);
    if (prod.is_zero()) return false;
  }
  return integrate(s, prod);
}

NumberVector number_vector(const Space& s) {
  const int n = s.dim();
  std::vector<F2Poly> w;
  for (int j = 0; j <= n; ++j) w.push_back(s.w(j));
  std::vector<bool> bits;
  walk(s, w, s.mu(), n, n, bits);
  return NumberVector(n, std::move(bits));
}

NumberVector product_numbers(const NumberVector& m, const NumberVector& n) {
  const auto& table = coproduct_table(m.n(), n.n());
  std::vector<bool> bits(table.terms.size(), false);
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bool v = false;
    for (const auto& [a, b] : table.terms[i]) v ^= m.bits()[a] && n.bits()[b];
    bits[i] = v;
  }
  return NumberVector(m.n() + n.n(), std::move(bits));
}

F2Poly power_sum_class(const Space& s, int k) {
  if (k < 1) throw std::invalid_argument("power_sum_class: k must be positive");
  std::vector<F2Poly> roots = s.ambient_roots();
  roots.insert(roots.end(), s.excess_roots().begin(), s.excess_roots().end());
  F2Poly sum(s.ring());
  for (const auto& t : odd_multiplicity(std::move(roots))) sum += pow(t, static_cast<std::uint64_t>(k));
  return sum;
}

bool s_number(const Space& s, const Partition& I) {
  require_weight(s, I);
  if (I.empty()) return integrate(s, F2Poly::one(s.ring()));
  if (I.length() == 1) return integrate(s, power_sum_class(s, I.parts()[0]));
  if (!s.root_representable()) {
    throw std::invalid_argument("s_number: multi-part s_I needs tangent roots, " + s.spec() + " has none");
  }
  const auto& roots = s.ambient_roots();
  std::vector<int> values, multiplicity;
  for (int p : I.parts()) {
    if (!values.empty() && values.back() == p) {
      ++multiplicity.back();
    } else {
      values.push_back(p);
      multiplicity.push_back(1);
    }
  }
  std::vector<std::vector<F2Poly>> powers(values.size());
  for (std::size_t g = 0; g < values.size(); ++g) {
    for (const auto& t : roots) powers[g].push_back(pow(t, static_cast<std::uint64_t>(values[g])));
  }
  MonomialSymmetric m{powers, multiplicity, std::vector<bool>(roots.size(), false), F2Poly(s.ring())};
  m.choose(0, multiplicity[0], 0, F2Poly::one(s.ring()));
  return integrate(s, m.sum);
}

bool lemma_count_number(std::span<const int> b, int two_i) {
  int total = 0;
  for (int part : b) {
    if (part < 2 || part % 2 != 0) throw std::invalid_argument("lemma_count_number: parts must be even and positive");
    total += part;
  }
  if (two_i < 0 || two_i % 2 != 0 || two_i > total) {
    throw std::invalid_argument("lemma_count_number: two_i must be even in [0, sum of parts]");
  }
  if (two_i == 0) return true;
  // One index j_k per binary digit 2^{c_k} of two_i; the choices are
  // independent, so the count is a product of per-digit counts.
  bool parity = true;
  for (int c : binary_expansion(static_cast<std::uint64_t>(two_i)).powers) {
    int count = 0;
    for (int part : b) count += (part >> c) & 1;
    parity = parity && (count % 2 == 1);
  }
  return parity;
}

bool totaro_flop_s_number(const Space& Z, const BundleChars& A, const BundleChars& B) {
  if (!Z.root_representable()) throw std::invalid_argument("totaro_flop_s_number: base needs tangent roots");
  if (A.rank() != 2 || B.rank() != 2) throw std::invalid_argument("totaro_flop_s_number: A and B must have rank 2");
  const int n = Z.dim() + 3;
  const int d = n - 3;
  const RingPtr& R = Z.ring();
  std::vector<F2Poly> x = {A.characters[0], A.characters[1], B.characters[0], B.characters[1]};
  std::vector<std::vector<F2Poly>> xp(4);
  for (std::size_t r = 0; r < 4; ++r) {
    if (!same_ring(*x[r].ring(), *R)) throw std::invalid_argument("totaro_flop_s_number: character not on the base");
    xp[r].push_back(F2Poly::one(R));
    for (int i = 1; i <= d; ++i) xp[r].push_back(xp[r].back() * x[r]);
  }
  F2Poly sum(R);
  for (int i1 = 0; i1 <= d; ++i1) {
    for (int i2 = 0; i1 + i2 <= d; ++i2) {
      for (int i3 = 0; i1 + i2 + i3 <= d; ++i3) {
        const int i4 = d - i1 - i2 - i3;
        const bool bracket =
            binom_mod2(n - 1, i1) ^ binom_mod2(n - 1, i2) ^ binom_mod2(n - 1, i3) ^ binom_mod2(n - 1, i4);
        if (!bracket) continue;
        sum += xp[0][static_cast<std::size_t>(i1)] * xp[1][static_cast<std::size_t>(i2)] *
               xp[2][static_cast<std::size_t>(i3)] * xp[3][static_cast<std::size_t>(i4)];
      }
    }
  }
  return integrate(Z, sum);
}

}  // namespace flopcalc
