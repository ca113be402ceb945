#include "flopcalc/f2ring.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <set>
#include <sstream>
#include <stdexcept>

namespace flopcalc {

namespace {

constexpr std::size_t kMaxExtendedSize = std::size_t{1} << 28;

void require_same_ring(const F2Poly& p, const F2Poly& q) {
  if (!same_ring(*p.ring(), *q.ring())) throw std::invalid_argument("ring mismatch");
}

// Sorted input; equal neighbours cancel in pairs.
void cancel_pairs(std::vector<MonoIndex>& v) {
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if ((j - i) % 2 == 1) v[out++] = v[i];
    i = j;
  }
  v.resize(out);
}

}  // namespace

bool same_ring(const RingSpec& a, const RingSpec& b) { return &a == &b || a == b; }

RingPtr RingSpec::point() { return make({}, {}); }

RingPtr RingSpec::truncated(std::vector<TruncatedVar> vars) { return make(std::move(vars), {}); }

RingPtr RingSpec::make(std::vector<TruncatedVar> truncated, std::vector<BundleVar> bundles) {
  std::set<std::string> names;
  for (const auto& v : truncated) {
    if (v.truncation < 0) throw std::invalid_argument("negative truncation for " + v.name);
    if (!names.insert(v.name).second) throw std::invalid_argument("duplicate variable name " + v.name);
  }
  for (const auto& b : bundles) {
    if (b.rank < 1) throw std::invalid_argument("bundle rank must be positive");
    if (static_cast<int>(b.relation.size()) != b.rank) {
      throw std::invalid_argument("bundle relation needs one coefficient per degree 1..rank");
    }
    if (!names.insert(b.name).second) throw std::invalid_argument("duplicate variable name " + b.name);
  }
  auto ring = std::shared_ptr<RingSpec>(new RingSpec());
  ring->truncated_ = std::move(truncated);
  ring->bundles_ = std::move(bundles);
  ring->build_tables();
  for (auto& b : ring->bundles_) {
    for (std::size_t i = 0; i < b.relation.size(); ++i) {
      auto& sup = b.relation[i];
      std::sort(sup.begin(), sup.end());
      for (MonoIndex m : sup) {
        if (m >= ring->truncated_size_) throw std::invalid_argument("relation coefficient outside the truncated subring");
        if (ring->degree_[m] != static_cast<int>(i) + 1) {
          throw std::invalid_argument("relation coefficient w_" + std::to_string(i + 1) + " is not homogeneous");
        }
      }
    }
  }
  return ring;
}

RingPtr RingSpec::with_bundle(const RingPtr& base, std::string name, std::span<const F2Poly> coefficients) {
  if (base->num_bundle() != 0) throw std::invalid_argument("nested bundle variables are not supported");
  BundleVar bv{std::move(name), static_cast<int>(coefficients.size()), {}};
  for (const auto& c : coefficients) {
    if (!same_ring(*c.ring(), *base)) throw std::invalid_argument("ring mismatch in bundle relation");
    bv.relation.push_back(c.support());
  }
  return make(base->truncated_, {std::move(bv)});
}

void RingSpec::build_tables() {
  const std::size_t nt = truncated_.size();
  const std::size_t nv = nt + bundles_.size();
  radix_.assign(nv, 1);
  ext_radix_.assign(nv, 1);
  stride_.assign(nv, 1);
  ext_stride_.assign(nv, 1);
  top_degree_ = 0;
  for (std::size_t i = 0; i < nt; ++i) {
    radix_[i] = ext_radix_[i] = truncated_[i].truncation + 1;
    top_degree_ += truncated_[i].truncation;
  }
  for (std::size_t j = 0; j < bundles_.size(); ++j) {
    radix_[nt + j] = bundles_[j].rank;
    ext_radix_[nt + j] = 2 * bundles_[j].rank - 1;
    top_degree_ += bundles_[j].rank - 1;
  }
  size_ = ext_size_ = 1;
  for (std::size_t i = 0; i < nv; ++i) {
    stride_[i] = size_;
    ext_stride_[i] = ext_size_;
    size_ *= static_cast<std::size_t>(radix_[i]);
    ext_size_ *= static_cast<std::size_t>(ext_radix_[i]);
    if (ext_size_ > kMaxExtendedSize) throw std::invalid_argument("ring too large for dense multiplication");
    if (i + 1 == nt) truncated_size_ = size_;
  }
  if (nt == 0) truncated_size_ = 1;

  int offset = 0;
  std::vector<int> offsets(nt);
  bias_ = guard_ = 0;
  for (std::size_t i = 0; i < nt; ++i) {
    auto t = static_cast<unsigned>(truncated_[i].truncation);
    int w = std::bit_width(2 * t);
    offsets[i] = offset;
    if (offset + w + 1 > 64) throw std::invalid_argument("ring has too many variables for packed exponents");
    bias_ |= ((std::uint64_t{1} << w) - 1 - t) << offset;
    guard_ |= (std::uint64_t{1} << w) << offset;
    offset += w + 1;
  }

  key_.assign(size_, 0);
  ext_index_.assign(size_, 0);
  degree_.assign(size_, 0);
  for (std::size_t m = 0; m < size_; ++m) {
    std::uint64_t key = 0;
    std::size_t ext = 0;
    int deg = 0;
    for (std::size_t i = 0; i < nv; ++i) {
      auto e = static_cast<std::size_t>((m / stride_[i]) % static_cast<std::size_t>(radix_[i]));
      if (i < nt) key |= static_cast<std::uint64_t>(e) << offsets[i];
      ext += e * ext_stride_[i];
      deg += static_cast<int>(e);
    }
    key_[m] = key;
    ext_index_[m] = static_cast<std::uint32_t>(ext);
    degree_[m] = deg;
  }
}

const std::string& RingSpec::var_name(std::size_t var) const {
  if (var < truncated_.size()) return truncated_[var].name;
  return bundles_.at(var - truncated_.size()).name;
}

MonoIndex RingSpec::index_of(std::span<const int> exps) const {
  if (exps.size() != num_vars()) throw std::invalid_argument("exponent vector has the wrong length");
  std::size_t idx = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] >= radix_[i]) {
      throw std::invalid_argument("monomial not in canonical form at variable " + var_name(i));
    }
    idx += static_cast<std::size_t>(exps[i]) * stride_[i];
  }
  return static_cast<MonoIndex>(idx);
}

std::vector<int> RingSpec::exponents(MonoIndex m) const {
  std::vector<int> e(num_vars());
  for (std::size_t i = 0; i < e.size(); ++i) e[i] = exponent(m, i);
  return e;
}

RingPtr RingSpec::truncated_subring() const { return make(truncated_, {}); }

RingPtr RingSpec::without_bundle(std::size_t j) const {
  auto rest = bundles_;
  rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(j));
  return make(truncated_, std::move(rest));
}

std::string RingSpec::monomial_string(MonoIndex m) const {
  std::string out;
  for (std::size_t i = 0; i < num_vars(); ++i) {
    int e = exponent(m, i);
    if (e == 0) continue;
    if (!out.empty()) out += '*';
    out += var_name(i);
    if (e > 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

F2Poly::F2Poly(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("null ring");
}

F2Poly::F2Poly(RingPtr ring, std::vector<MonoIndex> monomials) : ring_(std::move(ring)), support_(std::move(monomials)) {
  if (!ring_) throw std::invalid_argument("null ring");
  std::sort(support_.begin(), support_.end());
  cancel_pairs(support_);
  if (!support_.empty() && support_.back() >= ring_->size()) throw std::invalid_argument("monomial index out of range");
}

F2Poly F2Poly::one(RingPtr ring) { return F2Poly(std::move(ring), std::vector<MonoIndex>{0}); }

F2Poly F2Poly::variable(RingPtr ring, std::size_t var) {
  std::vector<int> e(ring->num_vars(), 0);
  e.at(var) = 1;
  if (ring->max_exponent(var) < 1) return F2Poly(std::move(ring));
  return monomial(std::move(ring), e);
}

F2Poly F2Poly::monomial(RingPtr ring, std::span<const int> exps) {
  MonoIndex m = ring->index_of(exps);
  return F2Poly(std::move(ring), std::vector<MonoIndex>{m});
}

int F2Poly::degree() const {
  int d = -1;
  for (MonoIndex m : support_) d = std::max(d, ring_->degree(m));
  return d;
}

bool F2Poly::is_homogeneous(int d) const {
  return std::all_of(support_.begin(), support_.end(), [&](MonoIndex m) { return ring_->degree(m) == d; });
}

F2Poly F2Poly::homogeneous_part(int d) const {
  F2Poly out(ring_);
  for (MonoIndex m : support_) {
    if (ring_->degree(m) == d) out.support_.push_back(m);
  }
  return out;
}

std::string F2Poly::to_string() const {
  if (support_.empty()) return "0";
  std::vector<MonoIndex> order = support_;
  std::sort(order.begin(), order.end(), [&](MonoIndex a, MonoIndex b) {
    int da = ring_->degree(a), db = ring_->degree(b);
    return da != db ? da > db : a > b;
  });
  std::string out;
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i) out += " + ";
    out += ring_->monomial_string(order[i]);
  }
  return out;
}

F2Poly& F2Poly::operator+=(const F2Poly& other) {
  require_same_ring(*this, other);
  std::vector<MonoIndex> out;
  out.reserve(support_.size() + other.support_.size());
  std::set_symmetric_difference(support_.begin(), support_.end(), other.support_.begin(), other.support_.end(),
                                std::back_inserter(out));
  support_ = std::move(out);
  return *this;
}

F2Poly& F2Poly::operator*=(const F2Poly& other) { return *this = mul(*this, other); }

F2Poly operator*(const F2Poly& a, const F2Poly& b) { return mul(a, b); }

bool operator==(const F2Poly& a, const F2Poly& b) {
  return same_ring(*a.ring_, *b.ring_) && a.support_ == b.support_;
}

F2Poly add(const F2Poly& p, const F2Poly& q) { return p + q; }

F2Poly mul(const F2Poly& p, const F2Poly& q) {
  require_same_ring(p, q);
  const RingSpec& R = *p.ring();
  F2Poly out(p.ring());
  if (p.is_zero() || q.is_zero()) return out;

  thread_local std::vector<std::uint64_t> acc;
  const std::size_t words = (R.ext_size_ + 63) / 64;
  if (acc.size() < words) acc.resize(words, 0);
  auto flip = [&](std::size_t x) { acc[x >> 6] ^= std::uint64_t{1} << (x & 63); };

  const std::uint64_t bias = R.bias_, guard = R.guard_;
  for (MonoIndex a : p.support()) {
    const std::uint64_t ka = R.key_[a] + bias;
    const std::size_t ea = R.ext_index_[a];
    for (MonoIndex b : q.support()) {
      if (((ka + R.key_[b]) & guard) == 0) flip(ea + R.ext_index_[b]);
    }
  }

  const std::size_t nt = R.num_truncated();
  const std::size_t B = R.truncated_size_;
  // Rewrite u^e for e >= rank top-down; each rewrite strictly lowers e.
  for (std::size_t j = 0; j < R.num_bundle(); ++j) {
    const auto& bv = R.bundles_[j];
    const int r = bv.rank;
    const std::size_t estride = R.ext_stride_[nt + j];
    const auto eradix = static_cast<std::size_t>(R.ext_radix_[nt + j]);
    for (int e = 2 * r - 2; e >= r; --e) {
      for (std::size_t w = 0; w < words; ++w) {
        std::uint64_t bits = acc[w];
        while (bits) {
          const int bit = std::countr_zero(bits);
          bits &= bits - 1;
          const std::size_t x = (w << 6) | static_cast<std::size_t>(bit);
          if (static_cast<int>((x / estride) % eradix) != e) continue;
          flip(x);
          const std::size_t stripped = x - static_cast<std::size_t>(e) * estride;
          const std::uint64_t kx = R.key_[x % B] + bias;
          for (int i = 1; i <= r; ++i) {
            const std::size_t shifted = stripped + static_cast<std::size_t>(e - i) * estride;
            for (MonoIndex c : bv.relation[static_cast<std::size_t>(i - 1)]) {
              if (((kx + R.key_[c]) & guard) == 0) flip(shifted + c);
            }
          }
        }
      }
    }
  }

  auto& sup = out.support_;
  const bool has_bundles = R.num_bundle() != 0;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t bits = acc[w];
    acc[w] = 0;
    while (bits) {
      const int bit = std::countr_zero(bits);
      bits &= bits - 1;
      std::size_t x = (w << 6) | static_cast<std::size_t>(bit);
      if (has_bundles) {
        std::size_t canon = x % B;
        std::size_t rest = x / B;
        for (std::size_t j = 0; j < R.num_bundle(); ++j) {
          const auto eradix = static_cast<std::size_t>(R.ext_radix_[nt + j]);
          canon += (rest % eradix) * R.stride_[nt + j];
          rest /= eradix;
        }
        x = canon;
      }
      sup.push_back(static_cast<MonoIndex>(x));
    }
  }
  return out;
}

F2Poly pow(const F2Poly& p, std::uint64_t e) {
  F2Poly result = F2Poly::one(p.ring());
  F2Poly base = p;
  while (e) {
    if (e & 1u) result = mul(result, base);
    e >>= 1;
    if (e) base = mul(base, base);
  }
  return result;
}

bool coefficient(const F2Poly& p, MonoIndex m) {
  return std::binary_search(p.support().begin(), p.support().end(), m);
}

bool coefficient(const F2Poly& p, std::span<const int> exps) { return coefficient(p, p.ring()->index_of(exps)); }

F2Poly invert_unit(const F2Poly& p) {
  if (!p.constant_term()) throw std::invalid_argument("invert_unit: constant term is 0");
  const F2Poly one = F2Poly::one(p.ring());
  const F2Poly nil = p + one;
  F2Poly inverse = one;
  F2Poly term = one;
  for (int k = 1; k <= p.ring()->top_degree(); ++k) {
    term = mul(term, nil);
    if (term.is_zero()) break;
    inverse += term;
  }
  return inverse;
}

RingPtr ring_tensor(const RingPtr& a, const RingPtr& b) {
  std::vector<TruncatedVar> trunc = a->truncated_vars();
  trunc.insert(trunc.end(), b->truncated_vars().begin(), b->truncated_vars().end());
  std::vector<RingSpec::BundleVar> bundles = a->bundle_vars();
  const auto shift = static_cast<MonoIndex>(a->truncated_size());
  for (auto bv : b->bundle_vars()) {
    for (auto& sup : bv.relation) {
      for (auto& m : sup) m *= shift;
    }
    bundles.push_back(std::move(bv));
  }
  // Names are always canonicalised, so products built in different
  // groupings agree structurally.
  for (std::size_t i = 0; i < trunc.size(); ++i) trunc[i].name = trunc.size() == 1 ? "g" : "g" + std::to_string(i + 1);
  for (std::size_t j = 0; j < bundles.size(); ++j) {
    bundles[j].name = bundles.size() == 1 ? "u" : "u" + std::to_string(j + 1);
  }
  return RingSpec::make(std::move(trunc), std::move(bundles));
}

std::vector<std::size_t> tensor_var_map(const RingSpec& a, const RingSpec& b, bool right) {
  const std::size_t ta = a.num_truncated(), tb = b.num_truncated();
  std::vector<std::size_t> map;
  if (!right) {
    for (std::size_t i = 0; i < ta; ++i) map.push_back(i);
    for (std::size_t j = 0; j < a.num_bundle(); ++j) map.push_back(ta + tb + j);
  } else {
    for (std::size_t i = 0; i < tb; ++i) map.push_back(ta + i);
    for (std::size_t j = 0; j < b.num_bundle(); ++j) map.push_back(ta + tb + a.num_bundle() + j);
  }
  return map;
}

F2Poly transport(const F2Poly& x, const RingPtr& target, std::span<const std::size_t> var_map) {
  const RingSpec& src = *x.ring();
  if (var_map.size() != src.num_vars()) throw std::invalid_argument("transport: variable map has the wrong length");
  std::vector<MonoIndex> out;
  out.reserve(x.support().size());
  std::vector<int> texps(target->num_vars());
  for (MonoIndex m : x.support()) {
    std::fill(texps.begin(), texps.end(), 0);
    for (std::size_t i = 0; i < var_map.size(); ++i) texps.at(var_map[i]) = src.exponent(m, i);
    out.push_back(target->index_of(texps));
  }
  return F2Poly(target, std::move(out));
}

}  // namespace flopcalc
