#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace flopcalc {

using MonoIndex = std::uint32_t;

struct TruncatedVar {
  std::string name;
  int truncation;  // v^{truncation+1} = 0

  friend bool operator==(const TruncatedVar&, const TruncatedVar&) = default;
};

class RingSpec;
class F2Poly;
using RingPtr = std::shared_ptr<const RingSpec>;

/// A truncated graded-commutative GF(2) algebra on degree-1 generators.
///
/// Truncated variables v satisfy v^{t+1} = 0. Bundle variables u of rank r
/// satisfy u^r = w_1 u^{r-1} + ... + w_r, where each w_i is a homogeneous
/// degree-i element of the subring generated by the truncated variables.
///
/// Canonical monomials (every truncated exponent <= t, every bundle
/// exponent < r) are numbered by a mixed-radix index with the truncated
/// variables in the low digits, so the truncated subring occupies the
/// indices [0, truncated_size()). The highest index is the top monomial.
class RingSpec {
 public:
  struct BundleVar {
    std::string name;
    int rank;
    std::vector<std::vector<MonoIndex>> relation;  // relation[i-1] = support of w_i

    friend bool operator==(const BundleVar&, const BundleVar&) = default;
  };

  static RingPtr point();
  static RingPtr truncated(std::vector<TruncatedVar> vars);

  /// Adjoins a bundle variable to a ring without bundle variables. The
  /// relation coefficients are w_1..w_r, all elements of `base`.
  static RingPtr with_bundle(const RingPtr& base, std::string name, std::span<const F2Poly> coefficients);

  /// General constructor; relation supports are truncated-subring indices.
  static RingPtr make(std::vector<TruncatedVar> truncated, std::vector<BundleVar> bundles);

  std::size_t num_truncated() const { return truncated_.size(); }
  std::size_t num_bundle() const { return bundles_.size(); }
  std::size_t num_vars() const { return truncated_.size() + bundles_.size(); }
  const std::vector<TruncatedVar>& truncated_vars() const { return truncated_; }
  const std::vector<BundleVar>& bundle_vars() const { return bundles_; }
  const std::string& var_name(std::size_t var) const;
  /// Largest canonical exponent of a variable.
  int max_exponent(std::size_t var) const { return radix_[var] - 1; }

  int top_degree() const { return top_degree_; }
  std::size_t size() const { return size_; }
  std::size_t truncated_size() const { return truncated_size_; }
  MonoIndex top_monomial() const { return static_cast<MonoIndex>(size_ - 1); }

  /// Throws std::invalid_argument unless `exps` is a canonical exponent vector.
  MonoIndex index_of(std::span<const int> exps) const;
  std::vector<int> exponents(MonoIndex m) const;
  int exponent(MonoIndex m, std::size_t var) const { return static_cast<int>((m / stride_[var]) % radix_[var]); }
  int degree(MonoIndex m) const { return degree_[m]; }

  /// The subring on the truncated variables alone.
  RingPtr truncated_subring() const;
  /// This ring with bundle variable `j` deleted; the remaining relations are
  /// unaffected because they only involve truncated variables.
  RingPtr without_bundle(std::size_t j) const;

  std::string monomial_string(MonoIndex m) const;

  friend bool operator==(const RingSpec& a, const RingSpec& b) {
    return a.truncated_ == b.truncated_ && a.bundles_ == b.bundles_;
  }

 private:
  RingSpec() = default;
  void build_tables();

  friend F2Poly mul(const F2Poly&, const F2Poly&);

  std::vector<TruncatedVar> truncated_;
  std::vector<BundleVar> bundles_;

  std::vector<int> radix_;
  std::vector<std::size_t> stride_;
  std::vector<int> ext_radix_;  // bundle digits widened to 2r-1 for unreduced products
  std::vector<std::size_t> ext_stride_;
  std::size_t size_ = 1;
  std::size_t truncated_size_ = 1;
  std::size_t ext_size_ = 1;
  int top_degree_ = 0;

  // Packed truncated exponents with one guard bit per field: a product of
  // two canonical monomials overflows a truncation iff
  // (key[a] + key[b] + bias_) & guard_ is nonzero.
  std::vector<std::uint64_t> key_;  // per truncated-subring index
  std::uint64_t bias_ = 0;
  std::uint64_t guard_ = 0;
  std::vector<std::uint32_t> ext_index_;  // canonical index -> extended index
  std::vector<int> degree_;
};

bool same_ring(const RingSpec& a, const RingSpec& b);

/// Element of a RingSpec, stored as the sorted set of canonical monomials
/// with coefficient 1.
class F2Poly {
 public:
  explicit F2Poly(RingPtr ring);
  /// Duplicate monomials cancel in pairs.
  F2Poly(RingPtr ring, std::vector<MonoIndex> monomials);

  static F2Poly zero(RingPtr ring) { return F2Poly(std::move(ring)); }
  static F2Poly one(RingPtr ring);
  static F2Poly variable(RingPtr ring, std::size_t var);
  static F2Poly monomial(RingPtr ring, std::span<const int> exps);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MonoIndex>& support() const { return support_; }
  bool is_zero() const { return support_.empty(); }
  bool constant_term() const { return !support_.empty() && support_.front() == 0; }
  /// Highest degree present; -1 for zero.
  int degree() const;
  bool is_homogeneous(int d) const;
  F2Poly homogeneous_part(int d) const;

  /// Monomials in decreasing degree, ties by decreasing index, e.g. "g1^2*g2 + u^3".
  std::string to_string() const;

  F2Poly& operator+=(const F2Poly& other);
  F2Poly& operator*=(const F2Poly& other);
  friend F2Poly operator+(F2Poly a, const F2Poly& b) { return a += b; }
  friend F2Poly operator*(const F2Poly& a, const F2Poly& b);
  friend bool operator==(const F2Poly& a, const F2Poly& b);
  friend F2Poly mul(const F2Poly&, const F2Poly&);

 private:
  RingPtr ring_;
  std::vector<MonoIndex> support_;
};

RingPtr ring_tensor(const RingPtr& a, const RingPtr& b);
/// Position in ring_tensor(a, b) of each variable of a (right = false) or b.
std::vector<std::size_t> tensor_var_map(const RingSpec& a, const RingSpec& b, bool right);
/// Moves x into `target`, sending variable i to variable var_map[i].
F2Poly transport(const F2Poly& x, const RingPtr& target, std::span<const std::size_t> var_map);

F2Poly add(const F2Poly& p, const F2Poly& q);
F2Poly mul(const F2Poly& p, const F2Poly& q);
F2Poly pow(const F2Poly& p, std::uint64_t e);
bool coefficient(const F2Poly& p, std::span<const int> exps);
bool coefficient(const F2Poly& p, MonoIndex m);
/// Inverse of an element with constant term 1; throws std::invalid_argument otherwise.
F2Poly invert_unit(const F2Poly& p);

}  // namespace flopcalc
