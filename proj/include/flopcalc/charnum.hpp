#pragma once

#include <span>
#include <string>
#include <vector>

#include "flopcalc/combinat.hpp"
#include "flopcalc/spaces.hpp"

namespace flopcalc {

/// All Stiefel-Whitney numbers of an n-manifold, keyed by partitions(n).
class NumberVector {
 public:
  NumberVector();
  NumberVector(int n, std::vector<bool> bits);

  int n() const { return n_; }
  const std::vector<Partition>& index() const { return *index_; }
  const std::vector<bool>& bits() const { return bits_; }
  bool at(const Partition& p) const;
  bool is_zero() const;
  /// '0'/'1' per partition in canonical order.
  std::string to_bitstring() const;

  NumberVector& operator+=(const NumberVector& other);
  friend NumberVector operator+(NumberVector a, const NumberVector& b) { return a += b; }
  friend bool operator==(const NumberVector& a, const NumberVector& b) { return a.n_ == b.n_ && a.bits_ == b.bits_; }

 private:
  int n_ = 0;
  const std::vector<Partition>* index_;  // shared, cached per n
  std::vector<bool> bits_;
};

/// w_{i_1} ... w_{i_r} integrated; throws on weight mismatch.
bool sw_number(const Space& s, const Partition& I);
NumberVector number_vector(const Space& s);

/// Numbers of M x N from those of M and N alone, expanding
/// w_k(M x N) = sum_{a+b=k} w_a(M) w_b(N) over every part.
NumberVector product_numbers(const NumberVector& m, const NumberVector& n);

/// Sum of k-th powers of the tangent roots (hypersurface normals subtracted).
F2Poly power_sum_class(const Space& s, int k);

/// s_I: the monomial symmetric function m_I of the tangent roots, integrated.
/// Partitions with two or more parts need a root-representable space.
bool s_number(const Space& s, const Partition& I);

/// Parity count of digit-to-factor assignments for
/// w_1^{two_i} w_{2n - two_i} on RP^{b_1} x ... x RP^{b_r}, all b_j even.
bool lemma_count_number(std::span<const int> b, int two_i);

/// s_n of RP(A + B*) over Z from the closed bracket sum with signs dropped;
/// x_1, x_2 are the characters of A and x_3, x_4 those of B.
bool totaro_flop_s_number(const Space& Z, const BundleChars& A, const BundleChars& B);

}  // namespace flopcalc
