#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "flopcalc/charnum.hpp"
#include "flopcalc/combinat.hpp"
#include "flopcalc/gf2matrix.hpp"
#include "flopcalc/spaces.hpp"

namespace flopcalc {

/// Bounds for the enumerated family of flop difference classes RP(A + B*).
struct FamilyConfig {
  int max_base_factors = 3;
  std::optional<int> max_base_dim;  // unset: only the dimension bounds apply
  std::vector<std::string> alphabet = {"0", "g1", "g2", "g3", "g1+g2"};
  int dimension_cap = 16;
  std::vector<std::string> extra_flops;  // bundle specs with A=...;B=...

  /// Reads the JSON config format; unknown keys are rejected.
  static FamilyConfig from_json(const std::string& text);
  std::string to_json() const;
  /// One more base factor and every sum of three generators in the alphabet.
  FamilyConfig enlarged() const;
};

/// A base RP product Z with four line-bundle characters; the first two
/// span A and the last two B.
struct FlopDatum {
  std::vector<int> base;
  std::array<std::uint32_t, 4> chars{};

  int dim() const;
  Space to_space() const;
};

Space flop_class(std::span<const int> base_exponents, const BundleChars& A, const BundleChars& B);
Space flop_class(const FlopDatum& datum);

/// RP(O(1) + O(1) + O^2) over RP^{2^k-2} x RP^b; for b = 0 the second
/// factor is a point and its character vanishes.
Space e_bundle(int k, int b);
/// RP(O(1) + O^3) over RP^{2^{a+1}-3}.
Space r_bundle(int a);
/// RP^n for n even, otherwise the degree-(1,1) hypersurface in RP^a x RP^b
/// with a + b = n + 1, disjoint binary digits, and (a, b) lexicographically
/// smallest with 1 <= a <= b.
Space mo_generator(int n);
bool is_generator_degree(int n);

struct MOBasis {
  int n = 0;
  std::vector<Partition> keys;  // generator degrees
  std::vector<Space> manifolds;
};

MOBasis mo_basis(int n);

/// Columns are number vectors; rows follow partitions(n).
GF2Matrix number_matrix(int n, const std::vector<NumberVector>& columns);

/// Left kernel of the MO_n number matrix, as rows.
GF2Matrix vanishing_number_space(int n, int jobs = 1);

/// Enumerates flop data for every dimension up to a cap and keeps, per
/// dimension, one representative of each distinct nonzero number vector.
/// Work is done lazily and cached, so one catalog can serve many n.
class FlopCatalog {
 public:
  struct Entry {
    FlopDatum datum;
    std::string spec;
    NumberVector numbers;
  };

  explicit FlopCatalog(FamilyConfig config, int jobs = 1);

  const FamilyConfig& config() const { return config_; }
  /// All enumerated flop data of total dimension `dim`, before deduplication.
  std::vector<FlopDatum> data(int dim) const;
  const std::vector<Entry>& distinct(int dim);

 private:
  FamilyConfig config_;
  int jobs_;
  std::map<int, std::vector<Entry>> distinct_;
  std::mutex mu_;
};

struct FlopIdealFamily {
  int n = 0;
  std::vector<std::string> generators;  // space specs: mo-basis manifold x flop class
  std::vector<NumberVector> numbers;    // matching columns, deduplicated
};

FlopIdealFamily flop_ideal_family(int n, FlopCatalog& catalog, int jobs = 1);
GF2Matrix flop_ideal_matrix(int n, FlopCatalog& catalog, int jobs = 1);
GF2Matrix flop_ideal_matrix(int n, const FamilyConfig& config, int jobs = 1);

struct InvariantSpace {
  int n = 0;
  std::size_t dimension = 0;  // invariant numbers modulo vanishing ones
  GF2Matrix family_kernel;    // numbers vanishing on every family column
  GF2Matrix vanishing;        // numbers vanishing on MO_n
  GF2Matrix basis;            // completes `vanishing` to `family_kernel`
  GF2Matrix w1_numbers;       // unit rows for w_1^k w_{n-k}, 0 <= k <= n-1
  bool w1_numbers_invariant = false;
  bool spanned_by_w1_numbers = false;  // family_kernel == span(w1_numbers + vanishing)
  std::size_t family_columns = 0;
  std::size_t family_rank = 0;
  std::size_t mo_rank = 0;
};

InvariantSpace invariant_number_space(int n, FlopCatalog& catalog, int jobs = 1);
InvariantSpace invariant_number_space(int n, const FamilyConfig& config, int jobs = 1);

struct StabilityReport {
  int n = 0;
  std::size_t dimension = 0;
  std::size_t enlarged_dimension = 0;
  bool stable() const { return dimension == enlarged_dimension; }
};

/// Recomputes the quotient dimension with FamilyConfig::enlarged().
StabilityReport family_stability(int n, const FamilyConfig& config, int jobs = 1);

/// [w_1^{4i} w_{2n-4i}[RP^{J_{2n}(4j)}]] for 0 <= 4i, 4j <= 2n, from the
/// counting formula; every entry is also evaluated in the cohomology ring
/// and a disagreement throws std::logic_error.
GF2Matrix intersection_matrix(int two_n);
/// The same matrix in the basis b_{4j} = RP^{J(4j)} + sum of b_{4j'} over
/// proper binary sub-sums 4j' of 4j.
GF2Matrix sub_sum_basis_matrix(int two_n);
bool basis_change_diagonal_check(int two_n);

struct QuotientBasis {
  int two_n = 0;
  std::vector<Partition> partitions;
  bool independent = false;  // intersection matrix nonsingular
};

QuotientBasis quotient_basis(int two_n);

struct RelationCheck {
  int a = 0;
  bool in_ideal = false;  // RP^{2^a} x RP^{2^a} - (RP^2)^{2^a} in the family column space
  bool w1_agree = false;  // all w_1^{2i} w_{n-2i} agree, by count and by ring
  bool ok() const { return in_ideal && w1_agree; }
};

RelationCheck relation_check(int a, FlopCatalog& catalog, int jobs = 1);
RelationCheck relation_check(int a, const FamilyConfig& config, int jobs = 1);

}  // namespace flopcalc
