#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace flopcalc {

/// A partition stored in canonical weakly decreasing form.
///
/// The empty partition is the unique partition of 0. Every partition-indexed
/// map in the library keys on this canonical form, so (1,2,1) and (2,1,1)
/// are the same object.
class Partition {
 public:
  Partition() = default;
  /// Sorts the parts; throws std::invalid_argument on a part < 1.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const { return weight_; }
  bool empty() const { return parts_.empty(); }

  /// Number of parts equal to `value`.
  int multiplicity(int value) const;

  /// Comma separated parts, largest first; "()" for the empty partition.
  std::string to_string() const;

  /// Parses "1,1,2" in any order. "()" or "" gives the empty partition.
  static Partition parse(const std::string& text);

  /// The index of w_1^k w_{n-k}: one part n-k and k parts equal to 1.
  static Partition w1_power(int n, int k);

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

struct BinaryExpansion {
  std::vector<int> powers;  // strictly increasing exponents

  std::uint64_t value() const;
};

BinaryExpansion binary_expansion(std::uint64_t n);

/// Number of nonzero binary digits.
int alpha2(std::uint64_t n);

/// 2-adic valuation of n!, computed as n - alpha2(n).
std::uint64_t ord2_factorial(std::uint64_t n);

/// C(n, k) mod 2 by the digit criterion; 0 outside 0 <= k <= n.
bool binom_mod2(std::int64_t n, std::int64_t k);

/// Same value through ord2(n!) - ord2(k!) - ord2((n-k)!) == 0.
bool binom_mod2_via_ord2(std::int64_t n, std::int64_t k);

/// All partitions of n in reverse lexicographic order, optionally restricted
/// to the given part sizes. partitions(0) is the single empty partition.
std::vector<Partition> partitions(int n, const std::optional<std::set<int>>& allowed_parts = std::nullopt);

/// J_{2n}(4j): (two_n - four_j)/2 parts equal to 2 plus the binary digits
/// of four_j.
Partition j_partition(int two_n, int four_j);

}  // namespace flopcalc
