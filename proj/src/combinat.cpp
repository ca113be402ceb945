#include "flopcalc/combinat.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flopcalc {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (int p : parts_) {
    if (p < 1) throw std::invalid_argument("partition parts must be positive, got " + std::to_string(p));
  }
  std::sort(parts_.begin(), parts_.end(), std::greater<>());
  weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int value) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), value));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "()";
  std::ostringstream os;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) os << ',';
    os << parts_[i];
  }
  return os.str();
}

Partition Partition::parse(const std::string& text) {
  if (text.empty() || text == "()") return Partition();
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find(',', pos);
    if (end == std::string::npos) end = text.size();
    std::string token = text.substr(pos, end - pos);
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
      throw std::invalid_argument("bad partition token '" + token + "'");
    }
    parts.push_back(std::stoi(token));
    pos = end + 1;
  }
  return Partition(std::move(parts));
}

Partition Partition::w1_power(int n, int k) {
  if (n < 1 || k < 0 || k > n - 1) {
    throw std::invalid_argument("w1_power needs 0 <= k <= n-1");
  }
  std::vector<int> parts(static_cast<std::size_t>(k), 1);
  parts.push_back(n - k);
  return Partition(std::move(parts));
}

std::uint64_t BinaryExpansion::value() const {
  std::uint64_t v = 0;
  for (int c : powers) v += std::uint64_t{1} << c;
  return v;
}

BinaryExpansion binary_expansion(std::uint64_t n) {
  BinaryExpansion out;
  for (int c = 0; n >> c; ++c) {
    if ((n >> c) & 1u) out.powers.push_back(c);
  }
  return out;
}

int alpha2(std::uint64_t n) { return std::popcount(n); }

std::uint64_t ord2_factorial(std::uint64_t n) { return n - static_cast<std::uint64_t>(alpha2(n)); }

bool binom_mod2(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return false;
  auto un = static_cast<std::uint64_t>(n);
  auto uk = static_cast<std::uint64_t>(k);
  return (uk & ~un) == 0;
}

bool binom_mod2_via_ord2(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return false;
  auto un = static_cast<std::uint64_t>(n);
  auto uk = static_cast<std::uint64_t>(k);
  return ord2_factorial(un) - ord2_factorial(uk) - ord2_factorial(un - uk) == 0;
}

namespace {

void enumerate(int remaining, int max_part, const std::vector<int>& sizes, std::vector<int>& current,
               std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  // sizes is sorted decreasing, so the emission order is reverse lexicographic.
  for (int s : sizes) {
    if (s > max_part || s > remaining) continue;
    current.push_back(s);
    enumerate(remaining - s, s, sizes, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions(int n, const std::optional<std::set<int>>& allowed_parts) {
  if (n < 0) throw std::invalid_argument("partitions of a negative integer");
  std::vector<int> sizes;
  if (allowed_parts) {
    for (int s : *allowed_parts) {
      if (s < 1) throw std::invalid_argument("allowed parts must be positive");
      if (s <= n) sizes.push_back(s);
    }
  } else {
    for (int s = 1; s <= n; ++s) sizes.push_back(s);
  }
  std::sort(sizes.begin(), sizes.end(), std::greater<>());
  std::vector<Partition> out;
  std::vector<int> current;
  enumerate(n, n, sizes, current, out);
  return out;
}

Partition j_partition(int two_n, int four_j) {
  if (two_n < 2 || two_n % 2 != 0) throw std::invalid_argument("j_partition: two_n must be even and positive");
  if (four_j < 0 || four_j > two_n || four_j % 4 != 0) {
    throw std::invalid_argument("j_partition: four_j must be a multiple of 4 in [0, two_n]");
  }
  std::vector<int> parts(static_cast<std::size_t>((two_n - four_j) / 2), 2);
  for (int c : binary_expansion(static_cast<std::uint64_t>(four_j)).powers) parts.push_back(1 << c);
  return Partition(std::move(parts));
}

}  // namespace flopcalc
