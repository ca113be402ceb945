#include "flopcalc/bordism.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "parallel.hpp"

namespace flopcalc {

namespace {

using detail::parallel_for;

// Compositions of `total` into at most `max_parts` positive parts, in
// lexicographic order; total = 0 gives the empty composition.
void compositions(int total, int max_parts, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (total == 0) {
    out.push_back(cur);
    return;
  }
  if (static_cast<int>(cur.size()) == max_parts) return;
  for (int p = 1; p <= total; ++p) {
    cur.push_back(p);
    compositions(total - p, max_parts, cur, out);
    cur.pop_back();
  }
}

std::vector<std::uint32_t> alphabet_masks(const std::vector<std::string>& alphabet, std::size_t num_gens) {
  std::vector<std::uint32_t> out;
  for (const auto& letter : alphabet) {
    const std::uint32_t m = parse_character(letter, 31);
    if (num_gens < 32 && (m >> num_gens) != 0) continue;
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
  }
  return out;
}

FlopDatum datum_from_spec(const std::string& spec) {
  const auto factors = parse_factors(spec);
  const auto* bf = factors.size() == 1 ? std::get_if<BundleFactor>(&factors[0]) : nullptr;
  if (!bf || bf->split != 2 || bf->masks.size() != 4) {
    throw std::invalid_argument("extra flop must be bundle:base=...;A=x,y;B=z,w, got " + spec);
  }
  FlopDatum d;
  d.base = bf->base;
  std::copy(bf->masks.begin(), bf->masks.end(), d.chars.begin());
  return d;
}

std::string column_key(const NumberVector& v) { return v.to_bitstring(); }

struct MONumbers {
  MOBasis basis;
  std::vector<NumberVector> numbers;
};

MONumbers mo_numbers(int n, int jobs) {
  MONumbers out{mo_basis(n), {}};
  out.numbers.resize(out.basis.manifolds.size());
  parallel_for(out.numbers.size(), jobs, [&](std::size_t i) { out.numbers[i] = number_vector(out.basis.manifolds[i]); });
  return out;
}

std::vector<bool> unit_row(int n, const Partition& p) {
  const auto idx = partitions(n);
  std::vector<bool> row(idx.size(), false);
  auto it = std::lower_bound(idx.begin(), idx.end(), p, std::greater<>());
  row[static_cast<std::size_t>(it - idx.begin())] = true;
  return row;
}

Partition w1_index(int n, int k) { return Partition::w1_power(n, std::min(k, n - 1)); }

}  // namespace

// ---------------------------------------------------------------------------
// Family configuration

FamilyConfig FamilyConfig::from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("family config: ") + e.what());
  }
  if (!j.is_object()) throw std::invalid_argument("family config: expected a JSON object");
  FamilyConfig c;
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "max_base_factors") {
        c.max_base_factors = value.get<int>();
      } else if (key == "max_base_dim") {
        c.max_base_dim = value.is_null() ? std::nullopt : std::optional<int>(value.get<int>());
      } else if (key == "alphabet") {
        c.alphabet = value.get<std::vector<std::string>>();
      } else if (key == "dimension_cap") {
        c.dimension_cap = value.get<int>();
      } else if (key == "extra_flops") {
        c.extra_flops = value.get<std::vector<std::string>>();
      } else {
        throw std::invalid_argument("family config: unknown key '" + key + "'");
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("family config: ") + e.what());
  }
  if (c.max_base_factors < 0 || c.max_base_factors > 8) {
    throw std::invalid_argument("family config: max_base_factors must be in [0, 8]");
  }
  if (c.max_base_dim && *c.max_base_dim < 0) throw std::invalid_argument("family config: max_base_dim must be >= 0");
  if (c.dimension_cap < 0 || c.dimension_cap > 20) throw std::invalid_argument("family config: dimension_cap must be in [0, 20]");
  for (const auto& letter : c.alphabet) parse_character(letter, 31);
  for (const auto& spec : c.extra_flops) datum_from_spec(spec);
  return c;
}

std::string FamilyConfig::to_json() const {
  nlohmann::ordered_json j;
  j["max_base_factors"] = max_base_factors;
  j["max_base_dim"] = max_base_dim ? nlohmann::ordered_json(*max_base_dim) : nlohmann::ordered_json(nullptr);
  j["alphabet"] = alphabet;
  j["dimension_cap"] = dimension_cap;
  j["extra_flops"] = extra_flops;
  return j.dump(2);
}

FamilyConfig FamilyConfig::enlarged() const {
  FamilyConfig c = *this;
  ++c.max_base_factors;
  for (const char* letter : {"g1+g3", "g2+g3", "g1+g2+g3"}) {
    if (std::find(c.alphabet.begin(), c.alphabet.end(), letter) == c.alphabet.end()) c.alphabet.push_back(letter);
  }
  return c;
}

// ---------------------------------------------------------------------------
// Specific spaces

int FlopDatum::dim() const { return std::accumulate(base.begin(), base.end(), 0) + 3; }

Space FlopDatum::to_space() const {
  Space z = rp_product(base);
  std::vector<std::uint32_t> masks(chars.begin(), chars.end());
  return projective_bundle(z, BundleChars::from_masks(z.ring(), masks), 2);
}

Space flop_class(std::span<const int> base_exponents, const BundleChars& A, const BundleChars& B) {
  if (A.rank() != 2 || B.rank() != 2) throw std::invalid_argument("flop_class: A and B must have rank 2");
  Space z = rp_product(base_exponents);
  // B* has the same mod-2 characters as B.
  BundleChars v = A;
  v.characters.insert(v.characters.end(), B.characters.begin(), B.characters.end());
  return projective_bundle(z, v, 2);
}

Space flop_class(const FlopDatum& datum) { return datum.to_space(); }

Space e_bundle(int k, int b) {
  if (k < 2 || k > 10) throw std::invalid_argument("e_bundle: k must be in [2, 10]");
  const int top = (1 << k) - 2;
  if (b < 0 || b > top - 1) throw std::invalid_argument("e_bundle: b must be in [0, 2^k - 3]");
  FlopDatum d;
  if (b == 0) {
    d.base = {top};
    d.chars = {1u, 0u, 0u, 0u};
  } else {
    d.base = {top, b};
    d.chars = {1u, 2u, 0u, 0u};
  }
  return d.to_space();
}

Space r_bundle(int a) {
  if (a < 2 || a > 10) throw std::invalid_argument("r_bundle: a must be in [2, 10]");
  FlopDatum d;
  d.base = {(1 << (a + 1)) - 3};
  d.chars = {1u, 0u, 0u, 0u};
  return d.to_space();
}

bool is_generator_degree(int n) { return n >= 2 && ((n + 1) & n) != 0; }

Space mo_generator(int n) {
  if (!is_generator_degree(n)) {
    throw std::invalid_argument("mo_generator: no generator in degree " + std::to_string(n));
  }
  Space g = [&] {
    if (n % 2 == 0) return rp_product({n});
    for (int a = 1; 2 * a <= n + 1; ++a) {
      const int b = n + 1 - a;
      if ((a & b) == 0) return hypersurface11(a, b);
    }
    throw std::logic_error("mo_generator: no disjoint pair");
  }();
  if (!s_number(g, Partition({n}))) throw std::logic_error("mo_generator: s_n vanishes on " + g.spec());
  return g;
}

MOBasis mo_basis(int n) {
  if (n < 0) throw std::invalid_argument("mo_basis: negative dimension");
  std::set<int> allowed;
  for (int k = 2; k <= n; ++k) {
    if (is_generator_degree(k)) allowed.insert(k);
  }
  MOBasis out;
  out.n = n;
  out.keys = partitions(n, allowed);
  std::map<int, Space> gens;
  for (const auto& key : out.keys) {
    Space m = point_space();
    bool first = true;
    for (int part : key.parts()) {
      auto it = gens.find(part);
      if (it == gens.end()) it = gens.emplace(part, mo_generator(part)).first;
      m = first ? it->second : product(m, it->second);
      first = false;
    }
    out.manifolds.push_back(std::move(m));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Matrices

GF2Matrix number_matrix(int n, const std::vector<NumberVector>& columns) {
  const std::size_t rows = partitions(n).size();
  GF2Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].n() != n) throw std::invalid_argument("number_matrix: column of the wrong dimension");
    const auto& bits = columns[c].bits();
    for (std::size_t r = 0; r < rows; ++r) {
      if (bits[r]) m.set(r, c, true);
    }
  }
  return m;
}

GF2Matrix vanishing_number_space(int n, int jobs) {
  return number_matrix(n, mo_numbers(n, jobs).numbers).left_kernel();
}

FlopCatalog::FlopCatalog(FamilyConfig config, int jobs) : config_(std::move(config)), jobs_(jobs) {}

std::vector<FlopDatum> FlopCatalog::data(int dim) const {
  std::vector<FlopDatum> out;
  const int base_dim = dim - 3;
  if (base_dim < 0) return out;
  if (!config_.max_base_dim || base_dim <= *config_.max_base_dim) {
    std::vector<std::vector<int>> bases;
    std::vector<int> cur;
    compositions(base_dim, config_.max_base_factors, cur, bases);
    for (const auto& base : bases) {
      const auto letters = alphabet_masks(config_.alphabet, base.size());
      const std::size_t L = letters.size();
      // Mod 2 the numbers only see the multiset of the four characters.
      for (std::size_t i1 = 0; i1 < L; ++i1)
        for (std::size_t i2 = i1; i2 < L; ++i2)
          for (std::size_t i3 = i2; i3 < L; ++i3)
            for (std::size_t i4 = i3; i4 < L; ++i4) {
              out.push_back(FlopDatum{base, {letters[i1], letters[i2], letters[i3], letters[i4]}});
            }
    }
  }
  for (const auto& spec : config_.extra_flops) {
    FlopDatum d = datum_from_spec(spec);
    if (d.dim() == dim) out.push_back(std::move(d));
  }
  return out;
}

const std::vector<FlopCatalog::Entry>& FlopCatalog::distinct(int dim) {
  std::lock_guard lock(mu_);
  auto it = distinct_.find(dim);
  if (it != distinct_.end()) return it->second;
  const auto all = data(dim);
  std::vector<NumberVector> numbers(all.size());
  parallel_for(all.size(), jobs_, [&](std::size_t i) { numbers[i] = number_vector(all[i].to_space()); });
  std::vector<Entry> kept;
  std::unordered_set<std::string> seen;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!seen.insert(column_key(numbers[i])).second) continue;
    kept.push_back(Entry{all[i], all[i].to_space().spec(), std::move(numbers[i])});
  }
  return distinct_.emplace(dim, std::move(kept)).first->second;
}

FlopIdealFamily flop_ideal_family(int n, FlopCatalog& catalog, int jobs) {
  if (n > catalog.config().dimension_cap) {
    throw std::invalid_argument("flop family: dimension " + std::to_string(n) + " exceeds the configured cap " +
                                std::to_string(catalog.config().dimension_cap));
  }
  FlopIdealFamily out;
  out.n = n;
  std::unordered_set<std::string> seen;
  for (int d = 3; d <= n; ++d) {
    const auto& flops = catalog.distinct(d);
    const MONumbers mo = mo_numbers(n - d, jobs);
    const std::size_t M = mo.numbers.size();
    std::vector<NumberVector> cols(flops.size() * M);
    parallel_for(cols.size(), jobs, [&](std::size_t i) { cols[i] = product_numbers(mo.numbers[i % M], flops[i / M].numbers); });
    for (std::size_t i = 0; i < cols.size(); ++i) {
      if (!seen.insert(column_key(cols[i])).second) continue;
      const Space& m = mo.basis.manifolds[i % M];
      const std::string& f = flops[i / M].spec;
      out.generators.push_back(m.factors().empty() ? f : m.spec() + "*" + f);
      out.numbers.push_back(std::move(cols[i]));
    }
  }
  return out;
}

GF2Matrix flop_ideal_matrix(int n, FlopCatalog& catalog, int jobs) {
  return number_matrix(n, flop_ideal_family(n, catalog, jobs).numbers);
}

GF2Matrix flop_ideal_matrix(int n, const FamilyConfig& config, int jobs) {
  FlopCatalog catalog(config, jobs);
  return flop_ideal_matrix(n, catalog, jobs);
}

// ---------------------------------------------------------------------------
// Invariant numbers

InvariantSpace invariant_number_space(int n, FlopCatalog& catalog, int jobs) {
  if (n < 0) throw std::invalid_argument("invariant_number_space: negative dimension");
  InvariantSpace out;
  out.n = n;
  const GF2Matrix family = flop_ideal_matrix(n, catalog, jobs);
  const GF2Matrix mo = number_matrix(n, mo_numbers(n, jobs).numbers);
  out.family_columns = family.cols();
  out.family_rank = family.rank();
  out.mo_rank = mo.rank();
  out.family_kernel = family.left_kernel();
  out.vanishing = mo.left_kernel();

  GF2Matrix span = out.vanishing.row_basis();
  out.basis = GF2Matrix(0, span.cols());
  std::size_t r = span.rank();
  for (std::size_t i = 0; i < out.family_kernel.rows(); ++i) {
    const auto row = out.family_kernel.row(i);
    span.append_row(row);
    if (span.rank() > r) {
      ++r;
      out.basis.append_row(row);
    }
  }
  out.dimension = out.basis.rows();

  out.w1_numbers = GF2Matrix(0, out.vanishing.cols());
  for (int k = 0; k < n; ++k) out.w1_numbers.append_row(unit_row(n, Partition::w1_power(n, k)));
  out.w1_numbers_invariant = true;
  for (std::size_t i = 0; i < out.w1_numbers.rows(); ++i) {
    out.w1_numbers_invariant = out.w1_numbers_invariant && out.family_kernel.row_space_contains(out.w1_numbers.row(i));
  }
  out.spanned_by_w1_numbers = out.family_kernel.row_space_equals(vstack(out.w1_numbers, out.vanishing));
  return out;
}

InvariantSpace invariant_number_space(int n, const FamilyConfig& config, int jobs) {
  FlopCatalog catalog(config, jobs);
  return invariant_number_space(n, catalog, jobs);
}

StabilityReport family_stability(int n, const FamilyConfig& config, int jobs) {
  StabilityReport out;
  out.n = n;
  out.dimension = invariant_number_space(n, config, jobs).dimension;
  out.enlarged_dimension = invariant_number_space(n, config.enlarged(), jobs).dimension;
  return out;
}

// ---------------------------------------------------------------------------
// Quotient ring in even degrees

GF2Matrix intersection_matrix(int two_n) {
  if (two_n < 2 || two_n % 2 != 0) throw std::invalid_argument("intersection_matrix: two_n must be even and >= 2");
  const std::size_t size = static_cast<std::size_t>(two_n / 4 + 1);
  GF2Matrix m(size, size);
  for (std::size_t j = 0; j < size; ++j) {
    const Partition J = j_partition(two_n, static_cast<int>(4 * j));
    const Space rp = rp_product(std::vector<int>(J.parts().begin(), J.parts().end()));
    for (std::size_t i = 0; i < size; ++i) {
      const int k = static_cast<int>(4 * i);
      const bool counted = lemma_count_number(J.parts(), k);
      const bool integrated = sw_number(rp, w1_index(two_n, k));
      if (counted != integrated) {
        throw std::logic_error("intersection_matrix: count and ring disagree on " + rp.spec() + " at " +
                               w1_index(two_n, k).to_string());
      }
      m.set(i, j, counted);
    }
  }
  return m;
}

GF2Matrix sub_sum_basis_matrix(int two_n) {
  const GF2Matrix m = intersection_matrix(two_n);
  const std::size_t size = m.cols();
  std::vector<std::vector<bool>> b(size);
  for (std::size_t j = 0; j < size; ++j) {
    b[j] = m.column(j);
    for (std::size_t jp = 0; jp < j; ++jp) {
      if ((jp & j) != jp) continue;
      for (std::size_t r = 0; r < size; ++r) b[j][r] = b[j][r] != b[jp][r];
    }
  }
  return GF2Matrix::from_columns(b, size);
}

bool basis_change_diagonal_check(int two_n) { return sub_sum_basis_matrix(two_n).is_identity(); }

QuotientBasis quotient_basis(int two_n) {
  QuotientBasis out;
  out.two_n = two_n;
  const GF2Matrix m = intersection_matrix(two_n);
  for (std::size_t j = 0; j < m.cols(); ++j) out.partitions.push_back(j_partition(two_n, static_cast<int>(4 * j)));
  out.independent = m.rank() == m.cols();
  return out;
}

RelationCheck relation_check(int a, FlopCatalog& catalog, int jobs) {
  if (a < 2 || a > 4) throw std::invalid_argument("relation_check: a must be in [2, 4]");
  const int half = 1 << a;
  const int n = 2 * half;
  if (n > catalog.config().dimension_cap) {
    throw std::invalid_argument("relation_check: dimension " + std::to_string(n) + " exceeds the configured cap");
  }
  RelationCheck out;
  out.a = a;
  const std::vector<int> lhs_parts = {half, half};
  const std::vector<int> rhs_parts(static_cast<std::size_t>(half), 2);
  const Space lhs = rp_product(lhs_parts);
  const Space rhs = rp_product(rhs_parts);
  const NumberVector diff = number_vector(lhs) + number_vector(rhs);
  out.in_ideal = flop_ideal_matrix(n, catalog, jobs).column_space_contains(diff.bits());
  out.w1_agree = true;
  for (int k = 0; k <= n; k += 2) {
    const bool l = lemma_count_number(lhs_parts, k);
    const bool r = lemma_count_number(rhs_parts, k);
    const bool lr = sw_number(lhs, w1_index(n, k));
    const bool rr = sw_number(rhs, w1_index(n, k));
    out.w1_agree = out.w1_agree && l == r && lr == rr && l == lr;
  }
  return out;
}

RelationCheck relation_check(int a, const FamilyConfig& config, int jobs) {
  FlopCatalog catalog(config, jobs);
  return relation_check(a, catalog, jobs);
}

}  // namespace flopcalc
