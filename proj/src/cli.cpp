#include "flopcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "parallel.hpp"

namespace flopcalc {

namespace {

using nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string witness(const std::string& spec, const Partition& p, bool power_sum, bool expected) {
  return "flopcalc number '" + spec + "' " + p.to_string() + (power_sum ? " --power-sum" : "") + "  # expected " +
         (expected ? "1" : "0");
}

std::string rp_spec(std::span<const int> parts) {
  if (parts.empty()) return "pt";
  std::string s = "rp:";
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + std::to_string(parts[i]);
  return s;
}

Partition w1_index(int n, int k) { return Partition::w1_power(n, std::min(k, n - 1)); }

void fail(VerifyReport& r, std::string line, std::optional<std::string> w = std::nullopt) {
  r.pass = false;
  r.lines.push_back(std::move(line));
  if (w && !r.witness) r.witness = std::move(w);
}

// Outcome of one case, filled in parallel and folded in index order.
struct CaseResult {
  std::size_t checks = 0;
  std::optional<std::string> failure;
  std::optional<std::string> witness;
};

void fold(VerifyReport& r, const std::vector<CaseResult>& cases) {
  for (const auto& c : cases) {
    r.checked += c.checks;
    if (c.failure) fail(r, *c.failure, c.witness);
  }
}

CaseResult flop_w1_case(const FlopDatum& d) {
  CaseResult c;
  const Space s = d.to_space();
  const int n = s.dim();
  for (int k = 0; k < n; ++k) {
    ++c.checks;
    const Partition p = Partition::w1_power(n, k);
    if (sw_number(s, p)) {
      c.failure = "w_1^" + std::to_string(k) + " w_" + std::to_string(n - k) + " is nonzero on " + s.spec();
      c.witness = witness(s.spec(), p, false, false);
      return c;
    }
  }
  return c;
}

std::vector<FlopDatum> random_flops(int max_dim, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto below = [&](std::uint64_t bound) { return bound <= 1 ? 0 : rng() % bound; };
  std::vector<FlopDatum> out;
  for (int s = 0; s < count; ++s) {
    FlopDatum d;
    const int base_dim = static_cast<int>(below(static_cast<std::uint64_t>(max_dim - 2)));
    const int factors = base_dim == 0 ? 0 : 1 + static_cast<int>(below(static_cast<std::uint64_t>(std::min(3, base_dim))));
    // A random composition of base_dim into `factors` positive parts.
    std::vector<int> cuts;
    while (static_cast<int>(cuts.size()) < factors - 1) {
      const int c = 1 + static_cast<int>(below(static_cast<std::uint64_t>(base_dim - 1)));
      if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    int prev = 0;
    for (int c : cuts) {
      d.base.push_back(c - prev);
      prev = c;
    }
    if (factors > 0) d.base.push_back(base_dim - prev);
    for (auto& m : d.chars) m = static_cast<std::uint32_t>(below(std::uint64_t{1} << factors));
    out.push_back(std::move(d));
  }
  return out;
}

VerifyReport verify_prop2(const VerifyOptions& o) {
  VerifyReport r;
  r.statement = "w_1^k w_{n-k}, 0 <= k <= n-1, vanishes on every flop difference class RP(A + B*)";
  r.max_dim = o.max_dim.value_or(10);
  FlopCatalog catalog(o.config, o.jobs);
  for (int d = 3; d <= r.max_dim; ++d) {
    const auto data = catalog.data(d);
    std::vector<CaseResult> cases(data.size());
    detail::parallel_for(data.size(), o.jobs, [&](std::size_t i) { cases[i] = flop_w1_case(data[i]); });
    const bool before = r.pass;
    fold(r, cases);
    if (before == r.pass) r.lines.push_back("n=" + std::to_string(d) + " family classes=" + std::to_string(data.size()) + " ok");
  }
  if (r.max_dim >= 3 && o.samples > 0) {
    const auto data = random_flops(r.max_dim, o.samples, o.seed);
    std::vector<CaseResult> cases(data.size());
    detail::parallel_for(data.size(), o.jobs, [&](std::size_t i) { cases[i] = flop_w1_case(data[i]); });
    const bool before = r.pass;
    fold(r, cases);
    if (before == r.pass) {
      r.lines.push_back("random classes=" + std::to_string(data.size()) + " seed=" + std::to_string(o.seed) + " ok");
    }
  }
  return r;
}

VerifyReport verify_prop3(const VerifyOptions& o) {
  VerifyReport r;
  r.statement = "s_n[E] = 1 for E = RP(O(1) + O(1) + O^2) over RP^{2^k-2} x RP^b, by ring and by binomial closed form";
  r.max_dim = o.max_dim.value_or(14);
  for (int k = 2; (1 << k) + 1 <= r.max_dim && k <= 10; ++k) {
    for (int b = 0; b <= (1 << k) - 3 && (1 << k) + b + 1 <= r.max_dim; ++b) {
      const Space e = e_bundle(k, b);
      const int n = e.dim();
      const bool ring = s_number(e, Partition({n}));
      const bool closed = binom_mod2((1 << k) + b, (1 << k) - 2) != binom_mod2((1 << k) + b, b);
      ++r.checked;
      std::string line = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " b=" + std::to_string(b) +
                         " ring=" + (ring ? "1" : "0") + " closed=" + (closed ? "1" : "0");
      if (!ring || !closed) {
        fail(r, line, witness(e.spec(), Partition({n}), true, true));
      } else {
        r.lines.push_back(line);
      }
    }
  }
  return r;
}

VerifyReport verify_lemma4(const VerifyOptions& o) {
  VerifyReport r;
  r.statement = "w_1^{2i} w_{2n-2i} on products of even RP^b agrees with the parity count of digit assignments";
  r.max_dim = o.max_dim.value_or(14);
  for (int two_n = 2; two_n <= r.max_dim; two_n += 2) {
    const auto halves = partitions(two_n / 2);
    std::vector<CaseResult> cases(halves.size());
    detail::parallel_for(halves.size(), o.jobs, [&](std::size_t idx) {
      std::vector<int> b;
      for (int p : halves[idx].parts()) b.push_back(2 * p);
      const Space rp = rp_product(b);
      CaseResult& c = cases[idx];
      for (int two_i = 0; two_i <= two_n; two_i += 2) {
        ++c.checks;
        const Partition I = w1_index(two_n, two_i);
        const bool counted = lemma_count_number(b, two_i);
        if (counted != sw_number(rp, I)) {
          c.failure = "count and ring disagree on " + rp.spec() + " at 2i=" + std::to_string(two_i);
          c.witness = witness(rp.spec(), I, false, counted);
          return;
        }
      }
    });
    const bool before = r.pass;
    fold(r, cases);
    if (before == r.pass) r.lines.push_back("2n=" + std::to_string(two_n) + " manifolds=" + std::to_string(halves.size()) + " ok");
  }
  return r;
}

VerifyReport verify_cor6(const VerifyOptions& o) {
  VerifyReport r;
  r.statement =
      "w_1^{4i} w_{2n-4i}[RP^{J(4j)}] = 1 iff the binary digits of 4i are among those of 4j, and the sub-sum basis "
      "makes the matrix the identity";
  r.max_dim = o.max_dim.value_or(16);
  for (int two_n = 2; two_n <= r.max_dim; two_n += 2) {
    GF2Matrix m;
    try {
      m = intersection_matrix(two_n);
    } catch (const std::logic_error& e) {
      fail(r, "2n=" + std::to_string(two_n) + " " + e.what());
      continue;
    }
    bool ok = true;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      for (std::size_t j = 0; j < m.cols(); ++j) {
        ++r.checked;
        const bool subset = ((4 * i) & (4 * j)) == 4 * i;
        if (m.get(i, j) != subset && ok) {
          ok = false;
          const Partition J = j_partition(two_n, static_cast<int>(4 * j));
          fail(r, "2n=" + std::to_string(two_n) + " entry (" + std::to_string(4 * i) + "," + std::to_string(4 * j) + ")",
               witness(rp_spec(J.parts()), w1_index(two_n, static_cast<int>(4 * i)), false, subset));
        }
      }
    }
    ++r.checked;
    const bool diagonal = basis_change_diagonal_check(two_n);
    if (!diagonal) {
      fail(r, "2n=" + std::to_string(two_n) + " sub-sum basis matrix is not the identity");
    } else if (ok) {
      r.lines.push_back("2n=" + std::to_string(two_n) + " size=" + std::to_string(m.rows()) + " subset-criterion ok, identity ok");
    }
  }
  return r;
}

VerifyReport verify_prop7(const VerifyOptions& o) {
  VerifyReport r;
  r.statement = "s_{2^a,2^a}[RP(O(1) + O^3) over RP^{2^{a+1}-3}] = 1 for a >= 2";
  r.max_dim = o.max_dim.value_or(16);
  for (int a = 2; (1 << (a + 1)) <= r.max_dim && a <= 10; ++a) {
    const Space R = r_bundle(a);
    const Partition I({1 << a, 1 << a});
    ++r.checked;
    const bool v = s_number(R, I);
    const std::string line = "a=" + std::to_string(a) + " dim=" + std::to_string(R.dim()) + " s=" + (v ? "1" : "0");
    if (!v) {
      fail(r, line, witness(R.spec(), I, true, true));
    } else {
      r.lines.push_back(line);
    }
  }
  return r;
}

VerifyReport verify_prop8(const VerifyOptions& o) {
  VerifyReport r;
  r.statement = "(RP^{2^a})^2 - (RP^2)^{2^a} lies in the flop ideal for a >= 2, and their w_1^{2i} numbers agree";
  r.max_dim = o.max_dim.value_or(8);
  FlopCatalog catalog(o.config, o.jobs);
  for (int a = 2; (1 << (a + 1)) <= r.max_dim && a <= 4; ++a) {
    const RelationCheck rc = relation_check(a, catalog, o.jobs);
    ++r.checked;
    const int half = 1 << a;
    const std::string line = "a=" + std::to_string(a) + " in-ideal=" + (rc.in_ideal ? "yes" : "no") +
                             " w1-agree=" + (rc.w1_agree ? "yes" : "no");
    if (!rc.ok()) {
      std::optional<std::string> w;
      // The first w_1^{2i} number where the two sides differ, if any.
      const std::vector<int> lhs = {half, half};
      const Space l = rp_product(lhs);
      const Space rr = rp_product(std::vector<int>(static_cast<std::size_t>(half), 2));
      for (int k = 0; k <= 2 * half && !w; k += 2) {
        const Partition I = w1_index(2 * half, k);
        if (sw_number(l, I) != sw_number(rr, I)) w = witness(l.spec(), I, false, sw_number(rr, I));
      }
      fail(r, line, w);
    } else {
      r.lines.push_back(line);
    }
  }
  return r;
}

VerifyReport verify_theorem1(const VerifyOptions& o) {
  VerifyReport r;
  r.statement =
      "flop-invariant Stiefel-Whitney numbers modulo vanishing ones have dimension 0 for n odd and floor(n/4)+1 for n "
      "even, spanned by w_1^k w_{n-k}";
  r.max_dim = o.max_dim.value_or(12);
  FlopCatalog catalog(o.config, o.jobs);
  std::optional<FlopCatalog> enlarged;
  if (o.stability) enlarged.emplace(o.config.enlarged(), o.jobs);
  for (int n = 1; n <= r.max_dim; ++n) {
    const InvariantSpace inv = invariant_number_space(n, catalog, o.jobs);
    const std::size_t expected = n % 2 == 1 ? 0 : static_cast<std::size_t>(n / 4 + 1);
    ++r.checked;
    std::string line = "n=" + std::to_string(n) + " dimension=" + std::to_string(inv.dimension) +
                       " expected=" + std::to_string(expected) + " spanned=" + (inv.spanned_by_w1_numbers ? "yes" : "no") +
                       " columns=" + std::to_string(inv.family_columns);
    if (enlarged) {
      const InvariantSpace big = invariant_number_space(n, *enlarged, o.jobs);
      line += " enlarged=" + std::to_string(big.dimension) + (big.dimension == inv.dimension ? " stable" : " unstable");
    }
    const bool ok = inv.dimension == expected && inv.spanned_by_w1_numbers && inv.w1_numbers_invariant;
    if (ok) {
      r.lines.push_back(line);
      continue;
    }
    std::optional<std::string> w;
    if (!inv.spanned_by_w1_numbers && inv.w1_numbers_invariant) {
      // A family-invariant functional outside the span, and an MO_n basis
      // manifold on which it is 1: the listed numbers sum to 1 there.
      const GF2Matrix span = vstack(inv.w1_numbers, inv.vanishing);
      const MOBasis mo = mo_basis(n);
      const auto& index = partitions(n);
      for (std::size_t b = 0; b < inv.family_kernel.rows() && !w; ++b) {
        const auto f = inv.family_kernel.row(b);
        if (span.row_space_contains(f)) continue;
        for (const auto& m : mo.manifolds) {
          const NumberVector v = number_vector(m);
          bool value = false;
          for (std::size_t i = 0; i < f.size(); ++i) value ^= f[i] && v.bits()[i];
          if (!value) continue;
          std::string cmds;
          for (std::size_t i = 0; i < f.size(); ++i) {
            if (!f[i]) continue;
            cmds += (cmds.empty() ? "" : "\n  + ") + witness(m.spec(), index[i], false, v.bits()[i]);
          }
          w = cmds;
          line += " (numbers below sum to 1 on " + m.spec() + " but vanish on the family)";
          break;
        }
      }
    }
    if (!inv.w1_numbers_invariant) {
      // A family generator on which some w_1^k w_{n-k} is nonzero.
      const FlopIdealFamily fam = flop_ideal_family(n, catalog, o.jobs);
      for (std::size_t c = 0; c < fam.numbers.size() && !w; ++c) {
        for (int k = 0; k < n; ++k) {
          const Partition I = Partition::w1_power(n, k);
          if (fam.numbers[c].at(I)) {
            w = witness(fam.generators[c], I, false, false);
            break;
          }
        }
      }
    }
    fail(r, line, w);
  }
  return r;
}

VerifyReport verify_generators(const VerifyOptions& o) {
  VerifyReport r;
  r.statement = "s_n = 1 on the chosen polynomial generator in every degree n != 2^j - 1";
  r.max_dim = o.max_dim.value_or(14);
  for (int n = 2; n <= r.max_dim; ++n) {
    if (!is_generator_degree(n)) continue;
    ++r.checked;
    try {
      const Space g = mo_generator(n);
      r.lines.push_back("n=" + std::to_string(n) + " " + g.spec() + " s=1");
    } catch (const std::logic_error& e) {
      fail(r, "n=" + std::to_string(n) + " " + e.what());
    }
  }
  return r;
}

const std::map<std::string, std::function<VerifyReport(const VerifyOptions&)>>& claims() {
  static const std::map<std::string, std::function<VerifyReport(const VerifyOptions&)>> table = {
      {"cor6", verify_cor6},     {"generators", verify_generators}, {"lemma4", verify_lemma4},
      {"prop2", verify_prop2},   {"prop3", verify_prop3},           {"prop7", verify_prop7},
      {"prop8", verify_prop8},   {"theorem1", verify_theorem1},
  };
  return table;
}

// ---------------------------------------------------------------------------
// Rendering

std::string csv_quote(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

ordered_json parts_json(const Partition& p) { return ordered_json(std::vector<int>(p.parts().begin(), p.parts().end())); }

void render_verify(const VerifyReport& r, const std::string& format, std::ostream& out) {
  if (format == "json") {
    ordered_json j;
    j["command"] = "verify";
    j["claim"] = r.claim;
    j["statement"] = r.statement;
    j["max_dim"] = r.max_dim;
    j["checked"] = r.checked;
    j["pass"] = r.pass;
    j["cases"] = r.lines;
    j["witness"] = r.witness ? ordered_json(*r.witness) : ordered_json(nullptr);
    out << j.dump(2) << '\n';
    return;
  }
  out << "claim: " << r.claim << '\n' << "statement: " << r.statement << '\n' << "max-dim: " << r.max_dim << '\n';
  for (const auto& l : r.lines) out << "  " << l << '\n';
  out << "checked: " << r.checked << '\n';
  if (r.witness) out << "witness: " << *r.witness << '\n';
  out << "result: " << (r.pass ? "pass" : "FAIL") << '\n';
}

void render_matrix_table(const std::string& kind, int n, const std::vector<std::string>& row_labels,
                         const std::vector<std::string>& col_labels, const GF2Matrix& m, const std::string& corner,
                         const std::string& format, std::ostream& out, ordered_json extra = ordered_json::object()) {
  if (format == "json") {
    ordered_json j;
    j["table"] = kind;
    j["n"] = n;
    j["rows"] = row_labels;
    j["columns"] = col_labels;
    ordered_json rows = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
      std::vector<int> row;
      for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.get(r, c) ? 1 : 0);
      rows.push_back(row);
    }
    j["matrix"] = rows;
    for (auto& [k, v] : extra.items()) j[k] = v;
    out << j.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    out << csv_quote(corner);
    for (const auto& c : col_labels) out << ',' << csv_quote(c);
    out << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
      out << csv_quote(row_labels[r]);
      for (std::size_t c = 0; c < m.cols(); ++c) out << ',' << (m.get(r, c) ? '1' : '0');
      out << '\n';
    }
    return;
  }
  std::size_t w = corner.size();
  for (const auto& l : row_labels) w = std::max(w, l.size());
  std::size_t cw = 1;
  for (const auto& c : col_labels) cw = std::max(cw, c.size());
  out << std::setw(static_cast<int>(w)) << corner;
  for (const auto& c : col_labels) out << ' ' << std::setw(static_cast<int>(cw)) << c;
  out << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << std::setw(static_cast<int>(w)) << row_labels[r];
    for (std::size_t c = 0; c < m.cols(); ++c) out << ' ' << std::setw(static_cast<int>(cw)) << (m.get(r, c) ? '1' : '0');
    out << '\n';
  }
}

void table_intersection(int two_n, const std::string& format, std::ostream& out) {
  const GF2Matrix m = intersection_matrix(two_n);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m.rows(); ++i) labels.push_back(std::to_string(4 * i));
  render_matrix_table("intersection", two_n, labels, labels, m, "4i\\4j", format, out);
}

void table_quotient_basis(int two_n, const std::string& format, std::ostream& out) {
  const QuotientBasis q = quotient_basis(two_n);
  if (format == "json") {
    ordered_json j;
    j["table"] = "quotient-basis";
    j["n"] = two_n;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < q.partitions.size(); ++i) {
      ordered_json e;
      e["four_j"] = 4 * i;
      e["partition"] = parts_json(q.partitions[i]);
      e["space"] = rp_spec(q.partitions[i].parts());
      rows.push_back(e);
    }
    j["basis"] = rows;
    j["independent"] = q.independent;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "4j,partition,space\n";
    for (std::size_t i = 0; i < q.partitions.size(); ++i) {
      out << 4 * i << ',' << csv_quote(q.partitions[i].to_string()) << ',' << csv_quote(rp_spec(q.partitions[i].parts()))
          << '\n';
    }
  } else {
    for (std::size_t i = 0; i < q.partitions.size(); ++i) {
      out << "4j=" << 4 * i << "  J=" << q.partitions[i].to_string() << "  " << rp_spec(q.partitions[i].parts()) << '\n';
    }
    out << "independent: " << (q.independent ? "yes" : "no") << '\n';
  }
}

void table_mo_basis(int n, const std::string& format, std::ostream& out) {
  if (n < 0 || n > 24) throw std::invalid_argument("mo-basis: n must be in [0, 24]");
  const MOBasis b = mo_basis(n);
  if (format == "json") {
    ordered_json j;
    j["table"] = "mo-basis";
    j["n"] = n;
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < b.keys.size(); ++i) {
      ordered_json e;
      e["degrees"] = parts_json(b.keys[i]);
      e["space"] = b.manifolds[i].spec();
      rows.push_back(e);
    }
    j["basis"] = rows;
    out << j.dump(2) << '\n';
  } else if (format == "csv") {
    out << "degrees,space\n";
    for (std::size_t i = 0; i < b.keys.size(); ++i) {
      out << csv_quote(b.keys[i].to_string()) << ',' << csv_quote(b.manifolds[i].spec()) << '\n';
    }
  } else {
    for (std::size_t i = 0; i < b.keys.size(); ++i) out << b.keys[i].to_string() << "  " << b.manifolds[i].spec() << '\n';
    out << "count: " << b.keys.size() << '\n';
  }
}

void table_flop_ideal(int n, const FamilyConfig& config, int jobs, const std::string& format, std::ostream& out) {
  if (n < 0) throw std::invalid_argument("flop-ideal: n must be nonnegative");
  FlopCatalog catalog(config, jobs);
  const FlopIdealFamily fam = flop_ideal_family(n, catalog, jobs);
  const GF2Matrix m = number_matrix(n, fam.numbers);
  std::vector<std::string> rows, cols;
  for (const auto& p : partitions(n)) rows.push_back(p.to_string());
  for (std::size_t c = 0; c < fam.generators.size(); ++c) cols.push_back("c" + std::to_string(c));
  if (format == "text") {
    for (std::size_t c = 0; c < fam.generators.size(); ++c) out << cols[c] << "  " << fam.generators[c] << '\n';
    out << "rank: " << m.rank() << '\n';
  }
  ordered_json extra;
  extra["generators"] = fam.generators;
  extra["rank"] = m.rank();
  render_matrix_table("flop-ideal", n, rows, cols, m, "partition", format, out, extra);
}

FamilyConfig load_config(const std::string& path) {
  if (path.empty()) return FamilyConfig{};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return FamilyConfig::from_json(ss.str());
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

std::vector<std::string> claim_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, fn] : claims()) ids.push_back(id);
  return ids;
}

VerifyReport verify_claim(const std::string& id, const VerifyOptions& options) {
  auto it = claims().find(id);
  if (it == claims().end()) {
    std::string known;
    for (const auto& k : claim_ids()) known += (known.empty() ? "" : ", ") + k;
    throw UnknownClaim("unknown claim '" + id + "' (known: " + known + ")");
  }
  if (options.max_dim && (*options.max_dim < 0 || *options.max_dim > 20)) {
    throw std::invalid_argument("--max-dim must be in [0, 20]");
  }
  VerifyReport r = it->second(options);
  r.claim = id;
  return r;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mod-2 characteristic numbers of real projective constructions, flop classes and bordism checks",
               "flopcalc"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string config_path;
  int jobs = 0;

  auto* num = app.add_subcommand("number", "Evaluate one Stiefel-Whitney number w_I (or s_I with --power-sum)");
  std::string space_text, partition_text;
  bool power_sum = false;
  num->add_option("space", space_text, "space spec, e.g. rp:2,2  hyp:2,4  bundle:base=rp:2,1;A=g1,g2;B=0,0")->required();
  num->add_option("partition", partition_text, "partition as comma-separated parts, e.g. 1,1,2")->required();
  num->add_flag("-s,--power-sum", power_sum, "evaluate the power-sum number s_I");
  num->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* ver = app.add_subcommand("verify", "Check a claim over a bounded range and print a report");
  std::string claim;
  VerifyOptions vopt;
  ver->add_option("claim", claim, "one of: " + [] {
    std::string s;
    for (const auto& id : claim_ids()) s += (s.empty() ? "" : ", ") + id;
    return s;
  }())->required();
  int max_dim = -1;
  ver->add_option("--max-dim", max_dim, "largest dimension to check (claim-specific default)");
  ver->add_option("--config", config_path, "family configuration (JSON)");
  ver->add_option("--seed", vopt.seed, "seed for the randomized flop sample");
  ver->add_option("--samples", vopt.samples, "number of random flop classes checked by prop2");
  ver->add_option("--jobs", jobs, "worker threads, 0 for one per core");
  ver->add_flag("--stability", vopt.stability, "theorem1: also report the enlarged-family dimension");
  ver->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* tab = app.add_subcommand("table", "Print a table: intersection, quotient-basis, mo-basis, flop-ideal");
  std::string kind;
  int table_n = 0;
  tab->add_option("kind", kind, "intersection | quotient-basis | mo-basis | flop-ideal")->required();
  tab->add_option("n", table_n, "dimension (2n for intersection and quotient-basis)")->required();
  tab->add_option("--format", format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
  tab->add_option("--config", config_path, "family configuration (JSON), flop-ideal only");
  tab->add_option("--jobs", jobs, "worker threads, 0 for one per core");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  }

  try {
    if (num->parsed()) {
      Partition I;
      try {
        I = Partition::parse(partition_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("bad partition '") + partition_text + "': " + e.what());
      }
      const Space s = parse_space(space_text);
      const bool v = power_sum ? s_number(s, I) : sw_number(s, I);
      if (format == "json") {
        ordered_json j;
        j["command"] = "number";
        j["space"] = s.spec();
        j["partition"] = parts_json(I);
        j["kind"] = power_sum ? "s" : "w";
        j["value"] = v ? 1 : 0;
        out << j.dump(2) << '\n';
      } else {
        out << (v ? 1 : 0) << '\n';
      }
      return kPass;
    }
    if (ver->parsed()) {
      vopt.config = load_config(config_path);
      vopt.jobs = jobs;
      if (max_dim >= 0) vopt.max_dim = max_dim;
      const VerifyReport r = verify_claim(claim, vopt);
      render_verify(r, format, out);
      return r.pass ? kPass : kVerifiedFalse;
    }
    if (tab->parsed()) {
      if (kind == "intersection") {
        if (format == "text") out << "w_1^{4i} w_{2n-4i}[RP^{J(4j)}], 2n = " << table_n << '\n';
        table_intersection(table_n, format, out);
      } else if (kind == "quotient-basis") {
        table_quotient_basis(table_n, format, out);
      } else if (kind == "mo-basis") {
        table_mo_basis(table_n, format, out);
      } else if (kind == "flop-ideal") {
        table_flop_ideal(table_n, load_config(config_path), jobs, format, out);
      } else {
        throw UsageError("unknown table kind '" + kind + "' (known: intersection, quotient-basis, mo-basis, flop-ideal)");
      }
      return kPass;
    }
  } catch (const SpecError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UnknownClaim& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kSemanticError;
  }
  return kUsageError;
}

}  // namespace flopcalc
