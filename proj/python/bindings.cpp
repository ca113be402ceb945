#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "flopcalc/bordism.hpp"
#include "flopcalc/charnum.hpp"
#include "flopcalc/cli.hpp"
#include "flopcalc/combinat.hpp"
#include "flopcalc/spaces.hpp"

namespace py = pybind11;
using namespace flopcalc;

namespace {

using Parts = std::vector<int>;

Parts to_list(const Partition& p) { return Parts(p.parts().begin(), p.parts().end()); }

std::vector<std::vector<int>> to_lists(const GF2Matrix& m) {
  std::vector<std::vector<int>> out(m.rows(), std::vector<int>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m.get(r, c);
  return out;
}

FamilyConfig config_from(const std::optional<std::string>& json) {
  return json ? FamilyConfig::from_json(*json) : FamilyConfig{};
}

}  // namespace

PYBIND11_MODULE(_flopcalc, m) {
  m.doc() = "Mod-2 characteristic numbers of real projective constructions and flop-ideal checks";

  py::register_exception<SpecError>(m, "SpecError", PyExc_ValueError);

  py::class_<Space>(m, "Space")
      .def_property_readonly("dim", &Space::dim)
      .def_property_readonly("spec", &Space::spec)
      .def_property_readonly("root_representable", &Space::root_representable)
      .def("w", [](const Space& s, int j) { return s.w(j).to_string(); }, py::arg("j"))
      .def("__repr__", [](const Space& s) { return "Space('" + s.spec() + "')"; });

  m.def("parse_space", &parse_space, py::arg("spec"));
  m.def("rp_product", [](const Parts& e) { return rp_product(e); }, py::arg("exponents"));
  m.def("hypersurface11", &hypersurface11, py::arg("a"), py::arg("b"));
  m.def("product", &product, py::arg("x"), py::arg("y"));
  m.def("e_bundle", &e_bundle, py::arg("k"), py::arg("b"));
  m.def("r_bundle", &r_bundle, py::arg("a"));
  m.def("mo_generator", &mo_generator, py::arg("n"));
  m.def("flop_class",
        [](const Parts& base, const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
          Space z = rp_product(base);
          return flop_class(base, BundleChars::from_masks(z.ring(), a), BundleChars::from_masks(z.ring(), b));
        },
        py::arg("base"), py::arg("a_masks"), py::arg("b_masks"));

  m.def("binom_mod2", &binom_mod2, py::arg("n"), py::arg("k"));
  m.def("partitions", [](int n) {
    std::vector<Parts> out;
    for (const auto& p : partitions(n)) out.push_back(to_list(p));
    return out;
  }, py::arg("n"));
  m.def("j_partition", [](int two_n, int four_j) { return to_list(j_partition(two_n, four_j)); }, py::arg("two_n"),
        py::arg("four_j"));

  m.def("sw_number", [](const Space& s, const Parts& I) { return sw_number(s, Partition(I)); }, py::arg("space"),
        py::arg("partition"));
  m.def("s_number", [](const Space& s, const Parts& I) { return s_number(s, Partition(I)); }, py::arg("space"),
        py::arg("partition"));
  m.def("number_vector", [](const Space& s) {
    const NumberVector v = number_vector(s);
    std::vector<std::pair<Parts, bool>> out;
    for (std::size_t i = 0; i < v.bits().size(); ++i) out.emplace_back(to_list(v.index()[i]), v.bits()[i]);
    return out;
  }, py::arg("space"), "List of (partition, bit) pairs in canonical partition order.");
  m.def("lemma_count_number", [](const Parts& b, int two_i) { return lemma_count_number(b, two_i); }, py::arg("parts"),
        py::arg("two_i"));

  m.def("invariant_number_space", [](int n, const std::optional<std::string>& config) {
    const InvariantSpace inv = invariant_number_space(n, config_from(config));
    py::dict d;
    d["n"] = inv.n;
    d["dimension"] = inv.dimension;
    d["spanned_by_w1_numbers"] = inv.spanned_by_w1_numbers;
    d["w1_numbers_invariant"] = inv.w1_numbers_invariant;
    d["family_columns"] = inv.family_columns;
    d["family_rank"] = inv.family_rank;
    d["mo_rank"] = inv.mo_rank;
    d["basis"] = to_lists(inv.basis);
    return d;
  }, py::arg("n"), py::arg("config") = py::none());
  m.def("intersection_matrix", [](int two_n) { return to_lists(intersection_matrix(two_n)); }, py::arg("two_n"));
  m.def("basis_change_diagonal_check", &basis_change_diagonal_check, py::arg("two_n"));
  m.def("quotient_basis", [](int two_n) {
    const QuotientBasis q = quotient_basis(two_n);
    std::vector<Parts> parts;
    for (const auto& p : q.partitions) parts.push_back(to_list(p));
    return std::make_pair(parts, q.independent);
  }, py::arg("two_n"));
  m.def("relation_check", [](int a, const std::optional<std::string>& config) {
    const RelationCheck r = relation_check(a, config_from(config));
    return std::make_pair(r.in_ideal, r.w1_agree);
  }, py::arg("a"), py::arg("config") = py::none());

  m.def("verify", [](const std::string& claim, std::optional<int> max_dim, std::uint64_t seed) {
    VerifyOptions o;
    o.max_dim = max_dim;
    o.seed = seed;
    const VerifyReport r = verify_claim(claim, o);
    py::dict d;
    d["claim"] = r.claim;
    d["statement"] = r.statement;
    d["max_dim"] = r.max_dim;
    d["checked"] = r.checked;
    d["pass"] = r.pass;
    d["cases"] = r.lines;
    d["witness"] = r.witness ? py::object(py::str(*r.witness)) : py::object(py::none());
    return d;
  }, py::arg("claim"), py::arg("max_dim") = py::none(), py::arg("seed") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs the command line; returns (exit_code, stdout, stderr).");
}
