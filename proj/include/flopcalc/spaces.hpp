#pragma once

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "flopcalc/f2ring.hpp"

namespace flopcalc {

/// First Stiefel-Whitney classes of the line-bundle summands of a split
/// bundle, each homogeneous of degree 1 (or zero) in the base ring.
struct BundleChars {
  std::vector<F2Poly> characters;

  /// Bit i of a mask selects base generator i; mask 0 is the trivial line.
  static BundleChars from_masks(const RingPtr& base, std::span<const std::uint32_t> masks);

  std::size_t rank() const { return characters.size(); }
};

struct RpFactor {
  std::vector<int> exponents;
  friend bool operator==(const RpFactor&, const RpFactor&) = default;
};

struct HypersurfaceFactor {
  int a;
  int b;
  friend bool operator==(const HypersurfaceFactor&, const HypersurfaceFactor&) = default;
};

/// RP(V) over an RP product; with split > 0 the first `split` characters
/// are A and the rest B (the flop form RP(A + B*)).
struct BundleFactor {
  std::vector<int> base;
  std::vector<std::uint32_t> masks;
  int split = 0;
  friend bool operator==(const BundleFactor&, const BundleFactor&) = default;
};

using SpaceFactor = std::variant<RpFactor, HypersurfaceFactor, BundleFactor>;

struct BundleLayer {
  std::size_t bundle_var;  // index among the ring's bundle variables
  int rank;
};

/// A closed manifold described by its mod-2 cohomology ring and tangent data.
///
/// The tangent bundle is carried by stable roots: `ambient_roots` are degree-1
/// classes whose elementary symmetric functions give the total class of the
/// ambient tangent bundle plus trivial summands, and `excess_roots` are the
/// normal line bundles of hypersurfaces that must be subtracted. Integration
/// is against the top monomial after multiplying by `mu`, the product of the
/// hypersurface classes, so hypersurfaces never need a quotient ring.
class Space {
 public:
  int dim() const { return dim_; }
  const RingPtr& ring() const { return ring_; }
  bool root_representable() const { return excess_roots_.empty(); }
  /// Present iff root-representable.
  std::optional<std::vector<F2Poly>> tangent_roots() const;
  const std::vector<F2Poly>& ambient_roots() const { return ambient_roots_; }
  const std::vector<F2Poly>& excess_roots() const { return excess_roots_; }
  const F2Poly& tangent_total() const { return total_; }
  const F2Poly& mu() const { return mu_; }
  const std::vector<BundleLayer>& bundle_layers() const { return layers_; }
  const std::vector<SpaceFactor>& factors() const { return factors_; }

  /// Canonical text form, e.g. "rp:2,2*hyp:2,4"; parse_space inverts it.
  std::string spec() const;

  /// Degree-j part of the total Stiefel-Whitney class.
  F2Poly w(int j) const { return total_.homogeneous_part(j); }

 private:
  Space(RingPtr ring) : ring_(ring), total_(F2Poly::one(ring)), mu_(F2Poly::one(ring)) {}

  friend Space rp_product(std::span<const int>);
  friend Space hypersurface11(int, int);
  friend Space projective_bundle(const Space&, const BundleChars&, int);
  friend Space product(const Space&, const Space&);

  int dim_ = 0;
  RingPtr ring_;
  std::vector<F2Poly> ambient_roots_;
  std::vector<F2Poly> excess_roots_;
  F2Poly total_;
  F2Poly mu_;
  std::vector<BundleLayer> layers_;
  std::vector<SpaceFactor> factors_;
};

Space point_space();
/// RP^{a_1} x ... x RP^{a_r}; exponents must be positive, empty is a point.
Space rp_product(std::span<const int> exponents);
inline Space rp_product(std::initializer_list<int> exponents) {
  return rp_product(std::span<const int>(exponents.begin(), exponents.size()));
}
/// A degree-(1,1) hypersurface in RP^a x RP^b.
Space hypersurface11(int a, int b);
/// RP(V) for V the sum of the given line bundles over a bundle-free,
/// root-representable base. `split` only affects the canonical text form.
Space projective_bundle(const Space& base, const BundleChars& chars, int split = 0);
Space product(const Space& x, const Space& y);

/// Evaluation against the fundamental class.
bool integrate(const Space& s, const F2Poly& cls);

/// Pushforward along the single projective-bundle layer of `s`: the
/// coefficient of u^{r-1} in the reduced class, as an element of the ring
/// with u removed.
F2Poly gysin_pushforward(const Space& s, const F2Poly& cls);

/// Pullback of a class on the base ring of the single bundle layer.
F2Poly bundle_pullback(const Space& s, const F2Poly& base_cls);

/// Thrown by parse_space; `token` is the offending piece of input.
class SpecError : public std::invalid_argument {
 public:
  SpecError(const std::string& message, std::string token)
      : std::invalid_argument(message + " at '" + token + "'"), token_(std::move(token)) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

/// Grammar (see docs/space_grammar.ebnf):
///   space  := "pt" | factor ("*" factor)*
///   factor := "rp:" ints | "hyp:" int "," int
///           | "bundle:base=" base ";" ("V=" chars | "A=" chars ";B=" chars)
///   base   := "pt" | "rp:" ints
///   chars  := char ("," char)*,  char := "0" | gen ("+" gen)*,  gen := "g" | "g" int
Space parse_space(const std::string& text);
/// One `char` of the grammar as a generator mask; generators must be < num_gens.
std::uint32_t parse_character(const std::string& token, std::size_t num_gens);
std::string format_character(std::uint32_t mask);
std::vector<SpaceFactor> parse_factors(const std::string& text);
std::string format_factors(std::span<const SpaceFactor> factors);
Space build_space(std::span<const SpaceFactor> factors);

}  // namespace flopcalc
