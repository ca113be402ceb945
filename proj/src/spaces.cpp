#include "flopcalc/spaces.hpp"

#include <algorithm>
#include <sstream>

namespace flopcalc {

namespace {

RingPtr rp_ring(std::span<const int> exponents) {
  std::vector<TruncatedVar> vars;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    std::string name = exponents.size() == 1 ? "g" : "g" + std::to_string(i + 1);
    vars.push_back({std::move(name), exponents[i]});
  }
  return RingSpec::truncated(std::move(vars));
}

std::vector<std::size_t> identity_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i;
  return m;
}

// Bit mask of a degree-1 class in a truncated ring, or nullopt when the
// class is not a sum of generators.
std::optional<std::uint32_t> character_mask(const F2Poly& c) {
  const RingSpec& R = *c.ring();
  std::uint32_t mask = 0;
  for (MonoIndex m : c.support()) {
    if (R.degree(m) != 1) return std::nullopt;
    for (std::size_t i = 0; i < R.num_truncated(); ++i) {
      if (R.exponent(m, i) == 1) mask |= std::uint32_t{1} << i;
    }
  }
  return mask;
}

std::vector<int> flatten_rp_base(const Space& base) {
  std::vector<int> exps;
  for (const auto& f : base.factors()) {
    const auto* rp = std::get_if<RpFactor>(&f);
    if (!rp) return {};
    exps.insert(exps.end(), rp->exponents.begin(), rp->exponents.end());
  }
  return exps;
}

}  // namespace

BundleChars BundleChars::from_masks(const RingPtr& base, std::span<const std::uint32_t> masks) {
  BundleChars out;
  const std::size_t nt = base->num_truncated();
  for (std::uint32_t mask : masks) {
    if (nt < 32 && (mask >> nt) != 0) {
      throw std::invalid_argument("character uses a generator the base does not have");
    }
    F2Poly c(base);
    for (std::size_t i = 0; i < nt; ++i) {
      if ((mask >> i) & 1u) c += F2Poly::variable(base, i);
    }
    out.characters.push_back(std::move(c));
  }
  return out;
}

std::optional<std::vector<F2Poly>> Space::tangent_roots() const {
  if (!root_representable()) return std::nullopt;
  return ambient_roots_;
}

std::string Space::spec() const { return format_factors(factors_); }

Space point_space() { return rp_product(std::span<const int>()); }

Space rp_product(std::span<const int> exponents) {
  for (int a : exponents) {
    if (a < 1) throw std::invalid_argument("rp_product exponents must be positive");
  }
  Space s(rp_ring(exponents));
  const RingPtr& R = s.ring_;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    F2Poly g = F2Poly::variable(R, i);
    s.ambient_roots_.insert(s.ambient_roots_.end(), static_cast<std::size_t>(exponents[i]) + 1, g);
    s.total_ *= pow(F2Poly::one(R) + g, static_cast<std::uint64_t>(exponents[i]) + 1);
    s.dim_ += exponents[i];
  }
  if (!exponents.empty()) s.factors_.push_back(RpFactor{{exponents.begin(), exponents.end()}});
  return s;
}

Space hypersurface11(int a, int b) {
  if (a < 1 || b < 1) throw std::invalid_argument("hypersurface11 needs a, b >= 1");
  const int exps[2] = {a, b};
  Space s = rp_product(exps);
  const RingPtr& R = s.ring_;
  F2Poly h = F2Poly::variable(R, 0) + F2Poly::variable(R, 1);
  s.excess_roots_.push_back(h);
  s.total_ *= invert_unit(F2Poly::one(R) + h);
  s.mu_ = h;
  s.dim_ = a + b - 1;
  s.factors_ = {HypersurfaceFactor{a, b}};
  return s;
}

Space projective_bundle(const Space& base, const BundleChars& chars, int split) {
  if (!base.root_representable()) throw std::invalid_argument("projective_bundle: base has no tangent roots");
  if (!base.bundle_layers().empty()) throw std::invalid_argument("projective_bundle: nested bundles are not supported");
  const std::size_t r = chars.rank();
  if (r < 2) throw std::invalid_argument("projective_bundle: rank must be at least 2");
  const RingPtr& B = base.ring();
  F2Poly total_e = F2Poly::one(B);
  for (const auto& x : chars.characters) {
    if (!same_ring(*x.ring(), *B)) throw std::invalid_argument("projective_bundle: character not in the base ring");
    if (!x.is_homogeneous(1)) throw std::invalid_argument("projective_bundle: characters must have degree 1");
    total_e *= F2Poly::one(B) + x;
  }
  std::vector<F2Poly> coeffs;
  for (std::size_t i = 1; i <= r; ++i) coeffs.push_back(total_e.homogeneous_part(static_cast<int>(i)));

  RingPtr R = RingSpec::with_bundle(B, "u", coeffs);
  Space s(R);
  const auto up = identity_map(B->num_vars());
  const F2Poly u = F2Poly::variable(R, B->num_vars());
  for (const auto& t : base.ambient_roots()) s.ambient_roots_.push_back(transport(t, R, up));
  s.total_ = transport(base.tangent_total(), R, up);
  for (const auto& x : chars.characters) {
    F2Poly root = transport(x, R, up) + u;
    s.total_ *= F2Poly::one(R) + root;
    s.ambient_roots_.push_back(std::move(root));
  }
  s.dim_ = base.dim() + static_cast<int>(r) - 1;
  s.layers_.push_back({0, static_cast<int>(r)});

  BundleFactor desc;
  desc.base = flatten_rp_base(base);
  desc.split = split;
  for (const auto& x : chars.characters) {
    auto mask = character_mask(x);
    if (!mask) throw std::invalid_argument("projective_bundle: character is not a sum of generators");
    desc.masks.push_back(*mask);
  }
  s.factors_ = {std::move(desc)};
  return s;
}

Space product(const Space& x, const Space& y) {
  RingPtr R = ring_tensor(x.ring(), y.ring());
  const auto lm = tensor_var_map(*x.ring(), *y.ring(), false);
  const auto rm = tensor_var_map(*x.ring(), *y.ring(), true);
  Space s(R);
  for (const auto& t : x.ambient_roots()) s.ambient_roots_.push_back(transport(t, R, lm));
  for (const auto& t : y.ambient_roots()) s.ambient_roots_.push_back(transport(t, R, rm));
  for (const auto& t : x.excess_roots()) s.excess_roots_.push_back(transport(t, R, lm));
  for (const auto& t : y.excess_roots()) s.excess_roots_.push_back(transport(t, R, rm));
  s.total_ = transport(x.tangent_total(), R, lm) * transport(y.tangent_total(), R, rm);
  s.mu_ = transport(x.mu(), R, lm) * transport(y.mu(), R, rm);
  s.dim_ = x.dim() + y.dim();
  s.layers_ = x.bundle_layers();
  for (auto layer : y.bundle_layers()) {
    layer.bundle_var += x.ring()->num_bundle();
    s.layers_.push_back(layer);
  }
  s.factors_ = x.factors();
  s.factors_.insert(s.factors_.end(), y.factors().begin(), y.factors().end());
  return s;
}

bool integrate(const Space& s, const F2Poly& cls) {
  if (!same_ring(*cls.ring(), *s.ring())) throw std::invalid_argument("integrate: ring mismatch");
  const MonoIndex top = s.ring()->top_monomial();
  if (s.mu().support().size() == 1 && s.mu().support().front() == 0) return coefficient(cls, top);
  return coefficient(cls * s.mu(), top);
}

F2Poly gysin_pushforward(const Space& s, const F2Poly& cls) {
  if (s.bundle_layers().size() != 1) throw std::invalid_argument("gysin_pushforward: not a single-layer bundle");
  if (!same_ring(*cls.ring(), *s.ring())) throw std::invalid_argument("gysin_pushforward: ring mismatch");
  const BundleLayer& layer = s.bundle_layers().front();
  const RingSpec& R = *s.ring();
  const std::size_t uvar = R.num_truncated() + layer.bundle_var;
  RingPtr base = R.without_bundle(layer.bundle_var);
  std::vector<MonoIndex> out;
  std::vector<int> be;
  for (MonoIndex m : cls.support()) {
    auto e = R.exponents(m);
    if (e[uvar] != layer.rank - 1) continue;
    e.erase(e.begin() + static_cast<std::ptrdiff_t>(uvar));
    out.push_back(base->index_of(e));
  }
  return F2Poly(base, std::move(out));
}

F2Poly bundle_pullback(const Space& s, const F2Poly& base_cls) {
  if (s.bundle_layers().size() != 1) throw std::invalid_argument("bundle_pullback: not a single-layer bundle");
  const BundleLayer& layer = s.bundle_layers().front();
  const RingSpec& R = *s.ring();
  const std::size_t uvar = R.num_truncated() + layer.bundle_var;
  if (!same_ring(*base_cls.ring(), *R.without_bundle(layer.bundle_var))) {
    throw std::invalid_argument("bundle_pullback: class is not on the base");
  }
  std::vector<std::size_t> map;
  for (std::size_t i = 0; i + 1 < R.num_vars(); ++i) map.push_back(i < uvar ? i : i + 1);
  return transport(base_cls, s.ring(), map);
}

// ---------------------------------------------------------------------------
// Text form

namespace {

std::string join_ints(std::span<const int> v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_char(std::uint32_t mask) {
  if (mask == 0) return "0";
  std::string out;
  for (int i = 0; i < 32; ++i) {
    if ((mask >> i) & 1u) {
      if (!out.empty()) out += '+';
      out += "g" + std::to_string(i + 1);
    }
  }
  return out;
}

std::string format_chars(std::span<const std::uint32_t> masks) {
  std::string out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    if (i) out += ',';
    out += format_char(masks[i]);
  }
  return out;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = s.find(sep, pos);
    out.push_back(s.substr(pos, end == std::string::npos ? std::string::npos : end - pos));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return out;
}

int parse_int(const std::string& token) {
  if (token.empty() || token.size() > 6 || token.find_first_not_of("0123456789") != std::string::npos) {
    throw SpecError("expected a nonnegative integer", token);
  }
  return std::stoi(token);
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  for (const auto& t : split(text, ',')) out.push_back(parse_int(t));
  return out;
}

std::vector<int> parse_rp_exponents(const std::string& text) {
  auto exps = parse_ints(text);
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 1) throw SpecError("RP exponents must be positive", text);
  }
  return exps;
}

std::uint32_t parse_char(const std::string& token, std::size_t num_gens) {
  if (token == "0") return 0;
  std::uint32_t mask = 0;
  for (const auto& gen : split(token, '+')) {
    if (gen.size() < 1 || gen[0] != 'g') throw SpecError("expected a generator g<i>", gen);
    int idx = gen.size() == 1 ? 1 : parse_int(gen.substr(1));
    if (idx < 1 || static_cast<std::size_t>(idx) > num_gens) throw SpecError("generator not present on the base", gen);
    const std::uint32_t bit = std::uint32_t{1} << (idx - 1);
    if (mask & bit) throw SpecError("generator repeated in a character", token);
    mask |= bit;
  }
  return mask;
}

std::vector<std::uint32_t> parse_chars(const std::string& text, std::size_t num_gens) {
  std::vector<std::uint32_t> out;
  for (const auto& t : split(text, ',')) out.push_back(parse_char(t, num_gens));
  return out;
}

SpaceFactor parse_factor(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) throw SpecError("expected kind:arguments", text);
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  if (kind == "rp") return RpFactor{parse_rp_exponents(rest)};
  if (kind == "hyp") {
    auto ab = parse_ints(rest);
    if (ab.size() != 2) throw SpecError("hyp takes exactly two integers", rest);
    if (ab[0] < 1 || ab[1] < 1) throw SpecError("hyp integers must be positive", rest);
    return HypersurfaceFactor{ab[0], ab[1]};
  }
  if (kind == "bundle") {
    auto fields = split(rest, ';');
    if (fields.empty() || fields[0].rfind("base=", 0) != 0) throw SpecError("bundle needs base=", rest);
    BundleFactor bf;
    const std::string base = fields[0].substr(5);
    if (base != "pt") {
      if (base.rfind("rp:", 0) != 0) throw SpecError("bundle base must be pt or rp:...", base);
      bf.base = parse_rp_exponents(base.substr(3));
    }
    const std::size_t gens = bf.base.size();
    if (fields.size() == 2 && fields[1].rfind("V=", 0) == 0) {
      bf.masks = parse_chars(fields[1].substr(2), gens);
    } else if (fields.size() == 3 && fields[1].rfind("A=", 0) == 0 && fields[2].rfind("B=", 0) == 0) {
      bf.masks = parse_chars(fields[1].substr(2), gens);
      bf.split = static_cast<int>(bf.masks.size());
      auto b = parse_chars(fields[2].substr(2), gens);
      bf.masks.insert(bf.masks.end(), b.begin(), b.end());
    } else {
      throw SpecError("bundle fields must be V=... or A=...;B=...", rest);
    }
    if (bf.masks.size() < 2) throw SpecError("bundle rank must be at least 2", rest);
    return bf;
  }
  throw SpecError("unknown space kind", kind);
}

Space build_factor(const SpaceFactor& f) {
  if (const auto* rp = std::get_if<RpFactor>(&f)) return rp_product(rp->exponents);
  if (const auto* h = std::get_if<HypersurfaceFactor>(&f)) return hypersurface11(h->a, h->b);
  const auto& b = std::get<BundleFactor>(f);
  Space base = rp_product(b.base);
  return projective_bundle(base, BundleChars::from_masks(base.ring(), b.masks), b.split);
}

}  // namespace

std::vector<SpaceFactor> parse_factors(const std::string& text) {
  if (text == "pt") return {};
  if (text.empty()) throw SpecError("empty space spec", text);
  std::vector<SpaceFactor> out;
  for (const auto& piece : split(text, '*')) {
    if (piece.empty()) throw SpecError("empty factor", text);
    out.push_back(parse_factor(piece));
  }
  return out;
}

std::string format_factors(std::span<const SpaceFactor> factors) {
  if (factors.empty()) return "pt";
  std::ostringstream os;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) os << '*';
    const auto& f = factors[i];
    if (const auto* rp = std::get_if<RpFactor>(&f)) {
      os << "rp:" << join_ints(rp->exponents);
    } else if (const auto* h = std::get_if<HypersurfaceFactor>(&f)) {
      os << "hyp:" << h->a << ',' << h->b;
    } else {
      const auto& b = std::get<BundleFactor>(f);
      os << "bundle:base=" << (b.base.empty() ? std::string("pt") : "rp:" + join_ints(b.base)) << ';';
      std::span<const std::uint32_t> masks(b.masks);
      if (b.split > 0) {
        os << "A=" << format_chars(masks.first(static_cast<std::size_t>(b.split)))
           << ";B=" << format_chars(masks.subspan(static_cast<std::size_t>(b.split)));
      } else {
        os << "V=" << format_chars(masks);
      }
    }
  }
  return os.str();
}

Space build_space(std::span<const SpaceFactor> factors) {
  if (factors.empty()) return point_space();
  Space s = build_factor(factors.front());
  for (std::size_t i = 1; i < factors.size(); ++i) s = product(s, build_factor(factors[i]));
  return s;
}

std::uint32_t parse_character(const std::string& token, std::size_t num_gens) { return parse_char(token, num_gens); }

std::string format_character(std::uint32_t mask) { return format_char(mask); }

Space parse_space(const std::string& text) {
  auto factors = parse_factors(text);
  return build_space(factors);
}

}  // namespace flopcalc
