#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "landau/group.hpp"

namespace landau {

/// Description of one of the concrete groups used as examples: cyclic,
/// dihedral, symmetric and alternating groups, Q8, SL(2,3), direct products,
/// split extensions C_p : C_q and holomorphs of elementary abelian groups.
struct NamedGroupSpec {
  enum class Kind {
    cyclic,                // params: {m}
    dihedral,              // params: {order}, order = 2m
    quaternion,            // params: {8}
    symmetric,             // params: {m}, m <= 6
    alternating,           // params: {m}, m <= 6
    direct_product,        // factors: {A, B}
    semidirect_cyclic,     // params: {p, q, e}: <a,b | a^p, b^q, b a b^-1 = a^e>
    sl23,                  // no params
    holomorph_elementary,  // params: {p, s}: (C_p)^s : GL(s,p), i.e. AGL(s,p)
  };

  Kind kind = Kind::cyclic;
  std::vector<std::uint64_t> params;
  std::vector<NamedGroupSpec> factors;

  static NamedGroupSpec cyclic(std::uint64_t m) { return {Kind::cyclic, {m}, {}}; }
  static NamedGroupSpec dihedral(std::uint64_t order) { return {Kind::dihedral, {order}, {}}; }
  static NamedGroupSpec quaternion() { return {Kind::quaternion, {8}, {}}; }
  static NamedGroupSpec symmetric(std::uint64_t m) { return {Kind::symmetric, {m}, {}}; }
  static NamedGroupSpec alternating(std::uint64_t m) { return {Kind::alternating, {m}, {}}; }
  static NamedGroupSpec direct_product(NamedGroupSpec a, NamedGroupSpec b) {
    return {Kind::direct_product, {}, {std::move(a), std::move(b)}};
  }
  static NamedGroupSpec semidirect_cyclic(std::uint64_t p, std::uint64_t q, std::uint64_t e) {
    return {Kind::semidirect_cyclic, {p, q, e}, {}};
  }
  static NamedGroupSpec sl23() { return {Kind::sl23, {}, {}}; }
  static NamedGroupSpec holomorph_elementary(std::uint64_t p, std::uint64_t s) {
    return {Kind::holomorph_elementary, {p, s}, {}};
  }
};

/// Throws Error(unsupported_spec) for parameters outside the supported range.
FiniteGroup construct_named(const NamedGroupSpec& spec);

/// Parses text such as "direct_product(cyclic(3),symmetric(3))" or "sl23".
NamedGroupSpec parse_named_spec(std::string_view text);

std::string to_string(const NamedGroupSpec& spec);

/// Display label in the catalog's style ("C3 x S3", "C5 : C4", "SL(2,3)").
std::string display_label(const NamedGroupSpec& spec);

}  // namespace landau
