#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "landau/classdata.hpp"

namespace landau {

struct ClassVertex {
  Permutation representative;
  std::size_t size = 0;
  std::size_t element_order = 1;
};

/// Graph on the non-central G-classes contained in N; two classes are joined
/// iff their sizes share a prime divisor. Vertices are ordered by size, then
/// by representative.
struct ClassGraph {
  std::vector<ClassVertex> vertices;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (u, v) with u < v

  bool adjacent(std::size_t u, std::size_t v) const;
};

ClassGraph build_gamma(const NormalEmbedding& e);

/// Outcome of a structure check. `violations` is empty when every asserted
/// property holds.
struct StructureReport {
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

/// One-vertex case: N is a p-group and N/(N ∩ Z(G)) is elementary abelian.
struct OneVertexReport : StructureReport {
  std::uint64_t prime = 0;        // 0 when |N| is not a prime power
  unsigned exponent = 0;          // |N| = prime^exponent
  std::size_t central_order = 1;  // |N ∩ Z(G)|
  std::size_t class_size = 0;     // the single non-central class
  bool commutators_central = false;
  bool pth_powers_central = false;
};

/// Errors: wrong_graph_shape unless Γ_G(N) has exactly one vertex.
OneVertexReport verify_one_vertex(const NormalEmbedding& e);

/// p-group case of the one-vertex situation: p = 2, N abelian, a <= (k+1)/2
/// and |Z(G) ∩ N| = |x^G| = 2^(a-1), where |G| = p^k and |N| = p^a.
struct PGroupOneVertexReport : StructureReport {
  std::uint64_t prime = 0;
  unsigned k = 0;
  unsigned a = 0;
  bool prime_is_two = false;
  bool subgroup_abelian = false;
  bool exponent_bound = false;
  bool central_equals_class = false;
};

/// Errors: precondition_violated unless G is a p-group and N is a normal
/// subgroup with exactly one non-central G-class.
PGroupOneVertexReport check_thm313(const FiniteGroup& g, const FiniteGroup& n);

/// Runs check_thm313 over every normal subgroup of the p-group `g` that has
/// exactly one non-central G-class. For odd p the list is always empty.
struct PGroupScan {
  std::uint64_t prime = 0;
  std::vector<std::pair<FiniteGroup, PGroupOneVertexReport>> subgroups;

  bool none_possible() const { return subgroups.empty(); }
};

/// Errors: precondition_violated if `g` is not a non-trivial p-group.
PGroupScan scan_thm313(const FiniteGroup& g);

/// Two-vertex, edgeless case: Z(G) ∩ N = 1 and N is a 2-group or a
/// Frobenius group K : H with K elementary abelian of order p^m and H cyclic
/// of prime order q != p.
struct TwoVertexReport : StructureReport {
  enum class Branch { none, two_group, frobenius };

  Branch branch = Branch::none;
  bool trivial_central_part = false;
  std::uint64_t kernel_prime = 0;      // p
  std::size_t kernel_order = 0;        // p^m
  std::uint64_t complement_order = 0;  // q
};

/// Errors: wrong_graph_shape unless Γ_G(N) has two vertices and no edge.
TwoVertexReport verify_two_vertex_edgeless(const NormalEmbedding& e);

std::string to_string(TwoVertexReport::Branch b);

}  // namespace landau
