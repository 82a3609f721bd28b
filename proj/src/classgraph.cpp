#include "landau/classgraph.hpp"

#include <algorithm>
#include <numeric>

#include "landau/error.hpp"
#include "landau/numtheory.hpp"

namespace landau {

bool ClassGraph::adjacent(std::size_t u, std::size_t v) const {
  if (u > v) std::swap(u, v);
  return std::find(edges.begin(), edges.end(), std::pair{u, v}) != edges.end();
}

ClassGraph build_gamma(const NormalEmbedding& e) {
  ClassGraph graph;
  for (const ConjClassRecord* c : e.noncentral_classes())
    graph.vertices.push_back({c->representative, c->size, c->element_order});
  std::stable_sort(graph.vertices.begin(), graph.vertices.end(), [](const ClassVertex& a, const ClassVertex& b) {
    if (a.size != b.size) return a.size < b.size;
    return a.representative < b.representative;
  });
  for (std::size_t u = 0; u < graph.vertices.size(); ++u)
    for (std::size_t v = u + 1; v < graph.vertices.size(); ++v)
      if (std::gcd(graph.vertices[u].size, graph.vertices[v].size) > 1) graph.edges.emplace_back(u, v);
  return graph;
}

namespace {

ElementSet central_part(const NormalEmbedding& e) {
  ElementSet z = make_element_set(e.ambient);
  for (const ConjClassRecord& c : e.g_classes_in_n)
    if (c.is_central) set_element(z, c.members.front());
  return z;
}

ElementIndex commutator(const FiniteGroup& g, ElementIndex a, ElementIndex b) {
  return g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
}

bool members_commute(const FiniteGroup& g, const std::vector<ElementIndex>& members) {
  for (ElementIndex a : members)
    for (ElementIndex b : members)
      if (g.multiply(a, b) != g.multiply(b, a)) return false;
  return true;
}

ElementIndex power(const FiniteGroup& g, ElementIndex x, std::uint64_t k) {
  ElementIndex r = FiniteGroup::identity();
  for (std::uint64_t i = 0; i < k; ++i) r = g.multiply(r, x);
  return r;
}

}  // namespace

OneVertexReport verify_one_vertex(const NormalEmbedding& e) {
  const auto noncentral = e.noncentral_classes();
  if (noncentral.size() != 1)
    throw Error(ErrorKind::wrong_graph_shape,
                "expected one non-central G-class in N, found " + std::to_string(noncentral.size()));
  OneVertexReport r;
  r.central_order = e.central_part_order;
  r.class_size = noncentral.front()->size;
  const FiniteGroup& g = e.ambient;
  const auto pp = as_prime_power(e.subgroup_members.size());
  if (!pp) {
    r.violations.push_back("|N| = " + std::to_string(e.subgroup_members.size()) + " is not a prime power");
    return r;
  }
  r.prime = pp->prime;
  r.exponent = pp->exponent;

  // N/(N ∩ Z(G)) is elementary abelian iff every commutator and every p-th
  // power of N lands in N ∩ Z(G).
  const ElementSet z = central_part(e);
  r.commutators_central = true;
  for (ElementIndex a : e.subgroup_members)
    for (ElementIndex b : e.subgroup_members)
      if (!test_element(z, commutator(g, a, b))) r.commutators_central = false;
  r.pth_powers_central = true;
  for (ElementIndex a : e.subgroup_members)
    if (!test_element(z, power(g, a, r.prime))) r.pth_powers_central = false;
  if (!r.commutators_central) r.violations.push_back("N/(N ∩ Z(G)) is not abelian");
  if (!r.pth_powers_central)
    r.violations.push_back("N/(N ∩ Z(G)) has exponent other than " + std::to_string(r.prime));
  return r;
}

PGroupOneVertexReport check_thm313(const FiniteGroup& g, const FiniteGroup& n) {
  const auto gp = as_prime_power(g.order());
  if (!gp) throw Error(ErrorKind::precondition_violated, "G is not a non-trivial p-group");
  const NormalEmbedding e = [&] {
    try {
      return embed(g, n);
    } catch (const Error& err) {
      throw Error(ErrorKind::precondition_violated, std::string("N is not normal in G: ") + err.what());
    }
  }();
  const auto noncentral = e.noncentral_classes();
  if (noncentral.size() != 1)
    throw Error(ErrorKind::precondition_violated,
                "N has " + std::to_string(noncentral.size()) + " non-central G-classes, expected 1");

  PGroupOneVertexReport r;
  r.prime = gp->prime;
  r.k = gp->exponent;
  r.a = as_prime_power(n.order()) ? as_prime_power(n.order())->exponent : 0;
  r.prime_is_two = r.prime == 2;
  r.subgroup_abelian = members_commute(g, e.subgroup_members);
  r.exponent_bound = 2 * r.a <= r.k + 1;
  const std::size_t half = r.a >= 1 ? (std::size_t{1} << (r.a - 1)) : 0;
  r.central_equals_class =
      r.prime_is_two && e.central_part_order == noncentral.front()->size && e.central_part_order == half;
  if (!r.prime_is_two) r.violations.push_back("p = " + std::to_string(r.prime) + ", expected 2");
  if (!r.subgroup_abelian) r.violations.push_back("N is not abelian");
  if (!r.exponent_bound)
    r.violations.push_back("a = " + std::to_string(r.a) + " exceeds (k+1)/2 with k = " + std::to_string(r.k));
  if (!r.central_equals_class) r.violations.push_back("|Z(G) ∩ N| = |x^G| = 2^(a-1) fails");
  return r;
}

PGroupScan scan_thm313(const FiniteGroup& g) {
  const auto gp = as_prime_power(g.order());
  if (!gp) throw Error(ErrorKind::precondition_violated, "G is not a non-trivial p-group");
  PGroupScan scan;
  scan.prime = gp->prime;
  for (const ElementSet& s : normal_subgroup_sets(g)) {
    const NormalEmbedding e = embed(g, s);
    if (e.noncentral_classes().size() != 1) continue;
    scan.subgroups.emplace_back(e.subgroup, check_thm313(g, e.subgroup));
  }
  return scan;
}

namespace {

// Looks for K : H with K the p-elements of N (elementary abelian, normal,
// order p^m) and H = <h> of prime order q acting fixed-point-freely on K.
bool find_frobenius(const NormalEmbedding& e, TwoVertexReport& r) {
  const FiniteGroup& g = e.ambient;
  const std::size_t order = e.subgroup_members.size();
  const auto primes = prime_divisors(order);
  if (primes.size() != 2) return false;
  for (std::size_t pick = 0; pick < 2; ++pick) {
    const std::uint64_t p = primes[pick];
    const std::uint64_t q = primes[1 - pick];
    if ((order / q) % q == 0) continue;  // q must divide |N| exactly once
    std::vector<ElementIndex> kernel;
    ElementSet kernel_set = make_element_set(g);
    for (ElementIndex x : e.subgroup_members) {
      const std::size_t o = g.element_order(x);
      if (o == 1 || o == p) {
        kernel.push_back(x);
        set_element(kernel_set, x);
      }
    }
    if (kernel.size() != order / q) continue;
    if (count_elements(generate_in(g, kernel)) != kernel.size()) continue;
    if (!members_commute(g, kernel)) continue;
    bool normal = true;
    for (ElementIndex k : kernel)
      for (ElementIndex n : e.subgroup_members)
        if (!test_element(kernel_set, g.conjugate(k, n))) normal = false;
    if (!normal) continue;
    auto h = std::find_if(e.subgroup_members.begin(), e.subgroup_members.end(),
                          [&](ElementIndex x) { return g.element_order(x) == q; });
    if (h == e.subgroup_members.end()) continue;
    const std::vector<ElementIndex> complement = to_indices(generate_in(g, std::vector<ElementIndex>{*h}));
    bool fixed_point_free = true;
    for (ElementIndex c : complement) {
      if (c == FiniteGroup::identity()) continue;
      for (ElementIndex k : kernel)
        if (k != FiniteGroup::identity() && g.conjugate(k, c) == k) fixed_point_free = false;
    }
    if (!fixed_point_free) continue;
    r.branch = TwoVertexReport::Branch::frobenius;
    r.kernel_prime = p;
    r.kernel_order = kernel.size();
    r.complement_order = q;
    return true;
  }
  return false;
}

}  // namespace

TwoVertexReport verify_two_vertex_edgeless(const NormalEmbedding& e) {
  const ClassGraph graph = build_gamma(e);
  if (graph.vertices.size() != 2 || !graph.edges.empty())
    throw Error(ErrorKind::wrong_graph_shape, "expected two non-central G-classes of coprime sizes, found " +
                                                  std::to_string(graph.vertices.size()) + " vertices and " +
                                                  std::to_string(graph.edges.size()) + " edges");
  TwoVertexReport r;
  r.trivial_central_part = e.central_part_order == 1;
  if (!r.trivial_central_part)
    r.violations.push_back("Z(G) ∩ N has order " + std::to_string(e.central_part_order) + ", expected 1");
  const auto pp = as_prime_power(e.subgroup_members.size());
  if (pp && pp->prime == 2) {
    r.branch = TwoVertexReport::Branch::two_group;
  } else if (!find_frobenius(e, r)) {
    r.violations.push_back("N is neither a 2-group nor a Frobenius group with elementary abelian kernel "
                           "and complement of prime order");
  }
  return r;
}

std::string to_string(TwoVertexReport::Branch b) {
  switch (b) {
    case TwoVertexReport::Branch::none: return "none";
    case TwoVertexReport::Branch::two_group: return "2-group";
    case TwoVertexReport::Branch::frobenius: return "frobenius";
  }
  return "none";
}

}  // namespace landau
