#include "landau/classdata.hpp"

#include <algorithm>

#include "landau/error.hpp"

namespace landau {

std::vector<const ConjClassRecord*> NormalEmbedding::noncentral_classes() const {
  std::vector<const ConjClassRecord*> out;
  for (const ConjClassRecord& c : g_classes_in_n)
    if (!c.is_central) out.push_back(&c);
  return out;
}

NormalEmbedding embed(const FiniteGroup& g, const ElementSet& n_members) {
  NormalEmbedding e;
  e.ambient = g;
  e.subgroup_set = n_members;
  e.subgroup_members = to_indices(n_members);
  if (e.subgroup_members.empty() || e.subgroup_members.front() != FiniteGroup::identity() ||
      count_elements(generate_in(g, e.subgroup_members)) != e.subgroup_members.size())
    throw Error(ErrorKind::not_a_subgroup, "element set is not a subgroup");
  if (g.order() % e.subgroup_members.size())
    throw Error(ErrorKind::not_a_subgroup, "subgroup order does not divide the group order");
  e.index = g.order() / e.subgroup_members.size();

  std::size_t covered = 0;
  for (const ConjClassRecord& c : g.classes()) {
    const std::size_t inside = static_cast<std::size_t>(
        std::count_if(c.members.begin(), c.members.end(),
                      [&](ElementIndex m) { return test_element(n_members, m); }));
    if (inside == 0) continue;
    if (inside != c.size) throw Error(ErrorKind::not_normal, "subgroup is not a union of G-classes");
    covered += c.size;
    e.g_classes_in_n.push_back(c);
  }
  e.central_part_order = 0;
  for (const ConjClassRecord& c : e.g_classes_in_n)
    if (c.is_central) ++e.central_part_order;
  if (covered != e.subgroup_members.size())
    throw Error(ErrorKind::precondition_violated, "class equation does not balance");
  e.subgroup = subgroup_from_members(g, e.subgroup_members);
  return e;
}

NormalEmbedding embed(const FiniteGroup& g, const FiniteGroup& n) {
  if (n.degree() != g.degree())
    throw Error(ErrorKind::not_a_subgroup, "subgroup acts on a different number of points");
  const std::vector<ElementIndex> members = member_indices(g, n);
  ElementSet set = make_element_set(g);
  for (ElementIndex m : members) set_element(set, m);
  NormalEmbedding e = embed(g, set);
  e.subgroup = n;
  return e;
}

namespace {

ElementIndex member_of_subgroup(const NormalEmbedding& e, const Permutation& x) {
  const auto xi = e.ambient.find(x);
  if (!xi || !test_element(e.subgroup_set, *xi))
    throw Error(ErrorKind::not_in_subgroup, "element " + x.to_string() + " is not in N");
  return *xi;
}

}  // namespace

std::size_t splitting_count(const NormalEmbedding& e, const Permutation& x) {
  const FiniteGroup& g = e.ambient;
  const ElementIndex xi = member_of_subgroup(e, x);
  std::size_t centralizer_order = 0, in_both = 0;
  for (ElementIndex y = 0; y < g.order(); ++y) {
    if (g.multiply(xi, y) != g.multiply(y, xi)) continue;
    ++centralizer_order;
    if (test_element(e.subgroup_set, y)) ++in_both;
  }
  // |N C| = |N| |C| / |N ∩ C|
  const std::size_t product_order = e.subgroup_members.size() * centralizer_order / in_both;
  return g.order() / product_order;
}

std::size_t literal_splitting_count(const NormalEmbedding& e, const Permutation& x) {
  const FiniteGroup& g = e.ambient;
  const ElementIndex xi = member_of_subgroup(e, x);
  const ConjClassRecord& cls = g.classes()[g.class_of(xi)];
  ElementSet assigned = make_element_set(g);
  std::size_t count = 0;
  for (ElementIndex y : cls.members) {
    if (test_element(assigned, y)) continue;
    ++count;
    for (ElementIndex n : e.subgroup_members) set_element(assigned, g.conjugate(y, n));
  }
  return count;
}

ClassCounts class_counts(const NormalEmbedding& e) {
  ClassCounts c;
  c.k_g_n = e.g_classes_in_n.size();
  for (const ConjClassRecord& r : e.g_classes_in_n) {
    if (r.is_prime_power_order) ++c.kpp_g_n;
    if (!r.is_central) ++c.s_noncentral;
  }
  return c;
}

std::size_t kpp(const FiniteGroup& g) {
  return static_cast<std::size_t>(std::count_if(g.classes().begin(), g.classes().end(),
                                                [](const ConjClassRecord& c) { return c.is_prime_power_order; }));
}

ClassCountBounds class_count_bounds(const NormalEmbedding& e) {
  ClassCountBounds b;
  const ClassCounts counts = class_counts(e);
  b.index = e.index;
  b.k_g_n = counts.k_g_n;
  b.kpp_g_n = counts.kpp_g_n;
  b.k_n = e.subgroup.classes().size();
  b.kpp_n = kpp(e.subgroup);
  b.k_holds = b.k_g_n * b.index >= b.k_n;
  b.kpp_holds = b.kpp_g_n * b.index >= b.kpp_n;
  return b;
}

}  // namespace landau
