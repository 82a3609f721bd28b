#include <doctest.h>

#include "landau/classgraph.hpp"
#include "landau/error.hpp"
#include "support.hpp"

using namespace testing;

namespace {

NormalEmbedding embed_where(const FiniteGroup& g, std::size_t order, bool want_abelian) {
  for (const FiniteGroup& n : normal_subgroups(g))
    if (n.order() == order && n.is_abelian() == want_abelian) return embed(g, n);
  FAIL("no such normal subgroup");
  return {};
}

NormalEmbedding embed_cyclic(const FiniteGroup& g, std::size_t order) {
  for (const FiniteGroup& n : normal_subgroups(g)) {
    if (n.order() != order) continue;
    for (const Permutation& x : n.elements())
      if (x.order() == order) return embed(g, n);
  }
  FAIL("no cyclic normal subgroup of that order");
  return {};
}

bool is_q8(const FiniteGroup& n) {
  if (n.order() != 8 || n.is_abelian()) return false;
  std::size_t inv = 0;
  for (const Permutation& x : n.elements()) inv += x.order() == 2;
  return inv == 1;
}

}  // namespace

TEST_CASE("graph construction") {
  const FiniteGroup s3 = named("symmetric(3)");
  const ClassGraph g1 = build_gamma(embed_where(s3, 3, true));
  CHECK(g1.vertices.size() == 1);
  CHECK(g1.edges.empty());

  const FiniteGroup d12 = named("direct_product(symmetric(3),cyclic(2))");
  const ClassGraph g2 = build_gamma(embed_where(d12, 6, false));
  REQUIRE(g2.vertices.size() == 2);
  CHECK(g2.vertices[0].size == 2);
  CHECK(g2.vertices[1].size == 3);
  CHECK(g2.edges.empty());

  const FiniteGroup d8 = named("dihedral(8)");
  CHECK(build_gamma(embed(d8, center(d8))).vertices.empty());

  const FiniteGroup s4 = named("symmetric(4)");
  const ClassGraph full = build_gamma(embed(s4, s4));
  // sizes 3, 6, 6, 8: only 3 and 8 are coprime
  CHECK(full.vertices.size() == 4);
  CHECK(full.edges.size() == 5);
  CHECK_FALSE(full.adjacent(0, 3));
  for (std::size_t u = 0; u < 4; ++u) {
    CHECK_FALSE(full.adjacent(u, u));
    for (std::size_t v = 0; v < 4; ++v) CHECK(full.adjacent(u, v) == full.adjacent(v, u));
  }
}

TEST_CASE("one vertex: p-group with elementary abelian quotient") {
  const FiniteGroup d8 = named("dihedral(8)");
  const OneVertexReport a = verify_one_vertex(embed_cyclic(d8, 4));
  CHECK(a.ok());
  CHECK(a.prime == 2);
  CHECK(a.central_order == 2);

  const FiniteGroup a4 = named("alternating(4)");
  const OneVertexReport b = verify_one_vertex(embed_where(a4, 4, true));
  CHECK(b.ok());
  CHECK(b.prime == 2);
  CHECK(b.central_order == 1);
  CHECK(b.class_size == 3);

  const FiniteGroup agl = named("holomorph_elementary(2,3)");
  // (C2)^3 : C7 inside AGL(3,2): translations plus an element of order 7
  std::vector<Permutation> gens;
  for (const FiniteGroup& n : normal_subgroups(agl))
    if (n.order() == 8) gens = n.generators();
  for (const Permutation& x : agl.elements())
    if (x.order() == 7) {
      gens.push_back(x);
      break;
    }
  const FiniteGroup g = closure(gens, agl.degree());
  REQUIRE(g.order() == 56);
  const OneVertexReport c = verify_one_vertex(embed_where(g, 8, true));
  CHECK(c.ok());
  CHECK(c.class_size == 7);

  try {
    verify_one_vertex(embed(d8, d8));
    FAIL("expected wrong_graph_shape");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::wrong_graph_shape);
  }
}

TEST_CASE("one vertex inside p-groups") {
  const FiniteGroup d8 = named("dihedral(8)");
  const NormalEmbedding e = embed_cyclic(d8, 4);
  const PGroupOneVertexReport r = check_thm313(d8, e.subgroup);
  CHECK(r.ok());
  CHECK(r.prime_is_two);
  CHECK(r.subgroup_abelian);
  CHECK(r.k == 3);
  CHECK(r.a == 2);

  const FiniteGroup q8 = named("quaternion(8)");
  for (const FiniteGroup& n : normal_subgroups(q8))
    if (n.order() == 4) CHECK(check_thm313(q8, n).ok());

  SUBCASE("preconditions") {
    const FiniteGroup s3 = named("symmetric(3)");
    try {
      check_thm313(s3, embed_where(s3, 3, true).subgroup);
      FAIL("expected precondition_violated");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::precondition_violated);
    }
    try {
      check_thm313(d8, d8);
      FAIL("expected precondition_violated");
    } catch (const Error& err) {
      CHECK(err.kind() == ErrorKind::precondition_violated);
    }
  }

  SUBCASE("no normal subgroup of an odd-order p-group has a single non-central class") {
    std::size_t scanned = 0;
    for (const CatalogEntry& entry : catalog("catalog_le56.jsonl").entries) {
      const auto p = p_group_prime(entry.group);
      if (!p || *p == 2) continue;
      const PGroupScan scan = scan_thm313(entry.group);
      CHECK_MESSAGE(scan.none_possible(), "(" << entry.order << "," << entry.catalog_id << ")");
      ++scanned;
    }
    CHECK(scanned >= 5 + 2);  // orders 9, 25, 27, 49 and the primes
    for (const CatalogEntry* e : entries_of_order(catalog("catalog_le56.jsonl"), 27))
      CHECK(scan_thm313(e->group).none_possible());
  }

  SUBCASE("every 2-group scan passes") {
    for (const CatalogEntry& entry : catalog("catalog_le56.jsonl").entries) {
      if (p_group_prime(entry.group) != std::optional<std::uint64_t>{2}) continue;
      for (const auto& [n, report] : scan_thm313(entry.group).subgroups) CHECK(report.ok());
    }
  }
}

TEST_CASE("two coprime vertices: 2-group or Frobenius") {
  const FiniteGroup d12 = named("direct_product(symmetric(3),cyclic(2))");
  const TwoVertexReport a = verify_two_vertex_edgeless(embed_where(d12, 6, false));
  CHECK(a.ok());
  CHECK(a.branch == TwoVertexReport::Branch::frobenius);
  CHECK(a.kernel_order == 3);
  CHECK(a.complement_order == 2);

  const FiniteGroup s4 = named("symmetric(4)");
  const TwoVertexReport b = verify_two_vertex_edgeless(embed_where(s4, 12, false));
  CHECK(b.ok());
  CHECK(b.branch == TwoVertexReport::Branch::frobenius);
  CHECK(b.kernel_prime == 2);
  CHECK(b.kernel_order == 4);
  CHECK(b.complement_order == 3);

  const FiniteGroup f20 = named("semidirect_cyclic(5,4,2)");
  const TwoVertexReport c = verify_two_vertex_edgeless(embed_where(f20, 10, false));
  CHECK(c.ok());
  CHECK(c.branch == TwoVertexReport::Branch::frobenius);
  CHECK(c.kernel_order == 5);
  CHECK(c.complement_order == 2);

  try {
    verify_two_vertex_edgeless(embed_where(s4, 4, true));
    FAIL("expected wrong_graph_shape");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::wrong_graph_shape);
  }
}

TEST_CASE("structure checks hold on every qualifying pair of order <= 100") {
  std::size_t one = 0, two = 0;
  for (const CatalogEntry& entry : catalog("catalog_le100.jsonl").entries) {
    const FiniteGroup& g = entry.group;
    if (g.is_abelian()) continue;
    for (const ElementSet& s : normal_subgroup_sets(g)) {
      const NormalEmbedding e = embed(g, s);
      const ClassGraph graph = build_gamma(e);
      INFO("(" << entry.order << "," << entry.catalog_id << ") |N| = " << e.subgroup_members.size());
      if (graph.vertices.size() == 1) {
        CHECK(verify_one_vertex(e).ok());
        if (p_group_prime(g)) CHECK(check_thm313(g, e.subgroup).ok());
        const std::size_t n = e.index;
        if (n == 2 || n == 3 || n == 4 || n == 6 || n == 7) CHECK((e.subgroup.is_abelian() || is_q8(e.subgroup)));
        ++one;
      }
      if (graph.vertices.size() == 2 && graph.edges.empty()) {
        const TwoVertexReport r = verify_two_vertex_edgeless(e);
        CHECK(r.ok());
        CHECK(e.central_part_order == 1);
        ++two;
      }
    }
  }
  CHECK(one > 0);
  CHECK(two > 0);
}
