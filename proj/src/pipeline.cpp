#include "landau/pipeline.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "landau/error.hpp"
#include "landau/fingerprint.hpp"
#include "landau/fracsolve.hpp"
#include "landau/parallel.hpp"

namespace landau {

std::string to_string(ClassifyMode mode) {
  return mode == ClassifyMode::one_class ? "one-class" : "two-coprime";
}

ClassifyMode parse_mode(const std::string& text) {
  if (text == "one-class") return ClassifyMode::one_class;
  if (text == "two-coprime") return ClassifyMode::two_coprime;
  throw Error(ErrorKind::domain_error, "unknown mode \"" + text + "\"");
}

std::vector<std::string> ClassificationRow::violations() const {
  std::vector<std::string> out;
  auto take = [&](const StructureReport& r) { out.insert(out.end(), r.violations.begin(), r.violations.end()); };
  if (one_vertex) take(*one_vertex);
  if (p_group) take(*p_group);
  if (two_vertex) take(*two_vertex);
  if (central_order + std::accumulate(class_sizes.begin(), class_sizes.end(), std::size_t{0}) != subgroup_order)
    out.push_back("class sizes and |Z(G) ∩ N| do not add up to |N|");
  if (!within_bounds) out.push_back("|G| = " + std::to_string(group.order) + " exceeds the order bound");
  if (!in_candidates) out.push_back("|G| = " + std::to_string(group.order) + " is not a candidate order");
  if (!in_intervals) out.push_back("centralizer orders fall outside the n1/n2 ranges");
  return out;
}

std::size_t Classification::group_count() const {
  std::set<std::pair<std::uint64_t, std::uint64_t>> groups;
  for (const ClassificationRow& r : rows) groups.emplace(r.group.order, r.group.catalog_id);
  return groups.size();
}

std::vector<std::uint64_t> scan_orders(ClassifyMode mode, std::uint64_t n) {
  return orders_of(mode == ClassifyMode::one_class ? candidate_orders_one_class_structural(n)
                                                   : candidate_orders_two_coprime_structural(n));
}

IndexContext make_index_context(ClassifyMode mode, std::uint64_t n) {
  if (n < 1) throw Error(ErrorKind::domain_error, "index must be at least 1");
  if (mode == ClassifyMode::one_class) {
    const auto c = orders_of(candidate_orders_one_class(n));
    return {mode, n, {c.begin(), c.end()}, theoremA_bounds(n, 1), thm311_bound(n)};
  }
  const auto c = orders_of(candidate_orders_two_coprime(n));
  return {mode, n, {c.begin(), c.end()}, theoremA_bounds(n, 2), thm322_bound(n)};
}

std::optional<ClassificationRow> classify_pair(const NormalEmbedding& e, const GroupRef& ref,
                                               const IndexContext& ctx) {
  const FiniteGroup& g = e.ambient;
  const std::uint64_t n = ctx.n;
  const auto noncentral = e.noncentral_classes();
  if (ctx.mode == ClassifyMode::one_class && noncentral.size() != 1) return std::nullopt;
  if (ctx.mode == ClassifyMode::two_coprime &&
      (noncentral.size() != 2 || std::gcd(noncentral[0]->size, noncentral[1]->size) != 1))
    return std::nullopt;

  ClassificationRow row;
  row.index = n;
  row.group = ref;
  row.subgroup_order = e.subgroup_members.size();
  row.subgroup_label = describe(e.subgroup);
  for (const Permutation& p : e.subgroup.generators()) row.subgroup_generators.push_back(p.to_string());
  row.subgroup_members = e.subgroup_members;
  row.central_order = e.central_part_order;
  for (const ConjClassRecord* c : noncentral) row.class_sizes.push_back(c->size);
  std::sort(row.class_sizes.begin(), row.class_sizes.end());
  const ClassGraph graph = build_gamma(e);
  row.vertices = graph.vertices.size();
  row.edges = graph.edges.size();
  row.subgroup_abelian = e.subgroup.is_abelian();
  row.within_bounds = ctx.theorem_a.admits(g.order()) && ctx.specific.admits(g.order());
  row.in_candidates = ctx.candidates.contains(g.order());

  if (ctx.mode == ClassifyMode::one_class) {
    row.one_vertex = verify_one_vertex(e);
    if (p_group_prime(g)) row.p_group = check_thm313(g, e.subgroup);
  } else {
    row.two_vertex = verify_two_vertex_edgeless(e);
    const std::uint64_t n1 = g.order() / row.class_sizes[1];
    const std::uint64_t n2 = g.order() / row.class_sizes[0];
    const IntRange r1 = thm322_n1_range(n);
    row.in_intervals = r1.contains(n1) && thm322_n2_range(n, n1).contains(n2);
  }
  return row;
}

namespace {

std::vector<ClassificationRow> rows_for(const FiniteGroup& g, const GroupRef& ref, const IndexContext& ctx) {
  std::vector<ClassificationRow> rows;
  if (g.order() % ctx.n != 0 || g.is_abelian()) return rows;
  const std::size_t target = g.order() / ctx.n;
  for (const ElementSet& s : normal_subgroup_sets(g)) {
    if (count_elements(s) != target) continue;
    if (auto row = classify_pair(embed(g, s), ref, ctx)) rows.push_back(std::move(*row));
  }
  return rows;
}

bool row_less(const ClassificationRow& a, const ClassificationRow& b) {
  if (a.group.order != b.group.order) return a.group.order < b.group.order;
  if (a.group.catalog_id != b.group.catalog_id) return a.group.catalog_id < b.group.catalog_id;
  return a.subgroup_members < b.subgroup_members;
}

GroupRef ref_of(const CatalogEntry& e) { return {e.order, e.catalog_id, e.label}; }

}  // namespace

std::vector<ClassificationRow> classify_group(const FiniteGroup& g, const GroupRef& ref, ClassifyMode mode,
                                              std::uint64_t n) {
  return rows_for(g, ref, make_index_context(mode, n));
}

Classification classify(const Catalog& catalog, ClassifyMode mode, std::uint64_t n, const ClassifyOptions& options) {
  const IndexContext ctx = make_index_context(mode, n);
  Classification result;
  result.mode = mode;
  result.index = n;
  result.scanned_orders = scan_orders(mode, n);
  if (options.exhaustive && !result.scanned_orders.empty())
    require_complete(catalog, result.scanned_orders.back(),
                     to_string(mode) + " classification at index " + std::to_string(n));

  std::vector<const CatalogEntry*> work;
  for (std::uint64_t c : result.scanned_orders)
    for (const CatalogEntry* e : entries_of_order(catalog, c)) work.push_back(e);
  std::vector<std::vector<ClassificationRow>> slots(work.size());
  parallel_for(work.size(), options.jobs,
               [&](std::size_t i) { slots[i] = rows_for(work[i]->group, ref_of(*work[i]), ctx); });
  for (auto& s : slots)
    for (auto& r : s) result.rows.push_back(std::move(r));
  std::sort(result.rows.begin(), result.rows.end(), row_less);
  return result;
}

Classification classify_one_class(const Catalog& catalog, std::uint64_t n, const ClassifyOptions& options) {
  return classify(catalog, ClassifyMode::one_class, n, options);
}

Classification classify_two_coprime(const Catalog& catalog, std::uint64_t n, const ClassifyOptions& options) {
  return classify(catalog, ClassifyMode::two_coprime, n, options);
}

std::vector<KppRow> KppClassification::rows() const {
  std::vector<KppRow> out;
  for (const KppLevel& l : levels) out.insert(out.end(), l.rows.begin(), l.rows.end());
  return out;
}

KppClassification classify_kpp(const Catalog& catalog, std::uint64_t k_max, const ClassifyOptions& options) {
  if (k_max < 1) throw Error(ErrorKind::domain_error, "k must be at least 1");
  // kpp of every solvable entry, 0 for the others
  std::vector<std::size_t> values(catalog.entries.size(), 0);
  parallel_for(catalog.entries.size(), options.jobs, [&](std::size_t i) {
    const FiniteGroup& g = catalog.entries[i].group;
    if (is_solvable(g)) values[i] = kpp(g);
  });

  KppClassification result;
  BigInt below = 1;  // largest order with kpp < k
  for (std::uint64_t k = 1; k <= k_max; ++k) {
    KppLevel level;
    level.k = k;
    level.bound = iterative_kpp_bound(k, below);
    if (options.exhaustive) {
      if (level.bound > catalog.complete_up_to)
        throw Error(ErrorKind::incomplete_catalog,
                    "level k = " + std::to_string(k) + " needs every group of order up to " + level.bound.str() +
                        ", catalog is complete up to " + std::to_string(catalog.complete_up_to));
    }
    for (std::size_t i = 0; i < values.size(); ++i)
      if (values[i] == k) level.rows.push_back({k, ref_of(catalog.entries[i])});
    level.max_order = static_cast<std::uint64_t>(below);
    for (const KppRow& r : level.rows) level.max_order = std::max(level.max_order, r.group.order);
    below = level.max_order;
    result.levels.push_back(std::move(level));
  }
  return result;
}

}  // namespace landau
