#include "landau/property_suite.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "landau/bounds.hpp"
#include "landau/classdata.hpp"
#include "landau/error.hpp"
#include "landau/named.hpp"
#include "landau/numtheory.hpp"
#include "landau/parallel.hpp"
#include "landau/pipeline.hpp"

namespace landau {

namespace {

const std::vector<std::string> kNames{"classes",      "normality",    "class-equation", "splitting",     "class-counts",
                                      "order-bound",  "one-class",    "two-coprime",    "direct-product"};

struct Tally {
  std::vector<PropertyResult> results;
  std::size_t keep;

  explicit Tally(std::size_t keep_) : keep(keep_) {
    for (const std::string& n : kNames) results.push_back({n, 0, 0, {}});
  }

  PropertyResult& at(const std::string& name) {
    return *std::find_if(results.begin(), results.end(), [&](const PropertyResult& r) { return r.name == name; });
  }

  void check(const std::string& name, bool ok, const std::string& context) {
    PropertyResult& r = at(name);
    ++r.checked;
    if (ok) return;
    ++r.violations;
    if (r.examples.size() < keep) r.examples.push_back(context);
  }

  void merge(const Tally& other) {
    for (std::size_t i = 0; i < results.size(); ++i) {
      results[i].checked += other.results[i].checked;
      results[i].violations += other.results[i].violations;
      for (const std::string& e : other.results[i].examples)
        if (results[i].examples.size() < keep) results[i].examples.push_back(e);
    }
  }
};

struct Contexts {
  std::map<std::uint64_t, IndexContext> one, two;
  std::map<std::uint64_t, std::set<std::uint64_t>> one_scan, two_scan;
};

bool is_q8(const FiniteGroup& n) {
  if (n.order() != 8 || n.is_abelian()) return false;
  std::size_t involutions = 0;
  for (ElementIndex i = 0; i < n.order(); ++i)
    if (n.element_order(i) == 2) ++involutions;
  return involutions == 1;
}

std::string where(const GroupRef& ref, std::size_t n_order) {
  return "G = (" + std::to_string(ref.order) + "," + std::to_string(ref.catalog_id) + ") " + ref.label +
         ", |N| = " + std::to_string(n_order);
}

void check_classes(const FiniteGroup& g, const std::string& ctx, Tally& t) {
  const auto& classes = g.classes();
  ElementSet seen = make_element_set(g);
  std::size_t total = 0;
  bool disjoint = true;
  for (const ConjClassRecord& c : classes) {
    total += c.members.size();
    for (ElementIndex m : c.members) {
      if (test_element(seen, m)) disjoint = false;
      set_element(seen, m);
    }
    const ElementIndex x = c.members.front();
    std::size_t centralizer = 0;
    for (ElementIndex y = 0; y < g.order(); ++y)
      if (g.multiply(x, y) == g.multiply(y, x)) ++centralizer;
    t.check("classes", c.size * centralizer == g.order() && c.size == c.members.size(),
            ctx + ": orbit-stabilizer fails for " + c.representative.to_string());
    t.check("classes", c.is_central == (c.size == 1) && c.is_prime_power_order == is_one_or_prime_power(c.element_order),
            ctx + ": class flags inconsistent for " + c.representative.to_string());
  }
  t.check("classes", disjoint && total == g.order(), ctx + ": classes do not partition G");
  const FiniteGroup z = center(g);
  const auto central = std::count_if(classes.begin(), classes.end(), [](const ConjClassRecord& c) { return c.size == 1; });
  t.check("classes", z.order() == static_cast<std::size_t>(central), ctx + ": center differs from the size-1 classes");
}

void check_pair(const FiniteGroup& g, const GroupRef& ref, const ElementSet& s, const Contexts& ctxs, Tally& t) {
  const std::size_t n_order = count_elements(s);
  const std::string ctx = where(ref, n_order);
  const std::vector<ElementIndex> members = to_indices(s);

  bool invariant = count_elements(generate_in(g, members)) == n_order;
  for (ElementIndex m : members)
    for (ElementIndex gen : g.generator_indices())
      if (!test_element(s, g.conjugate(m, gen))) invariant = false;
  t.check("normality", invariant, ctx + ": not a normal subgroup");

  NormalEmbedding e;
  try {
    e = embed(g, s);
  } catch (const Error& err) {
    t.check("normality", false, ctx + ": " + err.what());
    return;
  }
  const std::uint64_t n = e.index;

  std::size_t sum = e.central_part_order;
  for (const ConjClassRecord* c : e.noncentral_classes()) sum += c->size;
  t.check("class-equation", sum == n_order, ctx + ": class equation does not balance");

  for (const ConjClassRecord& c : e.g_classes_in_n) {
    const std::size_t split = splitting_count(e, c.representative);
    const std::size_t literal = literal_splitting_count(e, c.representative);
    t.check("splitting", split == literal && n % split == 0,
            ctx + ": x = " + c.representative.to_string() + " splits into " + std::to_string(literal) +
                " N-classes, formula gives " + std::to_string(split));
  }

  const ClassCountBounds b = class_count_bounds(e);
  t.check("class-counts", b.holds(),
          ctx + ": k_G(N) = " + std::to_string(b.k_g_n) + ", k(N) = " + std::to_string(b.k_n) +
              ", kpp_G(N) = " + std::to_string(b.kpp_g_n) + ", kpp(N) = " + std::to_string(b.kpp_n));

  const auto noncentral = e.noncentral_classes();
  const std::size_t s_count = noncentral.size();
  if (s_count >= 1)
    t.check("order-bound", theoremA_admits(n, s_count, g.order()),
            ctx + ": |G| reaches the bound for s = " + std::to_string(s_count));

  auto row_check = [&](const std::string& name, const std::optional<ClassificationRow>& row, bool scanned) {
    if (!row) {
      t.check(name, false, ctx + ": shape detected but no row produced");
      return;
    }
    const auto v = row->violations();
    std::string detail;
    for (const std::string& x : v) detail += (detail.empty() ? "" : "; ") + x;
    t.check(name, v.empty(), ctx + ": " + detail);
    t.check(name, scanned, ctx + ": |G| missing from the scanned candidate orders");
  };
  if (s_count == 1) {
    const auto row = classify_pair(e, ref, ctxs.one.at(n));
    row_check("one-class", row, ctxs.one_scan.at(n).contains(g.order()));
    if (n == 2 || n == 3 || n == 4 || n == 6 || n == 7)
      t.check("one-class", e.subgroup.is_abelian() || is_q8(e.subgroup), ctx + ": N is neither abelian nor Q8");
  }
  if (s_count == 2 && std::gcd(noncentral[0]->size, noncentral[1]->size) == 1) {
    const auto row = classify_pair(e, ref, ctxs.two.at(n));
    row_check("two-coprime", row, ctxs.two_scan.at(n).contains(g.order()));
    t.check("two-coprime", e.central_part_order == 1, ctx + ": Z(G) ∩ N is not trivial");
  }
}

void check_direct_products(Tally& t) {
  using S = NamedGroupSpec;
  for (const S& left : {S::symmetric(3), S::quaternion()}) {
    for (std::uint64_t m : {2u, 3u, 5u}) {
      const FiniteGroup g = construct_named(S::direct_product(left, S::cyclic(m)));
      const std::size_t left_degree = construct_named(left).degree();
      // N = the first factor, i.e. the elements fixing every point it does not move
      ElementSet s = make_element_set(g);
      for (ElementIndex i = 0; i < g.order(); ++i) {
        bool fixes = true;
        for (Point p = static_cast<Point>(left_degree) + 1; p <= g.degree(); ++p)
          if (g.element(i)(p) != p) fixes = false;
        if (fixes) set_element(s, i);
      }
      const NormalEmbedding e = embed(g, s);
      std::vector<std::size_t> in_g, in_n;
      for (const ConjClassRecord& c : e.g_classes_in_n) in_g.push_back(c.size);
      for (const ConjClassRecord& c : e.subgroup.classes()) in_n.push_back(c.size);
      std::sort(in_g.begin(), in_g.end());
      std::sort(in_n.begin(), in_n.end());
      t.check("direct-product", in_g == in_n, g.label() + ": G-class sizes in N differ from N-class sizes");
    }
  }
}

}  // namespace

bool PropertyReport::ok() const { return violations() == 0; }

std::size_t PropertyReport::violations() const {
  std::size_t v = 0;
  for (const PropertyResult& r : results) v += r.violations;
  return v;
}

const PropertyResult* PropertyReport::find(const std::string& name) const {
  for (const PropertyResult& r : results)
    if (r.name == name) return &r;
  return nullptr;
}

PropertyReport run_property_suite(const Catalog& catalog, const SuiteOptions& options) {
  Contexts ctxs;
  std::set<std::uint64_t> indices;
  for (const CatalogEntry& e : catalog.entries)
    for (std::uint64_t d : divisors(e.order)) indices.insert(d);
  for (std::uint64_t n : indices) {
    ctxs.one.emplace(n, make_index_context(ClassifyMode::one_class, n));
    ctxs.two.emplace(n, make_index_context(ClassifyMode::two_coprime, n));
    const auto a = scan_orders(ClassifyMode::one_class, n);
    const auto b = scan_orders(ClassifyMode::two_coprime, n);
    ctxs.one_scan[n] = {a.begin(), a.end()};
    ctxs.two_scan[n] = {b.begin(), b.end()};
  }

  std::vector<Tally> per_entry(catalog.entries.size(), Tally(options.examples_kept));
  parallel_for(catalog.entries.size(), options.jobs, [&](std::size_t i) {
    const CatalogEntry& entry = catalog.entries[i];
    const GroupRef ref{entry.order, entry.catalog_id, entry.label};
    Tally& t = per_entry[i];
    check_classes(entry.group, where(ref, entry.order), t);
    for (const ElementSet& s : normal_subgroup_sets(entry.group)) check_pair(entry.group, ref, s, ctxs, t);
  });

  Tally total(options.examples_kept);
  for (const Tally& t : per_entry) total.merge(t);
  check_direct_products(total);
  return {total.results};
}

}  // namespace landau
