#include "landau/group.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <mutex>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "landau/error.hpp"
#include "landau/numtheory.hpp"

namespace landau {

namespace {

// Groups up to this order get a precomputed multiplication table.
constexpr std::size_t kTableLimit = 512;

}  // namespace

struct FiniteGroup::Data {
  std::size_t degree = 1;
  std::vector<Permutation> generators;
  std::vector<Permutation> elements;
  std::unordered_map<Permutation, ElementIndex, PermutationHash> index;
  std::vector<ElementIndex> generator_indices;
  std::vector<ElementIndex> inverses;
  std::vector<std::uint32_t> orders;
  std::vector<ElementIndex> table;  // order*order entries, empty above kTableLimit

  mutable std::once_flag classes_once;
  mutable std::vector<ConjClassRecord> classes;
  mutable std::vector<std::uint32_t> class_of;

  ElementIndex lookup(const Permutation& p) const {
    auto it = index.find(p);
    if (it == index.end()) throw Error(ErrorKind::not_a_member, "element " + p.to_string() + " not in group");
    return it->second;
  }

  ElementIndex mul(ElementIndex a, ElementIndex b) const {
    if (!table.empty()) return table[static_cast<std::size_t>(a) * elements.size() + b];
    return lookup(elements[a] * elements[b]);
  }
};

// Builds the shared data from a generator list and the full (unsorted) element list.
FiniteGroup make_group(std::size_t degree, std::vector<Permutation> generators,
                       std::vector<Permutation> elements, std::string label) {
  auto d = std::make_shared<FiniteGroup::Data>();
  d->degree = degree;
  d->generators = std::move(generators);
  std::sort(elements.begin(), elements.end());
  d->elements = std::move(elements);
  const std::size_t n = d->elements.size();
  d->index.reserve(n * 2);
  for (std::size_t i = 0; i < n; ++i) d->index.emplace(d->elements[i], static_cast<ElementIndex>(i));
  for (const Permutation& g : d->generators) d->generator_indices.push_back(d->lookup(g));
  if (n <= kTableLimit) {
    d->table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        d->table[a * n + b] = d->lookup(d->elements[a] * d->elements[b]);
  }
  d->inverses.resize(n);
  d->orders.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    d->inverses[i] = d->lookup(d->elements[i].inverse());
    d->orders[i] = static_cast<std::uint32_t>(d->elements[i].order());
  }
  FiniteGroup g(std::move(d));
  g.label_ = std::move(label);
  return g;
}

FiniteGroup::FiniteGroup() : FiniteGroup(make_group(1, {}, {Permutation::identity(1)}, "1")) {}

std::size_t FiniteGroup::degree() const noexcept { return data_->degree; }
std::size_t FiniteGroup::order() const noexcept { return data_->elements.size(); }
const std::vector<Permutation>& FiniteGroup::generators() const noexcept { return data_->generators; }
const std::vector<Permutation>& FiniteGroup::elements() const noexcept { return data_->elements; }
const std::string& FiniteGroup::label() const noexcept { return label_; }

FiniteGroup FiniteGroup::with_label(std::string label) const {
  FiniteGroup copy = *this;
  copy.label_ = std::move(label);
  return copy;
}

std::optional<ElementIndex> FiniteGroup::find(const Permutation& p) const {
  if (p.degree() != degree()) return std::nullopt;
  auto it = data_->index.find(p);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

ElementIndex FiniteGroup::index_of(const Permutation& p) const {
  if (auto i = find(p)) return *i;
  throw Error(ErrorKind::not_a_member, "element " + p.to_string() + " not in group");
}

ElementIndex FiniteGroup::multiply(ElementIndex a, ElementIndex b) const { return data_->mul(a, b); }
ElementIndex FiniteGroup::inverse(ElementIndex a) const { return data_->inverses[a]; }

ElementIndex FiniteGroup::conjugate(ElementIndex a, ElementIndex g) const {
  return data_->mul(data_->mul(data_->inverses[g], a), g);
}

std::size_t FiniteGroup::element_order(ElementIndex a) const { return data_->orders[a]; }

const std::vector<ElementIndex>& FiniteGroup::generator_indices() const noexcept {
  return data_->generator_indices;
}

bool FiniteGroup::is_abelian() const {
  const auto& gens = data_->generator_indices;
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (multiply(gens[i], gens[j]) != multiply(gens[j], gens[i])) return false;
  return true;
}

const std::vector<ConjClassRecord>& FiniteGroup::classes() const {
  std::call_once(data_->classes_once, [this] {
    const std::size_t n = order();
    const auto& gens = data_->generator_indices;
    std::vector<std::uint32_t> owner(n, UINT32_MAX);
    std::vector<std::vector<ElementIndex>> orbits;
    // Orbits of the conjugation action; conjugating by generators suffices.
    for (ElementIndex x = 0; x < n; ++x) {
      if (owner[x] != UINT32_MAX) continue;
      const auto id = static_cast<std::uint32_t>(orbits.size());
      std::vector<ElementIndex> orbit{x};
      owner[x] = id;
      for (std::size_t head = 0; head < orbit.size(); ++head) {
        for (ElementIndex g : gens) {
          const ElementIndex y = conjugate(orbit[head], g);
          if (owner[y] == UINT32_MAX) {
            owner[y] = id;
            orbit.push_back(y);
          }
        }
      }
      std::sort(orbit.begin(), orbit.end());
      orbits.push_back(std::move(orbit));
    }
    std::vector<std::size_t> perm(orbits.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
      if (orbits[a].size() != orbits[b].size()) return orbits[a].size() < orbits[b].size();
      return orbits[a].front() < orbits[b].front();
    });
    auto& out = data_->classes;
    auto& class_of = data_->class_of;
    class_of.assign(n, 0);
    for (std::size_t pos = 0; pos < perm.size(); ++pos) {
      auto& orbit = orbits[perm[pos]];
      ConjClassRecord rec;
      rec.representative = element(orbit.front());
      rec.size = orbit.size();
      rec.element_order = element_order(orbit.front());
      rec.is_central = rec.size == 1;
      rec.is_prime_power_order = is_one_or_prime_power(rec.element_order);
      for (ElementIndex m : orbit) class_of[m] = static_cast<std::uint32_t>(pos);
      rec.members = std::move(orbit);
      out.push_back(std::move(rec));
    }
  });
  return data_->classes;
}

std::size_t FiniteGroup::class_of(ElementIndex a) const {
  classes();
  return data_->class_of[a];
}

FiniteGroup closure(std::span<const Permutation> generators, std::size_t degree, std::size_t cap) {
  for (const Permutation& g : generators)
    if (g.degree() != degree)
      throw Error(ErrorKind::invalid_permutation, "generator " + g.to_string() + " has degree " +
                                                      std::to_string(g.degree()) + ", expected " +
                                                      std::to_string(degree));
  std::unordered_set<Permutation, PermutationHash> seen;
  std::vector<Permutation> elements{Permutation::identity(degree)};
  seen.insert(elements.front());
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const Permutation& g : generators) {
      Permutation y = elements[head] * g;
      if (seen.insert(y).second) {
        if (elements.size() >= cap)
          throw Error(ErrorKind::cap_exceeded,
                      "closure exceeds the order cap of " + std::to_string(cap));
        elements.push_back(std::move(y));
      }
    }
  }
  std::vector<Permutation> gens(generators.begin(), generators.end());
  return make_group(degree, std::move(gens), std::move(elements), {});
}

ElementSet make_element_set(const FiniteGroup& g) { return ElementSet((g.order() + 63) / 64, 0); }

std::size_t count_elements(const ElementSet& s) {
  std::size_t c = 0;
  for (std::uint64_t w : s) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::vector<ElementIndex> to_indices(const ElementSet& s) {
  std::vector<ElementIndex> out;
  for (std::size_t w = 0; w < s.size(); ++w) {
    std::uint64_t bits = s[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      out.push_back(static_cast<ElementIndex>(w * 64 + static_cast<std::size_t>(b)));
      bits &= bits - 1;
    }
  }
  return out;
}

ElementSet generate_in(const FiniteGroup& g, std::span<const ElementIndex> generators) {
  ElementSet set = make_element_set(g);
  std::vector<ElementIndex> queue{FiniteGroup::identity()};
  set_element(set, FiniteGroup::identity());
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (ElementIndex s : generators) {
      const ElementIndex y = g.multiply(queue[head], s);
      if (!test_element(set, y)) {
        set_element(set, y);
        queue.push_back(y);
      }
    }
  }
  return set;
}

FiniteGroup subgroup_from_members(const FiniteGroup& g, std::span<const ElementIndex> members,
                                  std::string label) {
  std::vector<ElementIndex> gens;
  ElementSet current = generate_in(g, gens);
  for (ElementIndex m : members) {
    if (test_element(current, m)) continue;
    gens.push_back(m);
    current = generate_in(g, gens);
  }
  std::vector<Permutation> gen_perms;
  for (ElementIndex i : gens) gen_perms.push_back(g.element(i));
  std::vector<Permutation> elems;
  elems.reserve(members.size());
  for (ElementIndex m : members) elems.push_back(g.element(m));
  return make_group(g.degree(), std::move(gen_perms), std::move(elems), std::move(label));
}

std::vector<ElementIndex> member_indices(const FiniteGroup& g, const FiniteGroup& h) {
  std::vector<ElementIndex> out;
  out.reserve(h.order());
  for (const Permutation& p : h.elements()) {
    auto i = g.find(p);
    if (!i) throw Error(ErrorKind::not_a_subgroup, "element " + p.to_string() + " is not in the ambient group");
    out.push_back(*i);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FiniteGroup center(const FiniteGroup& g) {
  std::vector<ElementIndex> members;
  for (const ConjClassRecord& c : g.classes())
    if (c.is_central) members.push_back(c.members.front());
  std::sort(members.begin(), members.end());
  return subgroup_from_members(g, members);
}

FiniteGroup centralizer(const FiniteGroup& g, const Permutation& x) {
  const ElementIndex xi = g.index_of(x);
  std::vector<ElementIndex> members;
  for (ElementIndex y = 0; y < g.order(); ++y)
    if (g.multiply(xi, y) == g.multiply(y, xi)) members.push_back(y);
  return subgroup_from_members(g, members);
}

std::vector<ConjClassRecord> conjugacy_classes(const FiniteGroup& g) { return g.classes(); }

bool is_normal_in(const FiniteGroup& g, const FiniteGroup& h) {
  const auto members = member_indices(g, h);
  ElementSet set = make_element_set(g);
  for (ElementIndex m : members) set_element(set, m);
  if (count_elements(generate_in(g, members)) != members.size()) return false;
  for (ElementIndex m : members)
    for (ElementIndex s : g.generator_indices())
      if (!test_element(set, g.conjugate(m, s))) return false;
  return true;
}

namespace {

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (std::uint64_t w : s) h = (h ^ w) * 0x100000001b3ull + (h >> 29);
    return h;
  }
};

bool subset_of(const ElementSet& a, const ElementSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

}  // namespace

ElementSet normal_closure(const FiniteGroup& g, std::span<const ElementIndex> seeds) {
  // Subgroup generated by all conjugates of the seeds: close the seed set
  // under conjugation first, then under multiplication.
  ElementSet conj = make_element_set(g);
  std::vector<ElementIndex> gens;
  for (ElementIndex s : seeds) {
    if (test_element(conj, s)) continue;
    const auto& cls = g.classes()[g.class_of(s)];
    for (ElementIndex m : cls.members) {
      set_element(conj, m);
      gens.push_back(m);
    }
  }
  return generate_in(g, gens);
}

std::vector<ElementSet> normal_subgroup_sets(const FiniteGroup& g) {
  // Every normal subgroup is the product of the normal closures of the
  // classes it contains, so closing {1} under products with those closures
  // reaches all of them.
  const auto& classes = g.classes();
  std::vector<ElementSet> class_sets;
  std::vector<std::vector<ElementIndex>> closures;
  for (const ConjClassRecord& c : classes) {
    ElementSet cs = make_element_set(g);
    for (ElementIndex m : c.members) set_element(cs, m);
    class_sets.push_back(std::move(cs));
    closures.push_back(to_indices(generate_in(g, c.members)));
  }

  std::unordered_set<ElementSet, ElementSetHash> seen;
  std::vector<ElementSet> found;
  ElementSet trivial = make_element_set(g);
  set_element(trivial, FiniteGroup::identity());
  seen.insert(trivial);
  found.push_back(trivial);
  for (std::size_t head = 0; head < found.size(); ++head) {
    const std::vector<ElementIndex> a_members = to_indices(found[head]);
    for (std::size_t c = 1; c < classes.size(); ++c) {
      if (subset_of(class_sets[c], found[head])) continue;
      ElementSet product = found[head];
      for (ElementIndex a : a_members)
        for (ElementIndex m : closures[c]) set_element(product, g.multiply(a, m));
      if (seen.insert(product).second) found.push_back(std::move(product));
    }
  }

  std::vector<std::pair<std::vector<ElementIndex>, std::size_t>> keyed;
  for (std::size_t i = 0; i < found.size(); ++i) keyed.emplace_back(to_indices(found[i]), i);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first.size() != b.first.size()) return a.first.size() < b.first.size();
    return a.first < b.first;
  });
  std::vector<ElementSet> out;
  out.reserve(found.size());
  for (auto& [_, i] : keyed) out.push_back(std::move(found[i]));
  return out;
}

std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& g) {
  std::vector<FiniteGroup> out;
  for (const ElementSet& s : normal_subgroup_sets(g)) {
    const auto members = to_indices(s);
    out.push_back(subgroup_from_members(g, members));
  }
  return out;
}

FiniteGroup derived_subgroup(const FiniteGroup& g) {
  const auto& gens = g.generator_indices();
  std::vector<ElementIndex> commutators;
  for (ElementIndex a : gens)
    for (ElementIndex b : gens) {
      // [a,b] = a^-1 b^-1 a b
      const ElementIndex c =
          g.multiply(g.multiply(g.inverse(a), g.inverse(b)), g.multiply(a, b));
      if (c != FiniteGroup::identity()) commutators.push_back(c);
    }
  return subgroup_from_members(g, to_indices(normal_closure(g, commutators)));
}

bool is_solvable(const FiniteGroup& g) {
  FiniteGroup current = g;
  while (current.order() > 1) {
    FiniteGroup next = derived_subgroup(current);
    if (next.order() == current.order()) return false;
    current = std::move(next);
  }
  return true;
}

std::optional<std::uint64_t> p_group_prime(const FiniteGroup& g) {
  if (auto pp = as_prime_power(g.order())) return pp->prime;
  return std::nullopt;
}

}  // namespace landau
