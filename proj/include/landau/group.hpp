#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "landau/permutation.hpp"

namespace landau {

inline constexpr std::size_t kDefaultOrderCap = 10'000;

/// Position of an element in its group's sorted element list.
using ElementIndex = std::uint32_t;

/// One conjugacy class of a group, i.e. the orbit x^G of `representative`.
/// `members` are indices into the owning group's element list, ascending;
/// the representative is the smallest of them.
struct ConjClassRecord {
  Permutation representative;
  std::size_t size = 0;
  std::size_t element_order = 1;
  bool is_central = false;
  bool is_prime_power_order = false;
  std::vector<ElementIndex> members;
};

/// A fully enumerated permutation group.
///
/// Immutable after construction; copies share the element table, so a
/// FiniteGroup is cheap to pass around and safe to read from several threads.
/// Elements are kept in lexicographic order of their image arrays, which puts
/// the identity at index 0.
class FiniteGroup {
 public:
  /// The trivial group of degree 1.
  FiniteGroup();

  std::size_t degree() const noexcept;
  std::size_t order() const noexcept;
  const std::vector<Permutation>& generators() const noexcept;
  const std::vector<Permutation>& elements() const noexcept;
  const std::string& label() const noexcept;
  FiniteGroup with_label(std::string label) const;

  const Permutation& element(ElementIndex i) const { return elements()[i]; }
  static constexpr ElementIndex identity() noexcept { return 0; }

  std::optional<ElementIndex> find(const Permutation& p) const;
  bool contains(const Permutation& p) const { return find(p).has_value(); }
  /// Throws Error(not_a_member).
  ElementIndex index_of(const Permutation& p) const;

  ElementIndex multiply(ElementIndex a, ElementIndex b) const;
  ElementIndex inverse(ElementIndex a) const;
  /// a^g = g^-1 a g
  ElementIndex conjugate(ElementIndex a, ElementIndex g) const;
  std::size_t element_order(ElementIndex a) const;
  /// Indices of the generators.
  const std::vector<ElementIndex>& generator_indices() const noexcept;

  bool is_abelian() const;

  /// Conjugacy classes sorted by size, then by smallest member. Computed on
  /// first use and cached.
  const std::vector<ConjClassRecord>& classes() const;
  /// Position in classes() of the class containing element `a`.
  std::size_t class_of(ElementIndex a) const;

 private:
  struct Data;
  explicit FiniteGroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
  std::string label_;

  friend FiniteGroup closure(std::span<const Permutation>, std::size_t, std::size_t);
  friend FiniteGroup make_group(std::size_t, std::vector<Permutation>, std::vector<Permutation>,
                                std::string);
};

/// Group generated by `generators`, all of the given degree.
/// Errors: invalid_permutation on degree mismatch, cap_exceeded when the
/// closure grows past `cap` elements.
FiniteGroup closure(std::span<const Permutation> generators, std::size_t degree,
                    std::size_t cap = kDefaultOrderCap);

/// Bitset over the element indices of an ambient group.
using ElementSet = std::vector<std::uint64_t>;

ElementSet make_element_set(const FiniteGroup& g);
inline bool test_element(const ElementSet& s, ElementIndex i) { return (s[i >> 6] >> (i & 63)) & 1u; }
inline void set_element(ElementSet& s, ElementIndex i) { s[i >> 6] |= std::uint64_t{1} << (i & 63); }
std::size_t count_elements(const ElementSet& s);
std::vector<ElementIndex> to_indices(const ElementSet& s);

/// Subgroup of `g` generated by the given elements, as a bitset over g.
ElementSet generate_in(const FiniteGroup& g, std::span<const ElementIndex> generators);

/// Wraps a set of elements of `g` that is already known to be a subgroup.
/// Picks a small generating set greedily.
FiniteGroup subgroup_from_members(const FiniteGroup& g, std::span<const ElementIndex> members,
                                  std::string label = {});

/// Indices in `g` of the elements of `h`; throws Error(not_a_subgroup) if `h`
/// is not contained in `g`.
std::vector<ElementIndex> member_indices(const FiniteGroup& g, const FiniteGroup& h);

FiniteGroup center(const FiniteGroup& g);

/// Throws Error(not_a_member) if x is not in g.
FiniteGroup centralizer(const FiniteGroup& g, const Permutation& x);

std::vector<ConjClassRecord> conjugacy_classes(const FiniteGroup& g);

bool is_normal_in(const FiniteGroup& g, const FiniteGroup& h);

/// Every normal subgroup of `g` exactly once, ordered by size then by
/// member indices.
std::vector<FiniteGroup> normal_subgroups(const FiniteGroup& g);

/// Normal subgroups as bitsets over g, in the same order as normal_subgroups.
std::vector<ElementSet> normal_subgroup_sets(const FiniteGroup& g);

/// Smallest normal subgroup of g containing `seeds`, as a bitset over g.
ElementSet normal_closure(const FiniteGroup& g, std::span<const ElementIndex> seeds);

FiniteGroup derived_subgroup(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);

/// Prime p if |g| = p^a with a >= 1.
std::optional<std::uint64_t> p_group_prime(const FiniteGroup& g);

}  // namespace landau
