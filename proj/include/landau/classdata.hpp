#pragma once

#include <cstddef>
#include <vector>

#include "landau/group.hpp"

namespace landau {

/// A normal subgroup N of G together with the G-classes it is made of.
///
/// `g_classes_in_n` are class records of the ambient group (their member
/// indices refer to `ambient`), in the ambient's class order. They satisfy
/// the relative class equation
///   |N| = |Z(G) ∩ N| + sum of the non-central class sizes.
struct NormalEmbedding {
  FiniteGroup ambient;
  FiniteGroup subgroup;
  std::size_t index = 1;
  std::vector<ConjClassRecord> g_classes_in_n;
  std::size_t central_part_order = 1;
  std::vector<ElementIndex> subgroup_members;  // ambient indices, ascending
  ElementSet subgroup_set;                     // same members as a bitset over ambient

  std::vector<const ConjClassRecord*> noncentral_classes() const;
};

/// Errors: not_a_subgroup if N is not contained in G, not_normal if N is not
/// a union of G-classes.
NormalEmbedding embed(const FiniteGroup& g, const FiniteGroup& n);

/// Same as embed() for a normal subgroup already known as a bitset over g.
NormalEmbedding embed(const FiniteGroup& g, const ElementSet& n_members);

/// |G : N C_G(x)|, the number of N-classes that x^G splits into.
/// Errors: not_in_subgroup if x is not in N.
std::size_t splitting_count(const NormalEmbedding& e, const Permutation& x);

/// Number of N-classes inside x^G, counted literally by conjugating with the
/// elements of N. Independent of splitting_count().
std::size_t literal_splitting_count(const NormalEmbedding& e, const Permutation& x);

struct ClassCounts {
  std::size_t k_g_n = 0;          // G-classes in N
  std::size_t kpp_g_n = 0;        // ... of elements of order 1 or a prime power
  std::size_t s_noncentral = 0;   // ... of size > 1
};

ClassCounts class_counts(const NormalEmbedding& e);

/// k(N) and kpp(N) are recomputed from N as a group in its own right.
struct ClassCountBounds {
  std::size_t index = 1;
  std::size_t k_n = 0;
  std::size_t kpp_n = 0;
  std::size_t k_g_n = 0;
  std::size_t kpp_g_n = 0;
  bool k_holds = false;    // k_G(N) >= k(N) / n
  bool kpp_holds = false;  // kpp_G(N) >= kpp(N) / n

  bool holds() const { return k_holds && kpp_holds; }
};

ClassCountBounds class_count_bounds(const NormalEmbedding& e);

/// True iff k_G(N) >= k(N)/|G:N| and kpp_G(N) >= kpp(N)/|G:N|.
inline bool check_thm44(const NormalEmbedding& e) { return class_count_bounds(e).holds(); }

/// kpp(G): classes of G whose elements have order 1 or a prime power.
std::size_t kpp(const FiniteGroup& g);

}  // namespace landau
