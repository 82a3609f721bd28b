#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "landau/group.hpp"

namespace landau {

/// Isomorphism invariants used for best-effort labeling. Equal fingerprints
/// do not imply isomorphism.
struct GroupFingerprint {
  std::size_t order = 1;
  bool abelian = true;
  std::size_t derived_order = 1;
  /// Invariant factors, largest first; only filled for abelian groups.
  std::vector<std::uint64_t> abelian_invariants;
  std::vector<std::size_t> class_sizes;
  std::map<std::size_t, std::size_t> order_histogram;

  friend bool operator==(const GroupFingerprint&, const GroupFingerprint&) = default;
};

GroupFingerprint fingerprint(const FiniteGroup& g);

/// Invariant factors d_1 >= d_2 >= ... (each divisible by the next) of an
/// abelian group. Throws Error(precondition_violated) if g is not abelian.
std::vector<std::uint64_t> abelian_invariants(const FiniteGroup& g);

/// "C4 x C2", "Q8", "S3", ... for the groups this library can recognise,
/// otherwise a generic description such as "[order 16, 10 classes]".
std::string describe(const FiniteGroup& g);

}  // namespace landau
