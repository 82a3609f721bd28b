#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "landau/catalog.hpp"

namespace landau {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> examples;  // first few failure descriptions

  bool ok() const { return violations == 0; }
};

struct PropertyReport {
  std::vector<PropertyResult> results;

  bool ok() const;
  std::size_t violations() const;
  const PropertyResult* find(const std::string& name) const;
};

struct SuiteOptions {
  unsigned jobs = 1;
  std::size_t examples_kept = 5;
};

/// Checks, over every catalog entry and every normal subgroup N:
///   classes        class partition, orbit-stabilizer, center = size-1 classes
///   normality      normal subgroups are unions of classes, closed, invariant
///   class-equation |N| = |Z(G) ∩ N| + sum of non-central class sizes
///   splitting      |G : N C_G(x)| equals the literal N-class count and divides |G:N|
///   class-counts   k_G(N) >= k(N)/|G:N| and kpp_G(N) >= kpp(N)/|G:N|
///   order-bound    |G| below the general s-class bound whenever N has s >= 1 non-central classes
///   one-class      structure, bound, candidate and abelian-or-Q8 checks for one-vertex pairs
///   two-coprime    structure, bound, interval and candidate checks for coprime two-vertex pairs
///   direct-product G-classes of N equal N-classes for N in {S3, Q8} times C2, C3, C5
PropertyReport run_property_suite(const Catalog& catalog, const SuiteOptions& options = {});

}  // namespace landau
