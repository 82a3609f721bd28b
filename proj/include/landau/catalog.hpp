#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "landau/group.hpp"

namespace landau {

inline constexpr const char* kCatalogSchema = "group-catalog/1";

struct CatalogEntry {
  std::uint64_t order = 1;
  std::uint64_t catalog_id = 1;
  std::string label;
  std::size_t degree = 1;
  std::vector<std::vector<Cycle>> generators;  // one list of cycles per generator
  FiniteGroup group;                            // realized and order-checked on parse
};

/// Line-delimited catalog: a header object
///   {"schema":"group-catalog/1","complete_up_to":M,"counts":{"m":k,...},"provenance":...}
/// followed by one record per line
///   {"order":m,"catalog_id":i,"label":...,"degree":d,"generators":[[[1,2,3]],...]}.
struct Catalog {
  std::uint64_t complete_up_to = 0;
  std::map<std::uint64_t, std::uint64_t> counts;
  std::string provenance;
  std::vector<CatalogEntry> entries;  // sorted by (order, catalog_id)

  const CatalogEntry* find(std::uint64_t order, std::uint64_t catalog_id) const;
  std::uint64_t max_order() const;
};

struct ParseOptions {
  unsigned jobs = 1;
  std::size_t order_cap = kDefaultOrderCap;
};

/// Errors (CatalogError): schema_mismatch, order_mismatch, duplicate_id, all
/// with the offending line number where there is one.
Catalog parse_catalog(std::istream& in, const ParseOptions& options = {});

/// Reads from `path`, or standard input when path is "-".
/// Errors: io_error plus those of parse_catalog.
Catalog load_catalog(const std::string& path, const ParseOptions& options = {});

/// Writes the header and one line per entry with no insignificant whitespace.
void serialize_catalog(const Catalog& catalog, std::ostream& out);

/// The realized groups of order m in catalog_id order. In exhaustive mode an
/// order beyond complete_up_to is an incomplete_catalog error.
std::vector<FiniteGroup> groups_of_order(const Catalog& catalog, std::uint64_t m, bool exhaustive = false);

/// Entries of order m, in catalog_id order.
std::vector<const CatalogEntry*> entries_of_order(const Catalog& catalog, std::uint64_t m);

/// Throws Error(incomplete_catalog) unless complete_up_to >= max_order.
void require_complete(const Catalog& catalog, std::uint64_t max_order, const std::string& purpose);

}  // namespace landau
