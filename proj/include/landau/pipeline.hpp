#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "landau/bounds.hpp"
#include "landau/catalog.hpp"
#include "landau/classgraph.hpp"

namespace landau {

enum class ClassifyMode { one_class, two_coprime };

std::string to_string(ClassifyMode mode);
/// "one-class" or "two-coprime"; throws Error(domain_error) otherwise.
ClassifyMode parse_mode(const std::string& text);

struct GroupRef {
  std::uint64_t order = 1;
  std::uint64_t catalog_id = 1;
  std::string label;
};

struct ClassificationRow {
  std::uint64_t index = 1;
  GroupRef group;
  std::size_t subgroup_order = 1;
  std::string subgroup_label;                   // best-effort description of N
  std::vector<std::string> subgroup_generators; // cycle notation
  std::vector<ElementIndex> subgroup_members;   // indices into G, used for ordering
  std::size_t central_order = 1;                // |Z(G) ∩ N|
  std::vector<std::size_t> class_sizes;         // non-central G-classes in N, ascending
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool subgroup_abelian = false;

  std::optional<OneVertexReport> one_vertex;
  std::optional<PGroupOneVertexReport> p_group;
  std::optional<TwoVertexReport> two_vertex;
  bool within_bounds = false;   // general s-class bound and the mode-specific bound
  bool in_candidates = false;   // |G| is among the candidate orders for the index
  bool in_intervals = true;     // two-coprime only: centralizer orders in the n1/n2 ranges

  std::vector<std::string> violations() const;
  bool verified() const { return violations().empty(); }
};

struct Classification {
  ClassifyMode mode = ClassifyMode::one_class;
  std::uint64_t index = 1;
  std::vector<std::uint64_t> scanned_orders;
  std::vector<ClassificationRow> rows;  // sorted by (order, catalog_id, subgroup members)

  std::size_t group_count() const;
};

struct ClassifyOptions {
  bool exhaustive = false;
  unsigned jobs = 1;
};

/// Orders scanned for `mode` at index n: the structural candidate orders.
std::vector<std::uint64_t> scan_orders(ClassifyMode mode, std::uint64_t n);

/// Rows for every (G, N) in the catalog with |G:N| = n and exactly one
/// non-central G-class in N, among catalog groups of candidate order.
/// Exhaustive mode requires the catalog to be complete up to the largest
/// candidate order. Errors: incomplete_catalog.
Classification classify_one_class(const Catalog& catalog, std::uint64_t n, const ClassifyOptions& options = {});

/// Same for exactly two non-central G-classes of coprime sizes.
Classification classify_two_coprime(const Catalog& catalog, std::uint64_t n, const ClassifyOptions& options = {});

Classification classify(const Catalog& catalog, ClassifyMode mode, std::uint64_t n,
                        const ClassifyOptions& options = {});

/// Candidate orders and bounds for one (mode, index), computed once and
/// shared by every group scanned at that index.
struct IndexContext {
  ClassifyMode mode = ClassifyMode::one_class;
  std::uint64_t n = 1;
  std::set<std::uint64_t> candidates;  // unfiltered candidate orders
  BoundReport theorem_a;
  BoundReport specific;                // the one-class or two-coprime bound
};

IndexContext make_index_context(ClassifyMode mode, std::uint64_t n);

/// The row for (G, N) if N has the shape `ctx.mode` asks for, with every
/// structure check attached. `e.index` must equal ctx.n.
std::optional<ClassificationRow> classify_pair(const NormalEmbedding& e, const GroupRef& ref,
                                               const IndexContext& ctx);

/// The rows for a single group, in row order.
std::vector<ClassificationRow> classify_group(const FiniteGroup& g, const GroupRef& ref, ClassifyMode mode,
                                              std::uint64_t n);

struct KppRow {
  std::uint64_t k = 1;
  GroupRef group;
};

struct KppLevel {
  std::uint64_t k = 1;
  BigInt bound;                 // order bound used for the level
  std::uint64_t max_order = 1;  // largest order found with kpp <= k
  std::vector<KppRow> rows;
};

struct KppClassification {
  std::vector<KppLevel> levels;

  std::vector<KppRow> rows() const;
};

/// Solvable catalog groups with kpp(G) = k for k = 1..k_max. Each level's
/// bound is k m^2 with m the largest order found at the levels below.
/// Exhaustive mode requires coverage of every level's bound.
/// Errors: incomplete_catalog naming the first uncovered level.
KppClassification classify_kpp(const Catalog& catalog, std::uint64_t k_max, const ClassifyOptions& options = {});

enum class TableFormat { csv, markdown, json };

/// "csv", "md"/"markdown" or "json"; throws Error(domain_error) otherwise.
TableFormat parse_format(const std::string& text);

/// Deterministic rendering; rows are emitted in their stored order.
/// Errors: io_error if the stream fails.
void emit_table(const std::vector<ClassificationRow>& rows, TableFormat format, std::ostream& out);
void emit_table(const std::vector<KppRow>& rows, TableFormat format, std::ostream& out);

}  // namespace landau
