#include "landau/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <set>
#include <string_view>

#include <json.hpp>

#include "landau/error.hpp"
#include "landau/parallel.hpp"

namespace landau {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void schema_error(std::size_t line, const std::string& what) {
  throw CatalogError(ErrorKind::schema_mismatch, line, what);
}

void require_keys(const Json& obj, std::initializer_list<std::string_view> required,
                  std::initializer_list<std::string_view> optional, std::size_t line) {
  if (!obj.is_object()) schema_error(line, "expected a JSON object");
  for (std::string_view k : required)
    if (!obj.contains(k)) schema_error(line, "missing field \"" + std::string(k) + "\"");
  for (const auto& [key, value] : obj.items()) {
    const bool known = std::find(required.begin(), required.end(), key) != required.end() ||
                       std::find(optional.begin(), optional.end(), key) != optional.end();
    if (!known) schema_error(line, "unexpected field \"" + key + "\"");
  }
}

std::uint64_t positive(const Json& v, const char* field, std::size_t line, bool allow_zero = false) {
  if (!v.is_number_unsigned() || (!allow_zero && v.get<std::uint64_t>() == 0))
    schema_error(line, std::string("field \"") + field + "\" must be a positive integer");
  return v.get<std::uint64_t>();
}

struct RawEntry {
  CatalogEntry entry;
  std::size_t line = 0;
};

void read_header(const Json& h, Catalog& cat) {
  require_keys(h, {"schema", "complete_up_to", "counts"}, {"provenance"}, 1);
  if (h["schema"] != kCatalogSchema) schema_error(1, "unknown schema " + h["schema"].dump());
  cat.complete_up_to = positive(h["complete_up_to"], "complete_up_to", 1, true);
  if (!h["counts"].is_object()) schema_error(1, "\"counts\" must be an object");
  for (const auto& [key, value] : h["counts"].items()) {
    std::uint64_t m = 0;
    try {
      std::size_t used = 0;
      m = std::stoull(key, &used);
      if (used != key.size() || m == 0) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      schema_error(1, "count key \"" + key + "\" is not a positive integer");
    }
    cat.counts[m] = positive(value, "counts", 1, true);
  }
  if (h.contains("provenance")) {
    if (!h["provenance"].is_string()) schema_error(1, "\"provenance\" must be a string");
    cat.provenance = h["provenance"].get<std::string>();
  }
}

RawEntry read_record(const Json& r, std::size_t line) {
  require_keys(r, {"order", "catalog_id", "label", "degree", "generators"}, {}, line);
  RawEntry raw;
  raw.line = line;
  CatalogEntry& e = raw.entry;
  e.order = positive(r["order"], "order", line);
  e.catalog_id = positive(r["catalog_id"], "catalog_id", line);
  e.degree = positive(r["degree"], "degree", line);
  if (!r["label"].is_string()) schema_error(line, "\"label\" must be a string");
  e.label = r["label"].get<std::string>();
  if (!r["generators"].is_array()) schema_error(line, "\"generators\" must be a list");
  for (const Json& gen : r["generators"]) {
    if (!gen.is_array()) schema_error(line, "a generator must be a list of cycles");
    std::vector<Cycle> cycles;
    for (const Json& cyc : gen) {
      if (!cyc.is_array()) schema_error(line, "a cycle must be a list of points");
      Cycle c;
      for (const Json& p : cyc) {
        const std::uint64_t point = positive(p, "generators", line);
        if (point > e.degree) schema_error(line, "point " + std::to_string(point) + " exceeds the degree");
        c.push_back(static_cast<Point>(point));
      }
      cycles.push_back(std::move(c));
    }
    e.generators.push_back(std::move(cycles));
  }
  return raw;
}

void realize(RawEntry& raw, std::size_t cap) {
  CatalogEntry& e = raw.entry;
  std::vector<Permutation> gens;
  try {
    for (const auto& cycles : e.generators) gens.push_back(Permutation::from_cycles(e.degree, cycles));
    e.group = closure(gens, e.degree, cap).with_label(e.label);
  } catch (const CatalogError&) {
    throw;
  } catch (const Error& err) {
    throw CatalogError(err.kind() == ErrorKind::cap_exceeded ? ErrorKind::order_mismatch : ErrorKind::schema_mismatch,
                       raw.line, err.what());
  }
  if (e.group.order() != e.order)
    throw CatalogError(ErrorKind::order_mismatch, raw.line,
                       "declared order " + std::to_string(e.order) + " but generators give " +
                           std::to_string(e.group.order()));
}

}  // namespace

const CatalogEntry* Catalog::find(std::uint64_t order, std::uint64_t catalog_id) const {
  auto it = std::lower_bound(entries.begin(), entries.end(), std::pair{order, catalog_id},
                             [](const CatalogEntry& e, const std::pair<std::uint64_t, std::uint64_t>& key) {
                               return std::pair{e.order, e.catalog_id} < key;
                             });
  if (it == entries.end() || it->order != order || it->catalog_id != catalog_id) return nullptr;
  return &*it;
}

std::uint64_t Catalog::max_order() const { return entries.empty() ? 0 : entries.back().order; }

Catalog parse_catalog(std::istream& in, const ParseOptions& options) {
  Catalog cat;
  std::vector<RawEntry> raw;
  std::string text;
  std::size_t line = 0;
  bool have_header = false;
  while (std::getline(in, text)) {
    ++line;
    if (text.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json obj;
    try {
      obj = Json::parse(text);
    } catch (const Json::parse_error& err) {
      schema_error(line, std::string("malformed JSON: ") + err.what());
    }
    if (!have_header) {
      if (line != 1) schema_error(line, "the header must be the first line");
      read_header(obj, cat);
      have_header = true;
    } else {
      raw.push_back(read_record(obj, line));
    }
  }
  if (!have_header) schema_error(0, "empty catalog");

  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  for (const RawEntry& r : raw)
    if (!seen.emplace(r.entry.order, r.entry.catalog_id).second)
      throw CatalogError(ErrorKind::duplicate_id, r.line,
                         "duplicate id (" + std::to_string(r.entry.order) + ", " +
                             std::to_string(r.entry.catalog_id) + ")");

  // The first failing line wins regardless of scheduling.
  std::vector<std::exception_ptr> failures(raw.size());
  parallel_for(raw.size(), options.jobs, [&](std::size_t i) {
    try {
      realize(raw[i], options.order_cap);
    } catch (...) {
      failures[i] = std::current_exception();
    }
  });
  for (const auto& f : failures)
    if (f) std::rethrow_exception(f);

  std::map<std::uint64_t, std::uint64_t> actual;
  for (const RawEntry& r : raw) ++actual[r.entry.order];
  for (std::uint64_t m = 1; m <= cat.complete_up_to; ++m)
    if (!cat.counts.contains(m))
      schema_error(1, "complete_up_to is " + std::to_string(cat.complete_up_to) + " but no count is declared for order " +
                          std::to_string(m));
  for (const auto& [m, k] : cat.counts)
    if (actual[m] != k)
      schema_error(1, "header declares " + std::to_string(k) + " groups of order " + std::to_string(m) + ", found " +
                          std::to_string(actual[m]));

  for (RawEntry& r : raw) cat.entries.push_back(std::move(r.entry));
  std::sort(cat.entries.begin(), cat.entries.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return std::pair{a.order, a.catalog_id} < std::pair{b.order, b.catalog_id};
  });
  return cat;
}

Catalog load_catalog(const std::string& path, const ParseOptions& options) {
  if (path == "-") return parse_catalog(std::cin, options);
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::io_error, "cannot open " + path);
  return parse_catalog(in, options);
}

void serialize_catalog(const Catalog& catalog, std::ostream& out) {
  Json header;
  header["schema"] = kCatalogSchema;
  header["complete_up_to"] = catalog.complete_up_to;
  Json counts = Json::object();
  for (const auto& [m, k] : catalog.counts) counts[std::to_string(m)] = k;
  header["counts"] = counts;
  if (!catalog.provenance.empty()) header["provenance"] = catalog.provenance;
  out << header.dump() << '\n';
  for (const CatalogEntry& e : catalog.entries) {
    Json rec;
    rec["order"] = e.order;
    rec["catalog_id"] = e.catalog_id;
    rec["label"] = e.label;
    rec["degree"] = e.degree;
    Json gens = Json::array();
    for (const auto& cycles : e.generators) {
      Json g = Json::array();
      for (const Cycle& c : cycles) g.push_back(c);
      gens.push_back(g);
    }
    rec["generators"] = gens;
    out << rec.dump() << '\n';
  }
  if (!out) throw Error(ErrorKind::io_error, "failed to write catalog");
}

std::vector<const CatalogEntry*> entries_of_order(const Catalog& catalog, std::uint64_t m) {
  std::vector<const CatalogEntry*> out;
  for (const CatalogEntry& e : catalog.entries)
    if (e.order == m) out.push_back(&e);
  return out;
}

std::vector<FiniteGroup> groups_of_order(const Catalog& catalog, std::uint64_t m, bool exhaustive) {
  if (m < 1) throw Error(ErrorKind::domain_error, "order must be at least 1");
  if (exhaustive) require_complete(catalog, m, "groups of order " + std::to_string(m));
  std::vector<FiniteGroup> out;
  for (const CatalogEntry* e : entries_of_order(catalog, m)) out.push_back(e->group);
  return out;
}

void require_complete(const Catalog& catalog, std::uint64_t max_order, const std::string& purpose) {
  if (catalog.complete_up_to < max_order)
    throw Error(ErrorKind::incomplete_catalog, purpose + " needs every group of order up to " +
                                                   std::to_string(max_order) + ", catalog is complete up to " +
                                                   std::to_string(catalog.complete_up_to));
}

}  // namespace landau
