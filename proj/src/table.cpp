#include <ostream>

#include <json.hpp>

#include "landau/error.hpp"
#include "landau/pipeline.hpp"

namespace landau {

namespace {

using Json = nlohmann::ordered_json;

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void write_rows(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& cells,
                TableFormat format, std::ostream& out) {
  if (format == TableFormat::csv) {
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << csv_field(header[i]);
    out << '\n';
    for (const auto& row : cells) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_field(row[i]);
      out << '\n';
    }
  } else {
    out << "| " << join(header, " | ") << " |\n|";
    for (std::size_t i = 0; i < header.size(); ++i) out << "---|";
    out << '\n';
    for (const auto& row : cells) out << "| " << join(row, " | ") << " |\n";
  }
}

void finish(std::ostream& out) {
  out.flush();
  if (!out) throw Error(ErrorKind::io_error, "failed to write table");
}

Json group_json(const GroupRef& g) {
  Json j;
  j["order"] = g.order;
  j["catalog_id"] = g.catalog_id;
  j["label"] = g.label;
  return j;
}

}  // namespace

TableFormat parse_format(const std::string& text) {
  if (text == "csv") return TableFormat::csv;
  if (text == "md" || text == "markdown") return TableFormat::markdown;
  if (text == "json") return TableFormat::json;
  throw Error(ErrorKind::domain_error, "unknown format \"" + text + "\"");
}

void emit_table(const std::vector<ClassificationRow>& rows, TableFormat format, std::ostream& out) {
  if (format == TableFormat::json) {
    Json arr = Json::array();
    for (const ClassificationRow& r : rows) {
      Json j;
      j["index"] = r.index;
      j["group"] = group_json(r.group);
      j["subgroup"] = {{"order", r.subgroup_order}, {"label", r.subgroup_label}, {"generators", r.subgroup_generators}};
      j["central_order"] = r.central_order;
      j["class_sizes"] = r.class_sizes;
      j["graph"] = {{"vertices", r.vertices}, {"edges", r.edges}};
      const auto v = r.violations();
      j["verified"] = v.empty();
      j["violations"] = v;
      arr.push_back(std::move(j));
    }
    out << arr.dump(2) << '\n';
    return finish(out);
  }
  const std::vector<std::string> header{"index",   "order",       "catalog_id", "group",    "subgroup_order",
                                        "subgroup", "generators", "center_in_n", "class_sizes", "graph",
                                        "verified"};
  std::vector<std::vector<std::string>> cells;
  for (const ClassificationRow& r : rows) {
    std::vector<std::string> sizes;
    for (std::size_t s : r.class_sizes) sizes.push_back(std::to_string(s));
    const auto v = r.violations();
    cells.push_back({std::to_string(r.index), std::to_string(r.group.order), std::to_string(r.group.catalog_id),
                     r.group.label, std::to_string(r.subgroup_order), r.subgroup_label,
                     join(r.subgroup_generators, " "), std::to_string(r.central_order), join(sizes, " "),
                     std::to_string(r.vertices) + "v/" + std::to_string(r.edges) + "e",
                     v.empty() ? "yes" : "no: " + join(v, "; ")});
  }
  write_rows(header, cells, format, out);
  finish(out);
}

void emit_table(const std::vector<KppRow>& rows, TableFormat format, std::ostream& out) {
  if (format == TableFormat::json) {
    Json arr = Json::array();
    for (const KppRow& r : rows) arr.push_back({{"k", r.k}, {"group", group_json(r.group)}});
    out << arr.dump(2) << '\n';
    return finish(out);
  }
  std::vector<std::vector<std::string>> cells;
  for (const KppRow& r : rows)
    cells.push_back({std::to_string(r.k), std::to_string(r.group.order), std::to_string(r.group.catalog_id),
                     r.group.label});
  write_rows({"k", "order", "catalog_id", "group"}, cells, format, out);
  finish(out);
}

}  // namespace landau
