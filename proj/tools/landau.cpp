#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "landau/bounds.hpp"
#include "landau/catalog.hpp"
#include "landau/error.hpp"
#include "landau/fracsolve.hpp"
#include "landau/pipeline.hpp"
#include "landau/property_suite.hpp"

using namespace landau;

namespace {

enum Exit { ok = 0, usage = 1, catalog_error = 2, incomplete = 3, violations = 4 };

struct Args {
  unsigned jobs = 0;
  std::uint64_t index = 1;
  std::uint64_t noncentral = 1;
  std::uint64_t parts = 2;
  std::uint64_t max_k = 1;
  std::string mode = "one-class";
  std::string catalog;
  std::string format = "csv";
  std::string out;
  bool exhaustive = false;
  bool structural = false;
};

std::string join(const std::vector<std::uint64_t>& v, const char* sep = " ") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

int run_bounds(const Args& a) {
  const BoundReport ta = theoremA_bounds(a.index, a.noncentral);
  std::cout << "index " << a.index << ", non-central classes " << a.noncentral << '\n';
  std::cout << "theorem-a |G| < " << ta.bound_g << ", |N| < " << ta.bound_n << '\n';
  const auto b = lemma21_bounds(a.index, a.noncentral);
  std::cout << "part bounds";
  for (const BigInt& x : b) std::cout << ' ' << x;
  std::cout << '\n';
  if (a.noncentral == 1) {
    const BoundReport r = thm311_bound(a.index);
    std::cout << "one-class |G| < " << r.bound_g << '\n';
  }
  if (a.noncentral == 2) {
    const BoundReport r = thm322_bound(a.index);
    const IntRange n1 = thm322_n1_range(a.index);
    std::cout << "two-coprime |G| <= " << r.bound_g << '\n';
    std::cout << "n1 in [" << n1.lo << ", " << n1.hi << "]\n";
    for (std::uint64_t x = n1.lo; x <= n1.hi; ++x) {
      const IntRange n2 = thm322_n2_range(a.index, x);
      std::cout << "  n1 = " << x << ": n2 in [" << n2.lo << ", " << n2.hi << "]\n";
    }
  }
  return ok;
}

int run_solve(const Args& a) {
  const auto sols = unit_fraction_solutions(a.index, a.parts);
  for (const FractionSolution& s : sols) std::cout << join(s.parts) << '\n';
  std::cerr << sols.size() << " solutions\n";
  return ok;
}

int run_candidates(const Args& a) {
  const ClassifyMode mode = parse_mode(a.mode);
  std::vector<CandidateOrder> list;
  if (mode == ClassifyMode::one_class)
    list = a.structural ? candidate_orders_one_class_structural(a.index) : candidate_orders_one_class(a.index);
  else
    list = a.structural ? candidate_orders_two_coprime_structural(a.index) : candidate_orders_two_coprime(a.index);
  const char* names = mode == ClassifyMode::one_class ? "(z,d)" : "(n1,n2)";
  for (const CandidateOrder& c : list) {
    std::cout << c.c << ' ' << names;
    for (const auto& [x, y] : c.witnesses) std::cout << " (" << x << ',' << y << ')';
    std::cout << '\n';
  }
  return ok;
}

// Writes to --out when given, otherwise to stdout.
template <class Fn>
void with_output(const std::string& path, Fn&& fn) {
  if (path.empty()) return fn(std::cout);
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::io_error, "cannot write " + path);
  fn(f);
}

Catalog read_catalog(const Args& a) { return load_catalog(a.catalog, {a.jobs}); }

int run_classify(const Args& a) {
  const ClassifyMode mode = parse_mode(a.mode);
  const TableFormat format = parse_format(a.format);
  const Catalog cat = read_catalog(a);
  const Classification c = classify(cat, mode, a.index, {a.exhaustive, a.jobs});
  with_output(a.out, [&](std::ostream& os) { emit_table(c.rows, format, os); });
  std::size_t failed = 0;
  for (const ClassificationRow& r : c.rows) failed += !r.verified();
  std::cerr << to_string(mode) << " index " << a.index << ": " << c.group_count() << " groups, " << c.rows.size()
            << " rows; scanned orders [" << join(c.scanned_orders) << "]"
            << (a.exhaustive ? ", exhaustive" : "") << '\n';
  if (failed) {
    std::cerr << failed << " rows failed verification\n";
    return violations;
  }
  return ok;
}

int run_kpp(const Args& a) {
  const TableFormat format = parse_format(a.format);
  const Catalog cat = read_catalog(a);
  const KppClassification k = classify_kpp(cat, a.max_k, {a.exhaustive, a.jobs});
  with_output(a.out, [&](std::ostream& os) { emit_table(k.rows(), format, os); });
  for (const KppLevel& l : k.levels)
    std::cerr << "k = " << l.k << ": " << l.rows.size() << " groups, order bound " << l.bound << '\n';
  return ok;
}

int run_verify(const Args& a) {
  const Catalog cat = read_catalog(a);
  const PropertyReport report = run_property_suite(cat, {a.jobs});
  for (const PropertyResult& r : report.results) {
    std::cout << (r.ok() ? "ok   " : "FAIL ") << r.name << ": " << r.checked << " checks, " << r.violations
              << " violations\n";
    for (const std::string& e : r.examples) std::cout << "     " << e << '\n';
  }
  std::cout << cat.entries.size() << " groups, " << report.violations() << " violations\n";
  return report.ok() ? ok : violations;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::schema_mismatch:
    case ErrorKind::order_mismatch:
    case ErrorKind::duplicate_id:
    case ErrorKind::io_error: return catalog_error;
    case ErrorKind::incomplete_catalog: return incomplete;
    default: return usage;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds, class-equation searches and small-group classification for normal subgroups"};
  app.require_subcommand(1);
  Args a;
  app.add_option("-j,--jobs", a.jobs, "Worker threads (0 = all cores)");

  auto* bounds = app.add_subcommand("bounds", "Evaluate the order bounds for an index");
  bounds->add_option("--index", a.index, "Index |G:N|")->required()->check(CLI::PositiveNumber);
  bounds->add_option("--noncentral", a.noncentral, "Number of non-central G-classes in N")
      ->required()
      ->check(CLI::PositiveNumber);

  auto* solve = app.add_subcommand("solve", "List the solutions of 1/n = 1/n_1 + ... + 1/n_p");
  solve->add_option("--index", a.index, "n")->required()->check(CLI::PositiveNumber);
  solve->add_option("--parts", a.parts, "Number of unit fractions")->required()->check(CLI::PositiveNumber);

  const std::vector<std::string> modes{"one-class", "two-coprime"};
  auto* cands = app.add_subcommand("candidates", "List candidate group orders for an index");
  cands->add_option("--mode", a.mode)->required()->check(CLI::IsMember(modes));
  cands->add_option("--index", a.index)->required()->check(CLI::PositiveNumber);
  cands->add_flag("--structural", a.structural, "Apply the structural filter used when scanning");

  const std::vector<std::string> formats{"csv", "md", "markdown", "json"};
  auto* classify_cmd = app.add_subcommand("classify", "Classify (G, N) pairs from a catalog");
  classify_cmd->add_option("--mode", a.mode)->required()->check(CLI::IsMember(modes));
  classify_cmd->add_option("--index", a.index)->required()->check(CLI::PositiveNumber);
  classify_cmd->add_option("--catalog", a.catalog, "Catalog file, - for stdin")->required();
  classify_cmd->add_flag("--exhaustive", a.exhaustive, "Fail unless the catalog covers every candidate order");
  classify_cmd->add_option("--format", a.format)->check(CLI::IsMember(formats));
  classify_cmd->add_option("--out", a.out, "Output file (default stdout)");

  auto* kpp_cmd = app.add_subcommand("kpp", "Solvable groups with kpp(G) = k for k up to --max-k");
  kpp_cmd->add_option("--max-k", a.max_k)->required()->check(CLI::PositiveNumber);
  kpp_cmd->add_option("--catalog", a.catalog, "Catalog file, - for stdin")->required();
  kpp_cmd->add_flag("--exhaustive", a.exhaustive, "Fail unless the catalog covers every level's bound");
  kpp_cmd->add_option("--format", a.format)->check(CLI::IsMember(formats));
  kpp_cmd->add_option("--out", a.out, "Output file (default stdout)");

  auto* verify = app.add_subcommand("verify", "Run the property suite over a catalog");
  verify->add_option("--catalog", a.catalog, "Catalog file, - for stdin")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? ok : usage;
  }

  try {
    if (*bounds) return run_bounds(a);
    if (*solve) return run_solve(a);
    if (*cands) return run_candidates(a);
    if (*classify_cmd) return run_classify(a);
    if (*kpp_cmd) return run_kpp(a);
    if (*verify) return run_verify(a);
  } catch (const Error& e) {
    std::cerr << "landau: " << e.what() << '\n';
    return exit_code(e);
  }
  return usage;
}
