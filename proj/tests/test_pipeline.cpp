#include <doctest.h>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "landau/error.hpp"
#include "landau/fracsolve.hpp"
#include "landau/pipeline.hpp"
#include "support.hpp"

using namespace testing;
using nlohmann::json;

namespace {

// (order, id, |N|, sizes...)
using Key = std::vector<std::uint64_t>;

std::multiset<Key> keys_of(const Classification& c) {
  std::multiset<Key> out;
  for (const ClassificationRow& r : c.rows) {
    Key k{r.group.order, r.group.catalog_id, r.subgroup_order};
    k.insert(k.end(), r.class_sizes.begin(), r.class_sizes.end());
    out.insert(k);
  }
  return out;
}

// GAP brute force over every normal subgroup of every group of order <= 100
std::map<std::pair<ClassifyMode, std::uint64_t>, std::multiset<Key>> gap_rows() {
  std::map<std::pair<ClassifyMode, std::uint64_t>, std::multiset<Key>> out;
  std::ifstream in(test_data_file("gap_classification_le100.txt"));
  REQUIRE(in);
  for (std::string line; std::getline(in, line);) {
    std::istringstream is(line);
    std::string kind;
    std::uint64_t n = 0;
    is >> kind >> n;
    Key k;
    for (std::uint64_t x; is >> x;) k.push_back(x);
    std::sort(k.begin() + 3, k.end());
    out[{kind == "ONE" ? ClassifyMode::one_class : ClassifyMode::two_coprime, n}].insert(k);
  }
  return out;
}

std::string render(const std::vector<ClassificationRow>& rows, TableFormat f) {
  std::ostringstream out;
  emit_table(rows, f, out);
  return out.str();
}

std::size_t line_count(const std::string& s) { return std::count(s.begin(), s.end(), '\n'); }

template <class Fn>
void expect_incomplete(Fn&& fn) {
  try {
    fn();
    FAIL("expected incomplete_catalog");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::incomplete_catalog);
  }
}

}  // namespace

TEST_CASE("one-class index 2 and 3 on the <= 56 fixture") {
  const Catalog& cat = catalog("catalog_le56.jsonl");
  const Classification two = classify_one_class(cat, 2, {.exhaustive = true});
  CHECK(two.group_count() == 3);
  REQUIRE(two.rows.size() == 7);
  std::map<std::string, int> per_group;
  for (const ClassificationRow& r : two.rows) {
    CHECK(r.class_sizes == std::vector<std::size_t>{2});
    CHECK(r.verified());
    ++per_group[r.group.label];
  }
  CHECK(per_group == std::map<std::string, int>{{"S3", 1}, {"D8", 3}, {"Q8", 3}});
  for (const ClassificationRow& r : two.rows)
    if (r.group.label == "S3") CHECK(r.subgroup_order == 3);

  const Classification three = classify_one_class(cat, 3, {.exhaustive = true});
  REQUIRE(three.rows.size() == 2);
  CHECK(three.rows[0].group.order == 12);
  CHECK(three.rows[0].class_sizes == std::vector<std::size_t>{3});
  CHECK(three.rows[0].subgroup_order == 4);
  CHECK(three.rows[1].group.order == 24);
  CHECK(three.rows[1].class_sizes == std::vector<std::size_t>{6});
  CHECK(three.rows[1].subgroup_order == 8);
  CHECK_FALSE(three.rows[1].subgroup_abelian);

  CHECK(classify_one_class(cat, 5, {.exhaustive = true}).rows.empty());
}

TEST_CASE("two-coprime index 1 and 2 on the <= 56 fixture") {
  const Catalog& cat = catalog("catalog_le56.jsonl");
  const Classification one = classify_two_coprime(cat, 1, {.exhaustive = true});
  REQUIRE(one.rows.size() == 1);
  CHECK(one.rows[0].group.label == "S3");
  CHECK(one.rows[0].class_sizes == std::vector<std::size_t>{2, 3});

  const Classification two = classify_two_coprime(cat, 2, {.exhaustive = true});
  CHECK(two.group_count() == 3);
  CHECK(two.rows.size() == 4);
  for (const ClassificationRow& r : two.rows) {
    CHECK((r.group.order == 12 || r.group.order == 20 || r.group.order == 24));
    CHECK(r.central_order == 1);
    CHECK(r.verified());
    REQUIRE(r.two_vertex);
    CHECK(r.two_vertex->ok());
  }
}

TEST_CASE("classification agrees with the GAP brute force on orders <= 100") {
  const Catalog& cat = catalog("catalog_le100.jsonl");
  const auto gap = gap_rows();
  for (ClassifyMode mode : {ClassifyMode::one_class, ClassifyMode::two_coprime})
    for (std::uint64_t n = 1; n <= 7; ++n) {
      INFO(to_string(mode) << " index " << n);
      const Classification c = classify(cat, mode, n);
      const auto it = gap.find({mode, n});
      CHECK(keys_of(c) == (it == gap.end() ? std::multiset<Key>{} : it->second));
      for (const ClassificationRow& r : c.rows) {
        CHECK(r.verified());
        CHECK(r.within_bounds);
        CHECK(r.in_candidates);
        CHECK(r.index == n);
        CHECK(r.vertices == r.class_sizes.size());
        std::size_t sum = r.central_order;
        for (std::size_t s : r.class_sizes) sum += s;
        CHECK(sum == r.subgroup_order);
        CHECK(r.group.order == n * r.subgroup_order);
      }
    }
}

TEST_CASE("group counts per index on orders <= 100") {
  const Catalog& cat = catalog("catalog_le100.jsonl");
  const std::map<std::uint64_t, std::size_t> one{{2, 3}, {3, 2}, {4, 21}, {5, 0}, {6, 16}, {7, 1}};
  for (const auto& [n, count] : one) CHECK(classify_one_class(cat, n).group_count() == count);
  // index 5 and 6 also have groups above order 100 (2 and 8 in total)
  const std::map<std::uint64_t, std::size_t> two{{1, 1}, {2, 3}, {3, 2}, {4, 7}, {5, 1}, {6, 7}, {7, 1}};
  for (const auto& [n, count] : two) CHECK(classify_two_coprime(cat, n).group_count() == count);
}

TEST_CASE("index 7 one-class group") {
  const Classification c = classify_one_class(catalog("catalog_le100.jsonl"), 7);
  REQUIRE(c.rows.size() == 1);
  CHECK(c.rows[0].group.order == 56);
  CHECK(c.rows[0].subgroup_order == 8);
  CHECK(c.rows[0].class_sizes == std::vector<std::size_t>{7});
  CHECK(c.rows[0].subgroup_abelian);
}

TEST_CASE("exhaustive mode needs coverage of every scanned order") {
  const Catalog& c56 = catalog("catalog_le56.jsonl");
  const Catalog& c100 = catalog("catalog_le100.jsonl");
  expect_incomplete([&] { classify_one_class(c56, 7, {.exhaustive = true}); });
  expect_incomplete([&] { classify_one_class(c100, 7, {.exhaustive = true}); });
  expect_incomplete([&] { classify_two_coprime(c100, 6, {.exhaustive = true}); });
  expect_incomplete([&] { classify_two_coprime(catalog("catalog_le12.jsonl"), 2, {.exhaustive = true}); });
  CHECK_NOTHROW(classify_two_coprime(c100, 4, {.exhaustive = true}));
  CHECK_NOTHROW(classify_one_class(c100, 6, {.exhaustive = true}));

  CHECK(scan_orders(ClassifyMode::one_class, 2) == std::vector<std::uint64_t>{6, 8});
  CHECK(scan_orders(ClassifyMode::two_coprime, 1) == std::vector<std::uint64_t>{6});
  CHECK(scan_orders(ClassifyMode::two_coprime, 2) == std::vector<std::uint64_t>{12, 20, 24});
  for (std::uint64_t n = 1; n <= 10; ++n)
    for (ClassifyMode mode : {ClassifyMode::one_class, ClassifyMode::two_coprime}) {
      const auto all = orders_of(mode == ClassifyMode::one_class ? candidate_orders_one_class(n)
                                                                 : candidate_orders_two_coprime(n));
      for (std::uint64_t m : scan_orders(mode, n)) CHECK(std::find(all.begin(), all.end(), m) != all.end());
    }
}

TEST_CASE("S3 x A gives a two-coprime row with N = S3") {
  const Catalog& cat = catalog("catalog_le100.jsonl");
  for (std::uint64_t n = 1; n <= 7; ++n) {
    INFO("index " << n);
    const FiniteGroup g = named("direct_product(symmetric(3),cyclic(" + std::to_string(n) + "))");
    bool found = false;
    for (const ClassificationRow& r : classify_group(g, {g.order(), 0, g.label()}, ClassifyMode::two_coprime, n))
      found |= r.subgroup_order == 6 && r.class_sizes == std::vector<std::size_t>{2, 3} && r.verified();
    CHECK(found);

    bool in_catalog = false;
    for (const ClassificationRow& r : classify_two_coprime(cat, n).rows)
      in_catalog |= r.group.order == 6 * n && r.subgroup_order == 6 && !r.subgroup_abelian &&
                    r.class_sizes == std::vector<std::size_t>{2, 3};
    CHECK(in_catalog);
  }
}

TEST_CASE("kpp levels") {
  const Catalog& c12 = catalog("catalog_le12.jsonl");
  const KppClassification k = classify_kpp(c12, 3, {.exhaustive = true});
  REQUIRE(k.levels.size() == 3);
  auto labels = [](const KppLevel& level) {
    std::vector<std::string> out;
    for (const KppRow& r : level.rows) out.push_back(r.group.label);
    return out;
  };
  CHECK(labels(k.levels[0]) == std::vector<std::string>{"1"});
  CHECK(labels(k.levels[1]) == std::vector<std::string>{"C2"});
  CHECK(labels(k.levels[2]) == std::vector<std::string>{"C3", "S3"});
  CHECK(k.levels[0].bound == 1);
  CHECK(k.levels[1].bound == 2);
  CHECK(k.levels[2].bound == 12);
  CHECK(k.levels[2].max_order == 6);
  CHECK(k.rows().size() == 4);

  expect_incomplete([&] { classify_kpp(c12, 4, {.exhaustive = true}); });
  try {
    classify_kpp(c12, 4, {.exhaustive = true});
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("k = 4") != std::string::npos);
  }

  const KppClassification four = classify_kpp(catalog("catalog_le100.jsonl"), 4);
  REQUIRE(four.levels.size() == 4);
  CHECK(four.levels[3].bound == 144);
  std::set<std::pair<std::uint64_t, std::uint64_t>> ids;
  for (const KppRow& r : four.levels[3].rows) ids.insert({r.group.order, r.group.catalog_id});
  // C4, C2 x C2, C6, D10, A4
  CHECK(ids == std::set<std::pair<std::uint64_t, std::uint64_t>>{{4, 1}, {4, 2}, {6, 2}, {10, 1}, {12, 3}});
  for (const char* s : {"cyclic(4)", "direct_product(cyclic(2),cyclic(2))", "cyclic(6)", "dihedral(10)",
                        "alternating(4)"})
    CHECK(kpp(named(s)) == 4);
}

TEST_CASE("table output") {
  const Catalog& cat = catalog("catalog_le56.jsonl");
  const Classification two = classify_one_class(cat, 2, {.exhaustive = true});

  const std::string empty = render({}, TableFormat::csv);
  CHECK(line_count(empty) == 1);
  CHECK(empty.rfind("index,order,catalog_id", 0) == 0);

  const std::string md = render(two.rows, TableFormat::markdown);
  // header, separator, 7 rows
  CHECK(line_count(md) == 9);

  const std::string csv = render(two.rows, TableFormat::csv);
  CHECK(line_count(csv) == 8);

  const json j = json::parse(render(two.rows, TableFormat::json));
  REQUIRE(j.is_array());
  CHECK(j.size() == 7);
  for (const json& row : j) {
    CHECK(row.at("index") == 2);
    CHECK(row.at("verified") == true);
    CHECK(row.at("class_sizes") == json::array({2}));
    CHECK(row.at("subgroup").at("order").get<int>() * 2 == row.at("group").at("order").get<int>());
  }
  CHECK(json::parse(render({}, TableFormat::json)) == json::array());

  std::ostringstream kpp_out;
  emit_table(classify_kpp(catalog("catalog_le12.jsonl"), 3).rows(), TableFormat::csv, kpp_out);
  CHECK(kpp_out.str() == "k,order,catalog_id,group\n1,1,1,1\n2,2,1,C2\n3,3,1,C3\n3,6,1,S3\n");

  CHECK(parse_format("md") == TableFormat::markdown);
  CHECK(parse_format("markdown") == TableFormat::markdown);
  CHECK(parse_format("json") == TableFormat::json);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  CHECK(parse_mode("one-class") == ClassifyMode::one_class);
  CHECK(parse_mode("two-coprime") == ClassifyMode::two_coprime);
  CHECK_THROWS_AS(parse_mode("three"), Error);
}

TEST_CASE("output is identical for any number of workers") {
  const Catalog& cat = catalog("catalog_le100.jsonl");
  for (ClassifyMode mode : {ClassifyMode::one_class, ClassifyMode::two_coprime})
    for (std::uint64_t n : {2, 4, 6}) {
      const std::string a = render(classify(cat, mode, n, {.jobs = 1}).rows, TableFormat::json);
      const std::string b = render(classify(cat, mode, n, {.jobs = 4}).rows, TableFormat::json);
      CHECK(a == b);
      CHECK(render(classify(cat, mode, n, {.jobs = 3}).rows, TableFormat::csv) ==
            render(classify(cat, mode, n, {.jobs = 1}).rows, TableFormat::csv));
    }
}
