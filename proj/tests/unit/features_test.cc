#include <doctest.h>

#include <set>

#include "builders.h"
#include "tura/errors.h"
#include "tura/features.h"
#include "tura/synthetic.h"

using namespace tura;

namespace {

FeatureMatrix small_matrix() {
  FeatureMatrix m;
  m.schema = schema_for(GroupSet{FeatureGroup::DISCO});
  for (int i = 0; i < 4; ++i) {
    FeatureRow r;
    r.doc_id = "d" + std::to_string(i);
    r.level = level_from_ordinal(i % 3);
    r.values = {1.0 * i, 0.5, 0.25 * i, 1.0 / 3.0};
    r.absent = {0, 0, 0, 0};
    m.rows.push_back(r);
  }
  m.rows[1].absent[2] = 1;
  m.rows[1].values[2] = 0.0;
  return m;
}

}  // namespace

TEST_CASE("group parsing") {
  CHECK(GroupSet::parse("ALL") == GroupSet::linguistic());
  CHECK(GroupSet::parse("TRAD,LXSM").to_string() == "TRAD,LXSM");
  CHECK(GroupSet::parse("LXSM,TRAD").to_string() == "TRAD,LXSM");
  CHECK(GroupSet::parse("SYN").contains(FeatureGroup::SYNX));
  CHECK_FALSE(GroupSet::linguistic().contains(FeatureGroup::HYBRID));
  CHECK_THROWS_AS(GroupSet::parse("TRAD,NOPE"), ConfigError);
  CHECK_THROWS_AS(GroupSet::parse(""), ConfigError);
}

TEST_CASE("schema names are unique, prefixed and grouped in canonical order") {
  const auto& s = full_schema();
  std::set<std::string> names;
  int last_group = -1;
  for (const auto& f : s.features) {
    CHECK(names.insert(f.name).second);
    CHECK(f.name.rfind(std::string(group_name(f.group)) + ".", 0) == 0);
    CHECK(static_cast<int>(f.group) >= last_group);
    last_group = static_cast<int>(f.group);
  }
  CHECK(schema_for(GroupSet{FeatureGroup::TRAD}).size() == 7);
  CHECK(schema_for(GroupSet{FeatureGroup::HYBRID}).size() == 3);
  CHECK(s.index_of("TRAD.atesman") == std::optional<std::size_t>(0));
  CHECK(s.version == kSchemaVersion);
}

TEST_CASE("matrix csv round trips including masked cells") {
  const auto m = small_matrix();
  const auto csv = format_matrix_csv(m);
  CHECK(csv.find("d1,INT,1,0.5,,") != std::string::npos);
  CHECK(parse_matrix_csv(csv) == m);
}

TEST_CASE("matrix csv columns are remapped by name") {
  const std::string csv =
      "doc_id,level,DISCO.unique_entity_ratio,TRAD.atesman\n"
      "a,ELE,0.5,70\n";
  const auto m = parse_matrix_csv(csv);
  REQUIRE(m.schema.size() == 2);
  CHECK(m.schema.features[0].name == "TRAD.atesman");
  CHECK(m.rows[0].values == std::vector<double>{70, 0.5});
}

TEST_CASE("malformed matrices are rejected") {
  CHECK_THROWS_AS(parse_matrix_csv("doc_id,level,TRAD.bogus\n"), SchemaError);
  CHECK_THROWS_AS(parse_matrix_csv("id,level\n"), SchemaError);
  CHECK_THROWS_AS(parse_matrix_csv("doc_id,level,TRAD.atesman,TRAD.atesman\n"), SchemaError);
  CHECK_THROWS_AS(parse_matrix_csv("doc_id,level,TRAD.atesman\na,XYZ,1\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_csv("doc_id,level,TRAD.atesman\na,ELE,abc\n"), ParseError);
  CHECK_THROWS_AS(parse_matrix_csv("doc_id,level,TRAD.atesman\na,ELE\n"), ParseError);
}

TEST_CASE("imputation uses training rows only") {
  const auto m = small_matrix();
  const std::vector<std::size_t> train{0, 2};
  const std::vector<std::size_t> apply{1};
  const auto rows = impute(m, train, apply);
  // Training values of column 2: 0 and 0.5.
  CHECK(rows[0].values[2] == doctest::Approx(0.25));
  CHECK(rows[0].absent[2] == 0);
  const auto all = Imputer::fit(m);
  CHECK(all.means()[2] == doctest::Approx((0.0 + 0.5 + 0.75) / 3.0));
}

TEST_CASE("a column masked in every training row imputes zero with a warning") {
  auto m = small_matrix();
  for (auto& r : m.rows) r.absent[0] = 1;
  std::vector<std::string> warnings;
  const std::vector<std::size_t> rows{0, 1};
  const auto out = impute(m, rows, rows, &warnings);
  CHECK(out[0].values[0] == 0.0);
  REQUIRE(warnings.size() == 1);
  CHECK(warnings[0].find("DISCO.entities_per_sentence") != std::string::npos);
}

TEST_CASE("select_groups keeps schema order") {
  FeatureMatrix m;
  m.schema = schema_for(GroupSet{FeatureGroup::TRAD, FeatureGroup::DISCO});
  FeatureRow r;
  r.doc_id = "x";
  r.values.assign(m.schema.size(), 1.0);
  r.absent.assign(m.schema.size(), 0);
  r.values[0] = 42;
  m.rows.push_back(r);
  const auto t = select_groups(m, GroupSet{FeatureGroup::TRAD});
  CHECK(t.schema.size() == 7);
  CHECK(t.rows[0].values[0] == 42);
  CHECK(t.has_group(FeatureGroup::TRAD));
  CHECK_FALSE(t.has_group(FeatureGroup::DISCO));
}

TEST_CASE("extract_all is independent of jobs and masks constituency depth without trees") {
  const auto plans = synthetic::separable_plan(2);
  synthetic::Options options;
  const auto docs = synthetic::generate(plans, options);
  FeatureConfig config;
  const GroupSet groups{FeatureGroup::TRAD, FeatureGroup::SYNX, FeatureGroup::MORPH,
                        FeatureGroup::DISCO};
  const auto a = extract_all(docs, config, groups, 1);
  const auto b = extract_all(docs, config, groups, 3);
  CHECK(a.matrix == b.matrix);
  CHECK(a.matrix.rows.size() == docs.size());
  CHECK(a.info.docs_without_trees == docs.size());
  const auto col = a.matrix.schema.index_of("SYNX.mean_const_depth");
  REQUIRE(col);
  for (const auto& r : a.matrix.rows) CHECK(r.absent[*col] == 1);
  CHECK(a.matrix.has_masked());
}

TEST_CASE("extract_all reports every failing document") {
  auto docs = synthetic::generate(synthetic::separable_plan(1), {});
  docs[0].sentences.clear();
  docs[2].sentences.clear();
  try {
    extract_all(docs, FeatureConfig{}, GroupSet{FeatureGroup::TRAD});
    FAIL("expected Error");
  } catch (const Error& e) {
    const std::string msg = e.what();
    CHECK(msg.find(docs[0].doc_id) != std::string::npos);
    CHECK(msg.find(docs[2].doc_id) != std::string::npos);
  }
  CHECK_THROWS_AS(extract_all(docs, FeatureConfig{}, GroupSet{FeatureGroup::HYBRID}), Error);
}

TEST_CASE("lexicon-free extraction of LXSM is a config error") {
  const auto docs = synthetic::generate(synthetic::separable_plan(1), {});
  CHECK_THROWS_AS(extract_all(docs, FeatureConfig{}, GroupSet{FeatureGroup::LXSM}), ConfigError);
}
