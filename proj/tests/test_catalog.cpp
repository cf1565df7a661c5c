#include <gtest/gtest.h>

#include <set>

#include "cgraph/catalog.hpp"
#include "cgraph/report.hpp"
#include "cgraph/suites.hpp"

using namespace cgraph;

TEST(Build, Examples) {
  const FiniteGroup d16 = build("D", 16);
  EXPECT_EQ(d16.order(), 16u);
  EXPECT_EQ(center(d16).size(), 2u);
  const FiniteGroup sg = build("SG16_3");
  EXPECT_EQ(sg.order(), 16u);
  EXPECT_EQ(center(sg).size(), 4u);
  const FiniteGroup z7z3 = build("Z7:Z3");
  EXPECT_EQ(z7z3.order(), 21u);
  EXPECT_EQ(center(z7z3).size(), 1u);
  EXPECT_EQ(commuting_graph(z7z3).total().value, 1);
}

TEST(Build, FamiliesAndShorthands) {
  EXPECT_EQ(build("Q", 8).order(), 8u);
  EXPECT_EQ(build("SD", 32).order(), 32u);
  EXPECT_EQ(build("S", 4).order(), 24u);
  EXPECT_EQ(build("A", 5).order(), 60u);
  EXPECT_EQ(build("Z", 9).order(), 9u);
  EXPECT_EQ(build("GL2", 3).order(), 48u);
  EXPECT_EQ(build("PSL2", 8).order(), 504u);
  EXPECT_EQ(build("D14").order(), 14u);
  EXPECT_EQ(build("Q28").order(), 28u);
  EXPECT_EQ(build("GL(2,4)").order(), 180u);
}

TEST(Build, Errors) {
  EXPECT_THROW(build("NoSuchGroup"), catalog_error);
  EXPECT_THROW(build("D", 7), catalog_error);
  EXPECT_THROW(build("Q", 10), catalog_error);
  EXPECT_THROW(build("SD", 24), catalog_error);
  EXPECT_THROW(build("S", 9), catalog_error);
  EXPECT_THROW(build("GL2", 6), catalog_error);
  EXPECT_THROW(build("PSL2", 5), catalog_error);
  EXPECT_THROW(build("X", 3), catalog_error);
}

TEST(Entries, FiltersAndOrdering) {
  EXPECT_EQ(catalog_entries(CatalogTag::PlanarList).size(), 17u);
  EXPECT_EQ(catalog_entries(CatalogTag::ToroidalList).size(), 7u);
  EXPECT_EQ(catalog_entries(CatalogTag::AcyclicList).size(), 3u);
  const auto all = catalog_entries();
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1]->name, all[i]->name);
  std::set<std::string> acyclic;
  for (auto* e : catalog_entries(CatalogTag::AcyclicList)) acyclic.insert(e->name);
  EXPECT_EQ(acyclic, (std::set<std::string>{"D8", "Q8", "S3"}));
  for (const char* required : {"S4", "S5", "GL(2,3)", "PSL(2,4)", "PSL(2,8)", "Heis(3)", "Z9:Z3", "SD32", "D30",
                               "Z3xD10", "Z5xS3", "D40", "Z2xD8", "Z2xQ8", "D24", "Z3xD8", "Z3xQ8", "Z2xD12"})
    EXPECT_NE(find_entry(required), nullptr) << required;
}

TEST(Entries, ListsAreConsistent) {
  for (const auto& e : catalog()) {
    if (e.has(CatalogTag::ToroidalList)) {
      EXPECT_FALSE(e.has(CatalogTag::PlanarList)) << e.name;
      EXPECT_FALSE(e.has(CatalogTag::AcyclicList)) << e.name;
    }
    if (e.has(CatalogTag::AcyclicList)) EXPECT_TRUE(e.has(CatalogTag::PlanarList)) << e.name;
  }
}

TEST(Entries, FamilyTagsAgreeWithExpectedGenus) {
  for (const auto& e : catalog())
    if (e.family && e.genus) EXPECT_EQ(family_genus(*e.family), *e.genus) << e.name;
}

TEST(Verify, EveryEntryPasses) {
  for (const auto& e : catalog()) {
    const auto rec = verify_entry(e);
    EXPECT_TRUE(rec.passed()) << to_json(rec).dump();
  }
}

TEST(Verify, Examples) {
  const auto sl = verify_entry(*find_entry("SL(2,3)"));
  EXPECT_TRUE(sl.passed());
  ASSERT_EQ(sl.checks.size(), 4u);
  EXPECT_EQ(sl.checks[3].actual, "0");

  const auto s5 = verify_entry(*find_entry("S5"));
  EXPECT_TRUE(s5.passed());
  EXPECT_EQ(s5.checks.back().field, "genus_lower");

  const auto m16 = verify_entry(*find_entry("M16"));
  EXPECT_TRUE(m16.passed());
}

TEST(Verify, FailuresAreRecordedNotThrown) {
  CatalogEntry wrong = *find_entry("D8");
  wrong.order = 10;
  wrong.genus = 3;
  const auto rec = verify_entry(wrong);
  EXPECT_FALSE(rec.passed());
  std::size_t failed = 0;
  for (const auto& c : rec.checks) failed += !c.passed;
  EXPECT_EQ(failed, 2u);
}

TEST(Signatures, SeparateIsomorphismClasses) {
  std::map<InvariantSignature, std::set<std::string>> by_sig;
  for (const auto& e : catalog()) by_sig[invariant_signature(e.build())].insert(e.iso_class);
  for (const auto& [sig, classes] : by_sig) EXPECT_EQ(classes.size(), 1u) << *classes.begin();
  std::set<std::string> iso;
  for (const auto& e : catalog()) iso.insert(e.iso_class);
  EXPECT_EQ(by_sig.size(), iso.size());
}

TEST(Json, CatalogExportIsStable) {
  const std::string a = catalog_json().dump(), b = catalog_json().dump();
  EXPECT_EQ(a, b);
  const json j = catalog_json();
  EXPECT_EQ(j["entries"].size(), catalog().size());
  EXPECT_EQ(j["entries"][0]["name"], catalog().front().name);
}

TEST(Json, ReportSchema) {
  const FiniteGroup g = build("Q", 16);
  const json j = to_json("Q16", g, commuting_graph(g));
  for (const char* key : {"group", "graph", "blocks", "genus", "bounds"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["group"]["order"], 16);
  EXPECT_EQ(j["group"]["center_order"], 2);
  EXPECT_EQ(j["graph"]["vertices"], 14);
  EXPECT_EQ(j["graph"]["girth"], 3);
  EXPECT_EQ(j["genus"]["kind"], "exact");
  EXPECT_EQ(j["genus"]["value"], 1);
  EXPECT_EQ(j["bounds"]["h"], 7);
  EXPECT_EQ(j["bounds"]["order_bound"]["base"], 14);

  const FiniteGroup s3 = build("S3");
  EXPECT_TRUE(to_json("S3", s3, commuting_graph(s3))["graph"]["girth"].is_null());

  const FiniteGroup s5 = build("S5");
  const json b = to_json("S5", s5, commuting_graph(s5));
  EXPECT_EQ(b["genus"]["kind"], "bounds");
  EXPECT_GE(b["genus"]["lower"].get<int>(), 2);
  EXPECT_TRUE(b["bounds"].is_null());
}

TEST(Suites, AllPass) {
  CatalogAnalysis cache;
  const auto reports = run_suite("all", cache);
  ASSERT_TRUE(reports.has_value());
  EXPECT_EQ(reports->size(), suite_names().size());
  for (const auto& r : *reports)
    for (const auto& c : r.checks) EXPECT_TRUE(c.passed) << r.suite << " / " << c.name << ": " << c.detail;
  EXPECT_FALSE(run_suite("nonsense", cache).has_value());
}
