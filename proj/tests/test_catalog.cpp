#include <gtest/gtest.h>

#include <set>

#include "crflag/catalog.hpp"
#include "crflag/error.hpp"

using namespace crflag;

namespace {

std::vector<std::pair<int, int>> arrows1(const SatakeDiagram& d) {
  std::vector<std::pair<int, int>> out;
  for (auto [a, b] : d.arrows()) out.emplace_back(a + 1, b + 1);
  return out;
}

}  // namespace

TEST(Catalog, PaperForms) {
  const SatakeDiagram su13 = catalog_lookup("su", {"1", "3"});
  EXPECT_EQ(su13.graph().name(), "A3");
  EXPECT_EQ(su13.black(), NodeSet::from_labels({2}));
  EXPECT_EQ(arrows1(su13), (std::vector<std::pair<int, int>>{{1, 3}}));

  const SatakeDiagram su22 = catalog_lookup("su", {"2", "2"});
  EXPECT_TRUE(su22.black().empty());
  EXPECT_EQ(arrows1(su22), (std::vector<std::pair<int, int>>{{1, 3}}));

  const SatakeDiagram slh = catalog_lookup("sl_h", {"2"});
  EXPECT_EQ(slh.graph().name(), "A3");
  EXPECT_EQ(slh.black(), NodeSet::from_labels({1, 3}));
  EXPECT_TRUE(slh.arrows().empty());
}

TEST(Catalog, ClassicalShapes) {
  EXPECT_EQ(catalog_lookup("su", {"2", "5"}).black(), NodeSet::from_labels({3, 4}));
  EXPECT_EQ(arrows1(catalog_lookup("su", {"2", "5"})), (std::vector<std::pair<int, int>>{{1, 6}, {2, 5}}));
  EXPECT_EQ(catalog_lookup("su", {"0", "3"}).black(), NodeSet::from_labels({1, 2}));

  const SatakeDiagram so25 = catalog_lookup("so", {"2", "5"});
  EXPECT_EQ(so25.graph().name(), "B3");
  EXPECT_EQ(so25.black(), NodeSet::from_labels({3}));

  const SatakeDiagram so35 = catalog_lookup("so", {"3", "5"});
  EXPECT_EQ(so35.graph().name(), "D4");
  EXPECT_EQ(arrows1(so35), (std::vector<std::pair<int, int>>{{3, 4}}));

  EXPECT_EQ(catalog_lookup("so", {"2", "6"}).black(), NodeSet::from_labels({3, 4}));
  EXPECT_EQ(catalog_lookup("so_star", {"8"}).black(), NodeSet::from_labels({1, 3}));
  const SatakeDiagram so10 = catalog_lookup("so_star", {"10"});
  EXPECT_EQ(so10.black(), NodeSet::from_labels({1, 3}));
  EXPECT_EQ(arrows1(so10), (std::vector<std::pair<int, int>>{{4, 5}}));

  EXPECT_EQ(catalog_lookup("sp", {"1", "2"}).black(), NodeSet::from_labels({1, 3}));
  EXPECT_EQ(catalog_lookup("sp", {"2", "2"}).black(), NodeSet::from_labels({1, 3}));
  EXPECT_TRUE(catalog_lookup("sp_r", {"3"}).black().empty());
}

TEST(Catalog, ComplexFormsUsePrimedLabels) {
  const SatakeDiagram c = catalog_lookup("complex", {"B", "2"});
  EXPECT_EQ(c.graph().name(), "B2+B2");
  EXPECT_EQ(c.labels(), (std::vector<std::string>{"1", "2", "1'", "2'"}));
  EXPECT_EQ(arrows1(c), (std::vector<std::pair<int, int>>{{1, 3}, {2, 4}}));
}

TEST(Catalog, ExceptionalTableRecords) {
  const std::string_view table = exceptional_table();
  std::size_t lines = 0;
  for (char ch : table) lines += ch == '\n';
  EXPECT_EQ(lines, 12u);
  EXPECT_EQ(catalog_family("exc", 8).size(), 12u);
  const SatakeDiagram e2 = catalog_lookup("exc", {"EII"});
  EXPECT_EQ(arrows1(e2), (std::vector<std::pair<int, int>>{{1, 6}, {3, 5}}));
  EXPECT_EQ(catalog_lookup("exc", {"FII"}).black(), NodeSet::from_labels({1, 2, 3}));
}

TEST(Catalog, RejectsBadRequests) {
  EXPECT_THROW(catalog_lookup("su", {"1"}), OutOfRange);
  EXPECT_THROW(catalog_lookup("su", {"1", "x"}), OutOfRange);
  EXPECT_THROW(catalog_lookup("su", {"0", "1"}), OutOfRange);
  EXPECT_THROW(catalog_lookup("so", {"1", "2"}), OutOfRange);
  EXPECT_THROW(catalog_lookup("so", {"3", "3"}), OutOfRange);
  EXPECT_THROW(catalog_lookup("so_star", {"6"}), OutOfRange);
  EXPECT_THROW(catalog_lookup("compact", {"D", "3"}), OutOfRange);
  EXPECT_THROW(catalog_lookup("exc", {"EX"}), OutOfRange);
  EXPECT_THROW(catalog_lookup("sl", {"3"}), UnknownForm);
  EXPECT_THROW(catalog_family("nope", 3), UnknownForm);
}

TEST(Catalog, FamilyParametersAreAdmissible) {
  const auto su = catalog_family("su", 3);
  std::set<std::string> params;
  for (const auto& e : su) params.insert(e.params);
  EXPECT_EQ(params, (std::set<std::string>{"1;1", "1;2", "1;3", "2;2"}));
  for (const auto& e : catalog_forms(8)) {
    EXPECT_LE(e.rank, 8);
    EXPECT_FALSE(e.diagram.name().empty());
  }
}

TEST(Catalog, FormsAreSortedByName) {
  const auto forms = catalog_forms(4);
  for (std::size_t i = 1; i < forms.size(); ++i) EXPECT_LE(forms[i - 1].diagram.name(), forms[i].diagram.name());
}
