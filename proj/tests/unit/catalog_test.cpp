#include <gtest/gtest.h>

#include <set>

#include "sheafcalc/catalog.hpp"

using namespace sheafcalc;

TEST(Catalog, CategoriesAreValid) {
  std::set<std::string> names;
  for (const auto& [name, raw] : category_corpus()) {
    EXPECT_NO_THROW(FinCategory::from_raw(raw)) << name;
    EXPECT_TRUE(names.insert(name).second) << name;
  }
  EXPECT_GE(names.size(), 30u);
}

TEST(Catalog, Shapes) {
  EXPECT_EQ(FinCategory::from_raw(symmetric_group3()).arrow_count(), 6u);
  EXPECT_EQ(FinCategory::from_raw(chain_category(4)).arrow_count(), 10u);
  const auto cospan = FinCategory::from_raw(cospan_category());
  EXPECT_EQ(cospan.cod(cospan.arrow("f")), cospan.object("a"));
  EXPECT_EQ(cospan.cod(cospan.arrow("g")), cospan.object("a"));
  const auto sum = FinCategory::from_raw(disjoint_union(cyclic_group(2), walking_arrow()));
  EXPECT_EQ(sum.object_count(), 3u);
  EXPECT_TRUE(sum.find_arrow("R.u").has_value());
  EXPECT_THROW(FinCategory::from_raw(monoid_category({"1", "x"}, {{0, 1}, {1, 2}})), std::exception);
}

TEST(Catalog, RandomCategoriesAreReproducible) {
  std::mt19937 a(7), b(7);
  for (int i = 0; i < 20; ++i) {
    const auto x = FinCategory::from_raw(random_concrete_category(a, 3, 10));
    const auto y = FinCategory::from_raw(random_concrete_category(b, 3, 10));
    EXPECT_EQ(x.arrow_count(), y.arrow_count());
    EXPECT_LE(x.arrow_count(), 10u);
    EXPECT_NO_THROW(FinCategory::from_raw(random_transformation_monoid(a, 3, 7)));
    random_transformation_monoid(b, 3, 7);
  }
}

TEST(Catalog, Frames) {
  EXPECT_EQ(product_frame(chain_frame(2), chain_frame(3)).size(), 6u);
  EXPECT_EQ(glue_frame(chain_frame(3), diamond_frame()).size(), 6u);
  EXPECT_TRUE(boolean_frame(3).is_boolean());
  EXPECT_EQ(boolean_frame(3).size(), 8u);
  EXPECT_TRUE(isomorphic(product_frame(chain_frame(2), chain_frame(2)), diamond_frame()));
  std::set<std::string> names;
  for (const auto& f : frame_corpus()) {
    EXPECT_TRUE(names.insert(f.name).second) << f.name;
    EXPECT_LE(f.frame.size(), 12u);
  }
}
