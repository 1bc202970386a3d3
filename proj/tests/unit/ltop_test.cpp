#include <gtest/gtest.h>

#include "sheafcalc/catalog.hpp"
#include "sheafcalc/criteria.hpp"
#include "sheafcalc/error.hpp"
#include "sheafcalc/ltop.hpp"
#include "support.hpp"

using namespace sheafcalc;
using sheafcalc::testing::lattice_of;

namespace {

Sieve gen(const FinCategory& C, const char* root, std::initializer_list<const char*> arrows) {
  std::vector<ArrowId> ids;
  for (const char* a : arrows) ids.push_back(C.arrow(a));
  return generate_sieve(C, C.object(root), ids);
}

GrothendieckTopology dense_arrow_topology(std::shared_ptr<const SieveLattice> L = lattice_of(walking_arrow())) {
  const Sieve u[] = {gen(L->category(), "b", {"u"})};
  return generate_topology(L, u);
}

}  // namespace

TEST(LTopology, ClassicalOnSierpinskiIsDense) {
  const Site site = presheaf_site(lattice_of(walking_arrow()));
  const auto K = l_topology(site, lookup_logic("classical").axiom);
  EXPECT_EQ(K, dense_arrow_topology());
  EXPECT_EQ(booleanization(site), K);
  EXPECT_TRUE(validates_logic(Site(K), lookup_logic("classical")).holds);
}

TEST(LTopology, GroupoidIsAlreadyClassical) {
  const Site site = presheaf_site(lattice_of(symmetric_group3()));
  EXPECT_EQ(booleanization(site), site.topology());
  EXPECT_EQ(demorganization(site), site.topology());
}

TEST(LTopology, DeMorganOnSierpinskiIsTrivial) {
  const Site site = presheaf_site(lattice_of(walking_arrow()));
  EXPECT_EQ(demorganization(site), site.topology());
  EXPECT_EQ(l_topology(site, lookup_logic("goedel_dummett").axiom), site.topology());
}

TEST(LTopology, BooleanizationOfIdempotentMonoid) {
  auto L = lattice_of(monoid_category({"1", "e"}, {{0, 1}, {1, 1}}));
  const Site site = presheaf_site(L);
  const auto K = booleanization(site);
  const auto& C = L->category();
  EXPECT_TRUE(K.covers(gen(C, "*", {"e"})));
  EXPECT_FALSE(K.covers(empty_sieve(C, C.object("*"))));
  EXPECT_TRUE(validates_logic(Site(K), lookup_logic("classical")).holds);
}

TEST(LTopology, DeMorganGeneratorsOnCospan) {
  auto L = lattice_of(cospan_category());
  const auto& C = L->category();
  const Site site = presheaf_site(L);
  const Sieve f = gen(C, "a", {"f"});
  const Sieve fg = gen(C, "a", {"f", "g"});
  const auto gens = demorgan_generators_direct(site);
  EXPECT_NE(std::find(gens.begin(), gens.end(), fg), gens.end());
  EXPECT_TRUE(demorganization(site).covers(fg));
  EXPECT_FALSE(demorganization(site).covers(f));
  EXPECT_EQ(demorganization(site), generate_topology(L, gens));
}

TEST(LTopology, ContainsBaseAndIsIdempotent) {
  for (const auto& [name, raw] : std::vector<NamedCategory>{{"arrow", walking_arrow()},
                                                           {"cospan", cospan_category()},
                                                           {"span", span_category()}}) {
    auto L = lattice_of(raw);
    for (const auto& J : enumerate_topologies(L)) {
      const Site site(J);
      for (const auto& logic : registry()) {
        const auto KL = l_topology(site, logic.axiom);
        EXPECT_TRUE(KL.contains(J)) << name;
        EXPECT_TRUE(validates_logic(Site(KL), logic).holds) << name << " " << logic.name;
        EXPECT_EQ(l_topology(Site(KL), logic.axiom), KL) << name;
      }
    }
  }
}

TEST(Density, Examples) {
  auto L = lattice_of(walking_arrow());
  const auto trivial = trivial_topology(L);
  const auto dense = dense_arrow_topology(L);
  EXPECT_TRUE(is_dense_topology(trivial));
  EXPECT_TRUE(is_dense_topology(dense));
  EXPECT_TRUE(is_dense_over(dense, trivial));
  const auto& C = L->category();
  const Sieve bot[] = {empty_sieve(C, C.object("a"))};
  const auto collapse = generate_topology(L, bot);
  EXPECT_FALSE(is_dense_topology(collapse));
  EXPECT_FALSE(is_dense_over(collapse, trivial));
  EXPECT_TRUE(is_dense_over(collapse, collapse));
}

TEST(Density, RequiresContainment) {
  auto L = lattice_of(walking_arrow());
  EXPECT_THROW(is_dense_over(trivial_topology(L), dense_arrow_topology(L)), InputError);
  EXPECT_THROW(is_weakly_open(trivial_topology(L), dense_arrow_topology(L)), InputError);
}

TEST(Openness, OpenAndClosedSubtoposOfSierpinski) {
  auto L = lattice_of(walking_arrow());
  const auto trivial = trivial_topology(L);
  // The dense topology is the open subtopos at a.
  EXPECT_TRUE(is_weakly_open(dense_arrow_topology(L), trivial));
  EXPECT_TRUE(is_implicationally_open(dense_arrow_topology(L), trivial));
  // Its closed complement: ∅ covers a. closure(¬{u}) = {u} but ¬closure({u}) is maximal.
  const auto& C = L->category();
  const Sieve a[] = {empty_sieve(C, C.object("a"))};
  const auto closed = generate_topology(L, a);
  EXPECT_FALSE(is_weakly_open(closed, trivial));
  EXPECT_FALSE(is_implicationally_open(closed, trivial));
}

TEST(Openness, ImplicationalImpliesWeakAndMatchesSiteCondition) {
  for (const auto& [name, raw] : category_corpus()) {
    auto L = lattice_of(raw);
    if (L->category().arrow_count() > 4) continue;
    const auto tops = enumerate_topologies(L);
    for (const auto& J : tops) {
      for (const auto& K : tops) {
        if (!K.contains(J)) continue;
        const bool imp = is_implicationally_open(K, J);
        if (imp) EXPECT_TRUE(is_weakly_open(K, J)) << name;
        EXPECT_EQ(imp, implicationally_open_site_condition(K, J)) << name;
      }
    }
  }
}

TEST(Openness, OpenForDependsOnImplication) {
  auto L = lattice_of(walking_arrow());
  const auto trivial = trivial_topology(L);
  const auto dense = dense_arrow_topology(L);
  EXPECT_EQ(is_open_for(parse_term("p | ~p"), dense, trivial), is_weakly_open(dense, trivial));
  EXPECT_EQ(is_open_for(parse_term("(p -> q) | (q -> p)"), dense, trivial), is_implicationally_open(dense, trivial));
}

TEST(Maximality, ReportOnSmallSites) {
  for (const auto& raw : {walking_arrow(), cospan_category(), span_category()}) {
    const Site site = presheaf_site(lattice_of(raw));
    for (const auto& logic : registry()) {
      const auto report = l_topology_maximality_check(site, logic.axiom);
      EXPECT_TRUE(report.ok()) << logic.name << ": " << (report.mismatches.empty() ? "" : report.mismatches.front());
      EXPECT_GT(report.candidates, 0u);
      EXPECT_EQ(report.guaranteed, is_admissible(logic.axiom));
    }
  }
}

TEST(Relativization, OpenPointOfSierpinski) {
  auto L = lattice_of(walking_arrow());
  const Site site = presheaf_site(L);
  const auto K = dense_arrow_topology(L);
  for (const auto& logic : registry()) {
    const auto r = relativization_check(site, K, logic.axiom);
    EXPECT_TRUE(r.ok()) << logic.name;
  }
}

TEST(Relativization, RejectsNonOpen) {
  bool rejected = false;
  for (const auto& raw : {cospan_category(), parallel_pair(), span_category()}) {
    auto L = lattice_of(raw);
    const Site site = presheaf_site(L);
    for (const auto& K : enumerate_topologies(L)) {
      if (!is_implicationally_open(K, site.topology())) {
        EXPECT_THROW(relativization_check(site, K, lookup_logic("goedel_dummett").axiom), InputError);
        rejected = true;
      }
    }
  }
  EXPECT_TRUE(rejected);
}

TEST(DenseRestriction, DropsCollapsedObjects) {
  auto L = lattice_of(walking_arrow());
  const auto& C = L->category();
  const Sieve a[] = {empty_sieve(C, C.object("a"))};
  const auto r = dense_restriction(Site(generate_topology(L, a)));
  ASSERT_EQ(r.kept.size(), 1u);
  EXPECT_EQ(r.kept[0], C.object("b"));
  EXPECT_EQ(r.site.category().object_count(), 1u);
  EXPECT_TRUE(is_dense_topology(r.site.topology()));
}

TEST(DenseRestriction, PreservesValidity) {
  for (const auto& [name, site] : sheafcalc::testing::corpus_sites(3)) {
    const auto& C = site.category();
    bool any = false;
    for (std::size_t c = 0; c < C.object_count(); ++c) any = any || !site.topology().covers(empty_sieve(C, object_at(c)));
    if (!any) {
      EXPECT_THROW(dense_restriction(site), InputError) << name;
      continue;
    }
    const auto r = dense_restriction(site);
    for (const auto& logic : registry()) {
      EXPECT_EQ(validates_logic(site, logic).holds, validates_logic(r.site, logic).holds) << name << " " << logic.name;
    }
  }
}
