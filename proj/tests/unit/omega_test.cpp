#include <gtest/gtest.h>

#include "sheafcalc/catalog.hpp"
#include "sheafcalc/omega.hpp"
#include "support.hpp"

using namespace sheafcalc;
using sheafcalc::testing::lattice_of;

namespace {

struct Sierpinski {
  std::shared_ptr<const SieveLattice> L = lattice_of(walking_arrow());
  Site site = presheaf_site(L);
  const FinCategory& C = L->category();
  ObjectId b = C.object("b");
  Sieve u = generate_sieve(C, b, std::vector<ArrowId>{C.arrow("u")});
};

}  // namespace

TEST(Omega, NegationAndJoinOnSierpinski) {
  Sierpinski s;
  EXPECT_TRUE(omega_not(s.site, s.u).empty());
  EXPECT_EQ(omega_join(s.site, s.u, omega_bottom(s.site, s.b)), s.u);
  EXPECT_NE(omega_join(s.site, s.u, omega_not(s.site, s.u)), omega_top(s.site, s.b));
  EXPECT_EQ(omega_implies(s.site, s.u, omega_bottom(s.site, s.b)), omega_not(s.site, s.u));
}

TEST(Omega, AxiomValuesOnSierpinski) {
  Sierpinski s;
  EXPECT_EQ(eval_term_omega(s.site, s.b, parse_term("p | ~p"), {{"p", s.u}}), s.u);
  EXPECT_EQ(eval_term_omega(s.site, s.b, parse_term("~p | ~~p"), {{"p", s.u}}), omega_top(s.site, s.b));
  EXPECT_EQ(eval_term_omega(s.site, s.b, parse_term("~~p"), {{"p", s.u}}), omega_top(s.site, s.b));
}

TEST(Omega, BottomOfDenseTopology) {
  Sierpinski s;
  const Site dense(generate_topology(s.L, std::vector<Sieve>{s.u}));
  EXPECT_TRUE(omega_bottom(dense, s.b).empty());
  EXPECT_EQ(closure(dense.topology(), s.u), omega_top(dense, s.b));
  EXPECT_EQ(closed_sieves(dense.topology(), s.b).size(), 2u);
}

TEST(Omega, RejectsOpenSieves) {
  Sierpinski s;
  const Site dense(generate_topology(s.L, std::vector<Sieve>{s.u}));
  EXPECT_THROW(omega_meet(dense, s.u, s.u), InputError);
}

TEST(Validity, ClassicalFailsOnSierpinskiWithWitness) {
  Sierpinski s;
  const auto v = validates_logic(s.site, lookup_logic("classical"));
  ASSERT_FALSE(v.holds);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(v.witness->object, s.b);
  ASSERT_EQ(v.witness->assignment.size(), 1u);
  EXPECT_EQ(v.witness->assignment[0].second, s.u);
  EXPECT_EQ(to_string(s.site, *v.witness), "at 'b': p = {u}");
}

TEST(Validity, HornSequentsOnSierpinski) {
  Sierpinski s;
  EXPECT_TRUE(holds_internally(s.site, parse_sequent("x & y = 0 |- y = y & ~x")).holds);
  EXPECT_FALSE(holds_internally(s.site, parse_sequent("|- 1 = x | ~x")).holds);
  EXPECT_TRUE(validates_logic(s.site, lookup_logic("demorgan")).holds);
  EXPECT_TRUE(validates_logic(s.site, lookup_logic("goedel_dummett")).holds);
}

TEST(Validity, GroupoidsAreBoolean) {
  for (const auto& raw : {cyclic_group(2), cyclic_group(3), symmetric_group3()}) {
    EXPECT_TRUE(validates_logic(presheaf_site(lattice_of(raw)), lookup_logic("classical")).holds);
  }
}

TEST(SubobjectFrame, Examples) {
  Sierpinski s;
  EXPECT_TRUE(isomorphic(subobject_frame(s.site, s.b), chain_frame(3)));
  auto L = lattice_of(cospan_category());
  const auto cospan = subobject_frame(presheaf_site(L), L->category().object("a"));
  EXPECT_TRUE(isomorphic(cospan, five_element_frame()));
  EXPECT_EQ(cospan.meet(*cospan.find("{f}"), *cospan.find("{g}")), *cospan.find("{}"));
}

// The fiber tables come from the sieve formulas; the subobject frame only
// from the inclusion order. They must agree.
TEST(SubobjectFrame, AgreesWithFiberOperations) {
  for (const auto& [name, site] : sheafcalc::testing::corpus_sites(4)) {
    const auto& C = site.category();
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      const OmegaFiber fiber(site, object_at(c));
      const FiniteFrame A = subobject_frame(site, object_at(c));
      ASSERT_EQ(fiber.size(), A.size()) << name;
      std::vector<Elem> to(fiber.size());
      for (std::size_t i = 0; i < fiber.size(); ++i) to[i] = *A.find(to_string(C, fiber.element(i)));
      for (std::size_t i = 0; i < fiber.size(); ++i) {
        EXPECT_EQ(to[fiber.neg(i)], A.neg(to[i])) << name;
        for (std::size_t j = 0; j < fiber.size(); ++j) {
          EXPECT_EQ(to[fiber.meet(i, j)], A.meet(to[i], to[j])) << name;
          EXPECT_EQ(to[fiber.join(i, j)], A.join(to[i], to[j])) << name;
          EXPECT_EQ(to[fiber.imp(i, j)], A.imp(to[i], to[j])) << name;
        }
      }
    }
  }
}

TEST(HeytingLaws, CorpusSites) {
  for (const auto& [name, site] : sheafcalc::testing::corpus_sites(4)) {
    for (std::size_t c = 0; c < site.category().object_count(); ++c) {
      const auto failures = sheafcalc::testing::heyting_law_failures(site, object_at(c));
      EXPECT_TRUE(failures.empty()) << name << ": " << (failures.empty() ? "" : failures.front());
    }
  }
}

// Internal validity is validity in every fiber: compare against frame validity
// of the subobject frames.
TEST(Validity, EqualsValidityInEveryFiber) {
  for (const auto& [name, site] : sheafcalc::testing::corpus_sites(3)) {
    for (const auto& logic : registry()) {
      bool every = true;
      for (std::size_t c = 0; c < site.category().object_count(); ++c) {
        every = every && holds_in_frame(logic, subobject_frame(site, object_at(c))).holds;
      }
      EXPECT_EQ(validates_logic(site, logic).holds, every) << name << "/" << logic.name;
    }
  }
}
