#include <gtest/gtest.h>

#include "sheafcalc/catalog.hpp"
#include "sheafcalc/error.hpp"
#include "sheafcalc/locale.hpp"

using namespace sheafcalc;

namespace {

Elem at(const FiniteFrame& A, const char* name) { return *A.find(name); }

std::vector<Elem> elems(const FiniteFrame& A, std::initializer_list<const char*> names) {
  std::vector<Elem> out;
  for (const char* n : names) out.push_back(at(A, n));
  return out;
}

bool is_frame_map(const FiniteFrame& A, const FiniteFrame& B, const std::vector<Elem>& h) {
  if (h[A.bottom()] != B.bottom() || h[A.top()] != B.top()) return false;
  for (Elem a = 0; a < A.size(); ++a) {
    for (Elem b = 0; b < A.size(); ++b) {
      if (h[A.meet(a, b)] != B.meet(h[a], h[b]) || h[A.join(a, b)] != B.join(h[a], h[b])) return false;
    }
  }
  return true;
}

template <class Visit>
void for_each_map(std::size_t from, std::size_t to, Visit&& visit) {
  std::vector<Elem> m(from, 0);
  while (true) {
    visit(m);
    std::size_t i = 0;
    while (i < from && ++m[i] == to) m[i++] = 0;
    if (i == from) return;
  }
}

std::vector<NamedFrame> small_frames(std::size_t max) {
  std::vector<NamedFrame> out;
  for (auto& f : frame_corpus()) {
    if (f.frame.size() <= max) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

TEST(Nucleus, RejectsBrokenLaws) {
  const auto A = chain_frame(3);
  EXPECT_THROW(Nucleus::make(A, {0, 0, 2}), LawViolation);
  EXPECT_NE(nucleus_violation(A, std::vector<Elem>{0, 0, 2}), "");
  EXPECT_EQ(nucleus_violation(A, std::vector<Elem>{0, 2, 2}), "");
  const auto D = diamond_frame();
  // a ↦ 1, b ↦ b, 0 ↦ 0 breaks meets: j(a ∧ b) = 0 but j(a) ∧ j(b) = b.
  std::vector<Elem> m(D.size());
  for (Elem x = 0; x < D.size(); ++x) m[x] = x;
  m[at(D, "a")] = D.top();
  EXPECT_NE(nucleus_violation(D, m), "");
}

TEST(Nucleus, StandardNuclei) {
  const auto A = five_element_frame();
  const auto j = open_nucleus(A, at(A, "a"));
  EXPECT_EQ(j(A.bottom()), at(A, "b"));
  EXPECT_EQ(j(at(A, "a")), A.top());
  const auto k = closed_nucleus(A, at(A, "a"));
  EXPECT_EQ(k(A.bottom()), at(A, "a"));
  EXPECT_EQ(k(at(A, "b")), at(A, "c"));
  const auto nn = double_negation_nucleus(A);
  EXPECT_TRUE(fixset_frame(A, nn).is_boolean());
  EXPECT_EQ(fixset_frame(A, nn).size(), 4u);
  EXPECT_TRUE(j.dominates(A, Nucleus::identity(A)));
  EXPECT_FALSE(Nucleus::identity(A).dominates(A, j));
}

TEST(Filter, Generated) {
  const auto A = five_element_frame();
  const Elem c[] = {at(A, "c")};
  const auto F = filter_generated(A, c);
  for (Elem x = 0; x < A.size(); ++x) EXPECT_EQ(F.contains(x), x == at(A, "c") || x == A.top());
  EXPECT_TRUE(F.proper(A));
  EXPECT_TRUE(is_filter(A, F.members));
  const auto ab = elems(A, {"a", "b"});
  const auto G = filter_generated(A, ab);
  EXPECT_FALSE(G.proper(A));
  for (Elem x = 0; x < A.size(); ++x) EXPECT_TRUE(G.contains(x));
  const auto top = filter_generated(A, std::span<const Elem>{});
  EXPECT_TRUE(top.contains(A.top()));
  EXPECT_FALSE(top.contains(at(A, "c")));
  std::vector<bool> not_up(A.size(), false);
  not_up[at(A, "a")] = true;
  EXPECT_FALSE(is_filter(A, not_up));
}

TEST(Quotient, ThreeChain) {
  const auto A = chain_frame(3);
  const Elem m[] = {at(A, "m")};
  const auto q = quotient_by_filter(A, filter_generated(A, m));
  EXPECT_EQ(q.frame.size(), 2u);
  EXPECT_EQ(q.nucleus(at(A, "m")), A.top());
  EXPECT_EQ(q.nucleus(A.bottom()), A.bottom());
  EXPECT_EQ(q.projection[at(A, "m")], q.projection[A.top()]);
  EXPECT_TRUE(q.warnings.empty());
}

TEST(Quotient, FiveElementByCIsDiamond) {
  const auto A = five_element_frame();
  const Elem c[] = {at(A, "c")};
  const auto q = quotient_by_filter(A, filter_generated(A, c));
  EXPECT_TRUE(isomorphic(q.frame, diamond_frame()));
  EXPECT_EQ(q.nucleus, open_nucleus(A, at(A, "c")));
}

TEST(Quotient, ImproperFilterWarns) {
  const auto A = five_element_frame();
  const auto ab = elems(A, {"a", "b"});
  const auto q = quotient_by_filter(A, filter_generated(A, ab));
  EXPECT_EQ(q.frame.size(), 1u);
  EXPECT_FALSE(q.warnings.empty());
}

TEST(Quotient, UniversalProperty) {
  for (const auto& [name, A] : small_frames(5)) {
    for (Elem f = 0; f < A.size(); ++f) {
      const Elem seed[] = {f};
      const auto F = filter_generated(A, seed);
      const auto q = quotient_by_filter(A, F);
      ASSERT_TRUE(is_frame_map(A, q.frame, q.projection)) << name;
      for (Elem x = 0; x < A.size(); ++x) EXPECT_EQ(F.contains(x), q.projection[x] == q.frame.top()) << name;
      for (const auto& [bname, B] : small_frames(4)) {
        for_each_map(A.size(), B.size(), [&](const std::vector<Elem>& h) {
          if (!is_frame_map(A, B, h)) return;
          for (Elem x = 0; x < A.size(); ++x) {
            if (F.contains(x) && h[x] != B.top()) return;
          }
          // h inverts F, so it is constant on the classes of the projection.
          for (Elem x = 0; x < A.size(); ++x) {
            for (Elem y = 0; y < A.size(); ++y) {
              if (q.projection[x] == q.projection[y]) EXPECT_EQ(h[x], h[y]) << name << " -> " << bname;
            }
          }
        });
      }
    }
  }
}

TEST(LSublocale, Examples) {
  const auto A = chain_frame(3);
  const auto q = l_sublocale(A, lookup_logic("classical").axiom);
  EXPECT_EQ(q.frame.size(), 2u);
  const auto B = chain_frame(4);
  EXPECT_EQ(l_sublocale(B, lookup_logic("goedel_dummett").axiom).frame.size(), 4u);
  const auto F = five_element_frame();
  EXPECT_TRUE(isomorphic(l_sublocale(F, lookup_logic("demorgan").axiom).frame, diamond_frame()));
  EXPECT_TRUE(isomorphic(l_sublocale(F, lookup_logic("goedel_dummett").axiom).frame, diamond_frame()));
  EXPECT_THROW(l_sublocale(boolean_frame(3), parse_term("p | q | r"), 10), CapExceeded);
}

TEST(LSublocale, SatisfiesLogic) {
  for (const auto& [name, A] : frame_corpus()) {
    for (const auto& logic : registry()) {
      const auto q = l_sublocale(A, logic.axiom);
      EXPECT_TRUE(holds_in_frame(logic, q.frame).holds) << name << " " << logic.name;
      EXPECT_EQ(fixset_frame(A, q.nucleus).size(), q.frame.size()) << name;
    }
  }
}

TEST(Direct, FiveElement) {
  const auto A = five_element_frame();
  const auto dm = demorganization_direct(A);
  const auto gd = gd_sublocale_direct(A);
  EXPECT_TRUE(dm.meet_closed);
  EXPECT_TRUE(gd.meet_closed);
  EXPECT_TRUE(isomorphic(fixset_frame(A, dm.nucleus(A)), diamond_frame()));
  EXPECT_TRUE(isomorphic(fixset_frame(A, gd.nucleus(A)), diamond_frame()));
  EXPECT_FALSE(dm.members[at(A, "c")]);
  EXPECT_TRUE(dm.members[at(A, "a")]);
}

TEST(Direct, AgreesWithFilterQuotient) {
  for (const auto& [name, A] : frame_corpus()) {
    const auto dm = demorganization_direct(A);
    const auto gd = gd_sublocale_direct(A);
    EXPECT_TRUE(nucleus_discrepancies(dm.nucleus(A), l_sublocale(A, lookup_logic("demorgan").axiom).nucleus).empty()) << name;
    EXPECT_TRUE(nucleus_discrepancies(gd.nucleus(A), l_sublocale(A, lookup_logic("goedel_dummett").axiom).nucleus).empty()) << name;
  }
}

TEST(NucleusChecks, OpenNucleusOnFive) {
  const auto A = five_element_frame();
  const auto c = nucleus_checks(A, open_nucleus(A, at(A, "a")));
  EXPECT_FALSE(c.dense);
  EXPECT_TRUE(c.weakly_open);
  EXPECT_TRUE(c.implicationally_open);
  const auto d = nucleus_checks(A, double_negation_nucleus(A));
  EXPECT_TRUE(d.dense);
  EXPECT_TRUE(d.weakly_open);
}

TEST(NucleusChecks, MatchPreservationOfOperations) {
  for (const auto& [name, A] : small_frames(8)) {
    for (const auto& j : enumerate_nuclei(A)) {
      bool neg = true, imp = true;
      for (Elem a = 0; a < A.size(); ++a) {
        if (j(A.neg(a)) != A.imp(j(a), j(A.bottom()))) neg = false;
        for (Elem b = 0; b < A.size(); ++b) {
          if (j(A.imp(a, b)) != A.imp(j(a), j(b))) imp = false;
        }
      }
      const auto c = nucleus_checks(A, j);
      EXPECT_EQ(c.dense, j(A.bottom()) == A.bottom()) << name;
      EXPECT_EQ(c.weakly_open, neg) << name;
      EXPECT_EQ(c.implicationally_open, imp) << name;
      if (imp) EXPECT_TRUE(neg) << name;
    }
  }
}

TEST(EnumerateNuclei, Counts) {
  EXPECT_EQ(enumerate_nuclei(chain_frame(2)).size(), 2u);
  EXPECT_EQ(enumerate_nuclei(chain_frame(3)).size(), 4u);
  EXPECT_EQ(enumerate_nuclei(diamond_frame()).size(), 4u);
  EXPECT_THROW(enumerate_nuclei(boolean_frame(4)), CapExceeded);
}

TEST(EnumerateNuclei, MatchesExhaustiveSearch) {
  for (const auto& [name, A] : small_frames(5)) {
    std::vector<std::vector<Elem>> brute;
    for_each_map(A.size(), A.size(), [&](const std::vector<Elem>& m) {
      if (nucleus_violation(A, m).empty()) brute.push_back(m);
    });
    std::vector<std::vector<Elem>> found;
    for (const auto& j : enumerate_nuclei(A)) found.push_back(j.map());
    std::sort(brute.begin(), brute.end());
    std::sort(found.begin(), found.end());
    EXPECT_EQ(found, brute) << name;
  }
}

TEST(SiteFromFrame, ChainAndCanonicalNucleus) {
  const auto A = chain_frame(3);
  const Site site = site_from_frame(A);
  EXPECT_EQ(site.category().object_count(), 3u);
  EXPECT_EQ(site.category().arrow_count(), 6u);
  EXPECT_TRUE(site.category().find_arrow(order_arrow_name(A, at(A, "0"), at(A, "m"))).has_value());
  EXPECT_EQ(nucleus_from_topology(A, site.topology()), Nucleus::identity(A));
  // The empty sieve covers the bottom element.
  EXPECT_TRUE(site.topology().covers(empty_sieve(site.category(), site.category().object("0"))));
}

TEST(SiteFromFrame, TopologiesGiveNuclei) {
  Caps caps;
  caps.max_enum_arrows = 9;
  for (const auto& A : {chain_frame(3), diamond_frame()}) {
    const Site site = site_from_frame(A, caps);
    std::size_t count = 0;
    for (const auto& K : enumerate_topologies(site.lattice())) {
      if (!K.contains(site.topology())) continue;
      const auto j = nucleus_from_topology(A, K);
      EXPECT_EQ(nucleus_violation(A, j.map()), "");
      ++count;
    }
    EXPECT_EQ(count, enumerate_nuclei(A).size());
  }
}
