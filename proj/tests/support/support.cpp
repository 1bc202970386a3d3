#include "support.hpp"

#include "sheafcalc/ltop.hpp"

namespace sheafcalc::testing {

std::shared_ptr<const SieveLattice> lattice_of(const RawCategory& raw, const Caps& caps) {
  return make_lattice(FinCategory::from_raw(raw), caps);
}

std::vector<NamedSite> corpus_sites(std::size_t enumerate_up_to) {
  std::vector<NamedSite> out;
  for (const auto& [name, raw] : category_corpus()) {
    auto lattice = lattice_of(raw);
    const auto& C = lattice->category();
    const Site presheaf = presheaf_site(lattice);
    out.push_back({name + "/trivial", presheaf});
    out.push_back({name + "/stably-nonempty", Site(booleanization(presheaf))});
    std::vector<Sieve> nonempty;
    for (std::size_t c = 0; c < C.object_count(); ++c) {
      for (const auto& S : lattice->sieves(object_at(c))) {
        if (!S.empty()) nonempty.push_back(S);
      }
    }
    out.push_back({name + "/nonempty", Site(generate_topology(lattice, nonempty))});
    if (C.arrow_count() <= enumerate_up_to) {
      std::size_t i = 0;
      for (const auto& K : enumerate_topologies(lattice)) out.push_back({name + "/enum" + std::to_string(i++), Site(K)});
    }
  }
  return out;
}

std::vector<std::string> heyting_law_failures(const Site& site, ObjectId c) {
  const auto& C = site.category();
  const OmegaFiber fiber(site, c);
  const std::size_t n = fiber.size();
  std::vector<std::string> failures;
  auto fail = [&](const std::string& law, std::initializer_list<std::size_t> at) {
    std::string s = law + " at " + C.name(c) + ":";
    for (auto i : at) s += " " + to_string(C, fiber.element(i));
    failures.push_back(s);
  };
  auto le = [&](std::size_t a, std::size_t b) { return fiber.element(a).subset_of(fiber.element(b)); };
  auto b0 = fiber.bottom(), b1 = fiber.top();
  for (std::size_t a = 0; a < n; ++a) {
    if (!le(b0, a) || !le(a, b1)) fail("bounds", {a});
    if (fiber.meet(a, a) != a || fiber.join(a, a) != a) fail("idempotence", {a});
    if (fiber.neg(a) != fiber.imp(a, b0)) fail("negation is a => 0", {a});
    if (!is_closed(site.topology(), fiber.element(a))) fail("element not closed", {a});
    for (std::size_t b = 0; b < n; ++b) {
      if (fiber.meet(a, b) != fiber.meet(b, a) || fiber.join(a, b) != fiber.join(b, a)) fail("commutativity", {a, b});
      if (fiber.meet(a, fiber.join(a, b)) != a || fiber.join(a, fiber.meet(a, b)) != a) fail("absorption", {a, b});
      if (le(a, b) != (fiber.meet(a, b) == a)) fail("order agrees with meet", {a, b});
      if (!le(a, fiber.join(a, b)) || !le(fiber.meet(a, b), a)) fail("bounds of meet and join", {a, b});
      for (std::size_t x = 0; x < n; ++x) {
        if (fiber.meet(a, fiber.meet(b, x)) != fiber.meet(fiber.meet(a, b), x)) fail("meet associativity", {a, b, x});
        if (fiber.join(a, fiber.join(b, x)) != fiber.join(fiber.join(a, b), x)) fail("join associativity", {a, b, x});
        if (le(fiber.meet(x, a), b) != le(x, fiber.imp(a, b))) fail("residuation", {x, a, b});
      }
    }
  }
  // Naturality: f* commutes with every operation.
  for (ArrowId f : C.fan_in(c)) {
    const ObjectId d = C.dom(f);
    auto pb = [&](std::size_t i) { return pullback_sieve(C, f, fiber.element(i)); };
    if (pullback_sieve(C, f, fiber.element(b0)) != omega_bottom(site, d)) fail("bottom not natural", {});
    if (pullback_sieve(C, f, fiber.element(b1)) != omega_top(site, d)) fail("top not natural", {});
    for (std::size_t a = 0; a < n; ++a) {
      if (pb(fiber.neg(a)) != omega_not(site, pb(a))) fail("negation not natural", {a});
      for (std::size_t b = 0; b < n; ++b) {
        if (pb(fiber.meet(a, b)) != omega_meet(site, pb(a), pb(b))) fail("meet not natural", {a, b});
        if (pb(fiber.join(a, b)) != omega_join(site, pb(a), pb(b))) fail("join not natural", {a, b});
        if (pb(fiber.imp(a, b)) != omega_implies(site, pb(a), pb(b))) fail("implication not natural", {a, b});
      }
    }
  }
  return failures;
}

std::vector<std::string> horn_battery() {
  return {
      "p | ~p",
      "~p | ~~p",
      "(p -> q) | (q -> p)",
      "(~p -> q | r) -> (~p -> q) | (~p -> r)",
      "~~p -> p",
      "p -> ~~p",
      "(p -> q) -> ~q -> ~p",
      "x & y = 0 |- y = y & ~x",
      "x | y = 1 |- x = 1",
      "x & y = x |- x -> y = 1",
      "~x = 0 |- x = 1",
      "x | ~x = 1, y | ~y = 1 |- (x & y) | ~(x & y) = 1",
      "p -> q = 1, q -> p = 1 |- p = q",
      "~~x = 1 |- ~x | ~~x = 1",
  };
}

Term random_term(std::mt19937& rng, std::size_t depth) {
  static const char* vars[] = {"p", "q", "r"};
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 7);
  switch (pick(rng)) {
    case 0: return Term::var(vars[std::uniform_int_distribution<int>(0, 2)(rng)]);
    case 1: return std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? Term::zero() : Term::var("p");
    case 2: return std::uniform_int_distribution<int>(0, 3)(rng) == 0 ? Term::one() : Term::var("q");
    case 3: return Term::negation(random_term(rng, depth - 1));
    case 4: return Term::conj(random_term(rng, depth - 1), random_term(rng, depth - 1));
    case 5: return Term::disj(random_term(rng, depth - 1), random_term(rng, depth - 1));
    default: return Term::implies(random_term(rng, depth - 1), random_term(rng, depth - 1));
  }
}

}  // namespace sheafcalc::testing
