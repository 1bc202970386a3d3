#include "sheafcalc/ltop.hpp"

#include <set>

#include "sheafcalc/criteria.hpp"
#include "sheafcalc/error.hpp"

namespace sheafcalc {

std::vector<Sieve> l_generators(const Site& site, const Term& phi) {
  const auto& C = site.category();
  const auto context = free_variables(phi);
  const CompiledTerm program(phi, context);
  const std::size_t max_tuples = site.lattice()->caps().max_assignments;
  std::vector<Sieve> out;
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const OmegaFiber fiber(site, object_at(c));
    std::vector<std::size_t> carrier(fiber.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) carrier[i] = i;
    std::vector<bool> seen(fiber.size(), false);
    for_each_assignment<std::size_t>(carrier, context.size(), max_tuples, [&](std::span<const std::size_t> v) {
      seen[program.evaluate(fiber, v)] = true;
      return true;
    });
    for (std::size_t i = 0; i < seen.size(); ++i) {
      if (seen[i]) out.push_back(fiber.element(i));
    }
  }
  return out;
}

GrothendieckTopology l_topology(const Site& site, const Term& phi) {
  const auto gens = l_generators(site, phi);
  return generate_topology(site.topology(), gens);
}

GrothendieckTopology booleanization(const Site& site) { return l_topology(site, lookup_logic("classical").axiom); }

GrothendieckTopology demorganization(const Site& site) { return l_topology(site, lookup_logic("demorgan").axiom); }

std::vector<Sieve> demorgan_generators_direct(const Site& site) {
  const auto& C = site.category();
  std::set<Sieve> out;
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const auto obj = object_at(c);
    const auto fan = C.fan_in(obj);
    for (const auto& R : site.lattice()->sieves(obj)) {
      SieveMask m = 0;
      for (std::size_t p = 0; p < fan.size(); ++p) {
        const Sieve pb = pullback_sieve(C, fan[p], R);
        if (pb.empty() || is_stably_nonempty(C, pb)) m |= SieveMask{1} << p;
      }
      out.insert(Sieve(obj, m));
    }
  }
  return {out.begin(), out.end()};
}

bool is_dense_topology(const GrothendieckTopology& J) {
  const auto& C = J.category();
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    if (J.covers(empty_sieve(C, object_at(c)))) return false;
  }
  return true;
}

namespace {

void require_contains(const GrothendieckTopology& K, const GrothendieckTopology& J) {
  if (K.lattice() != J.lattice()) throw InputError("topologies are defined over different sieve lattices");
  if (!K.contains(J)) throw InputError("K does not contain J");
}

}  // namespace

bool is_dense_over(const GrothendieckTopology& K, const GrothendieckTopology& J) {
  require_contains(K, J);
  const auto& C = J.category();
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const Sieve e = empty_sieve(C, object_at(c));
    if (closure(K, e) != closure(J, e)) return false;
  }
  return true;
}

bool is_weakly_open(const GrothendieckTopology& K, const GrothendieckTopology& J) {
  require_contains(K, J);
  const Site sj(J), sk(K);
  const auto& C = J.category();
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    for (const auto& S : closed_sieves(J, object_at(c))) {
      if (closure(K, omega_not(sj, S)) != omega_not(sk, closure(K, S))) return false;
    }
  }
  return true;
}

bool is_implicationally_open(const GrothendieckTopology& K, const GrothendieckTopology& J) {
  require_contains(K, J);
  const Site sj(J), sk(K);
  const auto& C = J.category();
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const auto closed = closed_sieves(J, object_at(c));
    for (const auto& S : closed) {
      for (const auto& T : closed) {
        if (closure(K, omega_implies(sj, S, T)) != omega_implies(sk, closure(K, S), closure(K, T))) return false;
      }
    }
  }
  return true;
}

bool implicationally_open_site_condition(const GrothendieckTopology& K, const GrothendieckTopology& J) {
  require_contains(K, J);
  const Site sj(J);
  const auto& C = J.category();
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const auto obj = object_at(c);
    const auto closed = closed_sieves(J, obj);
    for (const auto& S : closed) {
      for (const auto& T : closed) {
        bool hypothesis = true;
        for (ArrowId f : C.fan_in(obj)) {
          if (K.covers(pullback_sieve(C, f, S)) && !K.covers(pullback_sieve(C, f, T))) {
            hypothesis = false;
            break;
          }
        }
        if (hypothesis && !K.covers(omega_implies(sj, S, T))) return false;
      }
    }
  }
  return true;
}

bool is_open_for(const Term& phi, const GrothendieckTopology& K, const GrothendieckTopology& J) {
  return uses_implication(phi) ? is_implicationally_open(K, J) : is_weakly_open(K, J);
}

MaximalityReport l_topology_maximality_check(const Site& site, const Term& phi) {
  MaximalityReport report{l_topology(site, phi), 0, {}, is_admissible(phi)};
  const auto& J = site.topology();
  const auto& C = site.category();
  const LogicSpec logic = custom_logic("phi", phi);
  for (const auto& K : enumerate_topologies(site.lattice())) {
    if (!K.contains(J) || !is_open_for(phi, K, J)) continue;
    ++report.candidates;
    const bool above = K.contains(report.l_topology);
    const bool satisfies = validates_logic(Site(K), logic).holds;
    if (above != satisfies) {
      std::string covers;
      for (const auto& S : K.all_covering_sieves()) covers += " " + C.name(S.root()) + ":" + to_string(C, S);
      report.mismatches.push_back(std::string(above ? "contains" : "does not contain") +
                                  " the L-topology but " + (satisfies ? "satisfies" : "does not satisfy") +
                                  " the axiom; K covers" + covers);
    }
  }
  return report;
}

RelativizationReport relativization_check(const Site& site, const GrothendieckTopology& K, const Term& phi) {
  if (!is_open_for(phi, K, site.topology())) {
    throw InputError(std::string("K is not ") + (uses_implication(phi) ? "implicationally" : "weakly") +
                     " open over J");
  }
  return RelativizationReport{l_topology(Site(K), phi), join(K, l_topology(site, phi))};
}

Restriction dense_restriction(const Site& site) {
  const auto& C = site.category();
  const auto& J = site.topology();
  std::vector<ObjectId> kept;
  std::vector<bool> keep(C.object_count(), false);
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    if (!J.covers(empty_sieve(C, object_at(c)))) {
      kept.push_back(object_at(c));
      keep[c] = true;
    }
  }
  if (kept.empty()) throw InputError("dense restriction is empty: every object is covered by the empty sieve");

  const RawCategory full = C.to_raw();
  RawCategory sub;
  for (ObjectId c : kept) sub.objects.push_back(C.name(c));
  auto kept_arrow = [&](ArrowId f) { return keep[index(C.dom(f))] && keep[index(C.cod(f))]; };
  for (std::size_t f = 0; f < C.arrow_count(); ++f) {
    if (kept_arrow(arrow_at(f))) {
      sub.arrows.push_back({C.name(arrow_at(f)), C.name(C.dom(arrow_at(f))), C.name(C.cod(arrow_at(f)))});
    }
  }
  for (ObjectId c : kept) sub.identities.emplace_back(C.name(c), C.name(C.identity(c)));
  for (const auto& comp : full.composition) {
    if (kept_arrow(C.arrow(comp.g)) && kept_arrow(C.arrow(comp.f))) sub.composition.push_back(comp);
  }
  auto lattice = make_lattice(FinCategory::from_raw(sub), site.lattice()->caps());
  const auto& D = lattice->category();

  std::vector<Sieve> covering;
  for (std::size_t c = 0; c < D.object_count(); ++c) {
    const ObjectId obj = object_at(c);
    const ObjectId orig = C.object(D.name(obj));
    for (const auto& S : lattice->sieves(obj)) {
      std::vector<ArrowId> gens;
      for (ArrowId f : members(D, S)) gens.push_back(C.arrow(D.name(f)));
      if (J.covers(generate_sieve(C, orig, gens))) covering.push_back(S);
    }
  }
  return Restriction{Site(make_topology(lattice, covering)), std::move(kept)};
}

}  // namespace sheafcalc
