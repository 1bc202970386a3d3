#pragma once

// L-topologies on finite sites, and density/openness of a topology K ⊇ J
// relative to Sh(C, J).

#include <optional>
#include <string>
#include <vector>

#include "sheafcalc/omega.hpp"

namespace sheafcalc {

/// Every value of φ at every object and every tuple of J-closed sieves.
std::vector<Sieve> l_generators(const Site& site, const Term& phi);

/// The topology generated over J by the values of φ on J-closed sieves.
GrothendieckTopology l_topology(const Site& site, const Term& phi);
GrothendieckTopology booleanization(const Site& site);
GrothendieckTopology demorganization(const Site& site);

/// For every sieve R on every c: {f : d -> c | f*R = ∅ or f*R is stably non-empty}.
/// Meaningful as De Morgan generators when J is dense.
std::vector<Sieve> demorgan_generators_direct(const Site& site);

/// ∅ ∉ J(c) for every object c.
bool is_dense_topology(const GrothendieckTopology& J);

// The following require K ⊇ J and throw InputError otherwise.

/// closure_K(∅_c) = closure_J(∅_c) at every object.
bool is_dense_over(const GrothendieckTopology& K, const GrothendieckTopology& J);
/// closure_K(¬_J S) = ¬_K closure_K(S) for every J-closed S.
bool is_weakly_open(const GrothendieckTopology& K, const GrothendieckTopology& J);
/// closure_K(S ⇒ T) = closure_K(S) ⇒ closure_K(T) for all J-closed S, T.
bool is_implicationally_open(const GrothendieckTopology& K, const GrothendieckTopology& J);
/// Site-level form: for J-closed S, T on c, if f*S ∈ K(d) implies f*T ∈ K(d)
/// for every f : d -> c, then {f | f*S ⊆ f*T} ∈ K(c).
bool implicationally_open_site_condition(const GrothendieckTopology& K, const GrothendieckTopology& J);

/// Weakly open when φ is ⇒-free, implicationally open otherwise.
bool is_open_for(const Term& phi, const GrothendieckTopology& K, const GrothendieckTopology& J);

struct MaximalityReport {
  GrothendieckTopology l_topology;
  std::size_t candidates = 0;  // open topologies K ⊇ J examined
  std::vector<std::string> mismatches;
  bool guaranteed = true;      // φ admissible
  bool ok() const noexcept { return mismatches.empty(); }
};

/// Over every enumerated open K ⊇ J: K ⊇ K_L iff Sh(C, K) satisfies φ.
MaximalityReport l_topology_maximality_check(const Site& site, const Term& phi);

struct RelativizationReport {
  GrothendieckTopology relative;  // L-topology of (C, K)
  GrothendieckTopology joined;    // K ∨ L-topology of (C, J)
  bool ok() const { return relative == joined; }
};

/// Requires K open over J for φ; throws InputError otherwise.
RelativizationReport relativization_check(const Site& site, const GrothendieckTopology& K, const Term& phi);

struct Restriction {
  Site site;
  std::vector<ObjectId> kept;  // original ids, in order
};

/// Full subcategory on the objects c with ∅ ∉ J(c), with the induced topology
/// (a sieve covers iff the sieve it generates in C covers).
Restriction dense_restriction(const Site& site);

}  // namespace sheafcalc
