#pragma once

// Shared fixtures for unit and acceptance tests: corpus sites, law checkers
// and random term generation.

#include <random>
#include <string>
#include <vector>

#include "sheafcalc/catalog.hpp"
#include "sheafcalc/logic.hpp"
#include "sheafcalc/omega.hpp"

namespace sheafcalc::testing {

struct NamedSite {
  std::string name;
  Site site;
};

std::shared_ptr<const SieveLattice> lattice_of(const RawCategory& raw, const Caps& caps = {});

/// For each corpus category: the trivial topology, the stably non-empty
/// topology, the topology generated by every non-empty sieve and, when the
/// category is small enough to enumerate, every topology.
std::vector<NamedSite> corpus_sites(std::size_t enumerate_up_to = 3);

/// Bounded-lattice laws, residuation, ¬S = S ⇒ 0, and naturality of every
/// operation under pullback, on the Ω fiber at c. Empty when all hold.
std::vector<std::string> heyting_law_failures(const Site& site, ObjectId c);

/// Horn sequents used to compare frame and internal validity.
std::vector<std::string> horn_battery();

/// Random term over variables p, q, r of at most the given depth.
Term random_term(std::mt19937& rng, std::size_t depth);

}  // namespace sheafcalc::testing
