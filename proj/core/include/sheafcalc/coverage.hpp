#pragma once

// Grothendieck topologies on a finite category, stored extensionally.

#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sheafcalc/caps.hpp"
#include "sheafcalc/fincat.hpp"

namespace sheafcalc {

/// Every precomposition-closed subset of every fan-in, enumerated by brute force.
std::vector<Sieve> all_sieves(const FinCategory& C, ObjectId c, const Caps& caps = {});

/// All sieves of a category, indexed per object. Sieves at each object are
/// ordered by (size, mask): the empty sieve first, the maximal sieve last.
class SieveLattice {
 public:
  /// Throws CapExceeded when some fan-in exceeds caps.max_fanin.
  SieveLattice(std::shared_ptr<const FinCategory> category, const Caps& caps = {});

  const FinCategory& category() const noexcept { return *category_; }
  const std::shared_ptr<const FinCategory>& category_ptr() const noexcept { return category_; }

  std::span<const Sieve> sieves(ObjectId c) const { return sieves_.at(index(c)); }
  std::size_t count(ObjectId c) const { return sieves_.at(index(c)).size(); }
  /// Position of S in sieves(S.root()); throws InputError if S is not a sieve.
  std::size_t id(const Sieve& S) const;
  const Caps& caps() const noexcept { return caps_; }

 private:
  std::shared_ptr<const FinCategory> category_;
  Caps caps_;
  std::vector<std::vector<Sieve>> sieves_;
  std::vector<std::unordered_map<SieveMask, std::size_t>> ids_;
};

std::shared_ptr<const SieveLattice> make_lattice(FinCategory C, const Caps& caps = {});

class GrothendieckTopology {
 public:
  const FinCategory& category() const noexcept { return lattice_->category(); }
  const std::shared_ptr<const SieveLattice>& lattice() const noexcept { return lattice_; }

  bool covers(const Sieve& S) const;
  std::vector<Sieve> covering_sieves(ObjectId c) const;
  std::vector<Sieve> all_covering_sieves() const;
  std::size_t covering_count() const;

  /// Every sieve covering for `finer` is covering here.
  bool contains(const GrothendieckTopology& finer) const;

  friend bool operator==(const GrothendieckTopology& a, const GrothendieckTopology& b) {
    return a.covers_ == b.covers_;
  }

 private:
  friend class TopologyBuilder;
  GrothendieckTopology(std::shared_ptr<const SieveLattice> lattice,
                       std::vector<std::vector<bool>> covers)
      : lattice_(std::move(lattice)), covers_(std::move(covers)) {}

  std::shared_ptr<const SieveLattice> lattice_;
  std::vector<std::vector<bool>> covers_;  // [object][sieve id]
};

struct TopologyViolation {
  std::string axiom;  // "maximality", "stability" or "transitivity"
  std::string witness;
};

struct TopologyVerdict {
  std::vector<TopologyViolation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the three axioms for an explicit covering family. Throws InputError
/// for sieves that are not sieves of the lattice's category.
TopologyVerdict check_topology(const SieveLattice& lattice, std::span<const Sieve> covering);

/// Validated construction from an explicit covering family; throws LawViolation.
GrothendieckTopology make_topology(std::shared_ptr<const SieveLattice> lattice,
                                   std::span<const Sieve> covering);

/// Only maximal sieves cover.
GrothendieckTopology trivial_topology(std::shared_ptr<const SieveLattice> lattice);

/// Least topology containing every generator as a covering sieve.
GrothendieckTopology generate_topology(std::shared_ptr<const SieveLattice> lattice,
                                       std::span<const Sieve> generators);
/// Least topology containing `base` and every generator.
GrothendieckTopology generate_topology(const GrothendieckTopology& base,
                                       std::span<const Sieve> generators);
/// Least topology containing both.
GrothendieckTopology join(const GrothendieckTopology& a, const GrothendieckTopology& b);

/// {f : d -> c | f*(S) ∈ J(d)}.
Sieve closure(const GrothendieckTopology& J, const Sieve& S);
bool is_closed(const GrothendieckTopology& J, const Sieve& S);
std::vector<Sieve> closed_sieves(const GrothendieckTopology& J, ObjectId c);

/// Every topology on a category with at most caps.max_enum_arrows arrows.
std::vector<GrothendieckTopology> enumerate_topologies(std::shared_ptr<const SieveLattice> lattice);

}  // namespace sheafcalc
