#pragma once

// The subobject classifier Ω of Sh(C, J): at each object c its elements are
// the J-closed sieves on c, with the Heyting operations
//
//   0(c)     = {f : d -> c | ∅ ∈ J(d)}
//   1(c)     = maximal sieve
//   S ∧ T    = S ∩ T
//   S ∨ T    = {f | f*(S ∪ T) ∈ J(d)}
//   S ⇒ T    = {f | f*(S) ⊆ f*(T)}
//   ¬S       = {f | for all g : e -> d, f∘g ∈ S implies ∅ ∈ J(e)}
//
// Internal validity of Horn sequents is decided objectwise on these fibers.

#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sheafcalc/coverage.hpp"
#include "sheafcalc/frame.hpp"
#include "sheafcalc/logic.hpp"

namespace sheafcalc {

class Site {
 public:
  explicit Site(GrothendieckTopology topology) : topology_(std::move(topology)) {}

  const FinCategory& category() const noexcept { return topology_.category(); }
  const GrothendieckTopology& topology() const noexcept { return topology_; }
  const std::shared_ptr<const SieveLattice>& lattice() const noexcept { return topology_.lattice(); }

 private:
  GrothendieckTopology topology_;
};

/// The site of presheaves: only maximal sieves cover.
Site presheaf_site(std::shared_ptr<const SieveLattice> lattice);

Sieve omega_bottom(const Site& site, ObjectId c);
Sieve omega_top(const Site& site, ObjectId c);
// Inputs must be J-closed with a common root; InputError otherwise.
Sieve omega_meet(const Site& site, const Sieve& S, const Sieve& T);
Sieve omega_join(const Site& site, const Sieve& S, const Sieve& T);
Sieve omega_implies(const Site& site, const Sieve& S, const Sieve& T);
Sieve omega_not(const Site& site, const Sieve& S);

/// Ω(c) with its operations tabulated. Values are positions in elements().
class OmegaFiber {
 public:
  using value_type = std::size_t;

  OmegaFiber(const Site& site, ObjectId c);

  ObjectId object() const noexcept { return object_; }
  std::span<const Sieve> elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  const Sieve& element(std::size_t i) const { return elements_.at(i); }
  /// Throws InputError if S is not J-closed on this object.
  std::size_t index_of(const Sieve& S) const;

  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t imp(std::size_t a, std::size_t b) const { return imp_[a * size() + b]; }
  std::size_t neg(std::size_t a) const { return neg_[a]; }

 private:
  ObjectId object_;
  std::vector<Sieve> elements_;
  std::unordered_map<SieveMask, std::size_t> index_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::size_t> meet_, join_, imp_, neg_;
};

/// Structural evaluation through the omega_* operations.
Sieve eval_term_omega(const Site& site, ObjectId c, const Term& t,
                      const std::map<std::string, Sieve>& assignment);

struct InternalWitness {
  ObjectId object;
  std::vector<std::pair<std::string, Sieve>> assignment;  // context order
};

struct InternalVerdict {
  bool holds = true;
  std::optional<InternalWitness> witness;
};

/// Holds iff at every object, every assignment of closed sieves satisfying the
/// premises satisfies the conclusion. The witness is the first failure by
/// object order, then lexicographic assignment order over fiber positions.
InternalVerdict holds_internally(const Site& site, const HornSequent& s);
/// φ_L evaluates to the maximal sieve at every object and assignment.
InternalVerdict validates_logic(const Site& site, const LogicSpec& logic);

/// Closed sieves on c ordered by inclusion; Heyting operations are derived
/// from the order alone.
FiniteFrame subobject_frame(const Site& site, ObjectId c);

std::string to_string(const Site& site, const InternalWitness& w);

}  // namespace sheafcalc
