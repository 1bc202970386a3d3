#pragma once

// Sublocales of finite frames: nuclei, filters and filter quotients, the
// L-sublocale construction, and the direct descriptions of the De Morgan and
// Gödel-Dummett sublocales.

#include <span>
#include <string>
#include <vector>

#include "sheafcalc/caps.hpp"
#include "sheafcalc/frame.hpp"
#include "sheafcalc/logic.hpp"
#include "sheafcalc/omega.hpp"

namespace sheafcalc {

inline Elem heyting_imp(const FiniteFrame& A, Elem a, Elem b) { return A.imp(a, b); }
inline Elem pseudo_not(const FiniteFrame& A, Elem a) { return A.neg(a); }

/// An inflationary, idempotent, meet-preserving endomap of a frame.
class Nucleus {
 public:
  /// Throws LawViolation naming the first broken law.
  static Nucleus make(const FiniteFrame& A, std::vector<Elem> map);
  static Nucleus identity(const FiniteFrame& A);

  Elem operator()(Elem a) const { return map_.at(a); }
  const std::vector<Elem>& map() const noexcept { return map_; }
  std::vector<Elem> fixset() const;
  /// this(a) ≥ other(a) for every a.
  bool dominates(const FiniteFrame& A, const Nucleus& other) const;

  friend bool operator==(const Nucleus&, const Nucleus&) = default;

 private:
  explicit Nucleus(std::vector<Elem> map) : map_(std::move(map)) {}
  std::vector<Elem> map_;
};

/// The violated nucleus law, or empty.
std::string nucleus_violation(const FiniteFrame& A, std::span<const Elem> map);

/// The fixset as a frame in its own right (order inherited from A).
FiniteFrame fixset_frame(const FiniteFrame& A, const Nucleus& j);

/// a ↦ u ⇒ a.
Nucleus open_nucleus(const FiniteFrame& A, Elem u);
/// a ↦ u ∨ a.
Nucleus closed_nucleus(const FiniteFrame& A, Elem u);
/// a ↦ ¬¬a.
Nucleus double_negation_nucleus(const FiniteFrame& A);

struct Filter {
  std::vector<bool> members;
  bool contains(Elem a) const { return members.at(a); }
  bool proper(const FiniteFrame& A) const { return !members.at(A.bottom()); }
};

bool is_filter(const FiniteFrame& A, const std::vector<bool>& members);
/// Upward closure of the finite meets of the seeds together with 1.
Filter filter_generated(const FiniteFrame& A, std::span<const Elem> seeds);

struct Quotient {
  FiniteFrame frame;              // elements named by their greatest representative
  std::vector<Elem> projection;   // A -> A/F
  Nucleus nucleus;                // a ↦ greatest element of its class
  std::vector<std::string> warnings;
};

/// a ≃ b iff (a ⇒ b) ∧ (b ⇒ a) ∈ F. Improper filters give the one-element
/// frame with a warning.
Quotient quotient_by_filter(const FiniteFrame& A, const Filter& F);

/// Quotient by the filter generated by every value of φ. Throws CapExceeded
/// when |A|^arity exceeds max_tuples.
Quotient l_sublocale(const FiniteFrame& A, const Term& phi, std::size_t max_tuples = 1u << 22);

struct DirectSublocale {
  std::vector<bool> members;
  std::vector<Elem> xi;  // l ↦ meet of the members above l
  /// Members closed under meets, so xi(l) is a member for every l.
  bool meet_closed = true;
  /// Throws LawViolation when xi is not a nucleus.
  Nucleus nucleus(const FiniteFrame& A) const { return Nucleus::make(A, xi); }
};

/// l ∈ A_m iff for all r ≤ a: if every b ≤ a with b ∧ r = 0, or with c ∧ r ≠ 0
/// for every non-zero c ≤ b, lies below l, then a ≤ l.
DirectSublocale demorganization_direct(const FiniteFrame& A);
/// l ∈ A_GD iff for all r, s ≤ c: (r ⇒ s) ∧ c ≤ l and (s ⇒ r) ∧ c ≤ l imply c ≤ l.
DirectSublocale gd_sublocale_direct(const FiniteFrame& A);

struct NucleusChecks {
  bool dense;                 // j(0) = 0
  bool weakly_open;           // j(a ∧ b) = j(0) implies j(b) = j(b ∧ ¬a)
  bool implicationally_open;  // j(c ∧ a) ≤ j(b) implies j(c) ≤ j(a ⇒ b)
};

NucleusChecks nucleus_checks(const FiniteFrame& A, const Nucleus& j);

/// Every nucleus, found as the meet- and implication-closed subsets containing 1.
/// Throws CapExceeded when |A| > max_size.
std::vector<Nucleus> enumerate_nuclei(const FiniteFrame& A, std::size_t max_size = 8);

/// Elements where two nuclei disagree.
std::vector<Elem> nucleus_discrepancies(const Nucleus& a, const Nucleus& b);

/// The poset A as a category (arrows "x<=y"), with the canonical coverage:
/// a sieve on a covers iff the join of its domains is a.
Site site_from_frame(const FiniteFrame& A, const Caps& caps = {});
/// Arrow name for x ≤ y in site_from_frame.
std::string order_arrow_name(const FiniteFrame& A, Elem x, Elem y);

/// The nucleus on A whose fixset is the K-closed principal sieves on the top
/// object; K must be a topology on site_from_frame(A) containing the canonical one.
Nucleus nucleus_from_topology(const FiniteFrame& A, const GrothendieckTopology& K);

}  // namespace sheafcalc
