#pragma once

// Finite frames: finite distributive lattices with their Heyting structure.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sheafcalc {

using Elem = std::size_t;

class FiniteFrame {
 public:
  using value_type = Elem;

  /// Builds the frame whose order is the reflexive-transitive closure of
  /// `leq`. Throws LawViolation if the result is not a partial order, not a
  /// lattice, or not distributive (naming a failing triple).
  static FiniteFrame from_order(std::vector<std::string> names,
                                std::span<const std::pair<Elem, Elem>> leq);
  static FiniteFrame from_order(std::vector<std::string> names,
                                std::span<const std::pair<std::string, std::string>> leq);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Elem a) const { return names_.at(a); }
  std::optional<Elem> find(std::string_view name) const;
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool leq(Elem a, Elem b) const { return leq_[a * size() + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * size() + b]; }
  Elem join(Elem a, Elem b) const { return join_[a * size() + b]; }
  /// Largest x with x ∧ a ≤ b.
  Elem imp(Elem a, Elem b) const { return imp_[a * size() + b]; }
  Elem neg(Elem a) const { return imp(a, bottom_); }
  Elem bottom() const noexcept { return bottom_; }
  Elem top() const noexcept { return top_; }

  Elem meet_all(std::span<const Elem> xs) const;
  Elem join_all(std::span<const Elem> xs) const;
  bool is_boolean() const;
  /// Pairs (a, b) with a ≤ b, a != b, and nothing strictly between.
  std::vector<std::pair<Elem, Elem>> covering_pairs() const;

  friend bool operator==(const FiniteFrame& a, const FiniteFrame& b) {
    return a.names_ == b.names_ && a.leq_ == b.leq_;
  }

 private:
  FiniteFrame() = default;

  std::vector<std::string> names_;
  std::vector<bool> leq_;
  std::vector<Elem> meet_;
  std::vector<Elem> join_;
  std::vector<Elem> imp_;
  Elem bottom_ = 0;
  Elem top_ = 0;
};

/// Whether two frames are isomorphic as posets (brute force over bijections,
/// pruned by element height).
bool isomorphic(const FiniteFrame& a, const FiniteFrame& b);

}  // namespace sheafcalc
