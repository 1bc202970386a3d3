#pragma once

// Finite categories given by explicit composition tables, and the sieve
// calculus over them.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sheafcalc {

enum class ObjectId : std::uint32_t {};
enum class ArrowId : std::uint32_t {};

constexpr std::size_t index(ObjectId o) noexcept { return static_cast<std::size_t>(o); }
constexpr std::size_t index(ArrowId a) noexcept { return static_cast<std::size_t>(a); }
constexpr ObjectId object_at(std::size_t i) noexcept { return static_cast<ObjectId>(i); }
constexpr ArrowId arrow_at(std::size_t i) noexcept { return static_cast<ArrowId>(i); }

/// Bit i set <=> the i-th arrow of the root's fan-in belongs to the sieve.
using SieveMask = std::uint64_t;

/// Fan-in is limited by the mask width regardless of configured caps.
inline constexpr std::size_t kMaxFanInWidth = 63;

/// Category tables as they appear in documents: names only, nothing checked.
struct RawCategory {
  struct Arrow {
    std::string id;
    std::string dom;
    std::string cod;
  };
  /// (g, f, g∘f); f is applied first.
  struct Composite {
    std::string g;
    std::string f;
    std::string gf;
  };

  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
  std::vector<std::pair<std::string, std::string>> identities;  // object -> arrow
  std::vector<Composite> composition;
};

/// Every law violation in the tables; empty means the tables form a category.
/// Composites with an identity factor may be omitted from the table.
std::vector<std::string> category_law_violations(const RawCategory& raw);

class FinCategory {
 public:
  /// Throws LawViolation listing every broken law.
  static FinCategory from_raw(const RawCategory& raw);

  std::size_t object_count() const noexcept { return object_names_.size(); }
  std::size_t arrow_count() const noexcept { return arrow_names_.size(); }

  const std::string& name(ObjectId c) const { return object_names_.at(index(c)); }
  const std::string& name(ArrowId f) const { return arrow_names_.at(index(f)); }

  std::optional<ObjectId> find_object(std::string_view name) const;
  std::optional<ArrowId> find_arrow(std::string_view name) const;
  /// Like find_*, but throws InputError on unknown names.
  ObjectId object(std::string_view name) const;
  ArrowId arrow(std::string_view name) const;

  ObjectId dom(ArrowId f) const { return dom_[index(f)]; }
  ObjectId cod(ArrowId f) const { return cod_[index(f)]; }
  ArrowId identity(ObjectId c) const { return identity_[index(c)]; }
  bool is_identity(ArrowId f) const { return identity(dom(f)) == f; }

  /// g∘f, or nullopt when cod(f) != dom(g).
  std::optional<ArrowId> compose(ArrowId g, ArrowId f) const;

  /// Arrows with codomain c, in id order. Sieve masks index into this list.
  std::span<const ArrowId> fan_in(ObjectId c) const { return fan_in_.at(index(c)); }
  std::size_t fan_in_position(ArrowId f) const { return fan_in_pos_[index(f)]; }
  std::size_t max_fan_in() const noexcept;

  /// Arrows a -> b in id order.
  std::vector<ArrowId> hom(ObjectId a, ObjectId b) const;

  /// Mask (over fan_in(cod f)) of the principal sieve {f∘h}.
  SieveMask principal(ArrowId f) const { return principal_[index(f)]; }

  /// Mask over fan_in(d) of {g | f∘g ∈ S} for S given as a mask over fan_in(cod f).
  SieveMask pullback_mask(ArrowId f, SieveMask s) const;

  RawCategory to_raw() const;

 private:
  FinCategory() = default;

  std::vector<std::string> object_names_;
  std::vector<std::string> arrow_names_;
  std::unordered_map<std::string, ObjectId> object_index_;
  std::unordered_map<std::string, ArrowId> arrow_index_;
  std::vector<ObjectId> dom_;
  std::vector<ObjectId> cod_;
  std::vector<ArrowId> identity_;
  std::vector<std::int32_t> compose_;  // [g * n + f] -> g∘f or -1
  std::vector<std::vector<ArrowId>> fan_in_;
  std::vector<std::size_t> fan_in_pos_;
  std::vector<SieveMask> principal_;
  // pullback_pos_[f][i] = position in fan_in(cod f) of f∘(fan_in(dom f)[i])
  std::vector<std::vector<std::uint8_t>> pullback_pos_;
};

/// A precomposition-closed set of arrows into `root`.
class Sieve {
 public:
  Sieve(ObjectId root, SieveMask members) noexcept : root_(root), mask_(members) {}

  ObjectId root() const noexcept { return root_; }
  SieveMask mask() const noexcept { return mask_; }
  bool empty() const noexcept { return mask_ == 0; }
  std::size_t size() const noexcept;
  bool has_position(std::size_t i) const noexcept { return (mask_ >> i) & 1u; }
  bool subset_of(const Sieve& other) const noexcept {
    return root_ == other.root_ && (mask_ & ~other.mask_) == 0;
  }

  friend bool operator==(const Sieve&, const Sieve&) = default;
  friend auto operator<=>(const Sieve&, const Sieve&) = default;

 private:
  ObjectId root_;
  SieveMask mask_;
};

struct SieveHash {
  std::size_t operator()(const Sieve& s) const noexcept {
    return std::hash<SieveMask>{}(s.mask()) * 31u + index(s.root());
  }
};

bool is_sieve(const FinCategory& C, ObjectId root, SieveMask members);
bool contains(const FinCategory& C, const Sieve& S, ArrowId f);
std::vector<ArrowId> members(const FinCategory& C, const Sieve& S);

/// Smallest sieve on `root` containing the generators.
Sieve generate_sieve(const FinCategory& C, ObjectId root, std::span<const ArrowId> generators);
Sieve pullback_sieve(const FinCategory& C, ArrowId f, const Sieve& S);
Sieve sieve_union(const Sieve& S, const Sieve& T);
Sieve sieve_intersection(const Sieve& S, const Sieve& T);
Sieve maximal_sieve(const FinCategory& C, ObjectId c);
Sieve empty_sieve(const FinCategory& C, ObjectId c);
bool is_maximal(const FinCategory& C, const Sieve& S);

/// Whether f = g∘h for some h.
bool factors_through(const FinCategory& C, ArrowId f, ArrowId g);

/// "{u, id_b}" style listing, members in fan-in order.
std::string to_string(const FinCategory& C, const Sieve& S);

}  // namespace sheafcalc
