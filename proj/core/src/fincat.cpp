#include "sheafcalc/fincat.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "sheafcalc/error.hpp"

namespace sheafcalc {

namespace {

struct Tables {
  std::vector<std::string> objects;
  std::vector<std::string> arrows;
  std::unordered_map<std::string, std::size_t> object_index;
  std::unordered_map<std::string, std::size_t> arrow_index;
  std::vector<std::size_t> dom;
  std::vector<std::size_t> cod;
  std::vector<std::size_t> identity;
  std::vector<std::int32_t> compose;  // n*n, -1 = absent
};

// Builds index tables and fills the composition table, appending every
// violation found. Returns false when the tables are too broken to check laws.
bool build_tables(const RawCategory& raw, Tables& t, std::vector<std::string>& out) {
  for (const auto& o : raw.objects) {
    if (!t.object_index.emplace(o, t.objects.size()).second) {
      out.push_back("duplicate object '" + o + "'");
      continue;
    }
    t.objects.push_back(o);
  }
  bool dangling = false;
  for (const auto& a : raw.arrows) {
    if (!t.arrow_index.emplace(a.id, t.arrows.size()).second) {
      out.push_back("duplicate arrow '" + a.id + "'");
      continue;
    }
    auto d = t.object_index.find(a.dom);
    auto c = t.object_index.find(a.cod);
    if (d == t.object_index.end()) {
      out.push_back("arrow '" + a.id + "' has dangling domain '" + a.dom + "'");
      dangling = true;
    }
    if (c == t.object_index.end()) {
      out.push_back("arrow '" + a.id + "' has dangling codomain '" + a.cod + "'");
      dangling = true;
    }
    t.arrows.push_back(a.id);
    t.dom.push_back(d == t.object_index.end() ? 0 : d->second);
    t.cod.push_back(c == t.object_index.end() ? 0 : c->second);
  }
  if (dangling) return false;

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  t.identity.assign(t.objects.size(), kNone);
  for (const auto& [obj, arr] : raw.identities) {
    auto o = t.object_index.find(obj);
    auto a = t.arrow_index.find(arr);
    if (o == t.object_index.end()) {
      out.push_back("identity declared for unknown object '" + obj + "'");
      continue;
    }
    if (a == t.arrow_index.end()) {
      out.push_back("identity of '" + obj + "' is unknown arrow '" + arr + "'");
      continue;
    }
    if (t.dom[a->second] != o->second || t.cod[a->second] != o->second) {
      out.push_back("identity '" + arr + "' is not an endomorphism of '" + obj + "'");
      continue;
    }
    if (t.identity[o->second] != kNone && t.identity[o->second] != a->second) {
      out.push_back("object '" + obj + "' has two identities");
      continue;
    }
    t.identity[o->second] = a->second;
  }
  bool missing_identity = false;
  for (std::size_t c = 0; c < t.objects.size(); ++c) {
    if (t.identity[c] == kNone) {
      out.push_back("object '" + t.objects[c] + "' has no identity");
      missing_identity = true;
    }
  }
  if (missing_identity) return false;

  const std::size_t n = t.arrows.size();
  t.compose.assign(n * n, -1);
  bool table_ok = true;
  for (const auto& comp : raw.composition) {
    auto g = t.arrow_index.find(comp.g);
    auto f = t.arrow_index.find(comp.f);
    auto gf = t.arrow_index.find(comp.gf);
    if (g == t.arrow_index.end() || f == t.arrow_index.end() || gf == t.arrow_index.end()) {
      out.push_back("composite (" + comp.g + ", " + comp.f + ", " + comp.gf +
                    ") names an unknown arrow");
      table_ok = false;
      continue;
    }
    const std::size_t gi = g->second, fi = f->second, gfi = gf->second;
    if (t.cod[fi] != t.dom[gi]) {
      out.push_back("composite listed for non-composable pair " + comp.g + " ∘ " + comp.f);
      table_ok = false;
      continue;
    }
    if (t.dom[gfi] != t.dom[fi] || t.cod[gfi] != t.cod[gi]) {
      out.push_back("composite " + comp.g + " ∘ " + comp.f + " = " + comp.gf +
                    " has wrong domain or codomain");
      table_ok = false;
      continue;
    }
    auto& slot = t.compose[gi * n + fi];
    if (slot != -1 && static_cast<std::size_t>(slot) != gfi) {
      out.push_back("conflicting composites for " + comp.g + " ∘ " + comp.f);
      table_ok = false;
      continue;
    }
    slot = static_cast<std::int32_t>(gfi);
  }

  // Composites with an identity factor default to the other factor.
  for (std::size_t f = 0; f < n; ++f) {
    auto& left = t.compose[t.identity[t.cod[f]] * n + f];
    if (left == -1) left = static_cast<std::int32_t>(f);
    auto& right = t.compose[f * n + t.identity[t.dom[f]]];
    if (right == -1) right = static_cast<std::int32_t>(f);
  }
  for (std::size_t g = 0; g < n; ++g) {
    for (std::size_t f = 0; f < n; ++f) {
      if (t.cod[f] == t.dom[g] && t.compose[g * n + f] == -1) {
        out.push_back("missing composite " + t.arrows[g] + " ∘ " + t.arrows[f]);
        table_ok = false;
      }
    }
  }
  return table_ok;
}

void check_laws(const Tables& t, std::vector<std::string>& out) {
  const std::size_t n = t.arrows.size();
  auto comp = [&](std::size_t g, std::size_t f) { return static_cast<std::size_t>(t.compose[g * n + f]); };
  for (std::size_t f = 0; f < n; ++f) {
    const std::size_t left = comp(t.identity[t.cod[f]], f);
    const std::size_t right = comp(f, t.identity[t.dom[f]]);
    if (left != f) {
      out.push_back("identity law fails for " + t.arrows[f] + ": " + t.arrows[t.identity[t.cod[f]]] +
                    " ∘ " + t.arrows[f] + " = " + t.arrows[left]);
    }
    if (right != f) {
      out.push_back("identity law fails for " + t.arrows[f] + ": " + t.arrows[f] + " ∘ " +
                    t.arrows[t.identity[t.dom[f]]] + " = " + t.arrows[right]);
    }
  }
  for (std::size_t h = 0; h < n; ++h) {
    for (std::size_t g = 0; g < n; ++g) {
      if (t.cod[g] != t.dom[h]) continue;
      for (std::size_t f = 0; f < n; ++f) {
        if (t.cod[f] != t.dom[g]) continue;
        if (comp(h, comp(g, f)) != comp(comp(h, g), f)) {
          out.push_back("associativity fails for " + t.arrows[h] + " ∘ " + t.arrows[g] + " ∘ " +
                        t.arrows[f]);
        }
      }
    }
  }
}

}  // namespace

std::vector<std::string> category_law_violations(const RawCategory& raw) {
  Tables t;
  std::vector<std::string> out;
  if (build_tables(raw, t, out)) check_laws(t, out);
  return out;
}

FinCategory FinCategory::from_raw(const RawCategory& raw) {
  Tables t;
  std::vector<std::string> violations;
  if (build_tables(raw, t, violations)) check_laws(t, violations);
  if (!violations.empty()) throw LawViolation("invalid category:", std::move(violations));

  FinCategory C;
  C.object_names_ = std::move(t.objects);
  C.arrow_names_ = std::move(t.arrows);
  for (auto& [k, v] : t.object_index) C.object_index_.emplace(k, object_at(v));
  for (auto& [k, v] : t.arrow_index) C.arrow_index_.emplace(k, arrow_at(v));
  for (auto d : t.dom) C.dom_.push_back(object_at(d));
  for (auto c : t.cod) C.cod_.push_back(object_at(c));
  for (auto i : t.identity) C.identity_.push_back(arrow_at(i));
  C.compose_ = std::move(t.compose);

  const std::size_t n = C.arrow_count();
  C.fan_in_.assign(C.object_count(), {});
  C.fan_in_pos_.assign(n, 0);
  for (std::size_t f = 0; f < n; ++f) {
    auto& fan = C.fan_in_[index(C.cod_[f])];
    C.fan_in_pos_[f] = fan.size();
    fan.push_back(arrow_at(f));
  }
  if (C.max_fan_in() > kMaxFanInWidth) {
    throw InputError("object fan-in exceeds the hard limit of " + std::to_string(kMaxFanInWidth) +
                     " arrows");
  }
  C.principal_.assign(n, 0);
  C.pullback_pos_.assign(n, {});
  for (std::size_t f = 0; f < n; ++f) {
    const auto fa = arrow_at(f);
    for (ArrowId h : C.fan_in(C.dom(fa))) {
      const ArrowId fh = *C.compose(fa, h);
      C.principal_[f] |= SieveMask{1} << C.fan_in_pos_[index(fh)];
      C.pullback_pos_[f].push_back(static_cast<std::uint8_t>(C.fan_in_pos_[index(fh)]));
    }
  }
  return C;
}

std::optional<ObjectId> FinCategory::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<ArrowId> FinCategory::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

ObjectId FinCategory::object(std::string_view name) const {
  if (auto o = find_object(name)) return *o;
  throw InputError("unknown object '" + std::string(name) + "'");
}

ArrowId FinCategory::arrow(std::string_view name) const {
  if (auto a = find_arrow(name)) return *a;
  throw InputError("unknown arrow '" + std::string(name) + "'");
}

std::optional<ArrowId> FinCategory::compose(ArrowId g, ArrowId f) const {
  const auto v = compose_[index(g) * arrow_count() + index(f)];
  if (v < 0) return std::nullopt;
  return arrow_at(static_cast<std::size_t>(v));
}

std::size_t FinCategory::max_fan_in() const noexcept {
  std::size_t m = 0;
  for (const auto& fan : fan_in_) m = std::max(m, fan.size());
  return m;
}

std::vector<ArrowId> FinCategory::hom(ObjectId a, ObjectId b) const {
  std::vector<ArrowId> out;
  for (ArrowId f : fan_in(b)) {
    if (dom(f) == a) out.push_back(f);
  }
  return out;
}

SieveMask FinCategory::pullback_mask(ArrowId f, SieveMask s) const {
  const auto& pos = pullback_pos_[index(f)];
  SieveMask out = 0;
  for (std::size_t i = 0; i < pos.size(); ++i) {
    if ((s >> pos[i]) & 1u) out |= SieveMask{1} << i;
  }
  return out;
}

RawCategory FinCategory::to_raw() const {
  RawCategory raw;
  raw.objects = object_names_;
  for (std::size_t f = 0; f < arrow_count(); ++f) {
    raw.arrows.push_back({arrow_names_[f], object_names_[index(dom_[f])], object_names_[index(cod_[f])]});
  }
  for (std::size_t c = 0; c < object_count(); ++c) {
    raw.identities.emplace_back(object_names_[c], arrow_names_[index(identity_[c])]);
  }
  for (std::size_t g = 0; g < arrow_count(); ++g) {
    for (std::size_t f = 0; f < arrow_count(); ++f) {
      const auto v = compose_[g * arrow_count() + f];
      if (v < 0) continue;
      if (is_identity(arrow_at(g)) || is_identity(arrow_at(f))) continue;
      raw.composition.push_back({arrow_names_[g], arrow_names_[f], arrow_names_[static_cast<std::size_t>(v)]});
    }
  }
  return raw;
}

std::size_t Sieve::size() const noexcept { return static_cast<std::size_t>(std::popcount(mask_)); }

bool is_sieve(const FinCategory& C, ObjectId root, SieveMask m) {
  const auto fan = C.fan_in(root);
  if (fan.size() < 64 && (m >> fan.size()) != 0) return false;
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (((m >> i) & 1u) && (C.principal(fan[i]) & ~m) != 0) return false;
  }
  return true;
}

bool contains(const FinCategory& C, const Sieve& S, ArrowId f) {
  return C.cod(f) == S.root() && S.has_position(C.fan_in_position(f));
}

std::vector<ArrowId> members(const FinCategory& C, const Sieve& S) {
  std::vector<ArrowId> out;
  const auto fan = C.fan_in(S.root());
  for (std::size_t i = 0; i < fan.size(); ++i) {
    if (S.has_position(i)) out.push_back(fan[i]);
  }
  return out;
}

Sieve generate_sieve(const FinCategory& C, ObjectId root, std::span<const ArrowId> generators) {
  SieveMask m = 0;
  for (ArrowId g : generators) {
    if (C.cod(g) != root) {
      throw InputError("generator '" + C.name(g) + "' does not have codomain '" + C.name(root) + "'");
    }
    m |= C.principal(g);
  }
  return Sieve(root, m);
}

Sieve pullback_sieve(const FinCategory& C, ArrowId f, const Sieve& S) {
  if (C.cod(f) != S.root()) {
    throw InputError("cannot pull back a sieve on '" + C.name(S.root()) + "' along '" + C.name(f) + "'");
  }
  return Sieve(C.dom(f), C.pullback_mask(f, S.mask()));
}

namespace {
void require_same_root(const Sieve& S, const Sieve& T) {
  if (S.root() != T.root()) throw InputError("sieves have different roots");
}
}  // namespace

Sieve sieve_union(const Sieve& S, const Sieve& T) {
  require_same_root(S, T);
  return Sieve(S.root(), S.mask() | T.mask());
}

Sieve sieve_intersection(const Sieve& S, const Sieve& T) {
  require_same_root(S, T);
  return Sieve(S.root(), S.mask() & T.mask());
}

Sieve maximal_sieve(const FinCategory& C, ObjectId c) {
  if (index(c) >= C.object_count()) throw InputError("unknown object id " + std::to_string(index(c)));
  const std::size_t n = C.fan_in(c).size();
  return Sieve(c, n == 64 ? ~SieveMask{0} : (SieveMask{1} << n) - 1);
}

Sieve empty_sieve(const FinCategory& C, ObjectId c) {
  if (index(c) >= C.object_count()) throw InputError("unknown object id " + std::to_string(index(c)));
  return Sieve(c, 0);
}

bool is_maximal(const FinCategory& C, const Sieve& S) { return S == maximal_sieve(C, S.root()); }

bool factors_through(const FinCategory& C, ArrowId f, ArrowId g) {
  return C.cod(f) == C.cod(g) && ((C.principal(g) >> C.fan_in_position(f)) & 1u);
}

std::string to_string(const FinCategory& C, const Sieve& S) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (ArrowId f : members(C, S)) {
    if (!first) os << ", ";
    os << C.name(f);
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace sheafcalc
