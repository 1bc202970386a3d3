#include "sheafcalc/frame.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "sheafcalc/error.hpp"

namespace sheafcalc {

FiniteFrame FiniteFrame::from_order(std::vector<std::string> names,
                                    std::span<const std::pair<std::string, std::string>> leq) {
  std::unordered_map<std::string, Elem> idx;
  std::vector<std::string> errors;
  for (Elem i = 0; i < names.size(); ++i) {
    if (!idx.emplace(names[i], i).second) errors.push_back("duplicate element '" + names[i] + "'");
  }
  std::vector<std::pair<Elem, Elem>> pairs;
  for (const auto& [a, b] : leq) {
    auto ia = idx.find(a), ib = idx.find(b);
    if (ia == idx.end() || ib == idx.end()) {
      errors.push_back("order pair (" + a + ", " + b + ") names an unknown element");
      continue;
    }
    pairs.emplace_back(ia->second, ib->second);
  }
  if (!errors.empty()) throw LawViolation("invalid frame:", std::move(errors));
  return from_order(std::move(names), pairs);
}

FiniteFrame FiniteFrame::from_order(std::vector<std::string> names,
                                    std::span<const std::pair<Elem, Elem>> leq) {
  const std::size_t n = names.size();
  if (n == 0) throw LawViolation("invalid frame:", {"a frame needs at least one element"});
  FiniteFrame F;
  F.names_ = std::move(names);
  F.leq_.assign(n * n, false);
  auto le = [&](Elem a, Elem b) { return F.leq_[a * n + b]; };
  for (Elem a = 0; a < n; ++a) F.leq_[a * n + a] = true;
  for (const auto& [a, b] : leq) {
    if (a >= n || b >= n) throw InputError("order pair refers to a missing element");
    F.leq_[a * n + b] = true;
  }
  for (Elem k = 0; k < n; ++k) {
    for (Elem i = 0; i < n; ++i) {
      if (!le(i, k)) continue;
      for (Elem j = 0; j < n; ++j) {
        if (le(k, j)) F.leq_[i * n + j] = true;
      }
    }
  }
  std::vector<std::string> errors;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = a + 1; b < n; ++b) {
      if (le(a, b) && le(b, a)) {
        errors.push_back("order is not antisymmetric: '" + F.names_[a] + "' and '" + F.names_[b] +
                         "' are equivalent");
      }
    }
  }
  if (!errors.empty()) throw LawViolation("invalid frame:", std::move(errors));

  // Bounds by exhaustive search.
  F.meet_.assign(n * n, n);
  F.join_.assign(n * n, n);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem none = n;
      Elem glb = none, lub = none;
      for (Elem x = 0; x < n; ++x) {
        if (le(x, a) && le(x, b) && (glb == none || le(glb, x))) glb = x;
        if (le(a, x) && le(b, x) && (lub == none || le(x, lub))) lub = x;
      }
      // Candidates must dominate (resp. be dominated by) every common bound.
      for (Elem x = 0; x < n && glb != none; ++x) {
        if (le(x, a) && le(x, b) && !le(x, glb)) glb = none;
      }
      for (Elem x = 0; x < n && lub != none; ++x) {
        if (le(a, x) && le(b, x) && !le(lub, x)) lub = none;
      }
      if (glb == none) errors.push_back("'" + F.names_[a] + "' and '" + F.names_[b] + "' have no meet");
      if (lub == none) errors.push_back("'" + F.names_[a] + "' and '" + F.names_[b] + "' have no join");
      F.meet_[a * n + b] = glb;
      F.join_[a * n + b] = lub;
    }
  }
  if (!errors.empty()) throw LawViolation("invalid frame: not a lattice:", std::move(errors));

  F.bottom_ = F.top_ = 0;
  for (Elem a = 0; a < n; ++a) {
    F.bottom_ = F.meet(F.bottom_, a);
    F.top_ = F.join(F.top_, a);
  }
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (F.meet(a, F.join(b, c)) != F.join(F.meet(a, b), F.meet(a, c))) {
          throw LawViolation("invalid frame: not distributive:",
                             {"a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c) for a='" + F.names_[a] + "', b='" +
                              F.names_[b] + "', c='" + F.names_[c] + "'"});
        }
      }
    }
  }
  F.imp_.assign(n * n, 0);
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      Elem best = F.bottom_;
      for (Elem x = 0; x < n; ++x) {
        if (le(F.meet(x, a), b)) best = F.join(best, x);
      }
      F.imp_[a * n + b] = best;
    }
  }
  return F;
}

std::optional<Elem> FiniteFrame::find(std::string_view name) const {
  for (Elem i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

Elem FiniteFrame::meet_all(std::span<const Elem> xs) const {
  Elem r = top_;
  for (Elem x : xs) r = meet(r, x);
  return r;
}

Elem FiniteFrame::join_all(std::span<const Elem> xs) const {
  Elem r = bottom_;
  for (Elem x : xs) r = join(r, x);
  return r;
}

bool FiniteFrame::is_boolean() const {
  for (Elem a = 0; a < size(); ++a) {
    if (join(a, neg(a)) != top_) return false;
  }
  return true;
}

std::vector<std::pair<Elem, Elem>> FiniteFrame::covering_pairs() const {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem a = 0; a < size(); ++a) {
    for (Elem b = 0; b < size(); ++b) {
      if (a == b || !leq(a, b)) continue;
      bool between = false;
      for (Elem x = 0; x < size() && !between; ++x) {
        between = x != a && x != b && leq(a, x) && leq(x, b);
      }
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

namespace {

std::size_t height(const FiniteFrame& F, Elem a) {
  std::size_t h = 0;
  for (Elem x = 0; x < F.size(); ++x) h += F.leq(x, a) ? 1 : 0;
  return h;
}

bool extend(const FiniteFrame& a, const FiniteFrame& b, std::vector<Elem>& map, std::vector<bool>& used,
            Elem next) {
  if (next == a.size()) return true;
  for (Elem y = 0; y < b.size(); ++y) {
    if (used[y] || height(a, next) != height(b, y)) continue;
    bool ok = true;
    for (Elem x = 0; x < next && ok; ++x) {
      ok = a.leq(x, next) == b.leq(map[x], y) && a.leq(next, x) == b.leq(y, map[x]);
    }
    if (!ok) continue;
    map[next] = y;
    used[y] = true;
    if (extend(a, b, map, used, next + 1)) return true;
    used[y] = false;
  }
  return false;
}

}  // namespace

bool isomorphic(const FiniteFrame& a, const FiniteFrame& b) {
  if (a.size() != b.size()) return false;
  std::vector<Elem> map(a.size(), 0);
  std::vector<bool> used(b.size(), false);
  return extend(a, b, map, used, 0);
}

}  // namespace sheafcalc
