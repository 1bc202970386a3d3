#include "sheafcalc/locale.hpp"

#include <algorithm>
#include <map>

#include "sheafcalc/error.hpp"

namespace sheafcalc {

std::string nucleus_violation(const FiniteFrame& A, std::span<const Elem> j) {
  if (j.size() != A.size()) return "map has the wrong number of entries";
  for (Elem a = 0; a < A.size(); ++a) {
    if (j[a] >= A.size()) return "map sends '" + A.name(a) + "' outside the frame";
  }
  for (Elem a = 0; a < A.size(); ++a) {
    if (!A.leq(a, j[a])) return "not inflationary at '" + A.name(a) + "'";
    if (j[j[a]] != j[a]) return "not idempotent at '" + A.name(a) + "'";
  }
  for (Elem a = 0; a < A.size(); ++a) {
    for (Elem b = 0; b < A.size(); ++b) {
      if (j[A.meet(a, b)] != A.meet(j[a], j[b])) {
        return "does not preserve the meet of '" + A.name(a) + "' and '" + A.name(b) + "'";
      }
    }
  }
  return {};
}

Nucleus Nucleus::make(const FiniteFrame& A, std::vector<Elem> map) {
  if (auto v = nucleus_violation(A, map); !v.empty()) throw LawViolation("not a nucleus:", {v});
  return Nucleus(std::move(map));
}

Nucleus Nucleus::identity(const FiniteFrame& A) {
  std::vector<Elem> m(A.size());
  for (Elem a = 0; a < A.size(); ++a) m[a] = a;
  return Nucleus(std::move(m));
}

std::vector<Elem> Nucleus::fixset() const {
  std::vector<Elem> out;
  for (Elem a = 0; a < map_.size(); ++a) {
    if (map_[a] == a) out.push_back(a);
  }
  return out;
}

bool Nucleus::dominates(const FiniteFrame& A, const Nucleus& other) const {
  for (Elem a = 0; a < map_.size(); ++a) {
    if (!A.leq(other.map_[a], map_[a])) return false;
  }
  return true;
}

FiniteFrame fixset_frame(const FiniteFrame& A, const Nucleus& j) {
  const auto fix = j.fixset();
  std::vector<std::string> names;
  for (Elem a : fix) names.push_back(A.name(a));
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem x = 0; x < fix.size(); ++x) {
    for (Elem y = 0; y < fix.size(); ++y) {
      if (A.leq(fix[x], fix[y])) order.emplace_back(x, y);
    }
  }
  return FiniteFrame::from_order(std::move(names), order);
}

Nucleus open_nucleus(const FiniteFrame& A, Elem u) {
  std::vector<Elem> m(A.size());
  for (Elem a = 0; a < A.size(); ++a) m[a] = A.imp(u, a);
  return Nucleus::make(A, std::move(m));
}

Nucleus closed_nucleus(const FiniteFrame& A, Elem u) {
  std::vector<Elem> m(A.size());
  for (Elem a = 0; a < A.size(); ++a) m[a] = A.join(u, a);
  return Nucleus::make(A, std::move(m));
}

Nucleus double_negation_nucleus(const FiniteFrame& A) {
  std::vector<Elem> m(A.size());
  for (Elem a = 0; a < A.size(); ++a) m[a] = A.neg(A.neg(a));
  return Nucleus::make(A, std::move(m));
}

bool is_filter(const FiniteFrame& A, const std::vector<bool>& members) {
  if (members.size() != A.size() || !members[A.top()]) return false;
  for (Elem a = 0; a < A.size(); ++a) {
    if (!members[a]) continue;
    for (Elem b = 0; b < A.size(); ++b) {
      if (A.leq(a, b) && !members[b]) return false;
      if (members[b] && !members[A.meet(a, b)]) return false;
    }
  }
  return true;
}

Filter filter_generated(const FiniteFrame& A, std::span<const Elem> seeds) {
  // In a finite frame the generated filter is the principal filter of the meet.
  const Elem m = A.meet_all(seeds);
  Filter F{std::vector<bool>(A.size(), false)};
  for (Elem b = 0; b < A.size(); ++b) F.members[b] = A.leq(m, b);
  return F;
}

Quotient quotient_by_filter(const FiniteFrame& A, const Filter& F) {
  if (!is_filter(A, F.members)) throw InputError("member set is not a filter");
  const std::size_t n = A.size();
  auto equivalent = [&](Elem a, Elem b) { return F.contains(A.meet(A.imp(a, b), A.imp(b, a))); };

  std::vector<Elem> greatest(n);
  for (Elem a = 0; a < n; ++a) {
    Elem g = a;
    for (Elem b = 0; b < n; ++b) {
      if (equivalent(a, b)) g = A.join(g, b);
    }
    greatest[a] = g;
  }
  std::vector<Elem> reps;
  for (Elem a = 0; a < n; ++a) {
    if (greatest[a] == a) reps.push_back(a);
  }
  std::vector<std::string> names;
  std::map<Elem, Elem> rep_index;
  for (Elem i = 0; i < reps.size(); ++i) {
    names.push_back(A.name(reps[i]));
    rep_index[reps[i]] = i;
  }
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem x = 0; x < reps.size(); ++x) {
    for (Elem y = 0; y < reps.size(); ++y) {
      if (A.leq(reps[x], reps[y])) order.emplace_back(x, y);
    }
  }
  std::vector<Elem> projection(n);
  for (Elem a = 0; a < n; ++a) projection[a] = rep_index.at(greatest[a]);
  std::vector<std::string> warnings;
  if (!F.proper(A)) warnings.push_back("filter contains 0; the quotient is the one-element frame");
  return Quotient{FiniteFrame::from_order(std::move(names), order), std::move(projection),
                  Nucleus::make(A, greatest), std::move(warnings)};
}

Quotient l_sublocale(const FiniteFrame& A, const Term& phi, std::size_t max_tuples) {
  const auto context = free_variables(phi);
  const CompiledTerm program(phi, context);
  std::vector<Elem> carrier(A.size());
  for (Elem a = 0; a < A.size(); ++a) carrier[a] = a;
  std::vector<bool> seen(A.size(), false);
  for_each_assignment<Elem>(carrier, context.size(), max_tuples, [&](std::span<const Elem> v) {
    seen[program.evaluate(A, v)] = true;
    return true;
  });
  std::vector<Elem> seeds;
  for (Elem a = 0; a < A.size(); ++a) {
    if (seen[a]) seeds.push_back(a);
  }
  return quotient_by_filter(A, filter_generated(A, seeds));
}

namespace {

template <class Member>
DirectSublocale finish_direct(const FiniteFrame& A, Member&& is_member) {
  DirectSublocale out;
  out.members.assign(A.size(), false);
  for (Elem l = 0; l < A.size(); ++l) out.members[l] = is_member(l);
  out.xi.assign(A.size(), A.top());
  for (Elem l = 0; l < A.size(); ++l) {
    Elem m = A.top();
    for (Elem x = 0; x < A.size(); ++x) {
      if (out.members[x] && A.leq(l, x)) m = A.meet(m, x);
    }
    out.xi[l] = m;
    if (!out.members[m]) out.meet_closed = false;
  }
  return out;
}

}  // namespace

DirectSublocale demorganization_direct(const FiniteFrame& A) {
  const std::size_t n = A.size();
  const Elem zero = A.bottom();
  // stably_meets[b][r]: every non-zero c ≤ b has c ∧ r ≠ 0.
  std::vector<std::vector<bool>> stably_meets(n, std::vector<bool>(n, true));
  for (Elem b = 0; b < n; ++b) {
    for (Elem r = 0; r < n; ++r) {
      for (Elem c = 0; c < n; ++c) {
        if (c != zero && A.leq(c, b) && A.meet(c, r) == zero) {
          stably_meets[b][r] = false;
          break;
        }
      }
    }
  }
  return finish_direct(A, [&](Elem l) {
    for (Elem a = 0; a < n; ++a) {
      for (Elem r = 0; r < n; ++r) {
        if (!A.leq(r, a)) continue;
        bool premise = true;
        for (Elem b = 0; b < n && premise; ++b) {
          if (!A.leq(b, a)) continue;
          if ((A.meet(b, r) == zero || stably_meets[b][r]) && !A.leq(b, l)) premise = false;
        }
        if (premise && !A.leq(a, l)) return false;
      }
    }
    return true;
  });
}

DirectSublocale gd_sublocale_direct(const FiniteFrame& A) {
  const std::size_t n = A.size();
  return finish_direct(A, [&](Elem l) {
    for (Elem c = 0; c < n; ++c) {
      for (Elem r = 0; r < n; ++r) {
        if (!A.leq(r, c)) continue;
        for (Elem s = 0; s < n; ++s) {
          if (!A.leq(s, c)) continue;
          if (A.leq(A.meet(A.imp(r, s), c), l) && A.leq(A.meet(A.imp(s, r), c), l) && !A.leq(c, l)) {
            return false;
          }
        }
      }
    }
    return true;
  });
}

NucleusChecks nucleus_checks(const FiniteFrame& A, const Nucleus& j) {
  if (auto v = nucleus_violation(A, j.map()); !v.empty()) throw InputError("invalid nucleus: " + v);
  const std::size_t n = A.size();
  NucleusChecks out{j(A.bottom()) == A.bottom(), true, true};
  for (Elem a = 0; a < n && out.weakly_open; ++a) {
    for (Elem b = 0; b < n; ++b) {
      if (j(A.meet(a, b)) == j(A.bottom()) && j(b) != j(A.meet(b, A.neg(a)))) {
        out.weakly_open = false;
        break;
      }
    }
  }
  for (Elem a = 0; a < n && out.implicationally_open; ++a) {
    for (Elem b = 0; b < n && out.implicationally_open; ++b) {
      for (Elem c = 0; c < n; ++c) {
        if (A.leq(j(A.meet(c, a)), j(b)) && !A.leq(j(c), j(A.imp(a, b)))) {
          out.implicationally_open = false;
          break;
        }
      }
    }
  }
  return out;
}

std::vector<Nucleus> enumerate_nuclei(const FiniteFrame& A, std::size_t max_size) {
  const std::size_t n = A.size();
  if (n > max_size) {
    throw CapExceeded("nucleus enumeration needs at most " + std::to_string(max_size) + " elements; frame has " +
                      std::to_string(n));
  }
  std::vector<Nucleus> out;
  for (std::uint32_t subset = 0; subset < (std::uint32_t{1} << n); ++subset) {
    auto in = [&](Elem a) { return (subset >> a) & 1u; };
    if (!in(A.top())) continue;
    bool closed = true;
    for (Elem a = 0; a < n && closed; ++a) {
      if (!in(a)) continue;
      for (Elem b = 0; b < n; ++b) {
        if ((in(b) && !in(A.meet(a, b))) || !in(A.imp(b, a))) {
          closed = false;
          break;
        }
      }
    }
    if (!closed) continue;
    std::vector<Elem> map(n);
    for (Elem a = 0; a < n; ++a) {
      Elem m = A.top();
      for (Elem x = 0; x < n; ++x) {
        if (in(x) && A.leq(a, x)) m = A.meet(m, x);
      }
      map[a] = m;
    }
    out.push_back(Nucleus::make(A, std::move(map)));
  }
  return out;
}

std::vector<Elem> nucleus_discrepancies(const Nucleus& a, const Nucleus& b) {
  std::vector<Elem> out;
  for (Elem x = 0; x < a.map().size() && x < b.map().size(); ++x) {
    if (a(x) != b(x)) out.push_back(x);
  }
  return out;
}

std::string order_arrow_name(const FiniteFrame& A, Elem x, Elem y) { return A.name(x) + "<=" + A.name(y); }

Site site_from_frame(const FiniteFrame& A, const Caps& caps) {
  RawCategory raw;
  raw.objects = A.names();
  const std::size_t n = A.size();
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (A.leq(x, y)) raw.arrows.push_back({order_arrow_name(A, x, y), A.name(x), A.name(y)});
    }
    raw.identities.emplace_back(A.name(x), order_arrow_name(A, x, x));
  }
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = 0; y < n; ++y) {
      if (!A.leq(x, y) || x == y) continue;
      for (Elem z = 0; z < n; ++z) {
        if (!A.leq(y, z) || y == z) continue;
        raw.composition.push_back({order_arrow_name(A, y, z), order_arrow_name(A, x, y), order_arrow_name(A, x, z)});
      }
    }
  }
  auto lattice = make_lattice(FinCategory::from_raw(raw), caps);
  const auto& C = lattice->category();
  std::vector<Sieve> covering;
  for (Elem a = 0; a < n; ++a) {
    const ObjectId obj = C.object(A.name(a));
    for (const auto& S : lattice->sieves(obj)) {
      Elem j = A.bottom();
      for (ArrowId f : members(C, S)) j = A.join(j, *A.find(C.name(C.dom(f))));
      if (j == a) covering.push_back(S);
    }
  }
  return Site(make_topology(lattice, covering));
}

Nucleus nucleus_from_topology(const FiniteFrame& A, const GrothendieckTopology& K) {
  const auto& C = K.category();
  const ObjectId top = C.object(A.name(A.top()));
  std::vector<Elem> map(A.size());
  for (Elem a = 0; a < A.size(); ++a) {
    std::vector<ArrowId> gens{C.arrow(order_arrow_name(A, a, A.top()))};
    const Sieve closed = closure(K, generate_sieve(C, top, gens));
    Elem j = A.bottom();
    for (ArrowId f : members(C, closed)) j = A.join(j, *A.find(C.name(C.dom(f))));
    map[a] = j;
  }
  return Nucleus::make(A, std::move(map));
}

}  // namespace sheafcalc
