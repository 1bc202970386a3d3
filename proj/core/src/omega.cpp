#include "sheafcalc/omega.hpp"

#include <algorithm>

#include "sheafcalc/error.hpp"

namespace sheafcalc {

Site presheaf_site(std::shared_ptr<const SieveLattice> lattice) {
  return Site(trivial_topology(std::move(lattice)));
}

namespace {

// Formula evaluation without input validation; used for tables.
Sieve bottom_of(const Site& site, ObjectId c) { return closure(site.topology(), empty_sieve(site.category(), c)); }

Sieve join_of(const Site& site, const Sieve& S, const Sieve& T) {
  return closure(site.topology(), sieve_union(S, T));
}

Sieve implies_of(const Site& site, const Sieve& S, const Sieve& T) {
  const auto& C = site.category();
  SieveMask m = 0;
  const auto fan = C.fan_in(S.root());
  for (std::size_t p = 0; p < fan.size(); ++p) {
    const SieveMask s = C.pullback_mask(fan[p], S.mask());
    const SieveMask t = C.pullback_mask(fan[p], T.mask());
    if ((s & ~t) == 0) m |= SieveMask{1} << p;
  }
  return Sieve(S.root(), m);
}

Sieve not_of(const Site& site, const Sieve& S) {
  const auto& C = site.category();
  const auto& J = site.topology();
  SieveMask m = 0;
  const auto fan = C.fan_in(S.root());
  for (std::size_t p = 0; p < fan.size(); ++p) {
    const ArrowId f = fan[p];
    bool ok = true;
    for (ArrowId g : C.fan_in(C.dom(f))) {
      if (contains(C, S, *C.compose(f, g)) && !J.covers(empty_sieve(C, C.dom(g)))) {
        ok = false;
        break;
      }
    }
    if (ok) m |= SieveMask{1} << p;
  }
  return Sieve(S.root(), m);
}

void require_closed(const Site& site, const Sieve& S) {
  site.lattice()->id(S);
  if (!is_closed(site.topology(), S)) {
    throw InputError("sieve " + to_string(site.category(), S) + " on '" + site.category().name(S.root()) +
                     "' is not closed for the topology");
  }
}

void require_pair(const Site& site, const Sieve& S, const Sieve& T) {
  if (S.root() != T.root()) throw InputError("sieves have different roots");
  require_closed(site, S);
  require_closed(site, T);
}

// Ω(c) evaluated structurally through the formulas above.
struct SieveAlgebra {
  using value_type = Sieve;
  const Site& site;
  ObjectId c;
  Sieve bottom() const { return bottom_of(site, c); }
  Sieve top() const { return maximal_sieve(site.category(), c); }
  Sieve meet(const Sieve& a, const Sieve& b) const { return sieve_intersection(a, b); }
  Sieve join(const Sieve& a, const Sieve& b) const { return join_of(site, a, b); }
  Sieve imp(const Sieve& a, const Sieve& b) const { return implies_of(site, a, b); }
  Sieve neg(const Sieve& a) const { return not_of(site, a); }
};

}  // namespace

Sieve omega_bottom(const Site& site, ObjectId c) { return bottom_of(site, c); }

Sieve omega_top(const Site& site, ObjectId c) { return maximal_sieve(site.category(), c); }

Sieve omega_meet(const Site& site, const Sieve& S, const Sieve& T) {
  require_pair(site, S, T);
  return sieve_intersection(S, T);
}

Sieve omega_join(const Site& site, const Sieve& S, const Sieve& T) {
  require_pair(site, S, T);
  return join_of(site, S, T);
}

Sieve omega_implies(const Site& site, const Sieve& S, const Sieve& T) {
  require_pair(site, S, T);
  return implies_of(site, S, T);
}

Sieve omega_not(const Site& site, const Sieve& S) {
  require_closed(site, S);
  return not_of(site, S);
}

OmegaFiber::OmegaFiber(const Site& site, ObjectId c) : object_(c), elements_(closed_sieves(site.topology(), c)) {
  const std::size_t n = elements_.size();
  for (std::size_t i = 0; i < n; ++i) index_.emplace(elements_[i].mask(), i);
  auto at = [&](const Sieve& S) {
    auto it = index_.find(S.mask());
    if (it == index_.end()) {
      throw std::logic_error("Ω operation left the closed sieves at '" + site.category().name(c) + "'");
    }
    return it->second;
  };
  bottom_ = at(bottom_of(site, c));
  top_ = at(maximal_sieve(site.category(), c));
  meet_.resize(n * n);
  join_.resize(n * n);
  imp_.resize(n * n);
  neg_.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    neg_[a] = at(not_of(site, elements_[a]));
    for (std::size_t b = 0; b < n; ++b) {
      meet_[a * n + b] = at(sieve_intersection(elements_[a], elements_[b]));
      join_[a * n + b] = at(join_of(site, elements_[a], elements_[b]));
      imp_[a * n + b] = at(implies_of(site, elements_[a], elements_[b]));
    }
  }
}

std::size_t OmegaFiber::index_of(const Sieve& S) const {
  auto it = index_.find(S.mask());
  if (S.root() != object_ || it == index_.end()) throw InputError("sieve is not an element of this Ω fiber");
  return it->second;
}

Sieve eval_term_omega(const Site& site, ObjectId c, const Term& t,
                      const std::map<std::string, Sieve>& assignment) {
  std::vector<std::string> context;
  std::vector<Sieve> values;
  for (const auto& v : free_variables(t)) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw InputError("unbound variable '" + v + "'");
    if (it->second.root() != c) throw InputError("value for '" + v + "' is not a sieve on the evaluation object");
    require_closed(site, it->second);
    context.push_back(v);
    values.push_back(it->second);
  }
  return CompiledTerm(t, context).evaluate(SieveAlgebra{site, c}, std::span<const Sieve>(values));
}

InternalVerdict holds_internally(const Site& site, const HornSequent& s) {
  const auto& C = site.category();
  const std::size_t max_tuples = site.lattice()->caps().max_assignments;
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const OmegaFiber fiber(site, object_at(c));
    std::vector<std::size_t> carrier(fiber.size());
    for (std::size_t i = 0; i < carrier.size(); ++i) carrier[i] = i;
    if (auto w = first_counterexample(s, fiber, std::span<const std::size_t>(carrier), max_tuples)) {
      InternalWitness witness{object_at(c), {}};
      for (std::size_t i = 0; i < s.context.size(); ++i) {
        witness.assignment.emplace_back(s.context[i], fiber.element((*w)[i]));
      }
      return InternalVerdict{false, std::move(witness)};
    }
  }
  return {};
}

InternalVerdict validates_logic(const Site& site, const LogicSpec& logic) {
  return holds_internally(site, axiom_sequent(logic.axiom));
}

FiniteFrame subobject_frame(const Site& site, ObjectId c) {
  const auto& C = site.category();
  const auto closed = closed_sieves(site.topology(), c);
  std::vector<std::string> names;
  for (const auto& S : closed) names.push_back(to_string(C, S));
  std::vector<std::pair<Elem, Elem>> order;
  for (Elem a = 0; a < closed.size(); ++a) {
    for (Elem b = 0; b < closed.size(); ++b) {
      if (closed[a].subset_of(closed[b])) order.emplace_back(a, b);
    }
  }
  return FiniteFrame::from_order(std::move(names), order);
}

std::string to_string(const Site& site, const InternalWitness& w) {
  const auto& C = site.category();
  std::string out = "at '" + C.name(w.object) + "':";
  for (const auto& [v, S] : w.assignment) out += " " + v + " = " + to_string(C, S);
  return out;
}

}  // namespace sheafcalc
