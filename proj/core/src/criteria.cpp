#include "sheafcalc/criteria.hpp"

namespace sheafcalc {

bool is_groupoid(const FinCategory& C) {
  for (std::size_t i = 0; i < C.arrow_count(); ++i) {
    const ArrowId f = arrow_at(i);
    bool invertible = false;
    for (ArrowId g : C.hom(C.cod(f), C.dom(f))) {
      if (*C.compose(g, f) == C.identity(C.dom(f)) && *C.compose(f, g) == C.identity(C.cod(f))) {
        invertible = true;
        break;
      }
    }
    if (!invertible) return false;
  }
  return true;
}

bool right_ore(const FinCategory& C) {
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    const auto fan = C.fan_in(object_at(a));
    for (ArrowId f : fan) {
      for (ArrowId g : fan) {
        bool completed = false;
        for (ArrowId h : C.fan_in(C.dom(f))) {
          for (ArrowId k : C.fan_in(C.dom(g))) {
            if (C.dom(h) == C.dom(k) && *C.compose(f, h) == *C.compose(g, k)) {
              completed = true;
              break;
            }
          }
          if (completed) break;
        }
        if (!completed) return false;
      }
    }
  }
  return true;
}

bool gd_factorization(const FinCategory& C) {
  for (std::size_t a = 0; a < C.object_count(); ++a) {
    const auto fan = C.fan_in(object_at(a));
    for (ArrowId f : fan) {
      for (ArrowId g : fan) {
        if (!factors_through(C, f, g) && !factors_through(C, g, f)) return false;
      }
    }
  }
  return true;
}

bool gd_site_criterion(const Site& site) {
  const auto& C = site.category();
  const auto& J = site.topology();
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    const auto obj = object_at(c);
    const auto closed = closed_sieves(J, obj);
    const auto fan = C.fan_in(obj);
    for (const auto& R : closed) {
      for (const auto& S : closed) {
        SieveMask m = 0;
        for (std::size_t p = 0; p < fan.size(); ++p) {
          const auto r = pullback_sieve(C, fan[p], R);
          const auto s = pullback_sieve(C, fan[p], S);
          if (r.subset_of(s) || s.subset_of(r)) m |= SieveMask{1} << p;
        }
        if (!J.covers(Sieve(obj, m))) return false;
      }
    }
  }
  return true;
}

bool is_stably_nonempty(const FinCategory& C, const Sieve& S) {
  for (ArrowId f : C.fan_in(S.root())) {
    if (pullback_sieve(C, f, S).empty()) return false;
  }
  return true;
}

bool is_indecomposable_bruteforce(const SieveLattice& lattice, const Sieve& R) {
  const auto sieves = lattice.sieves(R.root());
  for (const auto& S : sieves) {
    if (!S.subset_of(R) || S == R) continue;
    for (const auto& T : sieves) {
      if (!T.subset_of(R) || T == R) continue;
      if (sieve_union(S, T) == R) return false;
    }
  }
  return true;
}

bool is_indecomposable_char(const FinCategory& C, const Sieve& R) {
  const auto mem = members(C, R);
  for (ArrowId f : mem) {
    for (ArrowId g : mem) {
      bool common = false;
      for (ArrowId h : mem) {
        if (factors_through(C, f, h) && factors_through(C, g, h)) {
          common = true;
          break;
        }
      }
      if (!common) return false;
    }
  }
  return true;
}

bool kp_presheaf_criterion(const SieveLattice& lattice) {
  const auto& C = lattice.category();
  for (std::size_t c = 0; c < C.object_count(); ++c) {
    for (const auto& R : lattice.sieves(object_at(c))) {
      if (is_stably_nonempty(C, R) && !is_indecomposable_char(C, R)) return false;
    }
  }
  return true;
}

}  // namespace sheafcalc
