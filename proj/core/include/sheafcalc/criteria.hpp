#pragma once

// Site-level characterizations of intermediate logics, independent of the Ω
// evaluation path. On presheaf sites:
//   classical      <=> C is a groupoid
//   demorgan       <=> C satisfies the right Ore condition
//   goedel_dummett <=> of two arrows with common codomain, one factors through the other
//   kreisel_putnam <=> every stably non-empty sieve is indecomposable

#include "sheafcalc/omega.hpp"

namespace sheafcalc {

bool is_groupoid(const FinCategory& C);
bool right_ore(const FinCategory& C);
bool gd_factorization(const FinCategory& C);

/// For all J-closed R, S on c: {f | f*R ⊆ f*S or f*S ⊆ f*R} ∈ J(c).
bool gd_site_criterion(const Site& site);

/// Every pullback of S along an arrow into its root is non-empty.
bool is_stably_nonempty(const FinCategory& C, const Sieve& S);
/// R is not the union of two proper subsieves (exhaustive search).
bool is_indecomposable_bruteforce(const SieveLattice& lattice, const Sieve& R);
/// Any two members of R factor through a common member of R.
bool is_indecomposable_char(const FinCategory& C, const Sieve& R);

bool kp_presheaf_criterion(const SieveLattice& lattice);

}  // namespace sheafcalc
