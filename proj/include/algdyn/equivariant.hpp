#pragma once

#include "algdyn/group_ring.hpp"
#include "algdyn/normal_form.hpp"
#include "algdyn/principal_system.hpp"
#include "algdyn/zlattice.hpp"

#include <string>
#include <vector>

// Equivariant affine maps on principal systems, analyzed entirely on the
// dual side: injectivity and surjectivity of the compact map translate
// through Pontryagin duality into surjectivity and injectivity of an
// endomorphism of a finitely generated abelian group, where everything is
// exact linear algebra over Z.

namespace algdyn {

struct EquivarianceViolation : std::domain_error {
  using std::domain_error::domain_error;
};

// Linear part a (acting by dual multiplication) plus a torus translation b,
// given as one rational mod 1 per coset representative; a single entry
// broadcasts to every representative.
struct AffineMapSpec {
  LaurentPoly a;
  std::vector<Rat> b;
};

// Endomorphism of Z^n / R where R is spanned by d_j e_j over the positive
// factors; factors follow SNF order (divisibility chain, zeros last, zeros
// meaning free summands).  matrix must map R into R.
struct EndoOnFinitelyGenerated {
  IVec factors;
  IMat matrix;
};

// Validates shape, factor chain and relation preservation.
EndoOnFinitelyGenerated make_endo(IVec factors, IMat matrix);

// Generator columns d_j e_j of the relation lattice R.
IMat relation_columns(const IVec& factors);

// Dual of the linear part of an affine map on the stratum X_f(Lambda):
// multiplication by a on the cokernel of action_matrix(f, Lambda), written
// in the SNF coordinates of that cokernel.
EndoOnFinitelyGenerated stratum_endomorphism(const LaurentPoly& a, const LaurentPoly& f,
                                             const Lattice& L);

// e injective as a module map (the compact-side map is then surjective).
bool dual_injective(const EndoOnFinitelyGenerated& e);

// e surjective as a module map (the compact-side map is then injective).
bool dual_surjective(const EndoOnFinitelyGenerated& e);

struct StabilizationResult {
  Index k = 0;  // smallest k with im(e^k) = im(e^{k+1})
  // structure of the stabilized compact-side image, dual to Z^n / K_k
  Index image_free_rank = 0;
  FiniteAbelianGroup image_torsion;
};

// Kernel chain K_j = {x : M^j x in R} ascends and stabilizes by
// Noetherianity; its stabilization index equals the stabilization index of
// the compact-side image chain.
StabilizationResult image_chain_stabilization(const EndoOnFinitelyGenerated& e);

enum class RankVerdict { InjectiveImpliesSurjective, DualNotSurjective };

// Rational-rank test on a torsion-free dual: nonzero determinant means the
// dual is surjective over Q, so the compact-side endomorphism is surjective
// whenever it is injective.
RankVerdict rational_rank_check(const IMat& dual_matrix);

struct StratumVerdict {
  IMat lattice_basis;
  bool injective = false;
  bool surjective = false;
};

enum class Overall { Consistent, CounterexampleFound };

struct SurjunctivityReport {
  std::vector<StratumVerdict> strata;
  Overall overall = Overall::Consistent;
};

// Per-lattice injectivity/surjectivity of the affine map restricted to the
// stratum.  The translation is first checked to be fixed by the shift action
// and to lie in the stratum; it then affects neither verdict.
SurjunctivityReport surjunctivity_experiment(const AffineMapSpec& tau, const LaurentPoly& f,
                                             const std::vector<Lattice>& lattices);

// "stratum lattice=<matrix> injective=<bool> surjective=<bool>" lines
// followed by "verdict=<Consistent|Counterexample>".
std::string report_to_text(const SurjunctivityReport& report);

}  // namespace algdyn
