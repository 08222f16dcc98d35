#pragma once

#include "algdyn/group_ring.hpp"
#include "algdyn/normal_form.hpp"
#include "algdyn/zlattice.hpp"

#include <string>

// Principal algebraic systems X_f over Z^d and the exact group structure of
// their Lambda-fixed-point strata X_f(Lambda), computed on the dual side as
// the cokernel of the multiplication-by-f matrix on Z[Z^d / Lambda].

namespace algdyn {

struct PrincipalSystem {
  LaurentPoly f;
};

struct VanishingCharacterValue : std::domain_error {
  using std::domain_error::domain_error;
};

// The floating-point oracle could not certify its own rounding.
struct OracleImprecise : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Matrix of multiplication by f on the free abelian group Z[G], G = Z^d /
// Lambda, in the coset_reps basis: entry (r, s) sums the coefficients f(gamma)
// over all gamma with s + gamma congruent to r mod Lambda.
IMat action_matrix(const LaurentPoly& f, const Lattice& L);

// X_f(Lambda) is homeomorphic to T^k x F: k counts the zero invariant
// factors of the action matrix, F collects the factors above 1.
struct FixedPointStructure {
  Index torus_rank = 0;
  FiniteAbelianGroup torsion;
  SmithDecomposition presentation;
};

FixedPointStructure fixed_point_structure(const LaurentPoly& f, const Lattice& L);

inline FixedPointStructure fixed_point_structure(const PrincipalSystem& sys, const Lattice& L) {
  return fixed_point_structure(sys.f, L);
}

// Independent check on |F|: the absolute product of f-hat over all characters
// of G, evaluated in quadruple precision and rounded.  Raises
// VanishingCharacterValue when some character value vanishes (the stratum
// then has a torus factor) and OracleImprecise when the pre-rounding
// residual reaches the 1e-6 tolerance.
Int torsion_count_oracle(const LaurentPoly& f, const Lattice& L);

// M_f = Z[Z^d]/(f) is torsion exactly when f is nonzero, the group ring
// being an integral domain.
inline bool is_torsion_module(const LaurentPoly& f) { return !f.is_zero(); }

struct ExpansivityCertificate {
  enum class Kind { Lopsided, Grid, Unknown };
  Kind kind = Kind::Unknown;
  Exponent gamma0;        // for Kind::Lopsided
  int grid_exponent = 0;  // for Kind::Grid

  bool certified() const { return kind != Kind::Unknown; }
};

// Sound positive certificates only; never refutes.  Lopsidedness certifies
// directly.  Otherwise, for d <= 2, |f| is evaluated on the uniform torus
// grid of spacing h = 2^-grid_exponent and certified when the grid minimum
// exceeds K h sqrt(d)/2 for the Lipschitz bound
// K = 2 pi sum |f(gamma)| |gamma|_1.
ExpansivityCertificate expansivity_certificate(const LaurentPoly& f, int grid_exponent);

enum class MixingVerdict { Mixing, Unknown };

// Lopsidedness certifies l1 invertibility and hence mixing; no other
// certificate is in scope.
MixingVerdict mixing_certificate(const LaurentPoly& f);

// "fixedpoints f=<poly> lattice=<matrix> torus_rank=<k> torsion=[m1,m2,...]"
std::string fixedpoints_report_line(const LaurentPoly& f, const Lattice& L,
                                    const FixedPointStructure& s);

}  // namespace algdyn
