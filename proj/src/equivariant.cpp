#include "algdyn/equivariant.hpp"

#include <sstream>

namespace algdyn {

namespace {

// Preimage lattice {x : P x in R}, as generator columns.
IMat preimage_lattice(const IMat& P, const IMat& relations) {
  const Index n = P.rows();
  IMat B(n, P.cols() + relations.cols());
  B.leftCols(P.cols()) = P;
  B.rightCols(relations.cols()) = -relations;
  IMat K = kernel_basis(B);
  return K.topRows(n);
}

}  // namespace

IMat relation_columns(const IVec& factors) {
  const Index n = factors.size();
  Index r = 0;
  for (Index i = 0; i < n; ++i)
    if (factors(i) != 0) ++r;
  IMat C = IMat::Zero(n, r);
  Index j = 0;
  for (Index i = 0; i < n; ++i)
    if (factors(i) != 0) C(i, j++) = factors(i);
  return C;
}

EndoOnFinitelyGenerated make_endo(IVec factors, IMat matrix) {
  const Index n = factors.size();
  if (matrix.rows() != n || matrix.cols() != n)
    throw std::invalid_argument("endomorphism matrix does not match the presentation");
  bool seen_zero = false;
  for (Index i = 0; i < n; ++i) {
    if (factors(i) < 0) throw std::invalid_argument("invariant factors must be nonnegative");
    if (factors(i) == 0) {
      seen_zero = true;
    } else {
      if (seen_zero) throw std::invalid_argument("zero invariant factors must come last");
      if (i > 0 && factors(i - 1) != 0 && factors(i) % factors(i - 1) != 0)
        throw std::invalid_argument("invariant factors must form a divisibility chain");
    }
  }
  for (Index j = 0; j < n; ++j) {
    if (factors(j) == 0) continue;
    for (Index i = 0; i < n; ++i) {
      Int moved = matrix(i, j) * factors(j);
      if (factors(i) == 0) {
        if (moved != 0)
          throw std::invalid_argument("endomorphism does not preserve the relation lattice");
      } else if (moved % factors(i) != 0) {
        throw std::invalid_argument("endomorphism does not preserve the relation lattice");
      }
    }
  }
  return {std::move(factors), std::move(matrix)};
}

EndoOnFinitelyGenerated stratum_endomorphism(const LaurentPoly& a, const LaurentPoly& f,
                                             const Lattice& L) {
  if (a.dim != f.dim || a.dim != L.dim())
    throw DimensionMismatch("polynomial and lattice dimensions differ");
  auto snf = smith_normal_form(action_matrix(f, L));
  IMat Ma = action_matrix(a, L);
  IMat M = snf.U * Ma * unimodular_inverse(snf.U);
  const Index n = M.rows();
  IVec factors(n);
  for (Index i = 0; i < n; ++i) factors(i) = snf.S(i, i);
  return make_endo(std::move(factors), std::move(M));
}

bool dual_injective(const EndoOnFinitelyGenerated& e) {
  IMat C = relation_columns(e.factors);
  IMat K = preimage_lattice(e.matrix, C);
  return lattice_span_equal<Int>(K, C);
}

bool dual_surjective(const EndoOnFinitelyGenerated& e) {
  const Index n = e.factors.size();
  IMat C = relation_columns(e.factors);
  IMat B(n, n + C.cols());
  B.leftCols(n) = e.matrix;
  B.rightCols(C.cols()) = C;
  auto snf = smith_normal_form(B);
  for (const Int& d : snf.diagonal())
    if (d != 1) return false;
  return true;
}

StabilizationResult image_chain_stabilization(const EndoOnFinitelyGenerated& e) {
  const Index n = e.factors.size();
  IMat C = relation_columns(e.factors);

  Index cap = n + 2;
  for (Index i = 0; i < n; ++i)
    if (e.factors(i) > 1) cap += static_cast<Index>(mpz_sizeinbase(e.factors(i).get_mpz_t(), 2));

  IMat prev = hermite_normal_form(C);
  IMat P = IMat::Identity(n, n);
  for (Index k = 1; k <= cap; ++k) {
    P = e.matrix * P;
    IMat cur = hermite_normal_form(preimage_lattice(P, C));
    if (exact_equal(cur, prev)) {
      StabilizationResult out;
      out.k = k - 1;
      auto snf = smith_normal_form(prev);
      Index rank = 0;
      for (const Int& d : snf.diagonal()) {
        if (d != 0) ++rank;
        if (d > 1) out.image_torsion.invariant_factors.push_back(d);
      }
      out.image_free_rank = n - rank;
      return out;
    }
    prev = std::move(cur);
  }
  throw std::logic_error("kernel chain failed to stabilize within the Noetherian bound");
}

RankVerdict rational_rank_check(const IMat& dual_matrix) {
  if (dual_matrix.rows() != dual_matrix.cols())
    throw std::invalid_argument("rational rank check requires a square matrix");
  return bareiss_determinant(dual_matrix) != 0 ? RankVerdict::InjectiveImpliesSurjective
                                               : RankVerdict::DualNotSurjective;
}

namespace {

Rat frac_part(Rat x) {
  Int whole = x.get_num() / x.get_den();
  if (x < 0 && x.get_num() % x.get_den() != 0) whole -= 1;
  x -= Rat(whole);
  return x;
}

// The translation must be a single point of the stratum fixed by the shift
// action: constant across coset representatives, with value beta satisfying
// beta * f(1, ..., 1) integral.
void check_translation(const AffineMapSpec& tau, const LaurentPoly& f, const Lattice& L) {
  if (tau.b.empty()) return;
  const Int index = L.index();
  if (tau.b.size() != 1 && Int(static_cast<long>(tau.b.size())) != index)
    throw EquivarianceViolation("translation length matches neither 1 nor the lattice index");
  Rat beta = frac_part(tau.b.front());
  for (const Rat& v : tau.b)
    if (frac_part(v) != beta)
      throw EquivarianceViolation("translation is not fixed by the shift action");
  Int weight(0);
  for (const auto& [e, c] : f.terms) weight += c;
  Rat image = beta * weight;
  image.canonicalize();
  if (image.get_den() != 1)
    throw EquivarianceViolation("translation does not lie in the stratum");
}

}  // namespace

SurjunctivityReport surjunctivity_experiment(const AffineMapSpec& tau, const LaurentPoly& f,
                                             const std::vector<Lattice>& lattices) {
  SurjunctivityReport report;
  for (const Lattice& L : lattices) {
    check_translation(tau, f, L);
    EndoOnFinitelyGenerated e = stratum_endomorphism(tau.a, f, L);
    StratumVerdict v;
    v.lattice_basis = L.basis();
    v.injective = dual_surjective(e);
    v.surjective = dual_injective(e);
    if (v.injective && !v.surjective) report.overall = Overall::CounterexampleFound;
    report.strata.push_back(std::move(v));
  }
  return report;
}

std::string report_to_text(const SurjunctivityReport& report) {
  std::ostringstream out;
  for (const auto& v : report.strata)
    out << "stratum lattice=" << matrix_to_string(v.lattice_basis)
        << " injective=" << (v.injective ? "true" : "false")
        << " surjective=" << (v.surjective ? "true" : "false") << "\n";
  out << "verdict="
      << (report.overall == Overall::Consistent ? "Consistent" : "Counterexample") << "\n";
  return out.str();
}

}  // namespace algdyn
