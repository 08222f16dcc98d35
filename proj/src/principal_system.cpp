#include "algdyn/principal_system.hpp"

#include <quadmath.h>

#include <sstream>

namespace algdyn {

IMat action_matrix(const LaurentPoly& f, const Lattice& L) {
  if (f.dim != L.dim())
    throw DimensionMismatch("polynomial and lattice dimensions differ");
  CosetTable table(L);
  const Index n = table.size();
  IMat M = IMat::Zero(n, n);
  for (Index s = 0; s < n; ++s) {
    const IVec rep = to_ivec(table.reps()[s]);
    for (const auto& [gamma, c] : f.terms) {
      IVec pos = rep + to_ivec(gamma);
      Index r = table.index_of_general(pos);
      M(r, s) += c;
    }
  }
  return M;
}

FixedPointStructure fixed_point_structure(const LaurentPoly& f, const Lattice& L) {
  FixedPointStructure out;
  out.presentation = smith_normal_form(action_matrix(f, L));
  for (const Int& d : out.presentation.diagonal()) {
    if (d == 0)
      ++out.torus_rank;
    else if (d > 1)
      out.torsion.invariant_factors.push_back(d);
  }
  return out;
}

namespace {

constexpr double kVanishTolerance = 1e-9;
constexpr double kRoundTolerance = 1e-6;

__float128 to_quad(const Int& z) {
  return strtoflt128(z.get_str().c_str(), nullptr);
}

__float128 to_quad(const Rat& q) {
  return to_quad(Int(q.get_num())) / to_quad(Int(q.get_den()));
}

struct QuadComplex {
  __float128 re = 0, im = 0;
};

QuadComplex operator+(QuadComplex a, QuadComplex b) { return {a.re + b.re, a.im + b.im}; }
QuadComplex operator*(QuadComplex a, QuadComplex b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

const __float128 kTwoPi = 2 * acosq((__float128)-1);

QuadComplex unit_phase(const Rat& phase) {
  __float128 angle = kTwoPi * to_quad(phase);
  return {cosq(angle), sinq(angle)};
}

Int quad_to_int(__float128 x) {
  char buf[128];
  quadmath_snprintf(buf, sizeof buf, "%.0Qf", x);
  return Int(buf);
}

std::vector<std::vector<Int>> odometer_weights(const std::vector<Int>& radii) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(radii.size(), Int(0));
  while (true) {
    out.push_back(cur);
    std::size_t i = radii.size();
    bool done = radii.empty();
    while (i > 0) {
      --i;
      cur[i] += 1;
      if (cur[i] < radii[i]) break;
      cur[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return out;
}

Rat frac_part(Rat phase) {
  Int whole = phase.get_num() / phase.get_den();
  if (phase < 0 && phase.get_num() % phase.get_den() != 0) whole -= 1;
  phase -= Rat(whole);
  return phase;
}

}  // namespace

Int torsion_count_oracle(const LaurentPoly& f, const Lattice& L) {
  if (f.dim != L.dim())
    throw DimensionMismatch("polynomial and lattice dimensions differ");
  const Index d = L.dim();
  auto snf = smith_normal_form(L.basis());
  std::vector<Int> s = snf.diagonal();

  // characters of Z^d / Lambda: weights w against x -> (U x) mod s
  std::vector<std::vector<Int>> weights = odometer_weights(s);
  QuadComplex product{1, 0};
  bool vanished = false;
  for (const auto& w : weights) {
    QuadComplex value{0, 0};
    for (const auto& [gamma, c] : f.terms) {
      IVec ug = snf.U * to_ivec(gamma);
      Rat phase(0);
      for (Index i = 0; i < d; ++i) {
        Rat term(w[i] * ug(i), s[i]);
        term.canonicalize();
        phase += term;
      }
      QuadComplex root = unit_phase(frac_part(phase));
      __float128 cq = to_quad(c);
      value = value + QuadComplex{cq * root.re, cq * root.im};
    }
    if (sqrtq(value.re * value.re + value.im * value.im) < kVanishTolerance) {
      vanished = true;
      break;
    }
    product = product * value;
  }
  if (vanished)
    throw VanishingCharacterValue("character value vanishes; the stratum has a torus factor");

  __float128 rounded = roundq(product.re);
  __float128 residual =
      sqrtq((product.re - rounded) * (product.re - rounded) + product.im * product.im);
  if (residual >= kRoundTolerance)
    throw OracleImprecise("pre-rounding residual exceeds tolerance");
  Int count = quad_to_int(rounded);
  return int_abs(count);
}

ExpansivityCertificate expansivity_certificate(const LaurentPoly& f, int grid_exponent) {
  if (grid_exponent < 1 || grid_exponent > 16)
    throw std::invalid_argument("grid exponent out of range");
  ExpansivityCertificate cert;
  if (auto gamma0 = is_lopsided(f)) {
    cert.kind = ExpansivityCertificate::Kind::Lopsided;
    cert.gamma0 = *gamma0;
    return cert;
  }
  const Index d = f.dim;
  if (d > 2 || f.is_zero()) return cert;

  // Lipschitz constant K = 2 pi sum |f(gamma)| |gamma|_1
  __float128 K = 0;
  for (const auto& [gamma, c] : f.terms) {
    int64_t norm1 = 0;
    for (int64_t e : gamma) norm1 += e < 0 ? -e : e;
    K += to_quad(int_abs(c)) * norm1;
  }
  K *= kTwoPi;

  const int64_t steps = int64_t(1) << grid_exponent;
  const __float128 h = __float128(1) / __float128(steps);
  __float128 min_sq = -1;
  std::vector<int64_t> m(d, 0);
  while (true) {
    QuadComplex value{0, 0};
    for (const auto& [gamma, c] : f.terms) {
      int64_t dot = 0;
      for (Index i = 0; i < d; ++i) dot += gamma[i] * m[i];
      __float128 angle = kTwoPi * __float128(dot) * h;
      __float128 cq = to_quad(c);
      value = value + QuadComplex{cq * cosq(angle), cq * sinq(angle)};
    }
    __float128 sq = value.re * value.re + value.im * value.im;
    if (min_sq < 0 || sq < min_sq) min_sq = sq;

    Index i = d;
    bool done = false;
    while (i > 0) {
      --i;
      if (++m[i] < steps) break;
      m[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }

  const __float128 threshold = K * h * sqrtq(__float128(d)) / 2;
  if (min_sq > threshold * threshold) {
    cert.kind = ExpansivityCertificate::Kind::Grid;
    cert.grid_exponent = grid_exponent;
  }
  return cert;
}

MixingVerdict mixing_certificate(const LaurentPoly& f) {
  return is_lopsided(f) ? MixingVerdict::Mixing : MixingVerdict::Unknown;
}

std::string fixedpoints_report_line(const LaurentPoly& f, const Lattice& L,
                                    const FixedPointStructure& s) {
  std::ostringstream out;
  out << "fixedpoints f=" << to_canonical_string(f) << " lattice=" << matrix_to_string(L.basis())
      << " torus_rank=" << s.torus_rank << " torsion=" << to_string(s.torsion);
  return out.str();
}

}  // namespace algdyn
