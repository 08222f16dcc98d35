#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "algdyn/equivariant.hpp"
#include "algdyn/group_ring.hpp"
#include "algdyn/normal_form.hpp"

// Shared helpers for tests.  Random draws go through rand_range (modulo, not
// std::uniform_int_distribution) so sequences are identical across standard
// library implementations.

namespace testsupport {

using namespace algdyn;

inline int64_t rand_range(std::mt19937& rng, int64_t lo, int64_t hi) {
  return lo + static_cast<int64_t>(rng() % static_cast<uint64_t>(hi - lo + 1));
}

inline IMat rand_matrix(std::mt19937& rng, Index rows, Index cols, int64_t lo, int64_t hi) {
  IMat a(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) a(i, j) = Int(rand_range(rng, lo, hi));
  return a;
}

inline LaurentPoly rand_poly(std::mt19937& rng, Index dim, int terms, int64_t coeff_bound,
                             int64_t exp_bound) {
  LaurentPoly f(dim);
  for (int t = 0; t < terms; ++t) {
    Exponent e(dim);
    for (Index i = 0; i < dim; ++i) e[i] = rand_range(rng, -exp_bound, exp_bound);
    f.add_term(e, Int(rand_range(rng, -coeff_bound, coeff_bound)));
  }
  return f;
}

// Random lopsided polynomial: the coefficient at gamma0 is forced to exceed
// the l1 norm of the rest by margin.
inline LaurentPoly rand_lopsided(std::mt19937& rng, Index dim, int terms, int64_t margin) {
  LaurentPoly f;
  do {
    f = rand_poly(rng, dim, terms, 3, 1);
  } while (f.is_zero());
  Exponent gamma0(dim, 0);
  Int rest(0);
  for (const auto& [e, c] : f.terms)
    if (e != gamma0) rest += int_abs(c);
  f.terms[gamma0] = rest + margin;
  return f;
}

// Invariant factors by the gcd-of-k-minors formula, independent of the SNF
// elimination.  Returns min(rows, cols) values, zeros last.
inline std::vector<Int> gcd_minor_invariants(const IMat& a) {
  const Index m = a.rows(), n = a.cols();
  const Index k_max = std::min(m, n);
  std::vector<Int> out;
  Int prev(1);
  bool dead = false;
  for (Index k = 1; k <= k_max; ++k) {
    Int g(0);
    if (!dead) {
      std::vector<Index> rows(k), cols(k);
      for (Index i = 0; i < k; ++i) rows[i] = i;
      auto next_combo = [](std::vector<Index>& c, Index n_total) {
        Index k_sz = static_cast<Index>(c.size());
        Index i = k_sz - 1;
        while (true) {
          if (c[i] + (k_sz - i) < n_total) {
            ++c[i];
            for (Index j = i + 1; j < k_sz; ++j) c[j] = c[j - 1] + 1;
            return true;
          }
          if (i == 0) return false;
          --i;
        }
      };
      do {
        for (Index i = 0; i < k; ++i) cols[i] = i;
        do {
          IMat sub(k, k);
          for (Index i = 0; i < k; ++i)
            for (Index j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
          Int d = bareiss_determinant(sub);
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
        } while (next_combo(cols, n));
      } while (next_combo(rows, m));
    }
    if (g == 0) {
      dead = true;
      out.push_back(Int(0));
    } else {
      out.push_back(g / prev);
      prev = g;
    }
  }
  return out;
}

// Exhaustive maps on a finite module (all invariant factors positive, small
// order): elements enumerated in mixed radix.
inline std::vector<IVec> module_elements(const IVec& factors) {
  std::vector<IVec> out;
  IVec x = IVec::Zero(factors.size());
  while (true) {
    out.push_back(x);
    Index i = factors.size();
    while (i > 0) {
      --i;
      x(i) += 1;
      if (x(i) < factors(i)) break;
      x(i) = 0;
      if (i == 0) return out;
    }
    if (factors.size() == 0) return out;
  }
}

inline IVec apply_mod(const EndoOnFinitelyGenerated& e, const IVec& x) {
  IVec y = e.matrix * x;
  for (Index i = 0; i < y.size(); ++i) {
    mpz_mod(y(i).get_mpz_t(), y(i).get_mpz_t(), e.factors(i).get_mpz_t());
  }
  return y;
}

inline std::vector<Int> ivec_to_vec(const IVec& v) {
  std::vector<Int> out;
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

inline bool brute_injective(const EndoOnFinitelyGenerated& e) {
  std::set<std::vector<Int>> images;
  for (const auto& x : module_elements(e.factors))
    if (!images.insert(ivec_to_vec(apply_mod(e, x))).second) return false;
  return true;
}

inline bool brute_surjective(const EndoOnFinitelyGenerated& e) {
  auto elems = module_elements(e.factors);
  std::set<std::vector<Int>> images;
  for (const auto& x : elems) images.insert(ivec_to_vec(apply_mod(e, x)));
  return images.size() == elems.size();
}

// Random endomorphism of a module with the given invariant factors: entry
// (i, j) must be divisible by d_i / gcd(d_i, d_j), with zero factors treated
// as infinite (free summands).
inline EndoOnFinitelyGenerated rand_endo(std::mt19937& rng, const IVec& factors,
                                         int64_t coeff_bound) {
  const Index n = factors.size();
  IMat m(n, n);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      Int c(rand_range(rng, -coeff_bound, coeff_bound));
      if (factors(i) == 0) {
        m(i, j) = factors(j) == 0 ? c : Int(0);
      } else if (factors(j) == 0) {
        m(i, j) = c;
      } else {
        Int g;
        mpz_gcd(g.get_mpz_t(), factors(i).get_mpz_t(), factors(j).get_mpz_t());
        m(i, j) = c * (factors(i) / g);
      }
    }
  return make_endo(factors, m);
}

// Divisibility chain d_1 | d_2 | ... with product at most order_cap, zeros
// (free summands) appended afterwards.
inline IVec rand_factor_chain(std::mt19937& rng, int torsion_count, int free_count,
                              int64_t order_cap, int64_t max_step = 4) {
  IVec f(torsion_count + free_count);
  Int prod(1);
  Int d(1);
  for (int i = 0; i < torsion_count; ++i) {
    Int step(rand_range(rng, i == 0 ? 2 : 1, max_step));
    if (prod * d * step > order_cap) step = 1;
    d *= step;
    if (i == 0 && d < 2) d = 2;
    f(i) = d;
    prod *= d;
  }
  for (int i = 0; i < free_count; ++i) f(torsion_count + i) = 0;
  return f;
}

}  // namespace testsupport
