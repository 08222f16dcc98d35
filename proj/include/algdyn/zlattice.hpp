#pragma once

#include "algdyn/group_ring.hpp"
#include "algdyn/normal_form.hpp"
#include "algdyn/numeric.hpp"

#include <string>
#include <vector>

// Finite-index sublattices of Z^d, the quotient group Z^d / Lambda with
// deterministic coset representatives, and character theory of finite
// abelian groups (which are Pontryagin self-dual).

namespace algdyn {

// Columns of basis generate Lambda; |det| is the index [Z^d : Lambda].
class Lattice {
 public:
  explicit Lattice(IMat basis) : basis_(std::move(basis)) {
    if (basis_.rows() != basis_.cols() || basis_.rows() < 1)
      throw std::invalid_argument("lattice basis must be square and nonempty");
    det_ = bareiss_determinant(basis_);
    if (det_ == 0) throw std::invalid_argument("lattice basis is singular");
  }

  Index dim() const { return basis_.rows(); }
  const IMat& basis() const { return basis_; }
  Int index() const { return int_abs(det_); }

 private:
  IMat basis_;
  Int det_;
};

// diag(n, ..., n) in d dimensions.
Lattice scaled_lattice(Index d, const Int& n);

struct FiniteAbelianGroup {
  // each factor at least 2, each dividing the next; empty list = trivial group
  std::vector<Int> invariant_factors;

  Int order() const {
    Int o(1);
    for (const Int& m : invariant_factors) o *= m;
    return o;
  }
  bool trivial() const { return invariant_factors.empty(); }
  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;
};

// "[2,4]", "[]"
std::string to_string(const FiniteAbelianGroup& g);
std::string factors_to_string(const std::vector<Int>& factors);

// Invariant factors of Z^d / Lambda with factors equal to 1 dropped.
FiniteAbelianGroup quotient_group(const Lattice& L);

// Finite abelian groups are self-dual.
inline FiniteAbelianGroup dual_group(const FiniteAbelianGroup& g) { return g; }

struct Character {
  FiniteAbelianGroup group;
  std::vector<Int> weights;  // weight i in [0, invariant_factor_i)
};

// Exact phase in [0, 1): chi(g) = e^{2 pi i phase}.
Rat character_value(const Character& chi, const std::vector<Int>& g);

std::vector<Character> all_characters(const FiniteAbelianGroup& g);
std::vector<std::vector<Int>> group_elements(const FiniteAbelianGroup& g);

// Hermite fundamental domain of a full-rank lattice: reduction of arbitrary
// integer vectors into the box spanned by the HNF diagonal, enumeration of
// the box in lexicographic order, and rep-to-position lookup.
class CosetTable {
 public:
  explicit CosetTable(const Lattice& L);

  Index size() const { return static_cast<Index>(reps_.size()); }
  const std::vector<Exponent>& reps() const { return reps_; }
  const IMat& hnf() const { return hnf_; }

  IVec reduce(IVec x) const;
  Index index_of(const IVec& reduced) const;
  Index index_of_general(const IVec& x) const { return index_of(reduce(x)); }

 private:
  IMat hnf_;
  std::vector<Exponent> reps_;
};

// Exactly index-many vectors, one per coset, reduced to the HNF fundamental
// domain, in lexicographic order.
std::vector<Exponent> coset_reps(const Lattice& L);

// Lattice text format: rows separated by ';', entries by ','.
IMat parse_matrix(const std::string& text);
std::string matrix_to_string(const IMat& m);

IVec to_ivec(const Exponent& e);
Exponent to_exponent(const IVec& v);

}  // namespace algdyn
