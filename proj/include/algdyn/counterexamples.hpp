#pragma once

#include "algdyn/zlattice.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

// Executable gallery of small counterexamples and constructions: the Sigma
// subshift with its injective non-surjective cellular map, the coordinate
// shift embedding on torus truncations, multiplication by p on p-adic digit
// truncations, and the periodic densification of a finite window.

namespace algdyn {

struct NotInSigma : std::domain_error {
  using std::domain_error::domain_error;
};

struct WindowTooLarge : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Bits on an integer interval [lo, lo + cells.size() - 1], read as a
// bi-infinite sequence by extending with zeros.
struct BinaryWindow {
  int64_t lo = 0;
  std::vector<uint8_t> cells;

  BinaryWindow() = default;
  BinaryWindow(int64_t lo_, std::vector<uint8_t> cells_)
      : lo(lo_), cells(std::move(cells_)) {
    if (cells.empty()) throw std::invalid_argument("window must be nonempty");
  }

  int64_t hi() const { return lo + static_cast<int64_t>(cells.size()) - 1; }
  uint8_t at(int64_t n) const {
    return n < lo || n > hi() ? 0 : cells[static_cast<std::size_t>(n - lo)];
  }
  friend bool operator==(const BinaryWindow&, const BinaryWindow&) = default;
};

// "<bits>@<lo>"
std::string window_to_string(const BinaryWindow& w);

// Membership in Sigma: the 1s form at most one contiguous run.
bool sigma_member(const BinaryWindow& w);

// tau(x)(n) = 1 if (x(n), x(n+1)) = (0, 1), else x(n).  The output lives on
// [lo - 1, hi]; the chain of 1s grows one cell to the left.
BinaryWindow sigma_tau(const BinaryWindow& w);

// All Sigma windows on [lo, hi], zero-extended: the zero window plus every
// contiguous run.  There are 1 + w(w+1)/2 of them for width w.
std::vector<BinaryWindow> enumerate_sigma_windows(int64_t lo, int64_t hi);

// Exhaustively checks that tau is injective on the Sigma windows of the
// given width (as zero-extended configurations).
bool sigma_injectivity_exhaustive(int64_t width);

// Exhaustive preimage search for a target configuration, over Sigma windows
// one cell wider than the target on each side.
bool sigma_has_preimage(const BinaryWindow& target);

// The single-1 window of the given width (1 at the left end), verified by
// exhaustive search to have no tau-preimage.
BinaryWindow sigma_nonsurjectivity_witness(int64_t width);

// Coordinate shift a(x)(0) = 0, a(x)(n) = x(n-1) on torus truncations:
// injective from level m to level m + 1, and misses every target whose
// coordinate 0 is nonzero.
struct ShiftEmbedReport {
  int64_t m = 0;
  RVec sample_input;     // level m
  RVec sample_image;     // level m + 1
  RVec excluded_target;  // level m + 1, no preimage
  bool injective_on_samples = false;
};

ShiftEmbedReport shift_embed_demo(int64_t m);

// Multiplication by p as the digit-shift map Z/p^m -> Z/p^{m+1}: injective
// with image of index p (cokernel Z/p), witnessing non-surjectivity of
// multiplication by p on the p-adic integers at every truncation level.
struct PadicReport {
  Int p;
  int64_t m = 0;
  bool injective = false;
  FiniteAbelianGroup cokernel;
  Int image_index;
};

PadicReport padic_times_p_demo(const Int& p, int64_t m);

// Configuration fixed by Lambda = (N Z)^d, determined by its values on the
// fundamental cube.
struct PeriodicConfiguration {
  Index dim = 1;
  IMat lattice_basis;
  std::map<Exponent, std::string> values;  // keyed by coset representative

  std::string value_at(const Exponent& gamma) const;
};

// Tiles the window Omega (a map from points of [0, N)^d to symbols) into an
// (N Z)^d-periodic configuration, filling unspecified cells of the
// fundamental cube with default_symbol.
PeriodicConfiguration periodic_densify(const std::map<Exponent, std::string>& window, Index N,
                                       Index d, const std::string& default_symbol);

}  // namespace algdyn
