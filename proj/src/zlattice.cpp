#include "algdyn/zlattice.hpp"

#include <sstream>

namespace algdyn {

Lattice scaled_lattice(Index d, const Int& n) {
  IMat b = IMat::Zero(d, d);
  for (Index i = 0; i < d; ++i) b(i, i) = n;
  return Lattice(std::move(b));
}

std::string factors_to_string(const std::vector<Int>& factors) {
  std::string s = "[";
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += ',';
    s += factors[i].get_str();
  }
  return s + "]";
}

std::string to_string(const FiniteAbelianGroup& g) {
  return factors_to_string(g.invariant_factors);
}

FiniteAbelianGroup quotient_group(const Lattice& L) {
  auto snf = smith_normal_form(L.basis());
  FiniteAbelianGroup g;
  for (const Int& d : snf.diagonal())
    if (d > 1) g.invariant_factors.push_back(d);
  return g;
}

Rat character_value(const Character& chi, const std::vector<Int>& g) {
  const auto& factors = chi.group.invariant_factors;
  if (g.size() != factors.size() || chi.weights.size() != factors.size())
    throw DimensionMismatch("element or weight length does not match the group");
  Rat phase(0);
  for (std::size_t i = 0; i < factors.size(); ++i) {
    Rat term(chi.weights[i] * g[i], factors[i]);
    term.canonicalize();
    phase += term;
  }
  // reduce mod 1 into [0, 1)
  Int whole = phase.get_num() / phase.get_den();
  if (phase < 0 && phase.get_num() % phase.get_den() != 0) whole -= 1;
  phase -= Rat(whole);
  return phase;
}

namespace {

std::vector<std::vector<Int>> odometer(const std::vector<Int>& radii) {
  std::vector<std::vector<Int>> out;
  std::vector<Int> cur(radii.size(), Int(0));
  while (true) {
    out.push_back(cur);
    std::size_t i = radii.size();
    while (i > 0) {
      --i;
      cur[i] += 1;
      if (cur[i] < radii[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (radii.empty()) return out;
  }
}

}  // namespace

std::vector<std::vector<Int>> group_elements(const FiniteAbelianGroup& g) {
  return odometer(g.invariant_factors);
}

std::vector<Character> all_characters(const FiniteAbelianGroup& g) {
  std::vector<Character> out;
  for (auto& w : odometer(g.invariant_factors)) out.push_back(Character{g, w});
  return out;
}

CosetTable::CosetTable(const Lattice& L) : hnf_(hermite_normal_form(L.basis())) {
  const Index d = L.dim();
  if (hnf_.cols() != d) throw std::logic_error("full-rank lattice expected");
  Int count(1);
  for (Index i = 0; i < d; ++i) count *= hnf_(i, i);
  if (count > (Int(1) << 24))
    throw std::invalid_argument("lattice index too large to enumerate");

  std::vector<int64_t> box(d);
  for (Index i = 0; i < d; ++i) box[i] = hnf_(i, i).get_si();
  Exponent cur(d, 0);
  reps_.reserve(count.get_ui());
  while (true) {
    reps_.push_back(cur);
    Index i = d;
    bool done = false;
    while (i > 0) {
      --i;
      if (++cur[i] < box[i]) break;
      cur[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
}

IVec CosetTable::reduce(IVec x) const {
  const Index d = hnf_.rows();
  if (x.size() != d) throw DimensionMismatch("vector length does not match lattice dimension");
  for (Index i = 0; i < d; ++i) {
    Int q = floor_div(x(i), hnf_(i, i));
    if (q != 0) x -= q * hnf_.col(i);
  }
  return x;
}

Index CosetTable::index_of(const IVec& reduced) const {
  const Index d = hnf_.rows();
  Int idx(0);
  for (Index i = 0; i < d; ++i) idx = idx * hnf_(i, i) + reduced(i);
  return static_cast<Index>(idx.get_si());
}

std::vector<Exponent> coset_reps(const Lattice& L) { return CosetTable(L).reps(); }

IMat parse_matrix(const std::string& text) {
  std::vector<std::vector<Int>> rows;
  std::stringstream ss(text);
  std::string row;
  while (std::getline(ss, row, ';')) {
    std::vector<Int> entries;
    std::stringstream rs(row);
    std::string cell;
    while (std::getline(rs, cell, ',')) {
      std::size_t a = cell.find_first_not_of(" \t");
      if (a == std::string::npos) throw ParseError("empty matrix entry", 0);
      std::size_t b = cell.find_last_not_of(" \t");
      try {
        entries.emplace_back(cell.substr(a, b - a + 1));
      } catch (const std::invalid_argument&) {
        throw ParseError("invalid matrix entry '" + cell + "'", 0);
      }
    }
    if (entries.empty()) throw ParseError("empty matrix row", 0);
    rows.push_back(std::move(entries));
  }
  if (rows.empty()) throw ParseError("empty matrix", 0);
  const std::size_t n = rows[0].size();
  for (const auto& r : rows)
    if (r.size() != n) throw ParseError("ragged matrix rows", 0);
  IMat m(static_cast<Index>(rows.size()), static_cast<Index>(n));
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  return m;
}

std::string matrix_to_string(const IMat& m) {
  std::string s;
  for (Index i = 0; i < m.rows(); ++i) {
    if (i) s += ';';
    for (Index j = 0; j < m.cols(); ++j) {
      if (j) s += ',';
      s += m(i, j).get_str();
    }
  }
  return s;
}

IVec to_ivec(const Exponent& e) {
  IVec v(static_cast<Index>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) v(static_cast<Index>(i)) = e[i];
  return v;
}

Exponent to_exponent(const IVec& v) {
  Exponent e(v.size());
  for (Index i = 0; i < v.size(); ++i) {
    if (!v(i).fits_slong_p()) throw std::overflow_error("coordinate out of range");
    e[i] = v(i).get_si();
  }
  return e;
}

}  // namespace algdyn
