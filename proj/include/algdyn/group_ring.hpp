#pragma once

#include "algdyn/numeric.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

// Exact arithmetic in Z[Z^d], the ring of Laurent polynomials in d variables
// with integer coefficients.  Polynomials are sparse maps from exponent
// vectors to nonzero coefficients; the map's lexicographic key order is the
// canonical term order used everywhere (serialization, reports).

namespace algdyn {

using Exponent = std::vector<int64_t>;

struct ParseError : std::invalid_argument {
  std::size_t position;
  ParseError(const std::string& msg, std::size_t pos)
      : std::invalid_argument(msg + " at position " + std::to_string(pos)),
        position(pos) {}
};

struct NotLopsided : std::domain_error {
  using std::domain_error::domain_error;
};

template <typename Coeff>
struct LaurentPolyT {
  Index dim = 1;
  std::map<Exponent, Coeff> terms;

  LaurentPolyT() = default;
  explicit LaurentPolyT(Index d) : dim(d) {
    if (d < 1) throw std::invalid_argument("dimension must be positive");
  }

  bool is_zero() const { return terms.empty(); }

  Coeff coeff(const Exponent& e) const {
    auto it = terms.find(e);
    return it == terms.end() ? Coeff(0) : it->second;
  }

  void add_term(const Exponent& e, const Coeff& c) {
    if (static_cast<Index>(e.size()) != dim)
      throw DimensionMismatch("exponent length does not match dimension");
    if (c == 0) return;
    auto [it, inserted] = terms.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }

  friend bool operator==(const LaurentPolyT& a, const LaurentPolyT& b) {
    return a.dim == b.dim && a.terms == b.terms;
  }
};

using LaurentPoly = LaurentPolyT<Int>;
using RatLaurentPoly = LaurentPolyT<Rat>;

template <typename Coeff>
LaurentPolyT<Coeff> constant_poly(Index dim, const Coeff& c) {
  LaurentPolyT<Coeff> p(dim);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

template <typename Coeff>
LaurentPolyT<Coeff> monomial(Index dim, const Exponent& e, const Coeff& c) {
  LaurentPolyT<Coeff> p(dim);
  p.add_term(e, c);
  return p;
}

// delta_0, the multiplicative identity.
template <typename Coeff>
LaurentPolyT<Coeff> delta(Index dim) {
  return constant_poly<Coeff>(dim, Coeff(1));
}

inline Exponent exp_add(const Exponent& a, const Exponent& b) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Exponent exp_neg(const Exponent& a) {
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

template <typename Coeff>
LaurentPolyT<Coeff> operator+(const LaurentPolyT<Coeff>& f,
                              const LaurentPolyT<Coeff>& g) {
  if (f.dim != g.dim) throw DimensionMismatch("adding polynomials of different dimension");
  LaurentPolyT<Coeff> r = f;
  for (const auto& [e, c] : g.terms) r.add_term(e, c);
  return r;
}

template <typename Coeff>
LaurentPolyT<Coeff> operator-(const LaurentPolyT<Coeff>& f) {
  LaurentPolyT<Coeff> r(f.dim);
  for (const auto& [e, c] : f.terms) r.terms.emplace(e, -c);
  return r;
}

template <typename Coeff>
LaurentPolyT<Coeff> operator-(const LaurentPolyT<Coeff>& f,
                              const LaurentPolyT<Coeff>& g) {
  return f + (-g);
}

// Convolution product: the coefficient at gamma is the sum of
// f(gamma1) * g(gamma2) over gamma1 + gamma2 = gamma.
template <typename Coeff>
LaurentPolyT<Coeff> mul(const LaurentPolyT<Coeff>& f,
                        const LaurentPolyT<Coeff>& g) {
  if (f.dim != g.dim)
    throw DimensionMismatch("multiplying polynomials of different dimension");
  LaurentPolyT<Coeff> r(f.dim);
  for (const auto& [e1, c1] : f.terms)
    for (const auto& [e2, c2] : g.terms) r.add_term(exp_add(e1, e2), c1 * c2);
  return r;
}

template <typename Coeff>
LaurentPolyT<Coeff> operator*(const LaurentPolyT<Coeff>& f,
                              const LaurentPolyT<Coeff>& g) {
  return mul(f, g);
}

template <typename Coeff>
LaurentPolyT<Coeff> operator*(const Coeff& c, const LaurentPolyT<Coeff>& f) {
  LaurentPolyT<Coeff> r(f.dim);
  for (const auto& [e, fc] : f.terms) r.add_term(e, c * fc);
  return r;
}

template <typename Coeff>
Coeff l1_norm(const LaurentPolyT<Coeff>& f) {
  Coeff s(0);
  for (const auto& [e, c] : f.terms) s += abs(c);
  return s;
}

// Monomial translation u^gamma * f.
template <typename Coeff>
LaurentPolyT<Coeff> translate(const LaurentPolyT<Coeff>& f, const Exponent& gamma) {
  LaurentPolyT<Coeff> r(f.dim);
  for (const auto& [e, c] : f.terms) r.terms.emplace(exp_add(e, gamma), c);
  return r;
}

// Returns the dominating exponent gamma0 with |f(gamma0)| > sum of the other
// |f(gamma)|, if one exists.  The zero polynomial is never lopsided.
std::optional<Exponent> is_lopsided(const LaurentPoly& f);

struct L1InverseApprox {
  RatLaurentPoly poly;
  Rat tail_bound;  // sound bound on the l1 norm of f*poly - delta_0
};

// Truncated Neumann series around the lopsided term: write
// f = c u^{gamma0} (1 - r) with |r|_1 < 1 and return
// (1/c) u^{-gamma0} (1 + r + ... + r^K) for the smallest K whose tail bound
// |r|_1^{K+1} is at most eps.  The residual f*poly - delta_0 equals -r^{K+1}
// exactly, so |r|_1^{K+1} bounds its l1 norm.
L1InverseApprox l1_inverse_approx(const LaurentPoly& f, const Rat& eps);

// Text grammar: sum of terms "[+|-] c [* u<i>^<e>]...", whitespace
// insignificant, e.g. "3 - u1 - u2" or "1 + u1^-1*u2".  dim 0 infers the
// dimension as the largest variable index present (at least 1).
LaurentPoly parse_poly(const std::string& text, Index dim = 0);

// Reinterpret in a larger dimension, padding exponents with zeros.
template <typename Coeff>
LaurentPolyT<Coeff> embed_dim(const LaurentPolyT<Coeff>& f, Index dim) {
  if (dim < f.dim) throw DimensionMismatch("cannot shrink dimension");
  if (dim == f.dim) return f;
  LaurentPolyT<Coeff> r(dim);
  for (const auto& [e, c] : f.terms) {
    Exponent ee = e;
    ee.resize(dim, 0);
    r.terms.emplace(std::move(ee), c);
  }
  return r;
}

inline RatLaurentPoly to_rational(const LaurentPoly& f) {
  RatLaurentPoly r(f.dim);
  for (const auto& [e, c] : f.terms) r.terms.emplace(e, Rat(c));
  return r;
}

// Canonical serialization: terms in lexicographic exponent order, explicit
// interior signs, no whitespace.  Reparses to an equal polynomial.
template <typename Coeff>
std::string to_canonical_string(const LaurentPolyT<Coeff>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : f.terms) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out << '-';
      first = false;
    } else {
      out << (neg ? '-' : '+');
    }
    Coeff m = neg ? Coeff(-c) : c;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += 'u' + std::to_string(i + 1);
      if (e[i] != 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out << to_string(m);
    } else {
      if (m != 1) out << to_string(m) << '*';
      out << mono;
    }
  }
  return out.str();
}

}  // namespace algdyn
