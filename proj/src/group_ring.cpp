#include "algdyn/group_ring.hpp"

#include <cctype>

namespace algdyn {

std::optional<Exponent> is_lopsided(const LaurentPoly& f) {
  if (f.is_zero()) return std::nullopt;
  const Int total = l1_norm(f);
  for (const auto& [e, c] : f.terms) {
    Int a = int_abs(c);
    if (a > total - a) return e;
  }
  return std::nullopt;
}

L1InverseApprox l1_inverse_approx(const LaurentPoly& f, const Rat& eps) {
  if (eps <= 0) throw std::invalid_argument("eps must be positive");
  auto gamma0 = is_lopsided(f);
  if (!gamma0) throw NotLopsided("polynomial has no dominating coefficient");
  const Int c = f.coeff(*gamma0);

  // f = c u^{gamma0} (1 - r),  r(e) = -f(e + gamma0)/c for e != 0.
  RatLaurentPoly r(f.dim);
  for (const auto& [e, fc] : f.terms) {
    if (e == *gamma0) continue;
    Rat rc(-fc, c);
    rc.canonicalize();
    r.terms.emplace(exp_add(e, exp_neg(*gamma0)), rc);
  }

  const Exponent shift = exp_neg(*gamma0);
  const Rat inv_c = [&] {
    Rat q(1, c);
    q.canonicalize();
    return q;
  }();

  if (r.is_zero()) {
    return {monomial(f.dim, shift, inv_c), Rat(0)};
  }

  const Rat rho = l1_norm(r);  // strictly below 1 by lopsidedness
  Rat tail = rho;
  int K = 0;
  while (tail > eps) {
    tail *= rho;
    ++K;
  }

  // 1 + r + ... + r^K by Horner: acc <- delta + r*acc.
  RatLaurentPoly acc = delta<Rat>(f.dim);
  for (int k = 0; k < K; ++k) acc = delta<Rat>(f.dim) + mul(r, acc);

  RatLaurentPoly g(f.dim);
  for (const auto& [e, ac] : acc.terms) {
    Rat gc = inv_c * ac;
    gc.canonicalize();
    g.terms.emplace(exp_add(e, shift), gc);
  }
  return {std::move(g), tail};
}

namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  Int read_integer() {
    skip_ws();
    std::size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    std::size_t digits = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == digits) {
      pos = start;
      fail("expected integer");
    }
    return Int(s.substr(start, pos - start));
  }

  int64_t read_small_integer() {
    Int v = read_integer();
    if (!v.fits_slong_p()) fail("integer out of range");
    return v.get_si();
  }
};

}  // namespace

LaurentPoly parse_poly(const std::string& text, Index dim) {
  Cursor cur{text};
  // exponent maps per term, resolved to vectors once the dimension is known
  std::vector<std::pair<std::map<int64_t, int64_t>, Int>> collected;
  int64_t max_index = 0;

  if (cur.done()) cur.fail("empty polynomial");

  bool first = true;
  while (!cur.done()) {
    int sign = 1;
    char p = cur.peek();
    if (p == '+' || p == '-') {
      sign = p == '-' ? -1 : 1;
      ++cur.pos;
    } else if (!first) {
      cur.fail("expected '+' or '-' between terms");
    }

    Int coeff = 1;
    bool saw_factor = false;
    char q = cur.peek();
    if (std::isdigit(static_cast<unsigned char>(q))) {
      coeff = cur.read_integer();
      saw_factor = true;
    }

    std::map<int64_t, int64_t> exps;
    while (true) {
      char n = cur.peek();
      if (saw_factor) {
        if (n != '*') break;
        ++cur.pos;
        n = cur.peek();
      }
      if (n != 'u') {
        if (saw_factor) cur.fail("expected variable after '*'");
        cur.fail("expected coefficient or variable");
      }
      ++cur.pos;
      int64_t index = cur.read_small_integer();
      if (index < 1) cur.fail("variable index must be at least 1");
      if (index > 64) cur.fail("variable index exceeds supported rank 64");
      int64_t e = 1;
      if (cur.peek() == '^') {
        ++cur.pos;
        e = cur.read_small_integer();
      }
      exps[index - 1] += e;
      max_index = std::max(max_index, index);
      saw_factor = true;
    }

    collected.emplace_back(std::move(exps), sign * coeff);
    first = false;
  }

  Index d = dim;
  if (d == 0) {
    d = std::max<int64_t>(1, max_index);
  } else if (max_index > d) {
    throw ParseError("variable index exceeds requested dimension", 0);
  }

  LaurentPoly f(d);
  for (auto& [exps, c] : collected) {
    Exponent e(d, 0);
    for (auto& [i, v] : exps) e[i] = v;
    f.add_term(e, c);
  }
  return f;
}

}  // namespace algdyn
