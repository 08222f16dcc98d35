#include "algdyn/counterexamples.hpp"

#include <set>

namespace algdyn {

std::string window_to_string(const BinaryWindow& w) {
  std::string s;
  s.reserve(w.cells.size() + 8);
  for (uint8_t b : w.cells) s += b ? '1' : '0';
  s += '@';
  s += std::to_string(w.lo);
  return s;
}

bool sigma_member(const BinaryWindow& w) {
  int runs = 0;
  bool in_run = false;
  for (uint8_t b : w.cells) {
    if (b && !in_run) {
      ++runs;
      in_run = true;
    } else if (!b) {
      in_run = false;
    }
  }
  return runs <= 1;
}

BinaryWindow sigma_tau(const BinaryWindow& w) {
  if (!sigma_member(w)) throw NotInSigma("window has more than one chain of 1s");
  BinaryWindow out;
  out.lo = w.lo - 1;
  out.cells.resize(w.cells.size() + 1);
  for (int64_t n = out.lo; n <= w.hi(); ++n) {
    uint8_t v = (w.at(n) == 0 && w.at(n + 1) == 1) ? 1 : w.at(n);
    out.cells[static_cast<std::size_t>(n - out.lo)] = v;
  }
  return out;
}

std::vector<BinaryWindow> enumerate_sigma_windows(int64_t lo, int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty interval");
  const auto width = static_cast<std::size_t>(hi - lo + 1);
  std::vector<BinaryWindow> out;
  out.emplace_back(lo, std::vector<uint8_t>(width, 0));
  for (std::size_t start = 0; start < width; ++start)
    for (std::size_t end = start; end < width; ++end) {
      std::vector<uint8_t> cells(width, 0);
      for (std::size_t i = start; i <= end; ++i) cells[i] = 1;
      out.emplace_back(lo, std::move(cells));
    }
  return out;
}

bool sigma_injectivity_exhaustive(int64_t width) {
  if (width < 1 || width > 16) throw WindowTooLarge("width must be in [1, 16]");
  auto windows = enumerate_sigma_windows(0, width - 1);
  std::set<std::vector<uint8_t>> images;  // all outputs share lo = -1
  for (const auto& w : windows) {
    auto img = sigma_tau(w);
    if (!images.insert(img.cells).second) return false;
  }
  return true;
}

bool sigma_has_preimage(const BinaryWindow& target) {
  auto candidates = enumerate_sigma_windows(target.lo - 1, target.hi() + 1);
  for (const auto& c : candidates) {
    auto img = sigma_tau(c);
    bool equal = true;
    for (int64_t n = std::min(img.lo, target.lo) - 1; n <= std::max(img.hi(), target.hi()) + 1;
         ++n)
      if (img.at(n) != target.at(n)) {
        equal = false;
        break;
      }
    if (equal) return true;
  }
  return false;
}

BinaryWindow sigma_nonsurjectivity_witness(int64_t width) {
  if (width < 2 || width > 16) throw WindowTooLarge("width must be in [2, 16]");
  std::vector<uint8_t> cells(static_cast<std::size_t>(width), 0);
  cells[0] = 1;
  BinaryWindow w(0, std::move(cells));
  if (sigma_has_preimage(w))
    throw std::logic_error("single-1 window unexpectedly has a preimage");
  return w;
}

ShiftEmbedReport shift_embed_demo(int64_t m) {
  if (m < 1) throw std::invalid_argument("truncation level must be at least 1");
  ShiftEmbedReport rep;
  rep.m = m;

  rep.sample_input = RVec(m);
  for (int64_t i = 0; i < m; ++i) {
    Rat v(1, 2 + i);
    v.canonicalize();
    rep.sample_input(i) = v;
  }
  rep.sample_image = RVec::Zero(m + 1);
  rep.sample_image.tail(m) = rep.sample_input;

  rep.excluded_target = RVec::Zero(m + 1);
  rep.excluded_target(0) = Rat(1, 2);

  // a(x) = a(x') forces x = x' coordinate by coordinate; spot-check on a
  // deterministic family in addition to the structural fact.
  rep.injective_on_samples = true;
  for (int64_t trial = 0; trial < 25 && rep.injective_on_samples; ++trial) {
    RVec x(m), y(m);
    for (int64_t i = 0; i < m; ++i) {
      Rat a((trial + i + 1) % (m + 3), m + 3);
      Rat b((trial * (i + 2) + 1) % (m + 3), m + 3);
      a.canonicalize();
      b.canonicalize();
      x(i) = a;
      y(i) = b;
    }
    RVec ax = RVec::Zero(m + 1), ay = RVec::Zero(m + 1);
    ax.tail(m) = x;
    ay.tail(m) = y;
    bool inputs_equal = true, images_equal = true;
    for (int64_t i = 0; i < m; ++i)
      if (x(i) != y(i)) inputs_equal = false;
    for (int64_t i = 0; i < m + 1; ++i)
      if (ax(i) != ay(i)) images_equal = false;
    if (images_equal && !inputs_equal) rep.injective_on_samples = false;
  }
  return rep;
}

PadicReport padic_times_p_demo(const Int& p, int64_t m) {
  if (m < 1) throw std::invalid_argument("level must be at least 1");
  if (p < 2) throw std::invalid_argument("p must be a prime");
  for (Int q(2); q * q <= p; ++q)
    if (p % q == 0) throw std::invalid_argument("p must be a prime");

  PadicReport rep;
  rep.p = p;
  rep.m = m;

  Int pm(1), pm1;
  for (int64_t i = 0; i < m; ++i) pm *= p;
  pm1 = pm * p;

  // kernel of x -> p x as a map Z/p^m -> Z/p^{m+1}: solutions of
  // p x = 0 mod p^{m+1} are the multiples of p^{m+1}/gcd(p, p^{m+1})
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), pm1.get_mpz_t());
  rep.injective = (pm1 / g) >= pm;

  // cokernel of the 1x1 map [p] against the relation p^{m+1}
  IMat presentation(1, 2);
  presentation(0, 0) = p;
  presentation(0, 1) = pm1;
  auto snf = smith_normal_form(presentation);
  if (snf.S(0, 0) > 1) rep.cokernel.invariant_factors.push_back(snf.S(0, 0));
  rep.image_index = rep.cokernel.order();
  return rep;
}

std::string PeriodicConfiguration::value_at(const Exponent& gamma) const {
  if (static_cast<Index>(gamma.size()) != dim)
    throw DimensionMismatch("point dimension does not match configuration");
  Exponent rep(gamma.size());
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    int64_t n = lattice_basis(static_cast<Index>(i), static_cast<Index>(i)).get_si();
    int64_t r = gamma[i] % n;
    if (r < 0) r += n;
    rep[i] = r;
  }
  return values.at(rep);
}

PeriodicConfiguration periodic_densify(const std::map<Exponent, std::string>& window, Index N,
                                       Index d, const std::string& default_symbol) {
  if (N < 1 || d < 1) throw std::invalid_argument("N and d must be positive");
  for (const auto& [point, symbol] : window) {
    if (static_cast<Index>(point.size()) != d)
      throw WindowTooLarge("window point has the wrong dimension");
    for (int64_t x : point)
      if (x < 0 || x >= N)
        throw WindowTooLarge("window does not fit in the fundamental cube");
  }

  PeriodicConfiguration config;
  config.dim = d;
  config.lattice_basis = IMat::Zero(d, d);
  for (Index i = 0; i < d; ++i) config.lattice_basis(i, i) = N;

  Exponent cur(d, 0);
  while (true) {
    auto it = window.find(cur);
    config.values[cur] = it == window.end() ? default_symbol : it->second;
    Index i = d;
    bool done = false;
    while (i > 0) {
      --i;
      if (++cur[i] < N) break;
      cur[i] = 0;
      if (i == 0) done = true;
    }
    if (done) break;
  }
  return config;
}

}  // namespace algdyn
