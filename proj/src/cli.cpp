#include "algdyn/cli.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "algdyn/counterexamples.hpp"
#include "algdyn/equivariant.hpp"
#include "algdyn/group_ring.hpp"
#include "algdyn/normal_form.hpp"
#include "algdyn/principal_system.hpp"
#include "algdyn/zlattice.hpp"

namespace algdyn {
namespace {

using nlohmann::json;

enum class Format { Text, JsonLines };

struct Sink {
  std::ostream& out;
  Format fmt;

  void line(const std::string& text, const json& record) const {
    if (fmt == Format::Text)
      out << text << '\n';
    else
      out << record.dump() << '\n';
  }
};

std::string bool_text(bool b) { return b ? "true" : "false"; }

std::string trim(const std::string& s) {
  auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto p = s.find(sep, start);
    out.push_back(s.substr(start, p == std::string::npos ? std::string::npos : p - start));
    if (p == std::string::npos) break;
    start = p + 1;
  }
  return out;
}

int64_t parse_int64(const std::string& text) {
  std::string t = trim(text);
  std::size_t used = 0;
  int64_t v = std::stoll(t, &used);
  if (used != t.size() || t.empty()) throw std::invalid_argument("bad integer: " + text);
  return v;
}

std::string exponent_text(const Exponent& e) {
  std::string s = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(e[i]);
  }
  return s + ")";
}

std::string rvec_text(const RVec& v) {
  std::string s = "(";
  for (Index i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v(i).get_str();
  }
  return s + ")";
}

json rvec_json(const RVec& v) {
  json a = json::array();
  for (Index i = 0; i < v.size(); ++i) a.push_back(v(i).get_str());
  return a;
}

json factors_json(const std::vector<Int>& fs) {
  json a = json::array();
  for (const auto& f : fs) a.push_back(f.get_str());
  return a;
}

json exponent_json(const Exponent& e) {
  json a = json::array();
  for (int64_t v : e) a.push_back(v);
  return a;
}

std::vector<Int> diagonal_of(const IVec& v) {
  std::vector<Int> out;
  out.reserve(static_cast<std::size_t>(v.size()));
  for (Index i = 0; i < v.size(); ++i) out.push_back(v(i));
  return out;
}

std::vector<Rat> parse_rational_list(const std::string& text) {
  std::vector<Rat> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) {
    std::string t = trim(item);
    Rat q;
    try {
      q = Rat(t);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad rational: " + item);
    }
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + item);
    q.canonicalize();
    out.push_back(q);
  }
  return out;
}

IVec parse_factor_list(const std::string& text) {
  std::string t = trim(text);
  if (t.size() >= 2 && t.front() == '[' && t.back() == ']') t = t.substr(1, t.size() - 2);
  auto items = split(t, ',');
  IVec out(static_cast<Index>(items.size()));
  for (std::size_t i = 0; i < items.size(); ++i) {
    std::string v = trim(items[i]);
    try {
      out(static_cast<Index>(i)) = Int(v);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad factor: " + items[i]);
    }
  }
  return out;
}

std::map<Exponent, std::string> parse_window(const std::string& text, Index d) {
  std::map<Exponent, std::string> win;
  for (const auto& entry : split(text, ';')) {
    auto colon = entry.find(':');
    if (colon == std::string::npos)
      throw std::invalid_argument("window entry needs coords:symbol, got " + entry);
    std::string symbol = entry.substr(colon + 1);
    if (symbol.empty()) throw std::invalid_argument("empty symbol in window entry " + entry);
    Exponent e;
    for (const auto& tok : split(entry.substr(0, colon), ',')) e.push_back(parse_int64(tok));
    if (static_cast<Index>(e.size()) != d)
      throw std::invalid_argument("window coordinate arity mismatch in entry " + entry);
    if (!win.emplace(std::move(e), symbol).second)
      throw std::invalid_argument("duplicate window cell in entry " + entry);
  }
  return win;
}

std::vector<Lattice> parse_lattice_family(const std::string& spec, Index d) {
  if (spec.rfind("diag:N<=", 0) == 0) {
    int64_t k = parse_int64(spec.substr(8));
    if (k < 1) throw std::invalid_argument("lattice family bound must be positive");
    std::vector<Lattice> out;
    for (int64_t n = 1; n <= k; ++n) out.push_back(scaled_lattice(d, Int(n)));
    return out;
  }
  if (spec.rfind("random:", 0) == 0) {
    auto parts = split(spec.substr(7), ',');
    if (parts.size() != 2) throw std::invalid_argument("random family needs count,seed");
    int64_t count = parse_int64(parts[0]);
    int64_t seed = parse_int64(parts[1]);
    if (count < 1) throw std::invalid_argument("random family count must be positive");
    std::mt19937 rng(static_cast<uint32_t>(seed));
    std::vector<Lattice> out;
    for (int64_t s = 0; s < count; ++s) {
      IMat h = IMat::Zero(d, d);
      for (Index i = 0; i < d; ++i) {
        unsigned long p = 1 + rng() % 6;
        h(i, i) = Int(p);
        for (Index j = 0; j < i; ++j) h(i, j) = Int(rng() % p);
      }
      out.emplace_back(h);
    }
    return out;
  }
  throw std::invalid_argument("unknown lattice family: " + spec);
}

LaurentPoly parse_embedded(const std::string& text, Index d) {
  LaurentPoly f = parse_poly(text);
  if (f.dim > d) throw DimensionMismatch("polynomial dimension exceeds lattice dimension");
  return embed_dim(f, d);
}

int cmd_mul(const std::string& f_text, const std::string& g_text, const Sink& sink) {
  LaurentPoly f = parse_poly(f_text);
  LaurentPoly g = parse_poly(g_text);
  Index d = std::max(f.dim, g.dim);
  f = embed_dim(f, d);
  g = embed_dim(g, d);
  LaurentPoly p = mul(f, g);
  std::string cf = to_canonical_string(f);
  std::string cg = to_canonical_string(g);
  std::string cp = to_canonical_string(p);
  sink.line("mul f=" + cf + " g=" + cg + " product=" + cp,
            {{"record", "mul"}, {"f", cf}, {"g", cg}, {"product", cp}});
  return 0;
}

int cmd_snf(const std::string& matrix_text, const Sink& sink) {
  IMat a = parse_matrix(matrix_text);
  auto snf = smith_normal_form(a);
  std::string cm = matrix_to_string(a);
  std::string inv = factors_to_string(snf.diagonal());
  sink.line("snf matrix=" + cm + " invariants=" + inv,
            {{"record", "snf"}, {"matrix", cm}, {"invariants", factors_json(snf.diagonal())}});
  return 0;
}

int cmd_fixedpoints(const std::string& f_text, const std::string& lattice_text, bool oracle,
                    const Sink& sink) {
  Lattice L(parse_matrix(lattice_text));
  LaurentPoly f = parse_embedded(f_text, L.dim());
  auto s = fixed_point_structure(f, L);
  json rec{{"record", "fixedpoints"},
           {"f", to_canonical_string(f)},
           {"lattice", matrix_to_string(L.basis())},
           {"torus_rank", s.torus_rank},
           {"torsion", factors_json(s.torsion.invariant_factors)}};
  sink.line(fixedpoints_report_line(f, L, s), rec);
  if (oracle) {
    try {
      Int n = torsion_count_oracle(f, L);
      sink.line("oracle count=" + n.get_str(), {{"record", "oracle"}, {"count", n.get_str()}});
    } catch (const VanishingCharacterValue&) {
      sink.line("oracle vanishing_character=true",
                {{"record", "oracle"}, {"vanishing_character", true}});
    }
  }
  return 0;
}

int cmd_certify(const std::string& f_text, int grid_exponent, const Sink& sink) {
  LaurentPoly f = parse_poly(f_text);
  auto cert = expansivity_certificate(f, grid_exponent);
  auto mix = mixing_certificate(f);
  std::string cf = to_canonical_string(f);
  std::string mix_text = mix == MixingVerdict::Mixing ? "mixing" : "unknown";
  std::string text = "certify f=" + cf;
  json rec{{"record", "certify"}, {"f", cf}, {"mixing", mix_text}};
  switch (cert.kind) {
    case ExpansivityCertificate::Kind::Lopsided:
      text += " expansive=lopsided gamma0=" + exponent_text(cert.gamma0);
      rec["expansive"] = "lopsided";
      rec["gamma0"] = exponent_json(cert.gamma0);
      break;
    case ExpansivityCertificate::Kind::Grid:
      text += " expansive=grid grid_exponent=" + std::to_string(cert.grid_exponent);
      rec["expansive"] = "grid";
      rec["grid_exponent"] = cert.grid_exponent;
      break;
    case ExpansivityCertificate::Kind::Unknown:
      text += " expansive=unknown";
      rec["expansive"] = "unknown";
      break;
  }
  text += " mixing=" + mix_text;
  sink.line(text, rec);
  return cert.certified() ? 0 : 1;
}

int cmd_surjunctivity(const std::string& a_text, const std::string& f_text,
                      const std::string& b_text, const std::string& lattices_spec,
                      const Sink& sink) {
  LaurentPoly a = parse_poly(a_text);
  LaurentPoly f = parse_poly(f_text);
  Index d = std::max(a.dim, f.dim);
  a = embed_dim(a, d);
  f = embed_dim(f, d);
  AffineMapSpec tau{a, parse_rational_list(b_text)};
  auto lattices = parse_lattice_family(lattices_spec, d);
  auto report = surjunctivity_experiment(tau, f, lattices);
  if (sink.fmt == Format::Text) {
    sink.out << report_to_text(report);
  } else {
    for (const auto& v : report.strata)
      sink.out << json{{"record", "stratum"},
                       {"lattice", matrix_to_string(v.lattice_basis)},
                       {"injective", v.injective},
                       {"surjective", v.surjective}}
                      .dump()
               << '\n';
    sink.out << json{{"record", "verdict"},
                     {"verdict", report.overall == Overall::Consistent ? "Consistent"
                                                                       : "Counterexample"}}
                    .dump()
             << '\n';
  }
  return report.overall == Overall::CounterexampleFound ? 1 : 0;
}

int cmd_dcc(const std::string& factors_text, const std::string& matrix_text, const Sink& sink) {
  auto e = make_endo(parse_factor_list(factors_text), parse_matrix(matrix_text));
  auto st = image_chain_stabilization(e);
  bool di = dual_injective(e);
  bool ds = dual_surjective(e);
  std::string cf = factors_to_string(diagonal_of(e.factors));
  std::string cm = matrix_to_string(e.matrix);
  std::string text = "dcc factors=" + cf + " matrix=" + cm + " k=" + std::to_string(st.k) +
                     " image_free_rank=" + std::to_string(st.image_free_rank) +
                     " image_torsion=" + to_string(st.image_torsion) +
                     " dual_injective=" + bool_text(di) + " dual_surjective=" + bool_text(ds);
  sink.line(text, {{"record", "dcc"},
                   {"factors", factors_json(diagonal_of(e.factors))},
                   {"matrix", cm},
                   {"k", st.k},
                   {"image_free_rank", st.image_free_rank},
                   {"image_torsion", factors_json(st.image_torsion.invariant_factors)},
                   {"dual_injective", di},
                   {"dual_surjective", ds}});
  return 0;
}

int cmd_sigma(int64_t width, const Sink& sink) {
  bool inj = sigma_injectivity_exhaustive(width);
  BinaryWindow wit = sigma_nonsurjectivity_witness(width);
  std::string w = window_to_string(wit);
  sink.line("injective=" + std::string(bool_text(inj)) + " witness_nonsurjective=" + w,
            {{"record", "sigma"}, {"width", width}, {"injective", inj},
             {"witness_nonsurjective", w}});
  return inj ? 0 : 1;
}

int cmd_densify(const std::string& window_text, int64_t modulus, int64_t dim,
                const std::string& default_symbol, const Sink& sink) {
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  auto window = parse_window(window_text, dim);
  auto cfg = periodic_densify(window, Index(modulus), Index(dim), default_symbol);
  std::string cl = matrix_to_string(cfg.lattice_basis);
  sink.line("densify dim=" + std::to_string(cfg.dim) + " modulus=" + std::to_string(modulus) +
                " lattice=" + cl,
            {{"record", "densify"}, {"dim", cfg.dim}, {"modulus", modulus}, {"lattice", cl}});
  for (const auto& [rep, sym] : cfg.values)
    sink.line("cell " + exponent_text(rep) + "=" + sym,
              {{"record", "cell"}, {"cell", exponent_text(rep)}, {"value", sym}});
  return 0;
}

int cmd_demo_shift(int64_t m, const Sink& sink) {
  auto rep = shift_embed_demo(m);
  sink.line("shift_embed m=" + std::to_string(rep.m) + " sample_input=" +
                rvec_text(rep.sample_input) + " sample_image=" + rvec_text(rep.sample_image) +
                " excluded_target=" + rvec_text(rep.excluded_target) +
                " injective_on_samples=" + bool_text(rep.injective_on_samples),
            {{"record", "shift_embed"},
             {"m", rep.m},
             {"sample_input", rvec_json(rep.sample_input)},
             {"sample_image", rvec_json(rep.sample_image)},
             {"excluded_target", rvec_json(rep.excluded_target)},
             {"injective_on_samples", rep.injective_on_samples}});
  return 0;
}

int cmd_demo_padic(const std::string& p_text, int64_t m, const Sink& sink) {
  Int p;
  try {
    p = Int(trim(p_text));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("bad prime: " + p_text);
  }
  auto rep = padic_times_p_demo(p, m);
  sink.line("padic p=" + rep.p.get_str() + " m=" + std::to_string(rep.m) +
                " injective=" + bool_text(rep.injective) +
                " image_index=" + rep.image_index.get_str() +
                " cokernel=" + to_string(rep.cokernel),
            {{"record", "padic"},
             {"p", rep.p.get_str()},
             {"m", rep.m},
             {"injective", rep.injective},
             {"image_index", rep.image_index.get_str()},
             {"cokernel", factors_json(rep.cokernel.invariant_factors)}});
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact analysis of algebraic Z^d-actions"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  app.add_option("--output", format_name, "report format")
      ->check(CLI::IsMember({"text", "json-lines"}));

  std::string f_text, g_text, a_text, b_text, matrix_text, lattice_text, lattices_spec;
  std::string window_text, default_symbol = ".", demo_kind, p_text = "2", factors_text;
  int grid_exponent = 8;
  int64_t width = 0, modulus = 0, dim = 1, m = 1;
  bool oracle = false;

  auto* c_mul = app.add_subcommand("mul", "multiply two Laurent polynomials");
  c_mul->add_option("--f", f_text)->required();
  c_mul->add_option("--g", g_text)->required();

  auto* c_snf = app.add_subcommand("snf", "Smith normal form invariants");
  c_snf->add_option("--matrix", matrix_text)->required();

  auto* c_fp = app.add_subcommand("fixedpoints", "periodic-point group structure");
  c_fp->add_option("--f", f_text)->required();
  c_fp->add_option("--lattice", lattice_text)->required();
  c_fp->add_flag("--oracle", oracle, "cross-check torsion count by character product");

  auto* c_cert = app.add_subcommand("certify", "expansivity and mixing certificates");
  c_cert->add_option("--f", f_text)->required();
  c_cert->add_option("--grid-exponent", grid_exponent)->check(CLI::Range(1, 16));

  auto* c_surj = app.add_subcommand("surjunctivity", "stratum injectivity/surjectivity sweep");
  c_surj->add_option("--a", a_text)->required();
  c_surj->add_option("--f", f_text)->required();
  c_surj->add_option("--b", b_text, "translation, comma-separated rationals");
  c_surj->add_option("--lattices", lattices_spec, "diag:N<=K or random:count,seed")->required();

  auto* c_dcc = app.add_subcommand("dcc", "image chain stabilization of an endomorphism");
  c_dcc->add_option("--factors", factors_text)->required();
  c_dcc->add_option("--matrix", matrix_text)->required();

  auto* c_sigma = app.add_subcommand("sigma", "golden mean shift injectivity demo");
  c_sigma->add_option("--width", width)->required();

  auto* c_dens = app.add_subcommand("densify", "tile a window into a periodic configuration");
  c_dens->add_option("--window", window_text, "coords:symbol list, e.g. 0,0:a;1,2:b");
  c_dens->add_option("--modulus", modulus)->required();
  c_dens->add_option("--dim", dim)->required();
  c_dens->add_option("--default", default_symbol);

  auto* c_demo = app.add_subcommand("demo", "counterexample demonstrations");
  c_demo->add_option("--kind", demo_kind)->required()->check(CLI::IsMember({"shift", "padic"}));
  c_demo->add_option("--m", m)->check(CLI::Range(int64_t{1}, int64_t{64}));
  c_demo->add_option("--p", p_text);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  Sink sink{out, format_name == "text" ? Format::Text : Format::JsonLines};
  try {
    if (c_mul->parsed()) return cmd_mul(f_text, g_text, sink);
    if (c_snf->parsed()) return cmd_snf(matrix_text, sink);
    if (c_fp->parsed()) return cmd_fixedpoints(f_text, lattice_text, oracle, sink);
    if (c_cert->parsed()) return cmd_certify(f_text, grid_exponent, sink);
    if (c_surj->parsed()) return cmd_surjunctivity(a_text, f_text, b_text, lattices_spec, sink);
    if (c_dcc->parsed()) return cmd_dcc(factors_text, matrix_text, sink);
    if (c_sigma->parsed()) return cmd_sigma(width, sink);
    if (c_dens->parsed()) return cmd_densify(window_text, modulus, dim, default_symbol, sink);
    if (c_demo->parsed())
      return demo_kind == "shift" ? cmd_demo_shift(m, sink) : cmd_demo_padic(p_text, m, sink);
  } catch (const ParseError& e) {
    err << "ParseError: " << e.what() << '\n';
    return 2;
  } catch (const DimensionMismatch& e) {
    err << "DimensionMismatch: " << e.what() << '\n';
    return 2;
  } catch (const EquivarianceViolation& e) {
    err << "EquivarianceViolation: " << e.what() << '\n';
    return 2;
  } catch (const NotInSigma& e) {
    err << "NotInSigma: " << e.what() << '\n';
    return 2;
  } catch (const WindowTooLarge& e) {
    err << "WindowTooLarge: " << e.what() << '\n';
    return 2;
  } catch (const OracleImprecise& e) {
    err << "OracleImprecise: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace algdyn
