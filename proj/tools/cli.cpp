// Copyright 2026 The ubraid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "ubraid/braidgen.hpp"
#include "ubraid/conformance.hpp"
#include "ubraid/document.hpp"
#include "ubraid/entangle.hpp"
#include "ubraid/fusion.hpp"
#include "ubraid/links.hpp"
#include "ubraid/physics.hpp"

namespace ubraid::cli {
namespace {

constexpr const char* kTolEnv = "UBRAID_TOLERANCE";
constexpr std::uint64_t kDefaultSeed = 20080213;

double env_tolerance() {
  const char* s = std::getenv(kTolEnv);
  if (s == nullptr || *s == '\0') return default_tolerance;
  char* end = nullptr;
  const double v = std::strtod(s, &end);
  if (end == s || *end != '\0' || !(v > 0)) throw Error(Errc::parse, std::string(kTolEnv) + " must be a positive number");
  return v;
}

std::string fmt(double x) { return format_double(x); }

/// Tab-separated residual table with a trailing summary comment.
class ResidualTable {
 public:
  explicit ResidualTable(std::ostream& out) : out_(out) {
    out_ << "check\tn\tclass\tz\tzprime\tmax_abs\tfrobenius\ttolerance\tstatus\n";
  }

  void row(const ResidualReport& r, const std::string& n = "-", const std::string& cls = "-",
           const std::string& z = "-", const std::string& zp = "-") {
    out_ << r.check << '\t' << n << '\t' << cls << '\t' << z << '\t' << zp << '\t' << fmt(r.max_abs_residual) << '\t'
         << fmt(r.frobenius_residual) << '\t' << fmt(r.tolerance) << '\t' << (r.pass ? "pass" : "FAIL") << '\n';
    ++total_;
    if (!r.pass) ++failed_;
  }

  int finish() {
    out_ << "# " << total_ << " checks, " << failed_ << " failed\n";
    return failed_ == 0 ? 0 : 1;
  }

 private:
  std::ostream& out_;
  int total_ = 0, failed_ = 0;
};

std::vector<double> linspace(int count) {
  std::vector<double> g;
  for (int i = 0; i < count; ++i) g.push_back(-1.0 + 2.0 * i / (count - 1));
  return g;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

/// Residual checks that apply to any matrix document.
void check_document(const MatrixDocument& doc, ResidualTable& table, double tol) {
  const auto& m = doc.matrix;
  if (m.rows() != m.cols()) throw Error(Errc::shape, "document matrix is not square");
  table.row(check_unitarity(m, tol));
  bool square_of_square = true;
  try {
    local_dim_of(m.rows(), m.cols());
  } catch (const Error&) {
    square_of_square = false;
  }
  if (square_of_square) table.row(check_braid(m, doc.meta.count("family") && doc.meta.at("family") == "odd" ? std::max(tol, odd_family_tolerance) : tol));
}

// ---------------------------------------------------------------------------

struct GenOptions {
  std::string family = "braid";
  int n = 1;
  std::string cls = "KJ";
  double z = 1.0;
  bool unnormalized = false;
  double m11p = 1, m11m = -1, m12p = 1, m12m = -1, m21p = 1, m21m = -1, theta = 0;
  double phi = 0;
};

int cmd_gen(const GenOptions& o, std::ostream& out) {
  MatrixDocument doc;
  doc.meta["family"] = o.family;
  const BraidClass cls = parse_braid_class(o.cls);
  const auto g = [&] { return build_generators<double>(o.n); };
  if (o.family == "braid" || o.family == "braid-inverse") {
    BraidSpec<double> spec{o.n, cls, o.z, !o.unnormalized};
    doc.matrix = o.family == "braid" ? build_braid(spec) : build_braid_inverse(spec);
    doc.meta["n"] = std::to_string(o.n);
    doc.meta["class"] = std::string(class_name(cls));
    doc.meta["z"] = fmt(o.z);
    doc.meta["normalized"] = o.unnormalized ? "false" : "true";
  } else if (o.family == "P+" || o.family == "P-") {
    const auto p = build_projectors<double>(o.n);
    doc.matrix = o.family == "P+" ? p.plus : p.minus;
    doc.meta["n"] = std::to_string(o.n);
  } else if (o.family == "M" || o.family == "M-inverse") {
    doc.matrix = o.family == "M" ? build_M<double>(o.n) : build_M_inverse<double>(o.n);
    doc.meta["n"] = std::to_string(o.n);
  } else if (o.family == "U") {
    doc.matrix = build_block_permutation<double>(o.n);
    doc.meta["n"] = std::to_string(o.n);
  } else if (o.family == "V") {
    doc.matrix = build_block_diagonalizer<double>(o.n);
    doc.meta["n"] = std::to_string(o.n);
  } else if (o.family == "P") {
    doc.matrix = permutation_P<double>(o.n);
    doc.meta["n"] = std::to_string(o.n);
  } else if (o.family == "I" || o.family == "J" || o.family == "K" || o.family == "L") {
    const auto gs = g();
    doc.matrix = o.family == "I" ? gs.I : o.family == "J" ? gs.J : o.family == "K" ? gs.K : gs.L;
    doc.meta["n"] = std::to_string(o.n);
  } else if (o.family == "odd") {
    OddBraidParams<double> p{o.m11p, o.m11m, o.m12p, o.m12m, o.m21p, o.m21m, o.theta};
    doc.matrix = build_odd_braid(p);
    doc.meta["theta"] = fmt(o.theta);
    doc.meta["m"] = fmt(o.m11p) + "," + fmt(o.m11m) + "," + fmt(o.m12p) + "," + fmt(o.m12m) + "," + fmt(o.m21p) +
                    "," + fmt(o.m21m);
  } else if (o.family == "phased") {
    doc.matrix = (MatrixXcd::Identity(4, 4) + phased_antidiagonal(o.phi)) / std::sqrt(2.0);
    doc.meta["phi"] = fmt(o.phi);
  }
  out << serialize(doc);
  return 0;
}

// ---------------------------------------------------------------------------

struct VerifyOptions {
  int max_n = 4;
  int grid = 5;
  std::string check_file;
  std::uint64_t seed = kDefaultSeed;
  double tol = 0;  ///< 0 means environment / default
  int odd_draws = 3;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
  const double tol = o.tol > 0 ? o.tol : env_tolerance();
  ResidualTable table(out);
  if (!o.check_file.empty()) {
    check_document(parse_document(read_file(o.check_file)), table, tol);
    return table.finish();
  }
  if (o.max_n < 1) throw Error(Errc::parse, "--max-n must be >= 1");
  if (o.grid < 2) throw Error(Errc::parse, "--grid must be >= 2");
  const auto grid = linspace(o.grid);
  std::vector<double> interior;
  for (double z : grid)
    if (std::abs(z) < 1) interior.push_back(z);

  for (int n = 1; n <= o.max_n; ++n) {
    const std::string ns = std::to_string(n);
    for (BraidClass cls : all_braid_classes) {
      const std::string cs(class_name(cls));
      for (double z : grid) {
        const BraidSpec<double> spec{n, cls, z, true};
        const MatrixXcd r = build_braid(spec);
        table.row(check_unitarity(r, tol), ns, cs, fmt(z));
        table.row(check_inverse(spec, tol), ns, cs, fmt(z));
        table.row(check_quadratic(spec, tol), ns, cs, fmt(z));
        if (z == 0 || std::abs(z) == 1) table.row(check_braid(r, tol), ns, cs, fmt(z));
        if (std::abs(z) == 1) {
          table.row(check_hecke(r, tol), ns, cs, fmt(z));
          const auto [p4, p8] = check_periodicity(r, tol);
          table.row(p4, ns, cs, fmt(z));
          table.row(p8, ns, cs, fmt(z));
        }
      }
      for (double z : interior)
        for (double zp : interior) table.row(check_baxterized(n, cls, z, zp, tol), ns, cs, fmt(z), fmt(zp));
    }
    for (double z : grid) {
      for (const auto& r : check_projector_suite<double>(n, z, std::max(tol, 1e-13))) table.row(r, ns, "KJ", fmt(z));
      if (n >= 2)
        for (const auto& r : check_block_diagonalization<double>(n, z, tol)) table.row(r, ns, "KJ", fmt(z));
    }
  }

  std::mt19937_64 rng(o.seed);
  std::uniform_real_distribution<double> m_dist(-2.0, 2.0), t_dist(-1.0, 1.0);
  const double odd_tol = std::max(tol, odd_family_tolerance);
  for (int k = 0; k < o.odd_draws; ++k) {
    OddBraidParams<double> p{m_dist(rng), m_dist(rng), m_dist(rng), m_dist(rng), m_dist(rng), m_dist(rng), 0};
    const double th = t_dist(rng), thp = t_dist(rng);
    table.row(check_odd_braid(p, th, thp, odd_tol), "odd", "-", fmt(th), fmt(thp));
    table.row(check_odd_unitarity(p.with_theta(th), tol), "odd", "-", fmt(th));
  }
  return table.finish();
}

// ---------------------------------------------------------------------------

struct TowerOptions {
  int n = 2;
  double z = 0.5;
  int order = 4;
  std::string kind = "both";
  std::string cls = "KJ";
};

int cmd_tower(const TowerOptions& o, std::ostream& out) {
  const BraidClass cls = parse_braid_class(o.cls);
  if (o.order < 1) throw Error(Errc::parse, "--order must be >= 1");
  out << "kind\tn\tz\tr\ttrace\tclosed_form\tstatus\n";
  int failed = 0;
  for (TowerKind kind : {TowerKind::L, TowerKind::T}) {
    if (o.kind != "both" && o.kind != (kind == TowerKind::L ? "L" : "T")) continue;
    Tower<double> t = seed_tower<double>(kind, o.n, o.z, cls);
    for (int r = 1; r <= o.order; ++r) {
      t = coproduct_step(t);
      const double tr = tower_trace(t).real();
      std::string closed = "-", status = "-";
      if (o.n == 2) {
        const double c = tower_trace_closed_form_n2(o.z, r);
        closed = fmt(c);
        const bool ok = std::abs(tr - c) <= 1e-10 * std::max(1.0, std::abs(c));
        status = ok ? "pass" : "FAIL";
        if (!ok) ++failed;
      }
      out << (kind == TowerKind::L ? "L" : "T") << '\t' << o.n << '\t' << fmt(o.z) << '\t' << r << '\t' << fmt(tr)
          << '\t' << closed << '\t' << status << '\n';
    }
  }
  return failed == 0 ? 0 : 1;
}

// ---------------------------------------------------------------------------

struct HamiltonianOptions {
  int n = 1;
  int r = 2;
  std::string cls = "KJ";
};

int cmd_hamiltonian(const HamiltonianOptions& o, std::ostream& out) {
  const BraidClass cls = parse_braid_class(o.cls);
  MatrixDocument doc{hamiltonian<double>(ChainSpec{o.n, o.r}, cls), {}};
  doc.meta["family"] = "hamiltonian";
  doc.meta["n"] = std::to_string(o.n);
  doc.meta["r"] = std::to_string(o.r);
  doc.meta["class"] = std::string(class_name(cls));
  out << serialize(doc);
  return 0;
}

// ---------------------------------------------------------------------------

struct PotentialOptions {
  int n = 1;
  double z = 0.5;
  double mu_re = 3, mu_im = 0;
  std::string form = "direct";
  std::string output = "X";
};

int cmd_potential(const PotentialOptions& o, std::ostream& out) {
  const PotentialParams<double> p{o.n, o.z, {o.mu_re, o.mu_im}};
  MatrixDocument doc;
  MatrixXcd x;
  if (o.form == "direct")
    x = cayley_potential(p);
  else
    x = cayley_closed_form(p, o.form == "published" ? CayleyForm::as_published : CayleyForm::corrected);
  const MatrixXcd id = MatrixXcd::Identity(x.rows(), x.cols());
  if (o.output == "X")
    doc.matrix = x;
  else if (o.output == "minus-iV")
    doc.matrix = id + 2.0 * p.mu * x;
  else
    doc.matrix = std::complex<double>(0, 1) * (id + 2.0 * p.mu * x);
  doc.meta["family"] = "potential";
  doc.meta["output"] = o.output;
  doc.meta["form"] = o.form;
  doc.meta["n"] = std::to_string(o.n);
  doc.meta["z"] = fmt(o.z);
  doc.meta["mu"] = fmt(o.mu_re) + "," + fmt(o.mu_im);
  out << serialize(doc);
  return 0;
}

// ---------------------------------------------------------------------------

struct InvariantOptions {
  int n = 1;
  std::string d = "1";
  int strands = 1;
  std::string word;
  double z = 1.0;
};

std::vector<double> parse_reals(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    char* end = nullptr;
    const double x = std::strtod(tok.c_str(), &end);
    if (tok.empty() || *end != '\0') throw Error(Errc::parse, "cannot read number '" + tok + "'");
    v.push_back(x);
  }
  return v;
}

int cmd_invariant(const InvariantOptions& o, std::ostream& out) {
  const auto sys = build_enhanced<double>(o.n, parse_reals(o.d));
  const BraidWord w = parse_braid_word(o.word, o.strands);
  const auto value = invariant(sys, w, o.z);
  out << "word\t" << (w.letters.empty() ? "(empty)" : format_braid_word(w)) << '\n';
  out << "strands\t" << w.strands << '\n';
  out << "z\t" << fmt(o.z) << '\n';
  out << "b\t" << fmt(sys.b_at(o.z)) << '\n';
  out << "invariant\t" << fmt(value.real()) << '\t' << fmt(value.imag()) << '\n';
  // The unknot normalization is stated both as Tr F and as b / sqrt(2); these differ by 2.
  out << "unknot_trace_F\t" << fmt(sys.trace_F()) << '\n';
  out << "unknot_b_over_sqrt2\t" << fmt(sys.b / std::sqrt(2.0)) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct EntangleOptions {
  int n = 1;
  double z = 1.0;
  int c = 1, cp = 1;
  bool bell = false;
  int j = 0, k = 0, sign = 1;
};

void print_state(const TwoPartyState<double>& s, std::ostream& out) {
  for (int a = 1; a <= s.local_dim; ++a)
    for (int b = 1; b <= s.local_dim; ++b) {
      const auto v = s.at(a, b);
      if (std::abs(v) > 0) out << "amplitude\t" << a << '\t' << b << '\t' << fmt(v.real()) << '\t' << fmt(v.imag()) << '\n';
    }
}

int cmd_entangle(const EntangleOptions& o, std::ostream& out) {
  TwoPartyState<double> s;
  if (o.bell) {
    const auto b = bell_generalized(o.n, o.z, o.j, o.k, o.sign);
    s = b.state;
    out << "braid_power\t" << b.braid_power << '\n';
  } else {
    s = act_and_analyze(o.n, o.z, o.c, o.cp).state;
  }
  print_state(s, out);
  const auto p = schmidt_profile(s);
  out << "schmidt_rank\t" << p.rank << '\n';
  out << "schmidt_coefficients";
  for (double c : p.coefficients)
    if (c > 1e-12) out << '\t' << fmt(c);
  out << '\n' << "entropy_bits\t" << fmt(p.entropy_bits) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------

struct GaugeOptions {
  double phi = 0;
  std::string input;
  std::string emit = "canonical";
};

int cmd_gauge(const GaugeOptions& o, std::ostream& out) {
  const MatrixXcd in = o.input.empty() ? phased_antidiagonal(o.phi) : parse_document(read_file(o.input)).matrix;
  const auto g = canonicalize_phases(in);
  MatrixDocument doc{o.emit == "Y" ? g.Y : g.canonical, {}};
  doc.meta["family"] = o.emit == "Y" ? "gauge-Y" : "gauge-canonical";
  doc.meta["phi"] = fmt(g.phi);
  out << serialize(doc);
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitary braid matrices: construction, verification and derived structures", "ubraid"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Emit a matrix document");
  g->add_option("--family", gen.family, "Matrix family")
      ->check(CLI::IsMember({"braid", "braid-inverse", "P+", "P-", "M", "M-inverse", "U", "V", "P", "I", "J", "K", "L",
                             "odd", "phased"}));
  g->add_option("--n", gen.n, "Half local dimension")->check(CLI::Range(1, 8));
  g->add_option("--class", gen.cls, "KJ | JK | KL | LK (I, II accepted)");
  g->add_option("--z", gen.z, "Spectral parameter");
  g->add_flag("--unnormalized", gen.unnormalized, "Drop the 1/sqrt(1+z^2) factor");
  g->add_option("--theta", gen.theta, "Odd family rapidity");
  g->add_option("--m11p", gen.m11p);
  g->add_option("--m11m", gen.m11m);
  g->add_option("--m12p", gen.m12p);
  g->add_option("--m12m", gen.m12m);
  g->add_option("--m21p", gen.m21p);
  g->add_option("--m21m", gen.m21m);
  g->add_option("--phi", gen.phi, "Phase of the phased 4x4 family");

  VerifyOptions ver;
  auto* v = app.add_subcommand("verify", "Residual sweep over n, class and z grids (TSV)");
  v->add_option("--max-n", ver.max_n, "Largest n")->check(CLI::Range(1, 8));
  v->add_option("--grid", ver.grid, "Number of z points on [-1, 1]")->check(CLI::Range(2, 101));
  v->add_option("--check", ver.check_file, "Verify a matrix document instead of sweeping");
  v->add_option("--seed", ver.seed, "Seed for randomized draws");
  v->add_option("--tol", ver.tol, "Max-abs tolerance (default from UBRAID_TOLERANCE or 1e-12)");
  v->add_option("--odd-draws", ver.odd_draws, "Random odd-family parameter draws")->check(CLI::Range(0, 1000));

  TowerOptions tow;
  auto* t = app.add_subcommand("tower", "Tower traces against the n = 2 closed form");
  t->add_option("--n", tow.n)->check(CLI::Range(1, 8));
  t->add_option("--z", tow.z);
  t->add_option("--order", tow.order)->check(CLI::Range(1, 12));
  t->add_option("--kind", tow.kind)->check(CLI::IsMember({"L", "T", "both"}));
  t->add_option("--class", tow.cls);

  HamiltonianOptions ham;
  auto* h = app.add_subcommand("hamiltonian", "Cyclic chain Hamiltonian");
  h->add_option("--n", ham.n)->check(CLI::Range(1, 8));
  h->add_option("--r", ham.r, "Sites")->check(CLI::Range(2, 24));
  h->add_option("--class", ham.cls);

  PotentialOptions pot;
  auto* p = app.add_subcommand("potential", "Inverse Cayley potential");
  p->add_option("--n", pot.n)->check(CLI::Range(1, 8));
  p->add_option("--z", pot.z);
  p->add_option("--mu", pot.mu_re, "Real part of mu");
  p->add_option("--mu-im", pot.mu_im, "Imaginary part of mu");
  p->add_option("--form", pot.form, "direct | published | corrected")
      ->check(CLI::IsMember({"direct", "published", "corrected"}));
  p->add_option("--output", pot.output, "X | minus-iV | V")->check(CLI::IsMember({"X", "minus-iV", "V"}));

  InvariantOptions inv;
  auto* i = app.add_subcommand("invariant", "Link invariant of a braid word");
  i->add_option("--n", inv.n)->check(CLI::Range(1, 8));
  i->add_option("--d", inv.d, "Comma-separated diagonal parameters d_1..d_n");
  i->add_option("--strands", inv.strands)->check(CLI::Range(1, 24));
  i->add_option("--word", inv.word, "Comma-separated signed letters, e.g. 1,2,-1");
  i->add_option("--z", inv.z);

  EntangleOptions ent;
  auto* e = app.add_subcommand("entangle", "States generated from product kets");
  e->add_option("--n", ent.n)->check(CLI::Range(1, 8));
  e->add_option("--z", ent.z);
  e->add_option("--c", ent.c, "First basis label (1..2n)");
  e->add_option("--cp", ent.cp, "Second basis label (1..2n)");
  e->add_flag("--bell", ent.bell, "Emit the labelled two-term state instead");
  e->add_option("--j", ent.j);
  e->add_option("--k", ent.k);
  e->add_option("--sign", ent.sign)->check(CLI::IsMember({-1, 1}));

  GaugeOptions gau;
  auto* ga = app.add_subcommand("gauge", "Remove spurious anti-diagonal phases from a 4x4 matrix");
  ga->add_option("--phi", gau.phi, "Phase of the built-in phased matrix");
  ga->add_option("--input", gau.input, "Matrix document to canonicalize");
  ga->add_option("--emit", gau.emit, "canonical | Y")->check(CLI::IsMember({"canonical", "Y"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (app.got_subcommand(g)) return cmd_gen(gen, out);
    if (app.got_subcommand(v)) return cmd_verify(ver, out);
    if (app.got_subcommand(t)) return cmd_tower(tow, out);
    if (app.got_subcommand(h)) return cmd_hamiltonian(ham, out);
    if (app.got_subcommand(p)) return cmd_potential(pot, out);
    if (app.got_subcommand(i)) return cmd_invariant(inv, out);
    if (app.got_subcommand(e)) return cmd_entangle(ent, out);
    if (app.got_subcommand(ga)) return cmd_gauge(gau, out);
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace ubraid::cli
