// fqlab command-line tool: every subcommand prints one JSON document (or CSV
// where noted) on stdout. Exit codes: 0 success, 2 invalid input or failed
// precondition, 3 budget exhausted. Errors go to stderr as JSON.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fqlab/contfrac.hpp"
#include "fqlab/equidist.hpp"
#include "fqlab/errors.hpp"
#include "fqlab/meanvalue.hpp"
#include "fqlab/parse.hpp"
#include "fqlab/weylmachinery.hpp"
#include "io.hpp"

using namespace fqlab;
using io::json;

namespace {

struct Global {
  std::uint64_t seed = 0;
  unsigned threads = 1;
  std::uint64_t budget = kDefaultBudget;
  RunOptions opts() const { return {budget, threads}; }
};

json meta(const std::string& command, const std::string& field, const Global& g) {
  return {{"tool", "fqlab"}, {"version", FQLAB_VERSION}, {"command", command}, {"field", field}, {"seed", g.seed}};
}

std::string csv_header(const std::string& command, const std::string& field, const Global& g,
                       const std::string& columns) {
  std::ostringstream os;
  os << "# fqlab " << FQLAB_VERSION << " " << command << " field=" << field << " seed=" << g.seed << "\n"
     << "# columns v1\n"
     << columns << "\n";
  return os.str();
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

json ord_json(Ord o) { return o.is_neg_inf() ? json("-inf") : json(o.value()); }

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// ---------------------------------------------------------------- exponents

struct ExponentsArgs {
  unsigned p = 2;
  std::string set, emit = "shadow,kstar,sprime,ktilde,maximal,cali,profile";
};

void run_exponents(const ExponentsArgs& a, const Global& g) {
  if (!is_prime(a.p)) throw DomainError("--p must be prime");
  const ExponentSet K = io::parse_set(a.set);
  json out = meta("exponents", "q=" + std::to_string(a.p), g);
  out["p"] = a.p;
  out["set"] = io::set_json(K);
  std::stringstream ss(a.emit);
  std::string what;
  while (std::getline(ss, what, ',')) {
    if (what == "shadow") out["shadow"] = io::set_json(shadow(a.p, K));
    else if (what == "kstar") out["kstar"] = io::set_json(kstar(a.p, K));
    else if (what == "sprime") out["sprime"] = io::set_json(sprime(a.p, K));
    else if (what == "ktilde") out["ktilde"] = io::set_json(ktilde(a.p, K));
    else if (what == "maximal") out["maximal"] = io::set_json(maximal_elements(a.p, K));
    else if (what == "cali") out["cali"] = io::set_json(calI(a.p, K));
    else if (what == "profile") {
      const ExponentProfile pr = profile(a.p, K);
      out["profile"] = {{"psi", pr.psi}, {"phi", pr.phi}, {"kappa", pr.kappa}, {"s_min", pr.s_min}};
    } else {
      throw ParseError("unknown --emit item \"" + what + "\"");
    }
  }
  emit(out);
}

// ---------------------------------------------------------------- cf

struct CfArgs {
  std::string field = "q=2", alpha;
  std::size_t max_terms = 32;
};

void run_cf(const CfArgs& a, const Global& g) {
  const FieldPtr F = make_field(parse_field_spec(a.field));
  const KElem alpha = parse_kelem(F, a.alpha);
  const CFExpansion cf = cf_expand(alpha, a.max_terms);
  const auto table = convergents(cf);
  json out = meta("cf", F->spec_string(), g);
  out["alpha"] = alpha.str();
  out["complete"] = cf.complete;
  out["exhausted"] = cf.exhausted;
  json rows = json::array();
  for (std::size_t n = 0; n < table.size(); ++n) {
    json r = {{"n", n}, {"b", cf.quotients[n].str()}, {"a", table[n].a.str()}, {"g", table[n].g.str()}};
    try {
      const Quality qu = approx_quality(alpha, cf, table, n);
      r["quality"] = ord_json(qu.quality);
    } catch (const PrecisionError&) {
      r["quality"] = nullptr;
    }
    rows.push_back(r);
  }
  out["rows"] = rows;
  emit(out);
}

// ---------------------------------------------------------------- weyl

struct WeylArgs {
  std::string f, m, strategy = "auto";
  unsigned N = 1;
};

void run_weyl(const WeylArgs& a, const Global& g) {
  const json doc = read_json_file(a.f);
  const FieldPtr F = make_field(parse_field_spec(doc.value("field", std::string("q=2"))));
  const Poly m = a.m.empty() ? Poly::constant(F, 1) : parse_poly(F, a.m);
  // generated coefficients get room for the twist by m
  const unsigned D = m.is_zero() ? 1 : static_cast<unsigned>(m.degree().value()) + 1;
  const ExpPoly f = io::exppoly_from_json(doc, g.seed, io::needed_floor(doc, a.N, D));
  EvalStrategy st = EvalStrategy::Auto;
  if (a.strategy == "table") st = EvalStrategy::Table;
  else if (a.strategy == "direct") st = EvalStrategy::Direct;
  else if (a.strategy != "auto") throw ParseError("--strategy must be auto, table or direct");
  const CharSum cs = twisted_sum(f, m, a.N, g.opts(), st);
  json out = meta("weyl", f.field()->spec_string(), g);
  out["N"] = a.N;
  out["m"] = m.str();
  out["sum"] = io::charsum_json(cs);
  emit(out);
}

// ---------------------------------------------------------------- equidist

struct EquidistArgs {
  std::string f, Ns = "1..8", out = "csv";
  unsigned D = 3, depth = 1;
};

void run_equidist(const EquidistArgs& a, const Global& g) {
  const json doc = read_json_file(a.f);
  const std::vector<unsigned> Ns = io::parse_list(a.Ns);
  unsigned Nmax = 0;
  for (unsigned N : Ns) Nmax = std::max(Nmax, N);
  const long fl = std::min(io::needed_floor(doc, Nmax, a.D), -static_cast<long>(a.depth) - 8);
  const ExpPoly f = io::exppoly_from_json(doc, g.seed, fl);
  const auto rows = weyl_scan(f, Ns, a.D, a.depth, g.opts());
  const std::string spec = f.field()->spec_string();
  if (a.out == "csv") {
    std::cout << csv_header("equidist", spec, g, "N,sup_m,argmax_m,certificate,discrepancy_d");
    for (const auto& r : rows) {
      std::cout << r.N << "," << io::fmt12(r.sup) << "," << (r.argmax ? r.argmax->str() : "") << ","
                << (r.certificate ? 1 : 0) << "," << (r.disc ? io::fmt12(r.disc->value()) : "") << "\n";
    }
    return;
  }
  if (a.out != "json") throw ParseError("--out must be csv or json");
  json out = meta("equidist", spec, g);
  out["D"] = a.D;
  out["depth"] = a.depth;
  json jr = json::array();
  for (const auto& r : rows) {
    json row = {{"N", r.N}, {"sup_m", io::round12(r.sup)}, {"certificate", r.certificate}};
    row["argmax_m"] = r.argmax ? json(r.argmax->str()) : json(nullptr);
    if (r.disc)
      row["discrepancy"] = {{"num", r.disc->num}, {"den", r.disc->den}, {"value", io::round12(r.disc->value())}};
    else
      row["discrepancy"] = nullptr;
    jr.push_back(row);
  }
  out["rows"] = jr;
  emit(out);
}

// ---------------------------------------------------------------- js

struct JsArgs {
  std::string field = "q=2", set, Ns = "1", out = "csv";
  unsigned s = 1;
};

void run_js(const JsArgs& a, const Global& g) {
  const FieldPtr F = make_field(parse_field_spec(a.field));
  const ExponentSet K = io::parse_set(a.set);
  const auto rows = growth_table(F, K, a.s, io::parse_list(a.Ns), g.opts());
  if (a.out == "csv") {
    std::cout << csv_header("js", F->spec_string(), g, "N,J_s,ratio");
    for (const auto& r : rows) std::cout << r.N << "," << r.J << "," << io::fmt12(r.ratio) << "\n";
    return;
  }
  if (a.out != "json") throw ParseError("--out must be csv or json");
  json out = meta("js", F->spec_string(), g);
  out["set"] = io::set_json(K);
  out["s"] = a.s;
  const ExponentProfile pr = profile(F->p(), K);
  out["profile"] = {{"psi", pr.psi}, {"phi", pr.phi}, {"kappa", pr.kappa}, {"s_min", pr.s_min}};
  json jr = json::array();
  for (const auto& r : rows) jr.push_back({{"N", r.N}, {"J_s", r.J}, {"ratio", io::round12(r.ratio)}});
  out["rows"] = jr;
  emit(out);
}

// ---------------------------------------------------------------- probe

struct ProbeArgs {
  std::string f;
  unsigned k = 1, N = 4;
  double eta = 1;
};

void run_probe(const ProbeArgs& a, const Global& g) {
  const json doc = read_json_file(a.f);
  // Dirichlet pairs up to ord g = kN need roughly 2kN known digits
  const long fl = std::min(io::needed_floor(doc, a.N, 1), -2 * static_cast<long>(a.k * a.N) - 8);
  const ExpPoly f = io::exppoly_from_json(doc, g.seed, fl);
  const MinorArcReport rep = minor_arc_probe(f, a.k, a.N, a.eta, g.opts());
  json out = meta("probe", f.field()->spec_string(), g);
  out["k"] = a.k;
  out["N"] = a.N;
  out["eta"] = io::round12(a.eta);
  out["sum"] = io::charsum_json(rep.sum);
  out["threshold"] = io::round12(rep.threshold);
  out["triggered"] = rep.triggered;
  if (rep.approx) {
    out["approx"] = {{"a", rep.approx->a.str()},
                     {"g", rep.approx->g.str()},
                     {"quality", ord_json(rep.approx->quality)},
                     {"ord_g", rep.approx->g.degree().value()},
                     {"bound", rep.bound_used}};
  } else {
    out["approx"] = nullptr;
  }
  emit(out);
}

// ---------------------------------------------------------------- intersective

struct IntersectiveArgs {
  std::string field = "q=2", phi = "u^2", A;
  unsigned N = 8, xbound = 4;
};

void run_intersective(const IntersectiveArgs& a, const Global& g) {
  const FieldPtr F = make_field(parse_field_spec(a.field));
  const UPoly phi = parse_upoly(F, a.phi);
  const DenseSet A = io::denseset_from_json(F, read_json_file(a.A), a.N);
  const Density d = density(A, a.N);
  const auto w = difference_search(A, phi, a.xbound, g.opts());
  json out = meta("intersective", F->spec_string(), g);
  out["phi"] = phi.str();
  out["N"] = a.N;
  out["xbound"] = a.xbound;
  out["size"] = A.elems.size();
  out["density"] = {{"num", d.num}, {"den", d.den}, {"value", io::round12(d.value())}};
  if (w) {
    const Poly v = phi.eval(w->x);
    out["witness"] = {{"a", w->a.str()}, {"a2", w->a2.str()}, {"x", w->x.str()}, {"phi_x", v.str()},
                      {"verified", w->a - w->a2 == v && !v.is_zero()}};
  } else {
    out["witness"] = nullptr;
  }
  emit(out);
}

// ---------------------------------------------------------------- sieve-tmn

struct TmnArgs {
  std::string field = "q=2", phi = "u^2", alpha, Ns = "1..4", mode = "literal";
  unsigned M = 2;
  long floor = 0;
};

void run_tmn(const TmnArgs& a, const Global& g) {
  const FieldPtr F = make_field(parse_field_spec(a.field));
  const UPoly phi = parse_upoly(F, a.phi);
  GMode mode = GMode::Literal;
  if (a.mode == "kernel") mode = GMode::Kernel;
  else if (a.mode != "literal") throw ParseError("--mode must be literal or kernel");
  const GMBuild gm = gM_build(F, phi, a.M, mode, 4096, g.budget);
  const std::vector<unsigned> Ns = io::parse_list(a.Ns);
  json out = meta("sieve-tmn", F->spec_string(), g);
  out["phi"] = phi.str();
  out["M"] = a.M;
  out["mode"] = a.mode;
  out["g"] = gm.g.str();
  out["s"] = gm.s ? json(gm.s->str()) : json(nullptr);
  if (!gm.s) out["note"] = gm.note;
  json jr = json::array();
  if (gm.s) {
    unsigned Nmax = 0;
    for (unsigned N : Ns) Nmax = std::max(Nmax, N);
    const UPoly composed = compose_affine(phi, gm.g, *gm.s);
    std::optional<KElem> alpha;
    if (a.alpha == "random") {
      long deg_c = 0;
      for (const auto& [r, c] : composed.terms()) deg_c = std::max(deg_c, c.degree().is_neg_inf() ? 0L : c.degree().value());
      const long need = -(1 + static_cast<long>(composed.degree()) * std::max(0L, static_cast<long>(Nmax) - 1)) - deg_c - 8;
      alpha = KElem(random_series(F, a.floor != 0 ? a.floor : need, g.seed));
    } else {
      alpha = parse_kelem(F, a.alpha);
    }
    out["alpha"] = alpha->str();
    for (unsigned N : Ns) {
      const TMN r = t_mn(phi, *alpha, gm, N, g.opts());
      jr.push_back({{"N", N}, {"sum", io::charsum_json(r.sum)}, {"normalized", io::round12(r.normalized)}});
    }
  }
  out["rows"] = jr;
  emit(out);
}

int fail(const std::string& kind, const std::string& message, int code) {
  std::cerr << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << "\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fqlab: exact experiments in F_q[t] and F_q((1/t))"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(FQLAB_VERSION));
  Global g;
  app.add_option("--seed", g.seed, "Seed for generated coefficients")->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();
  app.add_option("--budget", g.budget, "Largest enumeration allowed")->check(CLI::PositiveNumber)->capture_default_str();

  ExponentsArgs ea;
  auto* ex = app.add_subcommand("exponents", "Lucas-order exponent calculus");
  ex->add_option("--p", ea.p, "Prime")->required();
  ex->add_option("--set", ea.set, "Exponents, e.g. 9,5,3,1")->required();
  ex->add_option("--emit", ea.emit, "Comma list of shadow,kstar,sprime,ktilde,maximal,cali,profile");
  ex->callback([&] { run_exponents(ea, g); });

  CfArgs ca;
  auto* cf = app.add_subcommand("cf", "Continued fraction and convergents");
  cf->add_option("--field", ca.field)->capture_default_str();
  cf->add_option("--alpha", ca.alpha, "num/den, or a series with an O-term")->required();
  cf->add_option("--max-terms", ca.max_terms)->capture_default_str();
  cf->callback([&] { run_cf(ca, g); });

  WeylArgs wa;
  auto* we = app.add_subcommand("weyl", "Exact Weyl sum");
  we->add_option("--f", wa.f, "ExpPoly JSON file")->required();
  we->add_option("--N", wa.N)->required();
  we->add_option("--m", wa.m, "Twist polynomial");
  we->add_option("--strategy", wa.strategy, "auto, table or direct")->capture_default_str();
  we->callback([&] { run_weyl(wa, g); });

  EquidistArgs qa;
  auto* eq = app.add_subcommand("equidist", "Weyl-criterion scan and discrepancy");
  eq->add_option("--f", qa.f, "ExpPoly JSON file")->required();
  eq->add_option("--N", qa.Ns, "List such as 1..12")->capture_default_str();
  eq->add_option("--D", qa.D, "Twists m range over nonzero G_D")->capture_default_str();
  eq->add_option("--depth", qa.depth, "Cylinder depth (0 skips)")->capture_default_str();
  eq->add_option("--out", qa.out, "csv or json")->capture_default_str();
  eq->callback([&] { run_equidist(qa, g); });

  JsArgs ja;
  auto* js = app.add_subcommand("js", "Mean value J_s(S(K); N)");
  js->add_option("--field", ja.field)->capture_default_str();
  js->add_option("--set", ja.set)->required();
  js->add_option("--s", ja.s)->capture_default_str();
  js->add_option("--N", ja.Ns)->capture_default_str();
  js->add_option("--out", ja.out, "csv or json")->capture_default_str();
  js->callback([&] { run_js(ja, g); });

  ProbeArgs pa;
  auto* pr = app.add_subcommand("probe", "Minor-arc diagnostic");
  pr->add_option("--f", pa.f, "ExpPoly JSON file")->required();
  pr->add_option("--k", pa.k)->required();
  pr->add_option("--N", pa.N)->required();
  pr->add_option("--eta", pa.eta)->capture_default_str();
  pr->callback([&] { run_probe(pa, g); });

  IntersectiveArgs ia;
  auto* in = app.add_subcommand("intersective", "Difference-set witness search");
  in->add_option("--field", ia.field)->capture_default_str();
  in->add_option("--phi", ia.phi)->capture_default_str();
  in->add_option("--A", ia.A, "DenseSet JSON file")->required();
  in->add_option("--N", ia.N)->capture_default_str();
  in->add_option("--xbound", ia.xbound)->capture_default_str();
  in->callback([&] { run_intersective(ia, g); });

  TmnArgs ta;
  auto* tm = app.add_subcommand("sieve-tmn", "Averages T_{M,N}(alpha)");
  tm->add_option("--field", ta.field)->capture_default_str();
  tm->add_option("--phi", ta.phi)->capture_default_str();
  tm->add_option("--alpha", ta.alpha, "num/den, a series, or 'random'")->required();
  tm->add_option("--M", ta.M)->capture_default_str();
  tm->add_option("--N", ta.Ns)->capture_default_str();
  tm->add_option("--mode", ta.mode, "literal or kernel")->capture_default_str();
  tm->add_option("--floor", ta.floor, "Floor for a random alpha");
  tm->callback([&] { run_tmn(ta, g); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  } catch (const BudgetError& e) {
    return fail("budget", e.what(), 3);
  } catch (const PrecisionError& e) {
    return fail("precision", e.what(), 2);
  } catch (const HypothesisError& e) {
    return fail("hypothesis", e.what(), 2);
  } catch (const ParseError& e) {
    return fail("parse", e.what(), 2);
  } catch (const DomainError& e) {
    return fail("domain", e.what(), 2);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
  return 0;
}
