// grext: command-line front end over the library.
//
// Every command writes one JSON report (stdout or --out). Exit codes:
// 0 ok, 1 unreadable or malformed input, 2 precondition failure,
// 3 internal check failure.

#include <chrono>
#include <cstdio>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include "grext/algebra.hpp"
#include "grext/construct.hpp"
#include "grext/equiv.hpp"
#include "grext/error.hpp"
#include "grext/io.hpp"
#include "grext/selfinj.hpp"

using namespace grext;
using io::Json;

namespace {

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  std::ostringstream out;
  for (unsigned int i = 0; i < len; ++i) out << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
  return out.str();
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse:
    case ErrorKind::ShapeMismatch:
      return 1;
    case ErrorKind::CheckFailed:
    case ErrorKind::GeneratorNotFound:
      return 3;
    default:
      return 2;
  }
}

struct Options {
  std::string input;
  std::string out;
  std::string emit;
  std::uint64_t seed = 1;
  int cutoff = kDefaultGldimCutoff;
  int window = -1;
  std::string idempotent;
  bool beilinson = false;
  std::string kind;
  int param = 0;
  std::uint32_t gen_prime = kDefaultPrime;
};

struct Outcome {
  Json results;
  int code = 0;
};

Json emit_algebra(const GradedAlgebra& a, const Options& o) {
  if (!o.emit.empty()) io::write_file(o.emit, io::save_algebra(a));
  return io::algebra_json(a);
}

Json nullable(bool has, auto&& make) { return has ? Json(make()) : Json(nullptr); }

Outcome cmd_validate(const AlgebraPtr& a, const Options&) {
  return {{{"valid", true}, {"dim", a->dim()}, {"top_degree", a->top_degree()}}};
}

Outcome cmd_info(const AlgebraPtr& ap, const Options& o) {
  const GradedAlgebra& a = *ap;
  const bool graded = a.top_degree() >= 1;
  const bool basic = is_basic(a);
  const auto si = is_graded_selfinjective(ap);
  Json r;
  r["dim"] = a.dim();
  r["top_degree"] = a.top_degree();
  r["component_dims"] = a.component_dims();
  r["idempotents"] = a.idempotent_count();
  r["radical_dim"] = a.simple_data().radical.size();
  r["simple_classes"] = a.simple_data().class_of;
  r["basic"] = basic;
  r["basic_degree_zero"] = is_basic(*degree_zero_part(a));
  r["left_well_graded"] = nullable(graded, [&] { return is_left_well_graded(a).holds; });
  r["right_well_graded"] = nullable(graded, [&] { return is_right_well_graded(a).holds; });
  r["self_injective"] = si.holds;
  r["graded_frobenius"] = nullable(graded, [&] { return is_graded_frobenius(ap); });
  r["top_component_faithful"] = nullable(graded, [&] { return is_Ac_faithful(a); });
  r["functional_search"] = nullable(basic, [&] { return frobenius_functional_search(ap, o.seed).has_value(); });
  return {r};
}

Outcome cmd_beilinson(const AlgebraPtr& a, const Options& o) {
  const TData td = build_t(a);
  return {{{"dim_b", td.b->dim()}, {"dim_x", td.x.dim()}, {"dim_t", td.t->dim()}, {"algebra", emit_algebra(*td.b, o)}}};
}

Outcome cmd_trivext(const AlgebraPtr& a, const Options& o) {
  if (o.beilinson) {
    const TData td = build_t(a);
    return {{{"construction", "b(A) ⋉ x(A)"}, {"dim", td.t->dim()}, {"algebra", emit_algebra(*td.t, o)}}};
  }
  const AlgebraPtr t = T_of(a);
  return {{{"construction", "B ⋉ D(B)"}, {"dim", t->dim()}, {"algebra", emit_algebra(*t, o)}}};
}

Outcome cmd_selfinj(const AlgebraPtr& a, const Options& o) {
  Json r = io::to_json(is_graded_selfinjective(a));
  if (is_basic(*a)) {
    const auto lambda = frobenius_functional_search(a, o.seed);
    r["functional_search"] = {{"found", lambda.has_value()}, {"functional", lambda ? io::to_json(*lambda) : Json(nullptr)}};
  } else {
    r["functional_search"] = nullptr;
  }
  return {r};
}

Outcome cmd_nakayama(const AlgebraPtr& a, const Options&) { return {io::to_json(graded_nakayama(a))}; }

Outcome cmd_gldim(const AlgebraPtr& a, const Options& o) {
  Json r = io::to_json(global_dimension(a, o.cutoff));
  r["cutoff"] = o.cutoff;
  return {r};
}

Outcome cmd_derive_sigma(const AlgebraPtr& a, const Options& o) {
  const TData td = build_t(a);
  const SigmaExtraction s = extract_sigma(td.b, td.x, o.seed, td.t);
  Json r = io::to_json(s);
  r["dim_b"] = td.b->dim();
  r["dim_x"] = td.x.dim();
  return {r};
}

Outcome cmd_equiv(const AlgebraPtr& a, const Options& o) {
  const EquivalenceCertificate cert = theorem_pipeline(a, o.seed, o.window);
  return {io::to_json(cert), cert.passed() ? 0 : 3};
}

Outcome cmd_corner(const AlgebraPtr& ap, const Options& o) {
  const GradedAlgebra& a = *ap;
  Vec e(a.dim());
  std::stringstream ss(o.idempotent);
  std::string part;
  while (std::getline(ss, part, '+')) {
    if (!part.empty() && part[0] == '#') {
      std::size_t i = 0;
      try {
        i = std::stoul(part.substr(1));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad idempotent index \"" + part + "\"");
      }
      if (i >= a.idempotent_count()) throw Error(ErrorKind::IndexOutOfRange, "no designated idempotent " + part, part);
      e = add(e, a.idempotents()[i]);
    } else {
      const auto k = a.index_of(part);
      if (!k) throw Error(ErrorKind::Parse, "unknown basis element \"" + part + "\"", part);
      e[*k] += Fp::one();
    }
  }
  const AlgebraPtr c = corner(a, e);
  return {{{"dim", c->dim()}, {"algebra", emit_algebra(*c, o)}}};
}

using Handler = Outcome (*)(const AlgebraPtr&, const Options&);

int run(const std::string& command, Handler handler, const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  Json report;
  report["command"] = command;
  int code = 0;
  try {
    std::string text;
    if (command == "gen") {
      set_prime(o.gen_prime);
      report["inputs"] = {{"kind", o.kind}, {"param", o.param}};
      const AlgebraPtr a = io::gen_example(o.kind, o.param);
      report["prime"] = prime();
      report["results"] = {{"dim", a->dim()}, {"top_degree", a->top_degree()}, {"algebra", emit_algebra(*a, o)}};
    } else {
      text = io::read_file(o.input);
      report["inputs"] = {{"path", o.input}, {"sha256", sha256_hex(text)}};
      const AlgebraPtr a = io::parse_algebra(text, o.input);
      report["prime"] = prime();
      Outcome out = handler(a, o);
      report["results"] = std::move(out.results);
      code = out.code;
    }
  } catch (const Error& e) {
    if (!report.contains("prime")) report["prime"] = prime();
    report["error"] = {{"kind", std::string(to_string(e.kind()))},
                       {"message", e.what()},
                       {"witness", e.witness() ? Json(*e.witness()) : Json(nullptr)}};
    code = exit_code(e.kind());
  }
  report["exit_code"] = code;
  report["timing_ms"] = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::string text = report.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    try {
      io::write_file(o.out, text);
    } catch (const Error& e) {
      std::cerr << e.what() << "\n";
      return 1;
    }
  }
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graded algebras over F_p: Beilinson algebras, trivial extensions, self-injectivity, equivalence certificates"};
  app.require_subcommand(1);
  Options o;

  struct Entry {
    const char* name;
    const char* help;
    Handler handler;
  };
  const Entry entries[] = {
      {"validate", "check every algebra axiom", cmd_validate},
      {"info", "dimensions and predicates", cmd_info},
      {"beilinson", "Beilinson algebra b(A)", cmd_beilinson},
      {"trivext", "trivial extension B ⋉ D(B), or b(A) ⋉ x(A) with --beilinson", cmd_trivext},
      {"selfinj", "graded self-injectivity with the functional-search oracle", cmd_selfinj},
      {"nakayama", "Nakayama permutation and degree shifts", cmd_nakayama},
      {"gldim", "global dimension up to a cutoff", cmd_gldim},
      {"derive-sigma", "automorphism sigma with t(A) ≅ T(b(A)^sigma)", cmd_derive_sigma},
      {"equiv", "certify A-gr ≃ T(b(A))-gr on sample modules", cmd_equiv},
      {"corner", "corner algebra eAe", cmd_corner},
  };
  std::vector<std::pair<CLI::App*, const Entry*>> subs;
  for (const auto& e : entries) {
    CLI::App* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("input", o.input, "algebra file (JSON)")->required();
    sub->add_option("--out", o.out, "write the report here instead of stdout");
    sub->add_option("--seed", o.seed, "seed for randomized searches");
    const std::string name = e.name;
    if (name == "gldim") sub->add_option("--cutoff", o.cutoff, "maximum resolution length")->check(CLI::NonNegativeNumber);
    if (name == "equiv") sub->add_option("--samples-window", o.window, "shifts d in [-W, W]; default c")->check(CLI::NonNegativeNumber);
    if (name == "corner") sub->add_option("--idempotent", o.idempotent, "basis names or #i joined by '+'")->required();
    if (name == "beilinson" || name == "trivext" || name == "corner")
      sub->add_option("--emit", o.emit, "also write the constructed algebra file");
    if (name == "trivext") sub->add_flag("--beilinson", o.beilinson, "build b(A) ⋉ x(A) instead");
    subs.emplace_back(sub, &e);
  }
  CLI::App* gen = app.add_subcommand("gen", "generate a bundled example algebra");
  gen->add_option("kind", o.kind, "truncated_poly | exterior | product_counterexample | upper_triangular")->required();
  gen->add_option("--param", o.param, "n, m or c depending on the kind");
  gen->add_option("--prime", o.gen_prime, "field characteristic");
  gen->add_option("--emit", o.emit, "write the algebra file");
  gen->add_option("--out", o.out, "write the report here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  if (gen->parsed()) return run("gen", nullptr, o);
  for (const auto& [sub, e] : subs)
    if (sub->parsed()) return run(e->name, e->handler, o);
  return 1;
}
