#include "cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "edmf/artinian.hpp"
#include "edmf/classify.hpp"
#include "edmf/dot.hpp"
#include "edmf/hom.hpp"
#include "edmf/io.hpp"
#include "edmf/sampling.hpp"

namespace edmf::cli {

namespace {

using io::Json;

enum class Format { Auto, Json, Dot, Text };

struct Options {
  std::string ring = "Z";
  std::string format = "auto";
  std::string out;
  std::uint64_t seed = 1;
};

struct Context {
  Ring ring;
  Format format;
  std::uint64_t seed;
  std::istream& in;
};

Format parse_format(const std::string& s) {
  if (s == "auto") return Format::Auto;
  if (s == "json") return Format::Json;
  if (s == "dot") return Format::Dot;
  if (s == "text") return Format::Text;
  throw ParseError("unknown format \"" + s + "\" (expected json, dot or text)");
}

std::string read_all(std::istream& s) {
  std::ostringstream os;
  os << s.rdbuf();
  return os.str();
}

// A path, "-" for standard input, or inline JSON.
Json load_input(const std::string& arg, std::istream& in) {
  if (arg == "-") return io::parse_json(read_all(in));
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (arg[first] == '[' || arg[first] == '{'))
    return io::parse_json(arg);
  std::ifstream file(arg);
  if (!file) throw ParseError("cannot open input \"" + arg + "\"");
  return io::parse_json(read_all(file));
}

std::string text_value(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

std::string render_text(const Json& j) {
  std::ostringstream os;
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) os << key << ": " << text_value(value) << '\n';
  } else if (j.is_array()) {
    for (const auto& item : j) os << render_text(item) << "---\n";
  } else {
    os << text_value(j) << '\n';
  }
  return os.str();
}

std::string emit(const Json& j, Format format) {
  switch (format) {
    case Format::Auto:
    case Format::Json:
      return io::render(j);
    case Format::Text:
      return render_text(j);
    case Format::Dot:
      break;
  }
  throw PreconditionError("DOT output is only available for the quiver command");
}

// ---------------------------------------------------------------------------
// Commands

std::string cmd_snf(const Context& ctx, const std::string& input) {
  const Matrix a = io::matrix_from_json(load_input(input, ctx.in), ctx.ring);
  return emit(io::to_json(smith(a)), ctx.format);
}

Json classify_one(const Json& j, const Ring& ring) {
  const MatrixFactorization a = io::factorization_from_json(j, ring);
  const StrongDecomposition sd = strong_decompose(a);
  const MfClass c = primary_decompose(a);
  Json critical = Json::array();
  for (const auto& cp : c.critical_data.critical)
    critical.push_back(Json::array({cp.prime.to_string(), cp.order}));
  Json out = io::to_json(c);
  out["rho"] = a.rho();
  out["critical"] = std::move(critical);
  out["elementary_factors"] = io::to_json(sd.factors);
  out["witness"] = sd.witness() * direct_sum(a.u(), a.v()) ==
                   direct_sum(sd.normal_form.u(), sd.normal_form.v()) * sd.witness();
  out["zero_object"] = c.is_zero();
  return out;
}

std::string cmd_classify(const Context& ctx, const std::string& input) {
  const Json j = load_input(input, ctx.in);
  if (!j.is_array()) return emit(classify_one(j, ctx.ring), ctx.format);

  // Independent jobs; results are merged in input order.
  std::vector<std::future<Json>> jobs;
  jobs.reserve(j.size());
  for (const auto& item : j)
    jobs.push_back(std::async(std::launch::async, classify_one, std::cref(item), ctx.ring));
  Json out = Json::array();
  std::exception_ptr failure;
  for (auto& job : jobs) {
    try {
      out.push_back(job.get());
    } catch (...) {
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return emit(out, ctx.format);
}

std::string cmd_iso(const Context& ctx, const std::string& lhs, const std::string& rhs) {
  const auto a = io::factorization_from_json(load_input(lhs, ctx.in), ctx.ring);
  const auto b = io::factorization_from_json(load_input(rhs, ctx.in), ctx.ring);
  Json out;
  out["zmf"] = strong_iso(a, b);
  out["hmf"] = hmf_iso(a, b);
  return emit(out, ctx.format);
}

std::string cmd_cone(const Context& ctx, const std::string& input) {
  const MfMorphism f = io::morphism_from_json(load_input(input, ctx.in), ctx.ring);
  const MatrixFactorization c = cone(f);
  Json out;
  out["cone"] = io::to_json(c);
  out["u_invariant_factors"] = io::to_json(invariant_factors(c.u()));
  out["v_invariant_factors"] = io::to_json(invariant_factors(c.v()));
  if (f.source().rho() == 1 && f.target().rho() == 1) {
    const auto split = cone_split(f);
    out["xi"] = io::to_json(split.xi);
    out["zeta"] = io::to_json(split.zeta);
    out["is_iso"] = is_iso(f);
  } else {
    out["is_iso"] = is_zero_object(c);
  }
  return emit(out, ctx.format);
}

std::string cmd_hom(const Context& ctx, const std::string& lhs, const std::string& rhs) {
  const auto a = io::factorization_from_json(load_input(lhs, ctx.in), ctx.ring);
  const auto b = io::factorization_from_json(load_input(rhs, ctx.in), ctx.ring);
  Json out;
  out["W"] = io::to_json(a.W());
  const auto h = hmf_hom(a, b);
  out["even"] = io::to_json(h.even);
  out["odd"] = io::to_json(h.odd);
  return emit(out, ctx.format);
}

std::string cmd_quiver(const Context& ctx, const std::string& p, int n, bool stable) {
  const LambdaContext lambda(ctx.ring.parse_element(p), n);
  const ARQuiver q = ar_quiver(lambda, stable);
  if (ctx.format == Format::Auto || ctx.format == Format::Dot) return to_dot(q);
  return emit(io::to_json(q), ctx.format);
}

// ---------------------------------------------------------------------------
// Demo

struct DemoReport {
  std::ostringstream text;
  Json json = Json::object();
};

void demo_elementary(DemoReport& r) {
  const Ring Z = Ring::integers();
  const Element W = Z.from_int(12);
  r.text << "== Elementary factorizations of W = 12 over Z\n";
  Json rows = Json::array();
  for (long d : {1, 2, 3, 4, 6, 12}) {
    const auto e = elementary(Z.from_int(d), W);
    const bool zero = is_zero_object(e);
    const MfClass c = primary_decompose(e);
    r.text << "  e_" << d << ": gcd(" << d << ", " << 12 / d << ") = "
           << gcd(Z.from_int(d), Z.from_int(12 / d)) << (zero ? "  zero object" : "  non-zero")
           << "  class " << io::to_json(c)["labels"].dump() << '\n';
    rows.push_back(Json{{"v", std::to_string(d)}, {"zero", zero}, {"labels", io::to_json(c)["labels"]}});
  }
  r.json["elementary_12"] = std::move(rows);

  const auto e2 = elementary(Z.from_int(2), W);
  const auto e6 = elementary(Z.from_int(6), W);
  const bool zmf = strong_iso(e2, e6), hmf = hmf_iso(e2, e6);
  r.text << "  e_2 vs e_6: strongly isomorphic " << (zmf ? "yes" : "no")
         << ", isomorphic in hmf " << (hmf ? "yes" : "no") << "\n\n";
  r.json["iso_e2_e6"] = Json{{"zmf", zmf}, {"hmf", hmf}};
}

void demo_classification(DemoReport& r) {
  const Ring Z = Ring::integers();
  const Element W = Z.from_int(360);
  const auto cd = critical_decompose(W);
  r.text << "== W = 360 = 2^3 * 3^2 * 5\n  critical primes:";
  for (const auto& cp : cd.critical) r.text << ' ' << cp.prime << "^" << cp.order;
  r.text << "\n  W0 = " << cd.W0 << ", critical ideal generator = " << critical_ideal_generator(cd)
         << '\n';
  const auto c12 = primary_decompose(elementary(Z.from_int(12), W), cd);
  r.text << "  e_12 -> " << io::to_json(c12)["labels"].dump() << '\n';
  const auto c5 = primary_decompose(elementary(Z.from_int(5), W), cd);
  r.text << "  e_5  -> " << io::to_json(c5)["labels"].dump() << "\n\n";
  r.json["class_e12_360"] = io::to_json(c12);
  r.json["class_e5_360"] = io::to_json(c5);
}

void demo_cone(DemoReport& r) {
  const Ring Z = Ring::integers();
  const Element W = Z.from_int(12);
  const auto f = elementary_morphism(elementary(Z.from_int(2), W), elementary(Z.from_int(6), W), Z.one());
  const auto split = cone_split(f);
  const auto c = cone(f);
  r.text << "== Cone of e_2 -> e_6 over W = 12, r = 1\n"
         << "  xi = " << split.xi << ", zeta = " << split.zeta << '\n'
         << "  smith(cone.u) = " << io::to_json(invariant_factors(c.u())).dump()
         << ", smith(cone.v) = " << io::to_json(invariant_factors(c.v())).dump() << '\n'
         << "  is_iso = " << (is_iso(f) ? "true" : "false") << "\n\n";
  r.json["cone_2_6_12"] = Json{{"xi", split.xi.to_string()}, {"zeta", split.zeta.to_string()},
                               {"is_iso", is_iso(f)}};
}

void demo_hom_table(DemoReport& r) {
  const Ring Z = Ring::integers();
  const int n = 5;
  const Element p = Z.from_int(2);
  const Element W = pow(p, n);
  const LambdaContext lambda(p, n);
  r.text << "== Hom_hmf(e_{2^i}, e_{2^j}) over W = 2^5: exponent m with Hom = Z/2^m\n     j=";
  for (int j = 1; j < n; ++j) r.text << ' ' << j;
  r.text << '\n';
  Json table = Json::array();
  bool agrees = true;
  for (int i = 1; i < n; ++i) {
    r.text << "  i=" << i << ' ';
    Json row = Json::array();
    for (int j = 1; j < n; ++j) {
      const auto hom = hmf_hom(elementary(pow(p, i), W), elementary(pow(p, j), W)).even;
      int m = 0;
      if (!hom.cyclic_factors.empty()) {
        for (Element q = hom.cyclic_factors.front(); !q.is_one(); q = exact_div(q, p)) ++m;
      }
      agrees = agrees && hom.cyclic_factors.size() <= 1 && m == stable_hom(lambda, i, j);
      r.text << ' ' << m;
      row.push_back(m);
    }
    r.text << '\n';
    table.push_back(std::move(row));
  }
  r.text << "  matches mu_5(i, j) = min(delta(i), delta(j)): " << (agrees ? "yes" : "no") << "\n\n";
  r.json["hom_table_2_5"] = std::move(table);
  r.json["hom_table_matches_mu"] = agrees;
}

void demo_quivers(DemoReport& r) {
  const LambdaContext lambda(Ring::integers().from_int(2), 5);
  const auto module = ar_quiver(lambda, false);
  const auto stable = ar_quiver(lambda, true);
  r.text << "== AR quivers for n = 5\n"
         << "  mod:    " << module.vertices.size() << " vertices, " << module.arrows.size()
         << " arrows, projective V5\n"
         << "  stable: " << stable.vertices.size() << " vertices, " << stable.arrows.size()
         << " arrows, tau = id\n\n";
  r.json["quiver_vertices"] = Json{{"module", module.vertices.size()}, {"stable", stable.vertices.size()}};
}

void demo_round_trip(DemoReport& r, std::uint64_t seed) {
  const Ring Z = Ring::integers();
  const Element W = Z.from_int(360);
  const auto cd = critical_decompose(W);
  Sampler sampler(seed);
  std::vector<PrimaryLabel> labels;
  while (labels.empty()) labels = sampler.labels(cd, 4);
  const MfClass c = make_class(cd, std::move(labels));
  const auto a = sampler.conjugate(realize_class(c), 8);
  const MfClass back = primary_decompose(a, cd);
  r.text << "== Round trip (seed " << seed << ")\n"
         << "  labels     " << io::to_json(c)["labels"].dump() << '\n'
         << "  conjugated v = " << a.v().to_string() << '\n'
         << "  recovered  " << io::to_json(back)["labels"].dump()
         << (back == c ? "  ok" : "  MISMATCH") << '\n';
  r.json["round_trip"] = Json{{"seed", seed}, {"labels", io::to_json(c)["labels"]}, {"ok", back == c}};
}

std::string cmd_demo(const Context& ctx) {
  DemoReport r;
  demo_elementary(r);
  demo_classification(r);
  demo_cone(r);
  demo_hom_table(r);
  demo_quivers(r);
  demo_round_trip(r, ctx.seed);
  if (ctx.format == Format::Json) return io::render(r.json);
  if (ctx.format == Format::Dot) throw PreconditionError("DOT output is only available for the quiver command");
  return r.text.str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Matrix factorizations over Z and GF(p)[x]", "edmf"};
  app.require_subcommand(1);
  app.fallthrough();

  Options opt;
  app.add_option("--ring", opt.ring, "Ring: Z or GF(p)[x]")->capture_default_str();
  app.add_option("--format", opt.format, "Output format: json, dot or text")->capture_default_str();
  app.add_option("--out", opt.out, "Write output to this file");
  app.add_option("--seed", opt.seed, "Seed for sampled examples")->capture_default_str();

  std::string input, input2, prime;
  int n = 0;
  bool stable = false;

  auto* snf = app.add_subcommand("snf", "Smith normal form with transforms");
  snf->add_option("input", input, "Matrix JSON, file path or -")->required();
  auto* classify = app.add_subcommand("classify", "Strong and hmf classification");
  classify->add_option("input", input, "Factorization JSON (or an array), file path or -")->required();
  auto* iso = app.add_subcommand("iso", "Compare two factorizations in zmf and hmf");
  iso->add_option("a", input, "First factorization")->required();
  iso->add_option("b", input2, "Second factorization")->required();
  auto* cone_cmd = app.add_subcommand("cone", "Mapping cone of a morphism");
  cone_cmd->add_option("input", input, "Morphism JSON, file path or -")->required();
  auto* hom = app.add_subcommand("hom", "Even and odd hom modules in hmf");
  hom->add_option("a", input, "Source factorization")->required();
  hom->add_option("b", input2, "Target factorization")->required();
  auto* quiver = app.add_subcommand("quiver", "AR quiver of R/<p^n>");
  quiver->add_option("p", prime, "Prime")->required();
  quiver->add_option("n", n, "Exponent n >= 2")->required();
  quiver->add_flag("--stable", stable, "Stable category (drop the projective vertex)");
  auto* demo = app.add_subcommand("demo", "Walk through the standard examples");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "edmf: " << e.what() << '\n';
    return kParse;
  }

  try {
    Context ctx{Ring::parse(opt.ring), parse_format(opt.format), opt.seed, in};
    std::string result;
    if (*snf)
      result = cmd_snf(ctx, input);
    else if (*classify)
      result = cmd_classify(ctx, input);
    else if (*iso)
      result = cmd_iso(ctx, input, input2);
    else if (*cone_cmd)
      result = cmd_cone(ctx, input);
    else if (*hom)
      result = cmd_hom(ctx, input, input2);
    else if (*quiver)
      result = cmd_quiver(ctx, prime, n, stable);
    else if (*demo)
      result = cmd_demo(ctx);

    if (opt.out.empty()) {
      out << result;
    } else {
      std::ofstream file(opt.out, std::ios::binary);
      if (!file) throw PreconditionError("cannot write \"" + opt.out + "\"");
      file << result;
    }
    return kOk;
  } catch (const ParseError& e) {
    err << "edmf: parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    err << "edmf: invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const Error& e) {
    err << "edmf: " << e.what() << '\n';
    return kPrecondition;
  } catch (const std::exception& e) {
    err << "edmf: internal error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace edmf::cli
