#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "g1min/g1min.hpp"

using namespace g1min;

namespace {

enum Exit { kOk = 0, kUsage = 1, kRejected = 2, kUnknown = 3 };

struct Run {
  std::string command;
  std::string file;
  bool as_json = false;
  std::optional<long> prime;
  bool global = false;
  std::optional<int> depth;
  std::uint64_t seed = 1;
  // gen-instance
  std::string a = "0", b = "1";
  int degree = 4;
  std::vector<std::string> plants;
};

struct Outcome {
  json result;
  std::string text;
  int code = kOk;
};

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::NotPrime:
    case ErrorCode::DegreeMismatch:
    case ErrorCode::DimensionMismatch: return kUsage;
    case ErrorCode::UnsupportedPrime:
    case ErrorCode::UnsupportedResidueField: return kUnknown;
    default: return kRejected;
  }
}

ModelFile load(const Run& r) {
  if (r.file == "-") {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return parse_model(ss.str());
  }
  return read_model(r.file);
}

Options options_for(const Run& r, const ModelFile& m) {
  Options o = m.options ? *m.options : Options::from_env();
  if (r.depth) o.depth = *r.depth;
  return o;
}

long prime_for(const Run& r, const ModelFile& m) {
  if (r.prime) return *r.prime;
  if (m.prime) return *m.prime;
  throw Error(ErrorCode::ParseError, r.command + " needs --prime or a prime in the model file");
}

std::string join_coeffs(const GenusOneEquation& e) {
  std::string s;
  const auto& names = coefficient_names(e.degree);
  for (size_t i = 0; i < e.coeffs.size(); ++i) {
    if (i) s += ' ';
    s += names[i] + "=" + to_string(e.coeffs[i]);
  }
  return s;
}

std::string certificate_text(const MinimisationCertificate& c) {
  std::string s;
  for (const auto& m : c.moves)
    s += "move " + m.tag + " p=" + std::to_string(m.prime) + " levels=" + std::to_string(m.levels) + "\n";
  s += "output " + join_coeffs(c.output) + "\n";
  s += "disc " + to_string(discriminant(c.output)) + "\n";
  s += "level " + std::to_string(c.initial_level) + " -> " + std::to_string(c.final_level) + "\n";
  s += "status " + status_name(c.status) + "\n";
  return s;
}

Outcome cmd_invariants(const Run& r) {
  auto m = load(r);
  auto t = invariants(m.equation);
  return {to_json(t), "c4=" + to_string(t.c4) + " c6=" + to_string(t.c6) + " Δ=" + to_string(t.disc) + "\n"};
}

Outcome cmd_level(const Run& r) {
  auto m = load(r);
  LocalContext ctx(prime_for(r, m));
  auto inv = invariants(m.equation);
  auto lv = level(m.equation, ctx);
  long vmin = minimal_valuation_from_invariants(inv.c4, inv.c6, ctx);
  json j = {{"prime", lv.prime},
            {"level", lv.value},
            {"disc_valuation", valuation(inv.disc, ctx).value()},
            {"minimal_valuation", vmin}};
  return {j, "level=" + std::to_string(lv.value) + " p=" + std::to_string(lv.prime) + "\n"};
}

Outcome cmd_jacobian(const Run& r) {
  auto m = load(r);
  auto inv = invariants(m.equation);
  if (inv.disc == 0) throw Error(ErrorCode::SingularInput, "zero discriminant");
  auto jac = jacobian(inv.c4, inv.c6);
  auto md = minimal_discriminant_global(jac.model);
  json primes = json::object();
  for (const auto& [p, d] : md.primes)
    primes[std::to_string(p)] = {{"input_valuation", d.input_valuation},
                                 {"minimal_valuation", d.minimal_valuation},
                                 {"scaling_exponent", d.scaling_exponent}};
  json j = {{"model", to_json(jac.model)}, {"u", to_string(jac.u)}, {"disc_min", to_string(md.disc_min)},
            {"primes", primes}};
  return {j, "jacobian " + join_coeffs(jac.model) + "\ndisc_min " + to_string(md.disc_min) + "\n"};
}

Outcome cmd_classify(const Run& r) {
  auto m = load(r);
  LocalContext ctx(prime_for(r, m));
  auto rep = classify_fiber(m.equation, ctx, options_for(r, m));
  return {to_json(rep), fiber_name(rep.cls) + "\n"};
}

Outcome cmd_normality(const Run& r) {
  auto m = load(r);
  LocalContext ctx(prime_for(r, m));
  Options opt = options_for(r, m);
  auto rep = classify_fiber(m.equation, ctx, opt);
  auto v = normality(m.equation, ctx, opt);
  json j = {{"fiber", to_json(rep)}, {"verdict", to_json(v)}};
  std::string s = fiber_name(rep.cls) + "\n" + (v.normal ? "normal" : "not normal") +
                  (v.conclusive ? "" : " (inconclusive)") + "\n";
  return {j, s, v.conclusive ? kOk : kUnknown};
}

Outcome cmd_is_minimal(const Run& r) {
  auto m = load(r);
  LocalContext ctx(prime_for(r, m));
  auto [t, cert] = is_minimal(m.equation, ctx, options_for(r, m));
  json j = {{"is_minimal", tristate_name(t)}, {"certificate", to_json(cert)}};
  return {j, tristate_name(t) + "\n", t == Tristate::Unknown ? kUnknown : kOk};
}

Outcome cmd_minimise(const Run& r) {
  auto m = load(r);
  Options opt = options_for(r, m);
  MinimisationCertificate cert;
  if (r.global) {
    cert = minimise_global(m.equation, opt);
  } else {
    LocalContext ctx(prime_for(r, m));
    cert = minimise_local(m.equation, ctx, opt);
  }
  int code = cert.status == MinimalityStatus::MinimalNoCertificate ? kUnknown : kOk;
  return {to_json(cert), certificate_text(cert), code};
}

Outcome cmd_gen_instance(const Run& r) {
  std::map<long, long> planted;
  for (const auto& s : r.plants) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw Error(ErrorCode::ParseError, "--plant expects p:k, got " + s);
    try {
      long p = std::stol(s.substr(0, colon)), k = std::stol(s.substr(colon + 1));
      LocalContext check(p);
      if (k < 0) throw Error(ErrorCode::ParseError, "negative level in " + s);
      planted[p] = k;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::ParseError, "--plant expects p:k, got " + s);
    }
  }
  Integer A, B;
  try {
    A = Integer(r.a, 10);
    B = Integer(r.b, 10);
  } catch (const std::invalid_argument&) {
    throw Error(ErrorCode::ParseError, "A and B must be integers");
  }
  auto inst = generate_instance(A, B, r.degree, planted, r.seed);
  ModelFile mf{inst.equation, std::nullopt, std::nullopt};
  json j = {{"model", to_json(mf)}, {"truth", to_json(inst.truth)}};
  return {j, print_model(mf)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Genus one equations: invariants, special fibres and minimisation"};
  app.require_subcommand(1);
  Run run;
  app.add_flag("--json", run.as_json, "Emit a JSON report");

  auto with_file = [&](CLI::App* sub) { sub->add_option("model", run.file, "Model file, - for stdin")->required(); };
  auto with_prime = [&](CLI::App* sub) { return sub->add_option("--prime", run.prime, "Prime p, else the model's"); };
  auto with_depth = [&](CLI::App* sub) { sub->add_option("--depth", run.depth, "Guided search depth")->check(CLI::Range(0, 16)); };

  auto* inv = app.add_subcommand("invariants", "c4, c6 and the discriminant");
  with_file(inv);
  auto* lvl = app.add_subcommand("level", "Level at a prime");
  with_file(lvl);
  with_prime(lvl);
  auto* jac = app.add_subcommand("jacobian", "Weierstrass model of the Jacobian and its minimal discriminant");
  with_file(jac);
  auto* cls = app.add_subcommand("classify-fiber", "Special fibre class at a prime");
  with_file(cls);
  with_prime(cls);
  auto* nrm = app.add_subcommand("normality", "Normality test at a prime");
  with_file(nrm);
  with_prime(nrm);
  auto* ism = app.add_subcommand("is-minimal", "Minimality at a prime");
  with_file(ism);
  with_prime(ism);
  with_depth(ism);
  auto* mns = app.add_subcommand("minimise", "Minimise at a prime or globally");
  with_file(mns);
  auto* mp = with_prime(mns);
  auto* mg = mns->add_flag("--global", run.global, "Minimise at every prime");
  mp->excludes(mg);
  with_depth(mns);
  auto* gen = app.add_subcommand("gen-instance", "Planted non-minimal equation");
  gen->add_option("-A", run.a, "Coefficient A of y^2 = x^3 + Ax + B");
  gen->add_option("-B", run.b, "Coefficient B");
  gen->add_option("--degree", run.degree, "Degree 1..4")->check(CLI::Range(1, 4));
  gen->add_option("--plant", run.plants, "Planted level p:k, repeatable");
  gen->add_option("--seed", run.seed, "Random seed");
  for (auto* s : {inv, lvl, jac, cls, nrm, ism, mns, gen}) s->add_flag("--json", run.as_json, "Emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  run.command = app.get_subcommands().front()->get_name();

  Outcome out;
  try {
    if (run.command == "invariants") out = cmd_invariants(run);
    else if (run.command == "level") out = cmd_level(run);
    else if (run.command == "jacobian") out = cmd_jacobian(run);
    else if (run.command == "classify-fiber") out = cmd_classify(run);
    else if (run.command == "normality") out = cmd_normality(run);
    else if (run.command == "is-minimal") out = cmd_is_minimal(run);
    else if (run.command == "minimise") out = cmd_minimise(run);
    else out = cmd_gen_instance(run);
  } catch (const Error& e) {
    int code = exit_for(e.code());
    if (run.as_json) {
      json j = {{"schema", kReportSchema},
                {"command", run.command},
                {"error", {{"code", error_name(e.code())}, {"message", e.what()}}},
                {"exit", code}};
      std::cout << j.dump(2) << "\n";
    } else {
      std::cerr << "error: " << e.what() << "\n";
    }
    return code;
  }

  if (run.as_json) {
    json j = {{"schema", kReportSchema}, {"command", run.command}, {"result", out.result}, {"exit", out.code}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << out.text;
  }
  return out.code;
}
