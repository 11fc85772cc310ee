// Command line front end: verification suites, tau at a single element,
// rewrite traces and the root / coefficient tables.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mixf4/verify.hpp"

using namespace mixf4;
using nlohmann::json;

namespace {

struct Options {
  std::string config_path;
  std::string mode;
  std::vector<std::string> suites;
  int samples = -1;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::uint64_t step_bound = 0;
  std::string json_path;
  bool no_timing = false;
  std::string input;
};

json read_json(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw ConfigError("cannot open " + path);
    in = &file;
  }
  try {
    return json::parse(*in);
  } catch (const json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

RunConfig build_config(const Options& o) {
  RunConfig c;
  if (!o.config_path.empty()) c = config_from_json(read_json(o.config_path));
  if (!o.mode.empty()) {
    bool alg = o.mode == "algebraic";
    if (o.config_path.empty()) {
      c.field = alg ? FieldSpec::default_algebraic() : FieldSpec::default_mixed();
    } else if ((c.field.mode == FieldMode::kAlgebraic) != alg) {
      throw ConfigError("--mode " + o.mode + " contradicts the field of " + o.config_path);
    }
  }
  if (!o.suites.empty()) c.suites = {o.suites.begin(), o.suites.end()};
  if (o.samples >= 0) c.samples = o.samples;
  if (o.seed_given) c.seed = o.seed;
  if (o.step_bound > 0) c.step_bound = o.step_bound;
  return c;
}

void write_json(const std::string& path, const json& j) {
  if (path.empty()) return;
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << "\n";
}

int cmd_verify(const Options& o, const std::vector<std::string>& only = {}) {
  RunConfig c = build_config(o);
  Report r = run_verify(c, only);
  for (const CheckRecord& rec : r.checks) {
    std::cout << std::left << std::setw(5) << status_name(rec.status) << std::setw(36) << rec.name << std::right
              << std::setw(7) << rec.samples_run;
    if (!o.no_timing) std::cout << std::setw(10) << std::fixed << std::setprecision(0) << rec.elapsed_ms << " ms";
    if (!rec.detail.empty()) std::cout << "  " << rec.detail;
    std::cout << "\n";
  }
  std::cout << r.count(Status::kPass) << " passed, " << r.count(Status::kFail) << " failed, "
            << r.count(Status::kSkip) << " skipped\n";
  write_json(o.json_path, r.to_json(!o.no_timing));
  return r.count(Status::kFail) == 0 ? 0 : 1;
}

int cmd_tau(const Options& o) {
  RunConfig c = build_config(o);
  const Field f(c.field);
  UElem p = uelem_from_json(f, read_json(o.input));
  p.validate();
  UElem t = tau(p);  // IdentityInput, IsotropicVector
  TauVerdict v = check_tau(f, to_u1(p), c.step_bound);
  json out = {{"input", uelem_to_json(p)},
              {"tau", uelem_to_json(t)},
              {"verdict", v.all() ? "pass" : "fail"},
              {"detail", v.summary()},
              {"rewrite_steps", v.steps}};
  std::cout << out.dump(2) << "\n";
  write_json(o.json_path, out);
  return v.all() ? 0 : 1;
}

json word_json(const Word& w) {
  json a = json::array();
  for (const Atom& x : w) a.push_back(x.to_string());
  return a;
}

int cmd_rewrite(const Options& o) {
  RunConfig c = build_config(o);
  const Field f(c.field);
  UElem p = uelem_from_json(f, read_json(o.input));
  p.validate();
  RewriteOptions ro;
  ro.step_bound = c.step_bound;
  ro.trace = true;
  RewriteResult r = tau_normal_form(to_u1(p), ro);
  std::size_t i = 0;
  for (const TraceStep& s : r.trace)
    std::cout << json{{"step", i++}, {"rule", s.rule}, {"before", s.before}, {"after", s.after}}.dump() << "\n";
  std::cout << json{{"b", word_json(r.b)}, {"uprime", uelem_to_json(from_u1(r.uprime))}, {"steps", r.steps},
                    {"measure_increases", r.measure_increases}}
                   .dump()
            << "\n";
  return 0;
}

int cmd_roots() {
  const RootSystem& R = RootSystem::f4();
  std::cout << "# index  coordinates(doubled)  name  length  sign  grade  sigma  position\n";
  for (int i = 0; i < RootSystem::kNumRoots; ++i) {
    int k = R.u_index(i);
    std::cout << std::setw(2) << i << "  " << std::left << std::setw(12) << R.root(i).to_string() << std::setw(20)
              << R.name(i) << std::setw(6) << (R.is_long(i) ? "long" : "short") << std::setw(4)
              << (R.is_positive(i) ? "+" : "-") << std::right << std::setw(3) << R.root(i).grade() << "  "
              << std::left << std::setw(20) << R.name(R.sigma(i)) << std::right
              << (k ? "r" + std::to_string(k) : std::string("-")) << "\n";
  }
  return 0;
}

int cmd_coeffs(const Options& o) {
  RunConfig c = build_config(o);
  const Field f(c.field);
  CoeffTable t = compute_coeffs(f);
  const RootSystem& R = RootSystem::f4();
  for (int i = 0; i < RootSystem::kNumRoots; ++i) {
    int k = R.u_index(i);
    std::cout << std::left << std::setw(20) << R.name(i) << std::setw(5)
              << (k ? "r" + std::to_string(k) : std::string("")) << t[i].to_string() << "\n";
  }
  std::cout << "involutive: " << (t.involutive() ? "yes" : "no")
            << ", compatible with commutators: " << (t.compatible_with_commutators() ? "yes" : "no") << "\n";
  return t.involutive() && t.compatible_with_commutators() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification and computation tool for the Moufang set of a mixed group of type F4"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* s) {
    s->add_option("--config", o.config_path, "JSON run configuration");
    s->add_option("--mode", o.mode, "field mode")->check(CLI::IsMember({"mixed", "algebraic"}));
    s->add_option("--step-bound", o.step_bound, "rewrite step bound")->check(CLI::PositiveNumber);
    s->add_option("--json", o.json_path, "write the result as JSON");
  };

  auto* verify = app.add_subcommand("verify", "run verification suites");
  common(verify);
  std::vector<std::string> suite_choices = suite_names();
  suite_choices.push_back("all");
  verify->add_option("--suite", o.suites, "suite(s) to run")->check(CLI::IsMember(suite_choices));
  verify->add_option("--samples", o.samples, "samples per sampled check")->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", o.seed, "random seed")->each([&o](const std::string&) { o.seed_given = true; });
  verify->add_flag("--no-timing", o.no_timing, "omit timings (byte-identical output)");

  auto* tau_cmd = app.add_subcommand("tau", "tau of one element, with the three-way verdict");
  common(tau_cmd);
  tau_cmd->add_option("input", o.input, "UElem JSON file, - for stdin")->required();

  auto* rewrite = app.add_subcommand("rewrite", "rewrite trace of n u n as JSON lines");
  common(rewrite);
  rewrite->add_option("input", o.input, "UElem JSON file, - for stdin")->required();

  app.add_subcommand("roots", "root table and sigma action");

  auto* coeffs = app.add_subcommand("coeffs", "the c_r table");
  common(coeffs);

  auto* b3 = app.add_subcommand("b3check", "B3 cross-validation checks");
  common(b3);
  b3->add_option("--samples", o.samples, "samples per sampled check")->check(CLI::NonNegativeNumber);
  b3->add_option("--seed", o.seed, "random seed")->each([&o](const std::string&) { o.seed_given = true; });
  b3->add_flag("--no-timing", o.no_timing, "omit timings");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return cmd_verify(o);
    if (*tau_cmd) return cmd_tau(o);
    if (*rewrite) return cmd_rewrite(o);
    if (app.got_subcommand("roots")) return cmd_roots();
    if (*coeffs) return cmd_coeffs(o);
    if (*b3)
      return cmd_verify(o, {"involution.b3_M", "involution.b3_preserves_R", "involution.b3_sigma", "involution.flags"});
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
