#include "mixf4/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <sstream>

#include "mixf4/chevalley.hpp"
#include "mixf4/involution.hpp"
#include "mixf4/roots.hpp"

namespace mixf4 {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Configuration

namespace {

std::string mode_name(FieldMode m) { return m == FieldMode::kMixed ? "mixed" : "algebraic"; }

json shape_to_json(const SampleShape& s) {
  return {{"max_terms", s.max_terms}, {"max_degree", s.max_degree}, {"denominators", s.denominators}};
}

SampleShape shape_from_json(const json& j, SampleShape s) {
  for (const auto& [k, v] : j.items()) {
    if (k == "max_terms") s.max_terms = v.get<int>();
    else if (k == "max_degree") s.max_degree = v.get<int>();
    else if (k == "denominators") s.denominators = v.get<bool>();
    else throw ConfigError("unknown shape key '" + k + "'");
  }
  if (s.max_terms < 1 || s.max_degree < 0) throw ConfigError("bad sample shape");
  return s;
}

FieldSpec field_from_json(const json& j) {
  FieldSpec spec = FieldSpec::default_mixed();
  std::optional<std::string> mixed_name;
  std::string delta = "d", alpha = "a", beta = "b";
  for (const auto& [k, v] : j.items()) {
    if (k == "indeterminates") {
      spec.indeterminates = v.get<std::vector<std::string>>();
      if (!mixed_name) mixed_name = std::string();
    } else if (k == "mixed_var") {
      mixed_name = v.get<std::string>();
    } else if (k == "mode") {
      std::string m = v.get<std::string>();
      if (m == "mixed") spec.mode = FieldMode::kMixed;
      else if (m == "algebraic") spec.mode = FieldMode::kAlgebraic;
      else throw ConfigError("mode must be mixed or algebraic");
    } else if (k == "delta") {
      delta = v.get<std::string>();
    } else if (k == "alpha") {
      alpha = v.get<std::string>();
    } else if (k == "beta") {
      beta = v.get<std::string>();
    } else {
      throw ConfigError("unknown field key '" + k + "'");
    }
  }
  if (spec.mode == FieldMode::kMixed && mixed_name) {
    auto it = std::find(spec.indeterminates.begin(), spec.indeterminates.end(), *mixed_name);
    if (it == spec.indeterminates.end()) throw ConfigError("mixed_var is not an indeterminate");
    spec.mixed_var = static_cast<int>(it - spec.indeterminates.begin());
  }
  if (spec.mode == FieldMode::kAlgebraic) spec.mixed_var = std::nullopt;
  // The constants are parsed in a field with placeholder constants, which
  // only needs the indeterminates.
  FieldSpec plain = spec;
  plain.delta = plain.alpha = plain.beta = RatFunc::one();
  try {
    Field names(plain);
    spec.delta = names.parse_base(delta);
    spec.alpha = names.parse_base(alpha);
    spec.beta = names.parse_base(beta);
  } catch (const ParseError& e) {
    throw ConfigError(std::string("field constant: ") + e.what());
  }
  Field check(spec);  // throws ConfigError
  return spec;
}

json field_to_json(const FieldSpec& s) {
  json j;
  j["indeterminates"] = s.indeterminates;
  j["mode"] = mode_name(s.mode);
  if (s.mixed_var) j["mixed_var"] = s.indeterminates[*s.mixed_var];
  j["delta"] = s.delta.to_string(s.indeterminates);
  j["alpha"] = s.alpha.to_string(s.indeterminates);
  j["beta"] = s.beta.to_string(s.indeterminates);
  return j;
}

}  // namespace

RunConfig config_from_json(const json& j) {
  if (!j.is_object()) throw ConfigError("configuration must be a JSON object");
  RunConfig c;
  try {
    for (const auto& [k, v] : j.items()) {
      if (k == "field") {
        c.field = field_from_json(v);
      } else if (k == "samples") {
        c.samples = v.get<int>();
        if (c.samples < 0) throw ConfigError("samples must be nonnegative");
      } else if (k == "seed") {
        c.seed = v.get<std::uint64_t>();
      } else if (k == "suites") {
        c.suites.clear();
        for (const auto& s : v) {
          std::string name = s.get<std::string>();
          const auto& all = suite_names();
          if (name != "all" && std::find(all.begin(), all.end(), name) == all.end())
            throw ConfigError("unknown suite '" + name + "'");
          c.suites.insert(name);
        }
      } else if (k == "step_bound") {
        c.step_bound = v.get<std::uint64_t>();
        if (c.step_bound == 0) throw ConfigError("step_bound must be positive");
      } else if (k == "shape") {
        c.shape = shape_from_json(v, c.shape);
      } else if (k == "tau_shape") {
        c.tau_shape = shape_from_json(v, c.tau_shape);
      } else {
        throw ConfigError("unknown configuration key '" + k + "'");
      }
    }
  } catch (const json::exception& e) {
    throw ConfigError(std::string("configuration: ") + e.what());
  }
  return c;
}

json config_to_json(const RunConfig& c) {
  return {{"field", field_to_json(c.field)},
          {"samples", c.samples},
          {"seed", c.seed},
          {"suites", std::vector<std::string>(c.suites.begin(), c.suites.end())},
          {"step_bound", c.step_bound},
          {"shape", shape_to_json(c.shape)},
          {"tau_shape", shape_to_json(c.tau_shape)}};
}

// ---------------------------------------------------------------------------
// Report

std::string status_name(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kSkip:
      return "skip";
  }
  return "?";
}

int Report::count(Status s) const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& r) { return r.status == s; }));
}

const CheckRecord* Report::find(const std::string& name) const {
  for (const CheckRecord& r : checks)
    if (r.name == name) return &r;
  return nullptr;
}

json Report::to_json(bool timing) const {
  json list = json::array();
  for (const CheckRecord& r : checks) {
    json j = {{"name", r.name}, {"status", status_name(r.status)}, {"samples_run", r.samples_run}, {"detail", r.detail}};
    if (timing) j["elapsed_ms"] = r.elapsed_ms;
    list.push_back(std::move(j));
  }
  return {{"schema_version", kSchemaVersion},
          {"config", config},
          {"checks", std::move(list)},
          {"summary", {{"pass", count(Status::kPass)}, {"fail", count(Status::kFail)}, {"skip", count(Status::kSkip)}}}};
}

// ---------------------------------------------------------------------------
// Sampling

std::uint64_t sample_seed(std::uint64_t seed, const std::string& name, std::uint64_t index) {
  // FNV-1a over the name, then splitmix64 over the three parts.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  return mix(mix(mix(seed) ^ h) ^ index);
}

int tau_stratum(int i) {
  // Weighted towards the strata whose b is cheap to evaluate; the generic
  // stratum costs minutes per sample.
  static const char kCycle[] = "13456201345134561345134521345134561345134521345136";
  static_assert(sizeof(kCycle) == 51);
  return kCycle[i % 50] - '0';
}

// ---------------------------------------------------------------------------
// Tau at one input

std::string TauVerdict::summary() const {
  if (!error.empty()) return "rewriter error: " + error;
  std::string s;
  auto flag = [&s](const char* name, bool ok) {
    if (!ok) s += std::string(s.empty() ? "" : ", ") + name;
  };
  flag("soundness", sound);
  flag("b in P_J", b_parabolic);
  flag("b sigma-fixed", b_sigma_fixed);
  flag("u' norm relation", uprime_valid);
  flag("closed formula", closed_agrees);
  flag("matrix oracle", oracle_agrees);
  flag("involution", involution);
  return s.empty() ? "all agree" : "failed: " + s;
}

TauVerdict check_tau(const Field& f, const U1Elem& u, std::uint64_t step_bound, bool full_b) {
  TauVerdict v;
  RewriteResult r;
  try {
    RewriteOptions o;
    o.step_bound = step_bound;
    r = tau_normal_form(u, o);
  } catch (const RewriteError& e) {
    v.error = e.what();
    return v;
  }
  v.steps = r.steps;
  v.uprime = r.uprime;
  try {
    r.uprime.validate();
    v.uprime_valid = !r.uprime.is_identity();
  } catch (const std::exception&) {
    v.uprime_valid = false;
  }
  const CoeffTable c = compute_coeffs(f);
  const Word g = conjugated_word(u);
  // g = b n u' exactly when b equals g u'^-1 n; the latter is the oracle's
  // left factor and lies in P_J exactly when u' is the decomposition's
  // right factor.
  const Word left = concat(concat(g, inverse(canonical_word(r.uprime))), {n_e4(f)});
  const GroupMatrix lm = evaluate(f, left);
  v.oracle_agrees = in_parabolic_PJ(lm);
  v.sound = full_b ? evaluates_to(f, r.b, lm) : v.oracle_agrees;
  v.b_parabolic = v.sound && v.oracle_agrees;
  v.b_sigma_fixed = v.sound && sigma_fixed(f, left, c);
  const UElem p = from_u1(u);
  const UElem closed = tau(p);
  v.closed_agrees = closed == from_u1(r.uprime);
  v.involution = tau(closed) == p && v.uprime_valid && decomposes_through(f, conjugated_word(r.uprime), u);
  return v;
}

// ---------------------------------------------------------------------------
// UElem serialization

json uelem_to_json(const UElem& p) {
  json a = json::array(), b = json::array();
  for (int i = 0; i < 4; ++i) {
    a.push_back(p.a.x[i].to_string());
    b.push_back(p.b.x[i].to_string());
  }
  return {{"a", a}, {"b", b}};
}

UElem uelem_from_json(const Field& f, const json& j) {
  auto oct = [&f, &j](const char* key) {
    if (!j.is_object() || !j.contains(key) || !j[key].is_array() || j[key].size() != 4)
      throw ParseError(std::string("UElem needs '") + key + "' as an array of four elements");
    Octonion o = Octonion::zero(f);
    for (int i = 0; i < 4; ++i) o.x[i] = f.parse(j[key][i].get<std::string>());
    return o;
  };
  return UElem{oct("a"), oct("b")};
}

// ---------------------------------------------------------------------------
// Checks

namespace {

const RootSystem& RS() { return RootSystem::f4(); }

// Collects the outcome of one check.
struct Probe {
  int samples = 0;
  int failures = 0;
  std::string first;
  std::string note;
  bool skipped = false;

  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures++ == 0) first = what;
  }
};

struct Ctx {
  const RunConfig& cfg;
  const Field& f;
  CoeffTable coeffs;
  // Rewriter verdicts shared by the tau checks.
  std::optional<std::vector<std::pair<U1Elem, TauVerdict>>> tau;

  Sampler sampler(const std::string& name, std::uint64_t index = 0, std::optional<SampleShape> shape = {}) const {
    return Sampler(f, sample_seed(cfg.seed, name, index), shape.value_or(cfg.shape));
  }
};

using CheckFn = std::function<void(Ctx&, Probe&)>;

struct CheckDef {
  std::string suite;
  std::string name;
  bool sampled;
  CheckFn fn;
};

std::vector<int> levi_roots() {
  std::vector<int> out;
  for (int r = 0; r < RootSystem::kNumRoots; ++r)
    if (RS().in_levi(r)) out.push_back(r);
  return out;
}

QuadExtElem coeff_for(Sampler& s, int r) { return RS().is_long(r) ? s.K() : s.L(); }
QuadExtElem nonzero_for(Sampler& s, int r) { return RS().is_long(r) ? s.nonzero_K() : s.nonzero_L(); }

UElem random_u(Sampler& s) { return from_u1(s.u1()); }

UElem nonzero_u(Sampler& s) {
  for (;;) {
    UElem p = random_u(s);
    if (!p.is_zero()) return p;
  }
}

bool valid(const UElem& p) {
  try {
    p.validate();
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

// --- fields ----------------------------------------------------------------

void fields_arithmetic(Ctx& c, Probe& p) {
  Sampler s = c.sampler("fields.arithmetic");
  for (int i = 0; i < 2 * c.cfg.samples; ++i, ++p.samples) {
    QuadExtElem x = s.L(), y = s.L(), z = s.L();
    std::string at = " at x = " + x.to_string();
    p.expect((x + x).is_zero(), "x + x != 0" + at);
    p.expect((x * y) * z == x * (y * z), "associativity" + at);
    p.expect(x * (y + z) == x * y + x * z, "distributivity" + at);
    if (!x.is_zero()) p.expect((x * x.inverse()).is_one(), "x x^-1 != 1" + at);
  }
}

void fields_conjugation(Ctx& c, Probe& p) {
  Sampler s = c.sampler("fields.conjugation");
  for (int i = 0; i < 2 * c.cfg.samples; ++i, ++p.samples) {
    QuadExtElem x = s.L(), y = s.L();
    std::string at = " at x = " + x.to_string() + ", y = " + y.to_string();
    p.expect((x * y).conj() == x.conj() * y.conj(), "multiplicative" + at);
    p.expect((x + y).conj() == x.conj() + y.conj(), "additive" + at);
    p.expect(x.conj().conj() == x, "order two" + at);
  }
}

void fields_subfield_split(Ctx& c, Probe& p) {
  if (!c.f.mixed()) {
    p.skipped = true;
    p.note = "algebraic mode: k = l";
    return;
  }
  const int v = *c.f.spec().mixed_var;
  const RatFunc t(Poly::var(v));
  Sampler s = c.sampler("fields.subfield_split");
  for (int i = 0; i < 2 * c.cfg.samples; ++i, ++p.samples) {
    RatFunc x = s.base(false);
    auto [x0, x1] = x.split_even_odd(v);
    std::string at = " at " + x.to_string(c.f.names());
    p.expect(x0.is_even_in(v) && x1.is_even_in(v), "parts not in k" + at);
    p.expect(x0 + t * x1 == x, "parts do not recombine" + at);
    // uniqueness: each part splits trivially
    p.expect(x0.split_even_odd(v) == std::pair{x0, RatFunc()}, "even part splits" + at);
    p.expect((t * x1).split_even_odd(v) == std::pair{RatFunc(), x1}, "odd part splits" + at);
  }
}

void fields_norm(Ctx& c, Probe& p) {
  Sampler s = c.sampler("fields.norm");
  for (int i = 0; i < 2 * c.cfg.samples; ++i, ++p.samples) {
    QuadExtElem x = s.L(), y = s.L();
    p.expect((x * y).norm() == x.norm() * y.norm(), "N(xy) != N(x)N(y) at x = " + x.to_string());
  }
}

// --- roots -----------------------------------------------------------------

void roots_closure(Ctx&, Probe& p) {
  const int n = RootSystem::kNumRoots;
  for (int r = 0; r < n; ++r)
    for (int s = 0; s < n; ++s) {
      if (s == RS().neg(r)) continue;
      ++p.samples;
      Root sum = RS().root(r) + RS().root(s);
      int k = RS().sum(r, s);
      p.expect((k >= 0) == RS().is_root(sum) && (k < 0 || RS().root(k) == sum),
               "sum table at " + RS().name(r) + ", " + RS().name(s));
    }
  for (int s = 0; s < n; ++s) {
    std::vector<bool> hit(n, false);
    for (int r = 0; r < n; ++r) {
      int w = RS().reflect(s, r);
      if (w >= 0) hit[w] = true;
    }
    p.expect(std::count(hit.begin(), hit.end(), true) == n, "reflection in " + RS().name(s) + " is not a permutation");
  }
  p.note = "48 x 47 sums, 48 reflections";
}

void roots_sigma(Ctx&, Probe& p) {
  const int n = RootSystem::kNumRoots;
  std::vector<bool> hit(n, false);
  for (int r = 0; r < n; ++r) {
    ++p.samples;
    int s = RS().sigma(r);
    hit[s] = true;
    p.expect(RS().sigma(s) == r, "sigma^2 != id at " + RS().name(r));
    if (RS().in_levi(r))
      p.expect(RS().in_levi(s) && RS().is_positive(r) != RS().is_positive(s), "Levi sign at " + RS().name(r));
    if (RS().is_positive(r) && !RS().in_levi(r))
      p.expect(RS().is_positive(s) && !RS().in_levi(s), "outside the Levi at " + RS().name(r));
  }
  p.expect(std::count(hit.begin(), hit.end(), true) == n, "sigma is not a permutation");
}

void roots_short_long(Ctx&, Probe& p) {
  for (int r = 0; r < RootSystem::kNumRoots; ++r)
    for (int s = 0; s < RootSystem::kNumRoots; ++s) {
      int rs = RS().sum(r, s);
      if (rs < 0 || !RS().is_short(r) || !RS().is_long(s)) continue;
      ++p.samples;
      int t = RS().sum(r, rs);
      p.expect(RS().is_short(rs) && t >= 0 && RS().is_long(t), "at " + RS().name(r) + ", " + RS().name(s));
    }
}

void roots_sigma_pairs(Ctx&, Probe& p) {
  p.expect(RS().sigma(RS().u_root(1)) == RS().u_root(1), "r1 is not fixed");
  for (int k = 2; k <= 14; k += 2) {
    ++p.samples;
    p.expect(RS().sigma(RS().u_root(k)) == RS().u_root(k + 1), "r" + std::to_string(k) + " is not paired");
  }
}

void roots_lemma_long(Ctx&, Probe& p) {
  p.samples = 24;
  p.expect(verify_lemma_long(), "a long root has an odd short coefficient");
  p.note = "24 long roots";
}

// --- chevalley -------------------------------------------------------------

void chevalley_lie_algebra(Ctx&, Probe& p) {
  const auto& sc = StructureConstants::f4();
  p.samples = kDim * kDim * kDim;
  p.expect(sc.check_magnitudes(), "|N_rs| != p + 1");
  long a = sc.antisymmetry_failures(), j = sc.jacobi_failures();
  p.expect(a == 0, std::to_string(a) + " antisymmetry failures");
  p.expect(j == 0, std::to_string(j) + " Jacobi failures");
  p.note = "52^3 basis triples";
}

void chevalley_commutators(Ctx& c, Probe& p) {
  Sampler s = c.sampler("chevalley.commutators");
  for (int r = 0; r < RootSystem::kNumRoots; ++r)
    for (int q = 0; q < RootSystem::kNumRoots; ++q) {
      if (q == r || q == RS().neg(r)) continue;
      for (int k = 0; k < 3; ++k, ++p.samples) {
        QuadExtElem x = coeff_for(s, r), y = coeff_for(s, q);
        p.expect(check_commutator(c.f, r, q, x, y), "at " + RS().name(r) + ", " + RS().name(q) + " with " +
                                                        x.to_string() + ", " + y.to_string());
      }
    }
  p.note = "48 x 46 ordered pairs, 3 samples each";
}

void chevalley_one_parameter(Ctx& c, Probe& p) {
  Sampler s = c.sampler("chevalley.one_parameter");
  for (int r = 0; r < RootSystem::kNumRoots; ++r, ++p.samples) {
    QuadExtElem x = coeff_for(s, r), y = coeff_for(s, r);
    QuadExtElem l = nonzero_for(s, r), m = nonzero_for(s, r);
    const std::string at = " at " + RS().name(r);
    p.expect(gen_u(c.f, r, x) * gen_u(c.f, r, y) == gen_u(c.f, r, x + y), "u_r not additive" + at);
    p.expect(gen_h(c.f, r, l) * gen_h(c.f, r, m) == gen_h(c.f, r, l * m), "h_r not multiplicative" + at);
  }
}

void chevalley_weyl(Ctx& c, Probe& p) {
  Sampler s = c.sampler("chevalley.weyl_conjugation");
  for (int r = 0; r < RootSystem::kNumRoots; ++r) {
    QuadExtElem t = nonzero_for(s, r);
    for (int q = 0; q < RootSystem::kNumRoots; ++q, ++p.samples) {
      Atom n = Atom::n(q, c.f.one());
      GroupMatrix lhs = evaluate(c.f, {n, Atom::u(r, t), n});
      p.expect(lhs == gen_u(c.f, RS().reflect(q, r), t), "n_s u_r n_s at r = " + RS().name(r) + ", s = " + RS().name(q));
    }
  }
  p.note = "all 48 x 48 pairs";
}

// --- involution ------------------------------------------------------------

void involution_coeff_table(Ctx& c, Probe& p) {
  const QuadExtElem a = c.f.alpha(), b = c.f.beta(), one = c.f.one();
  const QuadExtElem ab = a * b;
  const QuadExtElem expected[15] = {one, a, a.inverse(), b, b.inverse(), ab, ab.inverse(), one,
                                    one, a, a.inverse(), b, b.inverse(), ab.inverse(), ab};
  for (int k = 1; k <= 15; ++k, ++p.samples)
    p.expect(c.coeffs[RS().u_root(k)] == expected[k - 1], "c at r" + std::to_string(k));
  p.expect(c.coeffs.involutive(), "conj(c_r) c_sigma(r) != 1");
  p.expect(c.coeffs.compatible_with_commutators(), "not compatible with the commutator relations");
  for (int r = 0; r < RootSystem::kNumRoots; ++r)
    p.expect((c.coeffs[r] * c.coeffs[RS().neg(r)]).is_one(), "c_r c_-r != 1 at " + RS().name(r));
}

void involution_coeff_specializations(Ctx& c, Probe& p) {
  Sampler s = c.sampler("involution.coeff_specializations");
  for (int i = 0; i < std::min(c.cfg.samples, 20); ++i, ++p.samples) {
    RatFunc a, b;
    while (a.is_zero()) a = s.base(true);
    while (b.is_zero()) b = s.base(true);
    CoeffTable t = compute_coeffs(c.f, c.f.embed(a), c.f.embed(b));
    p.expect(t.involutive() && t.compatible_with_commutators(),
             "at alpha = " + a.to_string(c.f.names()) + ", beta = " + b.to_string(c.f.names()));
  }
}

void involution_b3_preserves_R(Ctx& c, Probe& p) {
  Sampler s = c.sampler("involution.b3_preserves_R");
  for (int r : levi_roots())
    for (int k = 0; k < 5; ++k, ++p.samples) {
      QuadExtElem t = coeff_for(s, r);
      Mat7 m = b3_generator(c.f, r, t);
      p.expect(preserves_R(m), "R not preserved at " + RS().name(r) + " with " + t.to_string());
      p.expect(has_mixed_shape(m), "shape at " + RS().name(r) + " with " + t.to_string());
    }
  p.note = "18 generators, 5 samples each";
}

void involution_b3_M(Ctx& c, Probe& p) {
  Mat7 s = matrix_S(c.f);
  auto sinv = s.inverse();
  p.samples = 1;
  p.expect(sinv.has_value(), "S is singular");
  if (sinv) p.expect(s.conj() * *sinv == matrix_M(c.f), "conj(S) S^-1 != M");
  p.expect(same_quadratic_form(s.transpose() * form_R(c.f) * s, form_Q(c.f)), "S does not carry R to Q");
}

void involution_b3_sigma(Ctx& c, Probe& p) {
  Sampler s = c.sampler("involution.b3_sigma");
  for (int r : levi_roots())
    for (int k = 0; k < 10; ++k, ++p.samples) {
      QuadExtElem t = coeff_for(s, r);
      Atom a = sigma_atom(Atom::u(r, t), c.coeffs);
      p.expect(sigma_b3(b3_generator(c.f, r, t)) == b3_generator(c.f, a.root, a.coeff),
               "at " + RS().name(r) + " with " + t.to_string());
    }
  p.note = "18 generators, 10 samples each";
}

void involution_flags(Ctx& c, Probe& p) {
  Sampler s = c.sampler("involution.flags");
  for (int r : levi_roots()) {
    if (!RS().is_positive(r)) continue;
    for (int k = 0; k < 5; ++k, ++p.samples) {
      Mat7 m = b3_generator(c.f, r, coeff_for(s, r));
      p.expect(fixes_flag(m, 1), "flag not fixed at " + RS().name(r));
      p.expect(fixes_flag(sigma_b3(m), -1), "opposite flag not fixed at " + RS().name(r));
    }
  }
}

// --- rewrite ---------------------------------------------------------------

void rewrite_rules(Ctx& c, Probe& p) {
  Sampler s = c.sampler("rewrite.rules", 0, c.cfg.tau_shape);
  auto& g = s.engine();
  const Field& f = c.f;
  auto root = [&g] { return static_cast<int>(g() % RootSystem::kNumRoots); };
  auto same = [&f](const Word& a, const Word& b) { return evaluate(f, a) == evaluate(f, b); };
  for (int i = 0; i < 20; ++i) {
    int q = root(), r = root();
    Atom n = Atom::n(q, i % 2 ? f.one() : nonzero_for(s, q));
    Atom x = i % 3 ? Atom::u(r, nonzero_for(s, r)) : Atom::h(r, s.nonzero_L());
    p.expect(same(swap_n(n, x), {n, x}), "swap_n at " + n.to_string() + " " + x.to_string());
    ++p.samples;
  }
  for (int i = 0; i < 20; ++i) {
    int r = root();
    Atom x = Atom::u(r, nonzero_for(s, r)), h = Atom::h(root(), s.nonzero_L());
    p.expect(same(swap_h(x, h), {x, h}), "swap_h at " + x.to_string() + " " + h.to_string());
    ++p.samples;
  }
  for (int done = 0; done < 20;) {
    int r = root(), q = root();
    if (q == r || q == RS().neg(r)) continue;
    if (done < 15 && RS().sum(r, q) < 0) continue;
    Atom x = Atom::u(r, nonzero_for(s, r)), y = Atom::u(q, nonzero_for(s, q));
    p.expect(same(swap_comm(x, y), {x, y}), "swap_comm at " + x.to_string() + " " + y.to_string());
    ++p.samples;
    ++done;
  }
  for (int i = 0; i < 20; ++i) {
    int r = root();
    QuadExtElem t = nonzero_for(s, r);
    QuadExtElem u = i % 5 == 0 ? t.inverse() : nonzero_for(s, r);
    Atom x = Atom::u(r, t), y = Atom::u(RS().neg(r), u);
    p.expect(same(split_opposite(x, y), {x, y}), "split_opposite at " + x.to_string() + " " + y.to_string());
    ++p.samples;
  }
  p.note = "4 rule kinds x 20 instances";
}

const std::vector<std::pair<U1Elem, TauVerdict>>& tau_runs(Ctx& c) {
  if (!c.tau) {
    c.tau.emplace();
    for (int i = 0; i < c.cfg.samples; ++i) {
      int st = tau_stratum(i);
      SampleShape shape = c.cfg.tau_shape;
      if (st == 0) shape.max_degree = 0;  // generic inputs: constant coefficients
      Sampler s = c.sampler("rewrite.tau", static_cast<std::uint64_t>(i), shape);
      U1Elem u = s.u1(st);
      c.tau->emplace_back(u, check_tau(c.f, u, c.cfg.step_bound));
    }
  }
  return *c.tau;
}

std::string tau_where(int i, const U1Elem& u, const TauVerdict& v) {
  return "sample " + std::to_string(i) + " (stratum " + std::to_string(tau_stratum(i)) + ") " + u.to_string() +
         ": " + v.summary();
}

template <class Pred>
void tau_check(Ctx& c, Probe& p, Pred ok) {
  const auto& runs = tau_runs(c);
  std::set<int> strata;
  for (std::size_t i = 0; i < runs.size(); ++i, ++p.samples) {
    const auto& [u, v] = runs[i];
    strata.insert(tau_stratum(static_cast<int>(i)));
    p.expect(v.error.empty() && ok(v), tau_where(static_cast<int>(i), u, v));
  }
  p.note = std::to_string(strata.size()) + " of 7 strata";
}

void rewrite_tau_soundness(Ctx& c, Probe& p) {
  tau_check(c, p, [](const TauVerdict& v) { return v.sound; });
}

void rewrite_tau_outputs(Ctx& c, Probe& p) {
  tau_check(c, p, [](const TauVerdict& v) { return v.b_parabolic && v.b_sigma_fixed && v.uprime_valid; });
}

void rewrite_tau_involution(Ctx& c, Probe& p) {
  tau_check(c, p, [](const TauVerdict& v) { return v.involution; });
}

void rewrite_tau_three_way(Ctx& c, Probe& p) {
  tau_check(c, p, [](const TauVerdict& v) { return v.three_way(); });
}

// --- moufang ---------------------------------------------------------------

void moufang_group_axioms(Ctx& c, Probe& p) {
  Sampler s = c.sampler("moufang.group_axioms");
  const UElem zero = u_zero(c.f);
  for (int i = 0; i < c.cfg.samples; ++i, ++p.samples) {
    UElem x = random_u(s), y = random_u(s), z = random_u(s);
    const std::string at = " at " + x.to_string();
    p.expect(u_add(x, zero) == x && u_add(zero, x) == x, "identity" + at);
    p.expect(u_add(x, u_neg(x)) == zero && u_add(u_neg(x), x) == zero, "inverse" + at);
    p.expect(u_add(u_add(x, y), z) == u_add(x, u_add(y, z)), "associativity" + at);
  }
}

void moufang_invariant(Ctx& c, Probe& p) {
  Sampler s = c.sampler("moufang.invariant");
  for (int i = 0; i < c.cfg.samples; ++i, ++p.samples) {
    UElem x = nonzero_u(s), y = random_u(s);
    const std::string at = " at " + x.to_string();
    p.expect(valid(u_add(x, y)), "u_add leaves U" + at);
    p.expect(valid(u_neg(x)), "u_neg leaves U" + at);
    p.expect(valid(tau(x)), "tau leaves U" + at);
    if (!c.f.mixed()) p.expect(valid(phi(x)), "phi leaves U" + at);
  }
}

void moufang_word_product(Ctx& c, Probe& p) {
  Sampler s = c.sampler("moufang.word_product");
  for (int i = 0; i < c.cfg.samples; ++i, ++p.samples) {
    UElem x = random_u(s), y = random_u(s);
    Word w = concat(canonical_word(to_u1(x)), canonical_word(to_u1(y)));
    p.expect(collect(c.f, w) == to_u1(u_add(x, y)).coefficients(), "at " + x.to_string() + ", " + y.to_string());
  }
}

void moufang_tau_involution(Ctx& c, Probe& p) {
  Sampler s = c.sampler("moufang.tau_involution");
  for (int i = 0; i < c.cfg.samples; ++i, ++p.samples) {
    UElem x = nonzero_u(s);
    p.expect(tau(tau(x)) == x, "at " + x.to_string());
  }
}

void moufang_tau_conjugation(Ctx& c, Probe& p) {
  for (int i = 0; i < c.cfg.samples; ++i, ++p.samples) {
    Sampler s = c.sampler("moufang.tau_conjugation", static_cast<std::uint64_t>(i), c.cfg.tau_shape);
    U1Elem u = s.u1(tau_stratum(i));
    Word w = conjugated_word(u);
    p.expect(in_UJ_minus(evaluate(c.f, w)), "n u n not in U_J^- at " + u.to_string());
    p.expect(sigma_fixed(c.f, w, c.coeffs), "n u n not sigma-fixed at " + u.to_string());
  }
}

FieldSpec algebraic_spec(const FieldSpec& spec) {
  FieldSpec a = spec;
  a.mode = FieldMode::kAlgebraic;
  a.mixed_var = std::nullopt;
  return a;
}

void moufang_algebraic_phi(Ctx& c, Probe& p) {
  const Field alg(algebraic_spec(c.f.spec()));
  Sampler s(alg, sample_seed(c.cfg.seed, "moufang.algebraic_phi", 0), c.cfg.shape);
  for (int i = 0; i < c.cfg.samples; ++i, ++p.samples) {
    UElem x = random_u(s), y = random_u(s);
    const std::string at = " at " + x.to_string();
    p.expect(phi(u_add(x, y)) == tilde_add(phi(x), phi(y)), "phi not additive" + at);
    if (!x.is_zero()) p.expect(phi(tau(x)) == tilde_tau(phi(x)), "phi tau != tilde_tau phi" + at);
  }
  if (c.f.mixed()) p.note = "algebraic field with the same indeterminates and constants";
}

void moufang_anisotropy(Ctx& c, Probe& p) {
  Sampler s = c.sampler("moufang.anisotropy");
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 0; i < 10 * c.cfg.samples; ++i, ++p.samples) {
      Octonion x = Octonion::zero(c.f);
      while (x.is_zero())
        x = kind == 0 ? Octonion::of(c.f, s.L(), s.L(), s.L(), s.L()) : Octonion::of(c.f, s.L(), s.K(), s.K(), s.K());
      p.expect(!x.norm().is_zero(), std::string(kind ? "O_mixed" : "O_l") + " vector of norm 0: " + x.to_string());
    }
  p.note = "evidence only; " + std::to_string(10 * c.cfg.samples) + " vectors of O_l and of O_mixed";
}

const std::vector<CheckDef>& registry() {
  static const std::vector<CheckDef> defs = {
      {"fields", "fields.arithmetic", true, fields_arithmetic},
      {"fields", "fields.conjugation", true, fields_conjugation},
      {"fields", "fields.norm", true, fields_norm},
      {"fields", "fields.subfield_split", true, fields_subfield_split},
      {"roots", "roots.closure", false, roots_closure},
      {"roots", "roots.lemma_long", false, roots_lemma_long},
      {"roots", "roots.short_long", false, roots_short_long},
      {"roots", "roots.sigma", false, roots_sigma},
      {"roots", "roots.sigma_pairs", false, roots_sigma_pairs},
      {"chevalley", "chevalley.commutators", true, chevalley_commutators},
      {"chevalley", "chevalley.lie_algebra", false, chevalley_lie_algebra},
      {"chevalley", "chevalley.one_parameter", true, chevalley_one_parameter},
      {"chevalley", "chevalley.weyl_conjugation", true, chevalley_weyl},
      {"involution", "involution.b3_M", false, involution_b3_M},
      {"involution", "involution.b3_preserves_R", true, involution_b3_preserves_R},
      {"involution", "involution.b3_sigma", true, involution_b3_sigma},
      {"involution", "involution.coeff_specializations", true, involution_coeff_specializations},
      {"involution", "involution.coeff_table", false, involution_coeff_table},
      {"involution", "involution.flags", true, involution_flags},
      {"rewrite", "rewrite.rules", true, rewrite_rules},
      {"rewrite", "rewrite.tau_involution", true, rewrite_tau_involution},
      {"rewrite", "rewrite.tau_outputs", true, rewrite_tau_outputs},
      {"rewrite", "rewrite.tau_soundness", true, rewrite_tau_soundness},
      {"rewrite", "rewrite.tau_three_way", true, rewrite_tau_three_way},
      {"moufang", "moufang.algebraic_phi", true, moufang_algebraic_phi},
      {"moufang", "moufang.anisotropy", true, moufang_anisotropy},
      {"moufang", "moufang.group_axioms", true, moufang_group_axioms},
      {"moufang", "moufang.invariant", true, moufang_invariant},
      {"moufang", "moufang.tau_conjugation", true, moufang_tau_conjugation},
      {"moufang", "moufang.tau_involution", true, moufang_tau_involution},
      {"moufang", "moufang.word_product", true, moufang_word_product},
  };
  return defs;
}

}  // namespace

std::vector<std::string> check_names(const RunConfig& config) {
  std::vector<std::string> out;
  for (const CheckDef& d : registry())
    if (config.selected(d.suite)) out.push_back(d.name);
  std::sort(out.begin(), out.end());
  return out;
}

Report run_verify(const RunConfig& config, const std::vector<std::string>& only) {
  const Field f(config.field);
  Ctx ctx{config, f, compute_coeffs(f), std::nullopt};
  Report rep;
  rep.config = config_to_json(config);
  for (const std::string& name : only) {
    auto it = std::find_if(registry().begin(), registry().end(), [&name](const CheckDef& d) { return d.name == name; });
    if (it == registry().end()) throw ConfigError("unknown check '" + name + "'");
  }
  for (const CheckDef& d : registry()) {
    if (only.empty() ? !config.selected(d.suite)
                     : std::find(only.begin(), only.end(), d.name) == only.end())
      continue;
    CheckRecord rec;
    rec.name = d.name;
    const auto t0 = std::chrono::steady_clock::now();
    Probe p;
    if (d.sampled && config.samples == 0) {
      p.skipped = true;
      p.note = "samples = 0";
    } else {
      try {
        d.fn(ctx, p);
      } catch (const std::exception& e) {
        p.expect(false, std::string("exception: ") + e.what());
      }
    }
    rec.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    rec.samples_run = p.samples;
    if (p.failures > 0) {
      rec.status = Status::kFail;
      rec.detail = std::to_string(p.failures) + " failure(s); first: " + p.first;
    } else {
      rec.status = p.skipped ? Status::kSkip : Status::kPass;
      rec.detail = p.note;
    }
    rep.checks.push_back(std::move(rec));
  }
  std::sort(rep.checks.begin(), rep.checks.end(), [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  return rep;
}

}  // namespace mixf4
