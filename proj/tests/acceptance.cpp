// Acceptance suite: one pass/fail line per criterion.
//
//   acceptance [samples] [seed]
//
// Defaults are 100 samples and seed 1; fewer samples are for smoke runs only
// and make the sample-count criteria fail.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "mixf4/chevalley.hpp"
#include "mixf4/verify.hpp"

using namespace mixf4;

namespace {

struct Criterion {
  int id;
  std::string title;
  std::vector<std::string> checks;
  bool algebraic = false;
  int min_samples = 0;     // on each sampled check
  double max_seconds = 0;  // 0: no limit of its own
};

std::string brief(const CheckRecord& r) {
  std::string s = r.name + " " + status_name(r.status) + " (" + std::to_string(r.samples_run) + ")";
  if (r.status == Status::kFail) s += ": " + r.detail;
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  const int samples = argc > 1 ? std::atoi(argv[1]) : 100;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 1;

  const std::vector<Criterion> criteria = {
      {1, "Lie algebra over Z: antisymmetry and Jacobi on all basis triples", {"chevalley.lie_algebra"}, false, 0, 60},
      {2, "commutator relations on all ordered pairs, 3 samples each", {"chevalley.commutators"}, false, 6624, 600},
      {3, "coefficient table r1..r15 and conj(c_r) c_sigma(r) = 1", {"involution.coeff_table"}},
      {4, "B3 model: R preserved, conj(S) S^-1 = M, sigma_b3 = sigma on words",
       {"involution.b3_M", "involution.b3_preserves_R", "involution.b3_sigma"}},
      {5, "rewriter soundness, b in P_J and sigma-fixed, tau^2 = id",
       {"rewrite.tau_soundness", "rewrite.tau_outputs", "rewrite.tau_involution"}, false, 100},
      {6, "tau: closed formula = rewriter = matrix decomposition", {"rewrite.tau_three_way"}, false, 100},
      {7, "group law of U and agreement with word multiplication",
       {"moufang.group_axioms", "moufang.invariant", "moufang.word_product"}, false, 100},
      {8, "algebraic case: phi is a homomorphism intertwining the two taus",
       {"moufang.algebraic_phi", "moufang.invariant"}, true, 100},
      {9, "long roots have even short-root coefficients", {"roots.lemma_long"}, false, 24},
      {10, "nonzero norms on random vectors of O_l and O_mixed", {"moufang.anisotropy"}, false, 2000},
  };

  RunConfig mixed;
  mixed.samples = samples;
  mixed.seed = seed;
  RunConfig algebraic = mixed;
  algebraic.field = FieldSpec::default_algebraic();

  // One run per field mode, so that criteria sharing checks (the rewriter
  // samples behind 5 and 6) compute them once.
  std::vector<std::string> names[2];
  for (const Criterion& c : criteria)
    for (const std::string& n : c.checks)
      if (std::find(names[c.algebraic].begin(), names[c.algebraic].end(), n) == names[c.algebraic].end())
        names[c.algebraic].push_back(n);

  const auto start = std::chrono::steady_clock::now();
  // The structure constants are built on first use; charge that to criterion 1.
  (void)StructureConstants::f4();
  const double setup_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Report reports[2];
  std::string errors[2];
  for (int k = 0; k < 2; ++k) {
    try {
      reports[k] = run_verify(k ? algebraic : mixed, names[k]);
    } catch (const std::exception& e) {
      errors[k] = e.what();
    }
  }

  int failed = 0;
  for (const Criterion& c : criteria) {
    const Report& r = reports[c.algebraic];
    std::string problem = errors[c.algebraic];
    std::string detail;
    double ms = c.id == 1 ? setup_ms : 0;
    for (const std::string& n : c.checks) {
      const CheckRecord* rec = r.find(n);
      if (rec == nullptr) {
        if (problem.empty()) problem = "missing check " + n;
        continue;
      }
      ms += rec->elapsed_ms;
      detail += (detail.empty() ? "" : "; ") + brief(*rec);
      if (rec->status != Status::kPass) problem = "not passed";
      else if (problem.empty() && rec->samples_run < c.min_samples) problem = "too few samples";
      else if (problem.empty() && n.rfind("rewrite.tau", 0) == 0 && rec->detail != "7 of 7 strata")
        problem = "strata not covered";
    }
    if (problem.empty() && c.max_seconds > 0 && ms > 1000 * c.max_seconds) problem = "over the time limit";
    const bool ok = problem.empty();
    failed += !ok;
    std::cout << "criterion " << c.id << ": " << (ok ? "PASS" : "FAIL") << "  " << c.title << "  [" << detail
              << "; " << static_cast<long>(ms) << " ms" << (ok ? "" : "; " + problem) << "]" << std::endl;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::cout << (10 - failed) << " of 10 criteria passed in " << static_cast<long>(total) << " s" << std::endl;
  return failed == 0 ? 0 : 1;
}
