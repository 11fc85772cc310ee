#ifndef MIXF4_VERIFY_HPP_
#define MIXF4_VERIFY_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"
#include "mixf4/field.hpp"
#include "mixf4/moufang.hpp"
#include "mixf4/rewrite.hpp"
#include "mixf4/sample.hpp"

namespace mixf4 {

struct RunConfig {
  FieldSpec field = FieldSpec::default_mixed();
  int samples = 100;  // 0 turns every sampled check into a skip
  std::uint64_t seed = 1;
  std::set<std::string> suites = {"all"};
  std::uint64_t step_bound = 1'000'000;
  SampleShape shape{};              // field, group and Moufang samples
  SampleShape tau_shape{1, 1, false};  // inputs of the word rewriter

  bool selected(const std::string& suite) const {
    return suites.count("all") != 0 || suites.count(suite) != 0;
  }
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"fields", "roots", "chevalley", "rewrite", "involution",
                                                 "moufang"};
  return names;
}

// Throws ConfigError on unknown keys, bad values or a malformed field spec.
RunConfig config_from_json(const nlohmann::json& j);
nlohmann::json config_to_json(const RunConfig& c);

enum class Status { kPass, kFail, kSkip };
std::string status_name(Status s);

struct CheckRecord {
  std::string name;
  Status status = Status::kPass;
  int samples_run = 0;
  double elapsed_ms = 0;
  std::string detail;
};

struct Report {
  static constexpr int kSchemaVersion = 1;
  nlohmann::json config;
  std::vector<CheckRecord> checks;  // sorted by name

  int count(Status s) const;
  const CheckRecord* find(const std::string& name) const;
  // Timing fields are left out when `timing` is false, which makes the
  // output byte-identical for a fixed configuration.
  nlohmann::json to_json(bool timing = true) const;
};

// Names of all checks of the selected suites, sorted.
std::vector<std::string> check_names(const RunConfig& config);

// Runs the named checks (all of the selected suites when `only` is empty).
Report run_verify(const RunConfig& config, const std::vector<std::string>& only = {});

// Seeds a sampler for check `name`, sample `index`: independent of which
// other checks run.
std::uint64_t sample_seed(std::uint64_t seed, const std::string& name, std::uint64_t index);

// Stratum of the i-th rewriter sample.  Every window of seven consecutive
// samples starting at 0 covers all strata once.
int tau_stratum(int i);

// Everything that is checked about tau at a single input.
struct TauVerdict {
  std::uint64_t steps = 0;
  bool sound = false;           // matrix(n u n) = matrix(b) matrix(n) matrix(u')
  bool b_parabolic = false;     // b in P_J
  bool b_sigma_fixed = false;
  bool uprime_valid = false;    // u' satisfies the norm relation
  bool closed_agrees = false;   // closed formula equals the rewriter output
  bool oracle_agrees = false;   // the matrix decomposition singles out u'
  bool involution = false;      // tau(u') = u, both closed and at matrix level
  U1Elem uprime;
  std::string error;            // set when the rewriter threw

  bool three_way() const { return closed_agrees && oracle_agrees; }
  bool all() const {
    return error.empty() && sound && b_parabolic && b_sigma_fixed && uprime_valid && three_way() &&
           involution;
  }
  std::string summary() const;
};

// `full_b` = false skips the evaluation of b (the expensive part) and
// reports soundness through the oracle's left factor instead.
TauVerdict check_tau(const Field& f, const U1Elem& u, std::uint64_t step_bound, bool full_b = true);

// JSON form of a UElem: {"a": [4 strings], "b": [4 strings]}.
nlohmann::json uelem_to_json(const UElem& p);
UElem uelem_from_json(const Field& f, const nlohmann::json& j);

}  // namespace mixf4

#endif  // MIXF4_VERIFY_HPP_
