#include <sstream>

#include "json.hpp"
#include "lftlab/qlft.hpp"

namespace lftlab {

std::string transcript_jsonl(const SimRun& run) {
  using nlohmann::ordered_json;
  std::ostringstream out;
  for (const StepSummary& s : run.step_trace) {
    ordered_json rec;
    rec["step"] = s.name;
    rec["labels"] = s.labels;
    rec["norm"] = to_string(s.norm);
    rec["acceptance"] = s.acceptance ? ordered_json(to_string(*s.acceptance)) : ordered_json(nullptr);
    rec["digest"] = s.digest;
    out << rec.dump() << '\n';
  }
  ordered_json summary;
  summary["step"] = "summary";
  summary["seed"] = run.rng_seed;
  summary["attempts"] = run.attempts;
  summary["success_probability"] = to_string(run.success_probability);
  summary["expected_aa_repetitions"] = run.expected_aa_repetitions;
  summary["W"] = run.W;
  ordered_json checks = ordered_json::array();
  for (const auto& v : run.verification) {
    checks.push_back({{"reference", v.reference}, {"status", to_string(v.status)}});
  }
  summary["verification"] = checks;
  out << summary.dump() << '\n';
  return out.str();
}

}  // namespace lftlab
