// Check registry: every construction and counting argument as a named,
// deterministic check producing a JSON report.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "extwb/charmod.hpp"
#include "extwb/coeff.hpp"
#include "extwb/grp.hpp"
#include "extwb/tower.hpp"

namespace extwb::verify {

class UnknownCheck : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Verdict { Pass, Fail, Skipped };
std::string to_string(Verdict v);

struct Params {
  std::uint64_t q = 2;
  unsigned imax = 2;
  /// Unset means Cyclotomic(q^{imax!} - 1).
  std::optional<coeff::CoeffMode> mode;
  long long theta_exp = 0;
  long long lambda_exp = 0;
  long long mu_exp = 0;
  std::uint64_t budget = 2'000'000;
  bool timings = false;

  /// Throws std::invalid_argument with a usage message.
  void validate() const;
  nlohmann::json to_json() const;
};

struct Report {
  std::string id;
  std::optional<unsigned> level;
  Verdict verdict = Verdict::Pass;
  std::string reason;  // SKIPPED reason or FAIL note
  std::string regime;  // "module" or "big-integer"
  nlohmann::json payload = nlohmann::json::object();
  double seconds = 0;

  nlohmann::json to_json(bool timings) const;
};

/// Tower, coefficient field and group built once per run.
class Context {
 public:
  explicit Context(const Params& p);

  const Params& params() const { return params_; }
  const tower::Tower& tower() const { return *tw_; }
  const grp::Group& group() const { return *G_; }
  const coeff::FieldPtr& field() const { return field_; }
  charmod::TorusChar character(long long e) const { return charmod::TorusChar(*tw_, field_, e); }
  charmod::TorusChar theta() const { return character(params_.theta_exp); }
  charmod::TorusChar lambda() const { return character(params_.lambda_exp); }
  charmod::TorusChar mu() const { return character(params_.mu_exp); }

 private:
  Params params_;
  std::unique_ptr<tower::Tower> tw_;
  coeff::FieldPtr field_;
  std::unique_ptr<grp::Group> G_;
};

struct CheckInfo {
  std::string id;
  std::string description;
  std::string regime;
};
/// Registry in run order.
const std::vector<CheckInfo>& registry();
bool is_registered(const std::string& id);

enum class CosetMode { AConjugates, BCells };

/// Explicit enumeration of the coset representatives. `a` overrides a_i
/// (negative control).
Report check_coset_distinct(const Context& ctx, unsigned i, CosetMode mode, std::optional<tower::Elem> a = std::nullopt);
/// Pairwise subfield-membership test of differences.
Report check_coset_criterion(const Context& ctx, unsigned i, std::optional<tower::Elem> a = std::nullopt);
/// Big-integer check of the three inequalities; i = 1 is SKIPPED with a note.
Report check_counting(std::uint64_t q, unsigned i);

/// One report. Without a level the check's default level is used.
Report run_lemma(const Context& ctx, const std::string& id, std::optional<unsigned> level = std::nullopt);
/// Every registered check at every level the parameters allow, in registry order.
std::vector<Report> run_all(const Context& ctx, const std::vector<std::string>& ids = {});

/// Ext^1 rows for pairs from {tr, St, M(θ)} plus (M(λ), M(μ)): the claimed
/// value, its hypothesis, and the report that backs it at the top level.
nlohmann::json ext_table(const Context& ctx);
std::string render_table(const nlohmann::json& table);

/// {version, config, reports, summary}.
nlohmann::json report_document(const Params& p, const std::vector<Report>& reports);
/// Text rendering of report_document output.
std::string render_text(const nlohmann::json& doc);
bool any_fail(const std::vector<Report>& reports);

}  // namespace extwb::verify
