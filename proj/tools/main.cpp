// Command-line front end: `extwb verify` runs the check registry, `extwb
// table` prints the Ext^1 summary for SL_2.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "extwb/verify.hpp"

using namespace extwb;

namespace {

coeff::CoeffMode parse_coeff(const std::string& s, verify::Params& p) {
  if (s == "rat") return coeff::CoeffMode::rationals();
  if (s.rfind("fp:", 0) == 0) {
    std::stringstream ss(s.substr(3));
    std::uint64_t ell = 0;
    unsigned m = 1;
    char sep = 0;
    if (!(ss >> ell)) throw std::invalid_argument("bad --coeff value: " + s);
    if (ss >> sep) {
      if (sep != ':' || !(ss >> m)) throw std::invalid_argument("bad --coeff value: " + s);
    }
    if (!coeff::is_prime(ell)) throw std::invalid_argument("fp:l needs a prime l");
    return coeff::CoeffMode::prime_field(ell, m);
  }
  (void)p;
  throw std::invalid_argument("bad --coeff value: " + s + " (rat, cyclo or fp:l)");
}

std::vector<std::string> split_ids(const std::string& s) {
  std::vector<std::string> out;
  if (s == "all") return out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot open " + out);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite-level checks for extensions of SL_2 modules over the finite-field tower"};
  app.require_subcommand(1);

  verify::Params p;
  std::string coeff_s = "cyclo", lemmas = "all", out, format = "json";
  std::optional<unsigned> level;
  auto add_common = [&](CLI::App* c) {
    c->add_option("--q", p.q, "field size q (prime power)")->required();
    c->add_option("--imax", p.imax, "top level of the tower (>= 2)")->required();
    c->add_option("--coeff", coeff_s, "coefficient field: rat, cyclo or fp:l");
    c->add_option("--theta-exp", p.theta_exp, "exponent of theta");
    c->add_option("--lambda-exp", p.lambda_exp, "exponent of lambda");
    c->add_option("--mu-exp", p.mu_exp, "exponent of mu");
    c->add_option("--budget", p.budget, "enumeration budget");
    c->add_option("--out", out, "output file (default stdout)");
    c->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  };
  auto* verify_cmd = app.add_subcommand("verify", "run the check registry");
  add_common(verify_cmd);
  verify_cmd->add_option("--lemmas", lemmas, "comma-separated check ids, or all");
  verify_cmd->add_option("--level", level, "run the selected checks at this level only");
  verify_cmd->add_flag("--timings", p.timings, "include wall time in reports");
  auto* table_cmd = app.add_subcommand("table", "print the Ext^1 table for SL_2");
  add_common(table_cmd);
  auto* list_cmd = app.add_subcommand("list", "list registered check ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  if (list_cmd->parsed()) {
    for (const auto& c : verify::registry()) std::cout << c.id << "\t" << c.regime << "\t" << c.description << "\n";
    return 0;
  }

  std::unique_ptr<verify::Context> ctx;
  std::vector<std::string> ids;
  try {
    if (coeff_s != "cyclo") p.mode = parse_coeff(coeff_s, p);
    ids = split_ids(lemmas);
    for (const auto& id : ids)
      if (!verify::is_registered(id)) throw std::invalid_argument("unknown check id: " + id);
    ctx = std::make_unique<verify::Context>(p);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (table_cmd->parsed()) {
      const auto t = verify::ext_table(*ctx);
      emit(format == "json" ? t.dump(2) + "\n" : verify::render_table(t), out);
      return 0;
    }
    std::vector<verify::Report> reports;
    if (level) {
      const auto& sel = ids.empty() ? [] {
        std::vector<std::string> v;
        for (const auto& c : verify::registry()) v.push_back(c.id);
        return v;
      }() : ids;
      for (const auto& id : sel) reports.push_back(verify::run_lemma(*ctx, id, level));
    } else {
      reports = verify::run_all(*ctx, ids);
    }
    const auto doc = verify::report_document(ctx->params(), reports);
    emit(format == "json" ? doc.dump(2) + "\n" : verify::render_text(doc), out);
    return verify::any_fail(reports) ? 1 : 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
