#include <doctest.h>

#include "extwb/verify.hpp"

using namespace extwb;
using verify::Context;
using verify::CosetMode;
using verify::Params;
using verify::Verdict;

namespace {

Params params(std::uint64_t q, unsigned imax) {
  Params p;
  p.q = q;
  p.imax = imax;
  return p;
}

}  // namespace

TEST_CASE("registry order and unknown ids") {
  const std::vector<std::string> ids = {"sus",          "bruhat",         "action", "dims",   "suw",
                                        "coset-basis",  "eta-weight",     "counting", "xi-invariant",
                                        "zeta-relations", "no-f",         "no-hg",  "no-lg",  "normalize",
                                        "coxeter",      "ext1",           "hom-mackey"};
  REQUIRE(verify::registry().size() == ids.size());
  for (std::size_t k = 0; k < ids.size(); ++k) CHECK(verify::registry()[k].id == ids[k]);
  CHECK(verify::is_registered("no-lg"));
  CHECK_FALSE(verify::is_registered("lemma-4.4"));
  Context ctx(params(2, 2));
  CHECK_THROWS_AS(verify::run_lemma(ctx, "nope"), verify::UnknownCheck);
}

TEST_CASE("parameter validation") {
  CHECK_THROWS(params(6, 2).validate());
  CHECK_THROWS(params(3, 1).validate());
  Params p = params(3, 2);
  p.budget = 10;
  CHECK_THROWS(p.validate());
  CHECK_THROWS([] {
    Params bad = params(3, 2);
    bad.mode = coeff::CoeffMode::prime_field(9);
    bad.validate();
  }());
  CHECK_NOTHROW(params(4, 2).validate());
}

TEST_CASE("sus report covers every unit") {
  Context ctx(params(3, 2));
  const auto r = verify::run_lemma(ctx, "sus");
  CHECK(r.verdict == Verdict::Pass);
  CHECK(r.payload["cases"] == 10);
  CHECK(r.payload["failures"] == 0);
}

TEST_CASE("coset distinctness examples") {
  {
    Context ctx(params(2, 3));
    const auto r = verify::check_coset_distinct(ctx, 2, CosetMode::AConjugates);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.payload["distinct"] == 3);
    CHECK(verify::check_coset_criterion(ctx, 2).verdict == Verdict::Pass);
    CHECK(verify::check_coset_distinct(ctx, 2, CosetMode::AConjugates, ctx.tower().one()).verdict == Verdict::Fail);
    CHECK(verify::check_coset_criterion(ctx, 2, ctx.tower().one()).verdict == Verdict::Fail);
    const auto cells = verify::check_coset_distinct(ctx, 2, CosetMode::BCells);
    CHECK(cells.verdict == Verdict::Pass);
    CHECK(cells.payload["distinct_cosets"] == 15);
  }
  {
    Context ctx(params(3, 3));
    const auto r = verify::check_coset_distinct(ctx, 2, CosetMode::AConjugates);
    CHECK(r.verdict == Verdict::Pass);
    CHECK(r.payload["distinct"] == 4);
    const auto one = verify::check_coset_distinct(ctx, 1, CosetMode::AConjugates);
    CHECK(one.payload["distinct"] == 1);
  }
}

TEST_CASE("levels past the budget are skipped") {
  Context ctx(params(3, 3));
  const auto r = verify::run_lemma(ctx, "bruhat", 3);
  CHECK(r.verdict == Verdict::Skipped);
  CHECK_FALSE(r.reason.empty());
  CHECK(verify::run_lemma(ctx, "counting", 1).verdict == Verdict::Skipped);
}

TEST_CASE("boundary memberships are reported as failures") {
  Context ctx(params(2, 3));
  const auto f1 = verify::run_lemma(ctx, "no-f", 1);
  CHECK(f1.verdict == Verdict::Fail);
  CHECK(f1.payload["member"] == true);
  CHECK(f1.payload["injective"] == true);
  CHECK(verify::run_lemma(ctx, "no-f", 2).verdict == Verdict::Pass);
  CHECK(verify::run_lemma(ctx, "no-hg", 2).verdict == Verdict::Fail);
  CHECK(verify::run_lemma(ctx, "no-lg", 2).verdict == Verdict::Pass);
  Params p = params(2, 3);
  p.theta_exp = 21;
  Context odd(p);
  CHECK(verify::run_lemma(odd, "no-hg", 2).verdict == Verdict::Pass);
}

TEST_CASE("center conditions skip with a reason") {
  Params p = params(3, 2);
  p.theta_exp = 1;
  Context ctx(p);
  const auto r = verify::run_lemma(ctx, "xi-invariant", 2);
  CHECK(r.verdict == Verdict::Skipped);
  p.theta_exp = 0;
  p.mu_exp = 1;
  Context mis(p);
  CHECK(verify::run_lemma(mis, "eta-weight", 1).verdict == Verdict::Skipped);
}

TEST_CASE("documents are deterministic") {
  const Params p = params(2, 3);
  Context a(p), b(p);
  const auto da = verify::report_document(p, verify::run_all(a)).dump(2);
  const auto db = verify::report_document(p, verify::run_all(b)).dump(2);
  CHECK(da == db);
  const auto doc = nlohmann::json::parse(da);
  CHECK(doc["version"] == 1);
  CHECK(doc["config"]["q"] == 2);
  CHECK(doc["summary"].is_object());
  CHECK(verify::render_text(doc).find("q=2 imax=3") != std::string::npos);
  CHECK(verify::any_fail(verify::run_all(a, {"no-f"})));
  CHECK_FALSE(verify::any_fail(verify::run_all(a, {"sus", "dims"})));
}

TEST_CASE("ext table") {
  Params p = params(3, 3);
  p.theta_exp = 2;
  p.lambda_exp = 2;
  p.mu_exp = 4;
  Context ctx(p);
  const auto t = verify::ext_table(ctx);
  const auto text = verify::render_table(t);
  CHECK(text.find("no-hg: PASS") != std::string::npos);
}
