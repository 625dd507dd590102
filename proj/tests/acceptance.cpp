// Acceptance run: one PASS/FAIL line per criterion, exit 1 on any FAIL.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "extwb/cohom.hpp"
#include "extwb/counting.hpp"
#include "extwb/towerext.hpp"
#include "extwb/verify.hpp"

using namespace extwb;
using coeff::CoeffMode;
using verify::Context;
using verify::Params;
using verify::Verdict;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void need(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (!note.empty()) note += "; ";
    note += what;
  }
};

Params params(std::uint64_t q, unsigned imax, std::optional<CoeffMode> mode = std::nullopt) {
  Params p;
  p.q = q;
  p.imax = imax;
  p.mode = mode;
  return p;
}

std::string tag(std::uint64_t q, unsigned i) { return "(" + std::to_string(q) + "," + std::to_string(i) + ")"; }

bool pass(const verify::Report& r) { return r.verdict == Verdict::Pass; }

Outcome sus() {
  Outcome o;
  for (std::uint64_t q : {2, 3, 5}) {
    Context ctx(params(q, 2));
    const auto r = verify::run_lemma(ctx, "sus");
    std::size_t expect = 0;
    for (unsigned i = 1; i <= 2; ++i) expect += ctx.tower().level_size(i) - 1;
    o.need(pass(r) && r.payload["cases"] == expect, "q=" + std::to_string(q));
  }
  return o;
}

Outcome bruhat() {
  Outcome o;
  for (std::uint64_t q : {2, 3})
    for (unsigned i = 1; i <= 2; ++i) {
      Context ctx(params(q, 2));
      const auto r = verify::run_lemma(ctx, "bruhat", i);
      const std::uint64_t Q = ctx.tower().level_size(i);
      o.need(pass(r) && r.payload["cell_B"] == Q * (Q - 1) && r.payload["cell_BsB"] == Q * Q * (Q - 1) &&
                 r.payload["order"] == Q * (Q * Q - 1),
             tag(q, i));
    }
  return o;
}

Outcome action() {
  Outcome o;
  for (std::uint64_t q : {2, 3})
    for (unsigned i = 1; i <= 2; ++i) {
      Context ctx(params(q, 2));
      const auto r = verify::run_lemma(ctx, "action", i);
      std::set<long long> exps;
      for (const auto& e : r.payload["exponents"]) exps.insert(e.get<long long>());
      o.need(pass(r) && exps.size() >= 3 && exps.count(0) && r.payload["associativity_pairs"].get<int>() >= 200,
             tag(q, i));
    }
  return o;
}

Outcome dims() {
  Outcome o;
  for (std::uint64_t q : {2, 3})
    for (unsigned i = 1; i <= 2; ++i) {
      Context ctx(params(q, 2));
      const auto r = verify::run_lemma(ctx, "dims", i);
      const std::uint64_t Q = ctx.tower().level_size(i);
      o.need(pass(r) && r.payload["dim_M"] == Q + 1 && r.payload["dim_St"] == Q, tag(q, i));
    }
  return o;
}

Outcome cosets() {
  Outcome o;
  for (auto [q, i] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 1}, {3, 2}}) {
    Context ctx(params(q, 3));
    const std::uint64_t Q = ctx.tower().level_size(i);
    const std::uint64_t expected = (Q - 1) / (q % 2 ? 2 : 1);  // |T_i / T_i ∩ C|
    const auto r = verify::check_coset_distinct(ctx, i, verify::CosetMode::AConjugates);
    o.need(pass(r) && r.payload["distinct"] == expected, tag(q, i));
    const auto neg = verify::check_coset_distinct(ctx, i, verify::CosetMode::AConjugates, ctx.tower().one());
    o.need(neg.verdict == Verdict::Fail, "negative control " + tag(q, i));
  }
  return o;
}

Outcome eta() {
  Outcome o;
  struct Pair {
    long long lam, mu;
  };
  for (auto [q, i] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {2, 2}, {3, 1}}) {
    Context ctx(params(q, q == 2 ? 3 : 2));
    const std::vector<Pair> pairs = q == 2 ? std::vector<Pair>{{0, 0}, {1, 6}, {3, 5}}
                                           : std::vector<Pair>{{0, 0}, {2, 4}, {1, 3}};
    for (const auto& p : pairs)
      o.need(towerext::check_eta_weight(ctx.group(), ctx.character(p.lam), ctx.character(p.mu), i,
                                        ctx.character(p.lam)),
             tag(q, i) + " lambda=" + std::to_string(p.lam));
  }
  Context ctx(params(3, 2));
  bool rejected = false;
  try {
    towerext::build_eta(ctx.group(), ctx.character(0), ctx.character(1), 1);
  } catch (const towerext::CenterMismatch&) {
    rejected = true;
  }
  o.need(rejected, "center-mismatched pair accepted");
  return o;
}

Outcome xi() {
  Outcome o;
  Context c2(params(2, 3));
  const auto r2 = verify::run_lemma(c2, "xi-invariant", 2);
  o.need(pass(r2) && r2.payload["scope"] == "all" && r2.payload["checked"] == 60 && r2.payload["naive_equal"] == true,
         "q=2");
  Context c3(params(3, 3));
  const auto r3 = verify::run_lemma(c3, "xi-invariant", 2);
  o.need(pass(r3) && r3.payload["checked"].get<int>() >= 200 && r3.payload["naive_equal"] == true, "q=3");
  return o;
}

Outcome zeta() {
  Outcome o;
  for (std::uint64_t q : {2, 3}) {
    Context ctx(params(q, 3));
    const auto r = verify::run_lemma(ctx, "zeta-relations", 2);
    o.need(pass(r) && r.payload["pairwise_distinct"] == true && !r.payload["negative_control"]["collision"].is_null(),
           "q=" + std::to_string(q));
  }
  return o;
}

Outcome certificates() {
  Outcome o;
  auto run = [&](std::uint64_t q, const std::string& id, long long theta) {
    Params p = params(q, 3);
    p.theta_exp = theta;
    Context ctx(p);
    const auto r = verify::run_lemma(ctx, id, 2);
    o.need(pass(r) && r.payload.contains("dims") && r.payload["dims"].contains("sum"),
           id + " " + tag(q, 2) + (r.reason.empty() ? "" : ": " + r.reason));
  };
  run(2, "no-f", 0);
  run(2, "no-hg", 21);  // theta = tr is a member at this level
  run(2, "no-lg", 0);
  run(3, "no-f", 0);
  run(3, "no-hg", 0);
  return o;
}

Outcome counting_ineqs() {
  Outcome o;
  for (std::uint64_t q : {2, 3, 5, 7, 9})
    for (unsigned i = 2; i <= 6; ++i) o.need(pass(verify::check_counting(q, i)), tag(q, i));
  const auto one = verify::check_counting(3, 1);
  o.need(one.verdict == Verdict::Skipped && !one.reason.empty(), "i=1 not skipped");
  const auto e = counting::eq36(3, 1);
  o.need(!e.holds(), "eq36 at (3,1) holds");
  return o;
}

Outcome cohomology() {
  Outcome o;
  struct Case {
    std::uint64_t q;
    std::optional<CoeffMode> mode;
    bool maschke;
  };
  for (const Case& c : {Case{2, std::nullopt, true}, Case{2, CoeffMode::prime_field(7), true},
                        Case{2, CoeffMode::prime_field(2, 2), false}, Case{3, std::nullopt, true},
                        Case{3, CoeffMode::prime_field(241), true}, Case{3, CoeffMode::prime_field(3, 4), false}}) {
    Context ctx(params(c.q, 2, c.mode));
    const auto r = verify::run_lemma(ctx, "ext1");
    const std::string where = "q=" + std::to_string(c.q) + " " + (c.mode ? c.mode->to_string() : "cyclo");
    o.need(pass(r) && r.payload["pairs"].size() == 9 && r.payload["maschke"] == c.maschke, where);
    for (const auto& p : r.payload["pairs"]) {
      o.need(p["ext1"] == p["ext1_unreduced"], where + " solvers");
      if (c.maschke) o.need(p["ext1"] == 0, where + " Maschke");
    }
    if (!c.mode) o.need(pass(verify::run_lemma(ctx, "hom-mackey")), where + " hom");
  }
  return o;
}

Outcome normalization() {
  Outcome o;
  Context ctx(params(3, 2));
  const auto& f = ctx.field();
  const auto units = ctx.tower().units(2);
  std::mt19937 rng(99);
  std::uniform_int_distribution<long long> exp(1, 79), num(1, 30);
  int done = 0;
  while (done < 20) {
    const auto th = ctx.character(exp(rng));
    if (th.is_trivial_on_level(2)) continue;
    const coeff::Scalar a = f->from_rational(mpq_class(static_cast<long>(num(rng)), static_cast<long>(num(rng))));
    std::vector<coeff::Scalar> phi;
    for (auto x : units) phi.push_back(a * (th.eval(x) - f->one()));
    const auto res = cohom::normalize_extension(th, 2, phi);
    o.need(res.a && *res.a == a, "round trip");
    ++done;
  }
  const auto th = ctx.character(10);
  std::vector<coeff::Scalar> bad;
  for (auto x : units) bad.push_back(th.eval(x) * th.eval(x) - f->one());
  bool rejected = false;
  try {
    cohom::normalize_extension(th, 2, bad);
  } catch (const cohom::NotACochain&) {
    rejected = true;
  }
  o.need(rejected, "non-cochain accepted");
  for (unsigned m : {2u, 3u, 4u, 6u})
    for (std::uint64_t ch : {0u, 2u, 3u, 5u, 7u}) {
      const auto c = cohom::coxeter_check(m, ch);
      o.need(c.forces_zero == (ch == 0 || m % ch != 0) && c.recurrence_holds,
             "m=" + std::to_string(m) + " char=" + std::to_string(ch));
    }
  return o;
}

Outcome determinism() {
  Outcome o;
  for (std::uint64_t q : {2, 3}) {
    const Params p = params(q, q == 2 ? 3 : 2);
    Context a(p), b(p);
    const auto da = verify::report_document(p, verify::run_all(a)).dump(2);
    const auto db = verify::report_document(p, verify::run_all(b)).dump(2);
    o.need(da == db, "q=" + std::to_string(q));
  }
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"s e(a) s identity, q in {2,3,5}, i <= 2", sus},
      {"Bruhat round trip and cell sizes, q in {2,3}, i <= 2", bruhat},
      {"action vs coset oracle, associativity", action},
      {"dim M_i = q^{i!}+1, dim St_i = q^{i!}", dims},
      {"coset distinctness with negative control", cosets},
      {"eta weight property and center mismatch", eta},
      {"xi invariance (all of G_2 at q=2, sampled at q=3)", xi},
      {"zeta relations, distinct support, collision control", zeta},
      {"non-splitness certificates: F, H (theta exp 21), L at (2,2); F, H at (3,2)", certificates},
      {"counting inequalities, q in {2,3,5,7,9}, 2 <= i <= 6", counting_ineqs},
      {"Ext^1 oracle, solver agreement, Hom vs double cosets", cohomology},
      {"normalization round trip, non-cochains, Coxeter table", normalization},
      {"byte-identical reports", determinism},
  };
  bool all = true;
  int n = 0;
  for (const auto& c : criteria) {
    ++n;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("error: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    all = all && o.ok;
    std::printf("%s %2d %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", n, c.name, s, o.note.empty() ? "" : " -- ",
                o.note.c_str());
  }
  return all ? 0 : 1;
}
