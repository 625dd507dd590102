#include "extwb/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "extwb/cohom.hpp"
#include "extwb/counting.hpp"
#include "extwb/indmod.hpp"
#include "extwb/towerext.hpp"

namespace extwb::verify {

using charmod::TorusChar;
using coeff::Scalar;
using grp::Subgroup;
using json = nlohmann::json;
using tower::Elem;

namespace {

constexpr int kDocVersion = 1;
constexpr std::uint64_t kBruhatCap = 100'000;    // |G_i| for exhaustive round trips
constexpr std::uint64_t kActionDimCap = 4'097;   // labels per module for the action checks
constexpr std::uint64_t kFullOrbitCap = 5'000;   // |G_i| for exhaustive invariance
constexpr std::uint64_t kCohomGroupCap = 24;     // |G_1| for the cohomology oracle (q <= 3)
constexpr std::uint64_t kSeed = 0x5eed1234abcdULL;
constexpr unsigned kCountingMaxLevel = 6;

Report make(const std::string& id, std::optional<unsigned> level, const std::string& regime) {
  Report r;
  r.id = id;
  r.level = level;
  r.regime = regime;
  return r;
}

Report skipped(Report r, std::string reason) {
  r.verdict = Verdict::Skipped;
  r.reason = std::move(reason);
  return r;
}

void require(Report& r, bool ok, const std::string& what) {
  if (ok) return;
  if (r.verdict != Verdict::Fail) r.reason = what;
  r.verdict = Verdict::Fail;
}

std::uint64_t level_q(const Context& ctx, unsigned i) { return ctx.tower().level_size(i); }

// Canonical representative of the U_i-coset x + F_{q^{i!}}.
Elem coset_key(const tower::Tower& tw, Elem x, unsigned i) {
  Elem best = x;
  for (Elem y : tw.enumerate_level(i)) best = std::min(best, tw.add(x, y));
  return best;
}

grp::GroupElem random_element(const grp::Group& G, unsigned level, std::mt19937_64& rng) {
  const auto& tw = G.tower();
  const auto& all = tw.enumerate_level(level);
  const auto units = tw.units(level);
  std::uniform_int_distribution<std::size_t> pick_all(0, all.size() - 1), pick_unit(0, units.size() - 1);
  const Elem x = all[pick_all(rng)], t = units[pick_unit(rng)], y = all[pick_all(rng)];
  if (rng() % (all.size() + 1) == 0) return G.reassemble(grp::CellB{x, t}, level);
  return G.reassemble(grp::CellBsB{x, t, y}, level);
}

// Exponents spanning the characters of T_1, used by the Mackey cross-check.
std::vector<long long> level_one_exponents(const tower::Tower& tw) {
  const std::uint64_t N = tw.order(), n1 = tw.level_size(1) - 1;
  std::vector<long long> out;
  for (std::uint64_t k = 0; k < n1; ++k) out.push_back(static_cast<long long>(k * (N / n1)));
  return out;
}

bool same_on_center(const TorusChar& a, const TorusChar& b) {
  return a.is_trivial_on_center() == b.is_trivial_on_center();
}

// ---------------------------------------------------------------------------
// Individual checks.

Report check_sus(const Context& ctx, unsigned level) {
  Report r = make("sus", level, "module");
  std::size_t cases = 0, bad = 0;
  json per_level = json::array();
  for (unsigned j = 1; j <= level; ++j) {
    std::size_t here = 0;
    for (Elem a : ctx.tower().units(j)) {
      ++here;
      if (!ctx.group().check_sus(a)) ++bad;
    }
    cases += here;
    per_level.push_back({{"level", j}, {"cases", here}});
  }
  r.payload = {{"cases", cases}, {"failures", bad}, {"levels", per_level}};
  require(r, bad == 0, "identity fails");
  return r;
}

Report check_bruhat(const Context& ctx, unsigned i) {
  Report r = make("bruhat", i, "module");
  const auto& G = ctx.group();
  const std::uint64_t order = G.order(Subgroup::G, i);
  if (order > kBruhatCap) return skipped(r, "level budget: |G_i| = " + std::to_string(order));
  const auto all = G.enumerate(Subgroup::G, i);
  std::uint64_t cell_b = 0, cell_bsb = 0, bad = 0;
  for (const auto& g : all) {
    const auto f = G.bruhat(g);
    (std::holds_alternative<grp::CellB>(f) ? cell_b : cell_bsb)++;
    if (!(G.reassemble(f, i) == g)) ++bad;
  }
  const std::uint64_t Q = level_q(ctx, i);
  r.payload = {{"order", all.size()},
               {"cell_B", cell_b},
               {"cell_BsB", cell_bsb},
               {"expected_B", Q * (Q - 1)},
               {"expected_BsB", Q * Q * (Q - 1)},
               {"round_trip_failures", bad}};
  require(r, all.size() == order, "enumeration size differs from |G_i|");
  require(r, bad == 0, "round trip fails");
  require(r, cell_b == Q * (Q - 1) && cell_bsb == Q * Q * (Q - 1), "cell sizes differ");
  return r;
}

Report check_action(const Context& ctx, unsigned i) {
  Report r = make("action", i, "module");
  const std::uint64_t dim = level_q(ctx, i) + 1;
  if (dim > kActionDimCap) return skipped(r, "level budget: dim M_i = " + std::to_string(dim));
  const auto& G = ctx.group();
  std::set<std::uint64_t> exps;
  for (long long e : {0LL, 1LL, 2LL, ctx.params().theta_exp, ctx.params().lambda_exp, ctx.params().mu_exp})
    exps.insert(ctx.character(e).exponent());
  std::mt19937_64 rng(kSeed + i);
  std::size_t pairs = 0, assoc = 0, bad = 0;
  json done = json::array(), unsupported = json::array();
  for (std::uint64_t e : exps) {
    const TorusChar th = ctx.character(static_cast<long long>(e));
    try {
      indmod::InducedModule M(G, th, i);
      for (const auto& g : G.generators(i))
        for (auto l : M.labels()) {
          ++pairs;
          const auto a = M.act(g, l), b = M.act_oracle(g, l);
          if (a.label != b.label || a.coeff != b.coeff) ++bad;
        }
      for (int k = 0; k < 200; ++k) {
        const auto g = random_element(G, i, rng), h = random_element(G, i, rng);
        const auto l = M.labels()[rng() % M.dim()];
        const auto v = M.basis_vector(l);
        ++assoc;
        if (M.act(G.mul(g, h), v) != M.act(g, M.act(h, v))) ++bad;
      }
      done.push_back(e);
    } catch (const coeff::UnsupportedOrder&) {
      unsupported.push_back(e);
    }
  }
  r.payload = {{"exponents", done},
               {"unsupported_exponents", unsupported},
               {"generator_label_pairs", pairs},
               {"associativity_pairs", assoc},
               {"failures", bad}};
  if (done.empty()) return skipped(r, "coefficient field lacks the character values");
  require(r, bad == 0, "rule-based action disagrees with the coset oracle");
  return r;
}

Report check_dims(const Context& ctx, unsigned i) {
  Report r = make("dims", i, "module");
  const std::uint64_t Q = level_q(ctx, i);
  if (Q + 1 > kActionDimCap) return skipped(r, "level budget: dim M_i = " + std::to_string(Q + 1));
  indmod::InducedModule M(ctx.group(), ctx.character(0), i);
  linalg::Echelon ech(ctx.field());
  const auto basis = M.steinberg_basis();
  for (const auto& v : basis) ech.insert(v);
  const auto closure = M.submodule_span(basis);
  r.payload = {{"dim_M", M.dim()}, {"dim_St", ech.rank()}, {"dim_St_closure", closure.size()}, {"q_level", Q}};
  require(r, M.dim() == Q + 1, "dim M_i differs from q^{i!} + 1");
  require(r, ech.rank() == Q && closure.size() == Q, "dim St_i differs from q^{i!}");
  return r;
}

Report check_suw(const Context& ctx, unsigned i) {
  Report r = make("suw", i, "module");
  if (level_q(ctx, i) + 1 > kActionDimCap) return skipped(r, "level budget");
  std::size_t cases = 0, bad = 0;
  json exps = json::array();
  for (long long e : {0LL, ctx.params().theta_exp}) {
    const TorusChar th = ctx.character(e);
    if (!exps.empty() && exps.back() == th.exponent()) continue;
    exps.push_back(th.exponent());
    indmod::InducedModule M(ctx.group(), th, i);
    for (Elem x : ctx.tower().units(i)) {
      ++cases;
      if (!M.check_prop_suw(x)) ++bad;
    }
  }
  r.payload = {{"exponents", exps}, {"cases", cases}, {"failures", bad}};
  require(r, bad == 0, "generator relation fails");
  return r;
}

bool needs_next_level(const Context& ctx, unsigned i) { return i + 1 <= ctx.tower().imax(); }

std::string level_budget(const Context& ctx, unsigned i) {
  return "level budget: level " + std::to_string(i + 1) + " is above imax = " + std::to_string(ctx.tower().imax());
}

Report check_coset_basis(const Context& ctx, unsigned i) {
  Report r = make("coset-basis", i, "module");
  if (i < 1 || !needs_next_level(ctx, i)) return skipped(r, level_budget(ctx, i));
  const Report expl = check_coset_distinct(ctx, i, CosetMode::AConjugates);
  const Report crit = check_coset_criterion(ctx, i);
  const Report neg = check_coset_distinct(ctx, i, CosetMode::AConjugates, ctx.tower().one());
  r.payload = {{"explicit", expl.payload}, {"criterion", crit.payload}, {"negative_control", neg.payload}};
  require(r, expl.verdict == Verdict::Pass, "explicit: " + expl.reason);
  require(r, crit.verdict == Verdict::Pass, "criterion: " + crit.reason);
  require(r, neg.verdict == Verdict::Fail, "negative control did not fail");
  return r;
}

Report check_eta_weight_report(const Context& ctx, unsigned i) {
  Report r = make("eta-weight", i, "module");
  if (i < 1 || !needs_next_level(ctx, i)) return skipped(r, level_budget(ctx, i));
  const TorusChar lam = ctx.lambda(), mu = ctx.mu();
  if (!same_on_center(lam, mu)) return skipped(r, "lambda and mu differ on the center");
  const auto& G = ctx.group();
  const bool ok = towerext::check_eta_weight(G, lam, mu, i, lam);
  const auto eta = towerext::build_eta(G, lam, mu, i);

  // λ times the exponent-1 character differs from λ on T_i whenever |T_i| > 1.
  json wrong = nullptr;
  if (level_q(ctx, i) > 2) {
    const TorusChar other = ctx.character(static_cast<long long>(lam.exponent()) + 1);
    wrong = !towerext::check_eta_weight(G, lam, mu, i, other);
  }
  json mismatch = nullptr;
  if (ctx.tower().p() != 2) {
    try {
      towerext::build_eta(G, lam, ctx.character(static_cast<long long>(mu.exponent()) + 1), i);
      mismatch = false;
    } catch (const towerext::CenterMismatch&) {
      mismatch = true;
    }
  }
  r.payload = {{"lambda", lam.exponent()},
               {"mu", mu.exponent()},
               {"support", eta.size()},
               {"u_checked", G.order(Subgroup::U, i)},
               {"t_checked", G.order(Subgroup::T, i)},
               {"wrong_weight_rejected", wrong},
               {"center_mismatch_rejected", mismatch}};
  require(r, !eta.empty(), "eta vanishes");
  require(r, ok, "weight property fails");
  require(r, wrong.is_null() || wrong.get<bool>(), "wrong weight accepted");
  require(r, mismatch.is_null() || mismatch.get<bool>(), "center-mismatched pair accepted");
  return r;
}

Report check_xi(const Context& ctx, unsigned i) {
  Report r = make("xi-invariant", i, "module");
  if (i < 2 || !needs_next_level(ctx, i)) return skipped(r, i < 2 ? "needs i >= 2" : level_budget(ctx, i));
  const TorusChar th = ctx.theta();
  if (!th.is_trivial_on_center()) return skipped(r, "theta is nontrivial on the center");
  const auto& G = ctx.group();
  const auto xi = towerext::build_xi(G, th, i);
  indmod::InducedModule M(G, th, i + 1);

  std::vector<grp::GroupElem> elems;
  std::string scope;
  if (G.order(Subgroup::G, i) <= kFullOrbitCap) {
    elems = G.enumerate(Subgroup::G, i);
    scope = "all";
  } else {
    elems = G.generators(i);
    std::mt19937_64 rng(kSeed + 100 + i);
    for (int k = 0; k < 200; ++k) elems.push_back(random_element(G, i, rng));
    scope = "generators+200 sampled";
  }
  std::size_t bad = 0;
  for (const auto& g : elems)
    if (M.act(g, xi) != xi) ++bad;

  const Report cells = check_coset_distinct(ctx, i, CosetMode::BCells);
  const bool naive_equal = towerext::build_xi_naive(G, th, i) == xi;
  r.payload = {{"theta", th.exponent()},
               {"support", xi.size()},
               {"checked", elems.size()},
               {"scope", scope},
               {"failures", bad},
               {"naive_equal", naive_equal},
               {"cells", cells.payload}};
  require(r, !xi.empty(), "xi vanishes");
  require(r, bad == 0, "xi is not G_i-invariant");
  require(r, naive_equal, "structured and naive constructions differ");
  require(r, cells.verdict == Verdict::Pass, cells.reason);
  return r;
}

Report check_zeta(const Context& ctx, unsigned i) {
  Report r = make("zeta-relations", i, "module");
  if (i < 2 || !needs_next_level(ctx, i)) return skipped(r, i < 2 ? "needs i >= 2" : level_budget(ctx, i));
  const TorusChar th = ctx.theta();
  if (!th.is_trivial_on_center()) return skipped(r, "theta is nontrivial on the center");
  const auto& G = ctx.group();
  const auto& tw = ctx.tower();
  const auto rel = towerext::check_zeta_relations(G, th, i);
  const Elem b = tw.pick_b(i);
  const auto labels = towerext::zeta_term_labels(G, i, b);
  const bool distinct = !towerext::zeta_collision(G, i, b).has_value();
  // Inside the tower F_{q^{2 i!}} meets the level-(i+1) field in the level-i field.
  Elem bad_b = 0;
  for (Elem x : tw.enumerate_level(i))
    if (x != 0 && tw.fixed_by_frobenius(x, 2 * tower::factorial(i))) {
      bad_b = x;
      break;
    }
  bool control = false;
  try {
    control = towerext::zeta_collision(G, i, bad_b).has_value();
  } catch (const std::invalid_argument&) {
    control = true;  // a vanishing term is itself a degenerate collision
  }
  r.payload = {{"theta", th.exponent()},
               {"b", tw.to_string(b)},
               {"support", labels.size()},
               {"pairwise_distinct", distinct},
               {"s_negates", rel.s_negates},
               {"torus_fixes", rel.torus_fixes},
               {"s_eps", rel.s_eps},
               {"torus_checked", rel.torus_checked},
               {"eps_checked", rel.eps_checked},
               {"negative_control", {{"b", tw.to_string(bad_b)}, {"collision", control}}}};
  require(r, rel.all(), "zeta relation fails");
  require(r, distinct, "support labels collide");
  require(r, control, "negative control did not collide");
  return r;
}

Report check_system(const Context& ctx, towerext::System sys, const TorusChar& lam, const TorusChar& mu, unsigned i,
                    const std::string& id) {
  Report r = make(id, i, "module");
  const unsigned first = sys == towerext::System::F ? 1 : 2;
  if (i < first) return skipped(r, "needs i >= " + std::to_string(first));
  if (!needs_next_level(ctx, i)) return skipped(r, level_budget(ctx, i));
  if (sys == towerext::System::F && !same_on_center(lam, mu)) return skipped(r, "lambda and mu differ on the center");
  if (sys != towerext::System::F && !lam.is_trivial_on_center())
    return skipped(r, "theta is nontrivial on the center");
  towerext::ExtSystem S(ctx.group(), sys, lam, mu);
  json cert = S.nonsplit_certificate(i);
  const bool injective = S.check_injective(i);
  const auto sample = ctx.group().generators(sys == towerext::System::F ? Subgroup::B : Subgroup::G, i);
  const bool equivariant = S.check_equivariance(i, sample);
  r.payload = cert;
  r.payload["injective"] = injective;
  r.payload["equivariant_on_generators"] = equivariant;
  r.payload.erase("verdict");
  require(r, injective, "connecting map is not injective");
  require(r, equivariant, "connecting map is not equivariant");
  require(r, !cert["member"].get<bool>(),
          "connecting vector lies in M_i + invariants at this level; the coset count leaves no room here");
  return r;
}

Report check_normalize(const Context& ctx, unsigned i) {
  Report r = make("normalize", i, "module");
  const std::uint64_t ch = ctx.field()->mode().characteristic();
  if (ch == 2 || ch == ctx.tower().p()) return skipped(r, "characteristic must avoid 2 and p");
  const auto units = ctx.tower().units(i);
  json cases = json::array();
  std::set<std::uint64_t> seen;
  for (long long e : {ctx.params().theta_exp, 1LL}) {
    const TorusChar th = ctx.character(e);
    if (!seen.insert(th.exponent()).second) continue;
    const auto& f = ctx.field();
    json c = {{"theta", th.exponent()}};
    try {
      std::vector<Scalar> zero(units.size(), f->zero());
      const auto z = cohom::normalize_extension(th, i, zero);
      c["zero_already_normal"] = z.status == cohom::Normalization::Status::AlreadyNormal;
      require(r, z.status == cohom::Normalization::Status::AlreadyNormal, "zero cochain not normal");
      if (!th.is_trivial_on_level(i)) {
        const Scalar a = f->from_int(5);
        std::vector<Scalar> phi;
        for (Elem x : units) phi.push_back(a * (th.eval(x) - f->one()));
        const auto res = cohom::normalize_extension(th, i, phi);
        const bool recovered = res.status == cohom::Normalization::Status::Corrected && res.a && *res.a == a;
        c["recovered_a"] = res.a ? res.a->to_json() : json(nullptr);
        require(r, recovered, "a not recovered");
        if (res.a) {
          const auto again = cohom::normalize_extension(th, i, cohom::apply_correction(th, i, phi, *res.a));
          c["idempotent"] = again.status == cohom::Normalization::Status::AlreadyNormal;
          require(r, c["idempotent"].get<bool>(), "correction is not idempotent");
        }
      }
      // φ = θ² - 1 breaks twisted additivity once θ has order >= 3 on T_i.
      bool order3 = false;
      for (Elem x : units) {
        const Scalar v = th.eval(x);
        if (!v.is_one() && !(v * v).is_one()) order3 = true;
      }
      if (order3) {
        std::vector<Scalar> phi;
        for (Elem x : units) phi.push_back(th.eval(x) * th.eval(x) - f->one());
        bool rejected = false;
        try {
          cohom::normalize_extension(th, i, phi);
        } catch (const cohom::NotACochain&) {
          rejected = true;
        }
        c["non_cochain_rejected"] = rejected;
        require(r, rejected, "non-cochain accepted");
      }
    } catch (const coeff::UnsupportedOrder&) {
      c["unsupported"] = true;
    }
    cases.push_back(c);
  }
  r.payload = {{"torus_size", units.size()}, {"cases", cases}};
  return r;
}

Report check_coxeter() {
  Report r = make("coxeter", std::nullopt, "arithmetic");
  json rows = json::array();
  for (unsigned m : {2u, 3u, 4u, 6u})
    for (std::uint64_t ch : {0ULL, 2ULL, 3ULL, 5ULL, 7ULL}) {
      const auto c = cohom::coxeter_check(m, ch);
      const bool expect = ch == 0 || m % ch != 0;
      rows.push_back({{"m", m}, {"char", ch}, {"forces_zero", c.forces_zero}, {"recurrence", c.recurrence_holds}});
      require(r, c.forces_zero == expect, "forces-zero disagrees with char | m");
      require(r, c.recurrence_holds, "alternating-word recurrence fails");
    }
  r.payload = {{"table", rows}};
  return r;
}

Report check_ext1(const Context& ctx) {
  Report r = make("ext1", 1, "module");
  const auto& G = ctx.group();
  if (G.order(Subgroup::G, 1) > kCohomGroupCap) return skipped(r, "group budget: |G_1| too large");
  auto grp = std::make_shared<const cohom::FiniteGroup>(G, 1);
  const TorusChar th = ctx.theta();
  std::vector<cohom::FiniteRep> reps;
  try {
    reps.push_back(cohom::trivial_rep(grp, ctx.field()));
    reps.push_back(cohom::steinberg_rep(grp, th));
    reps.push_back(cohom::induced_rep(grp, th));
  } catch (const coeff::UnsupportedOrder&) {
    return skipped(r, "coefficient field lacks the character values");
  }
  const std::uint64_t ch = ctx.field()->mode().characteristic();
  const bool maschke = ch == 0 || grp->size() % ch != 0;
  std::mt19937_64 rng(kSeed + 7);
  json pairs = json::array();
  for (const auto& M : reps)
    for (const auto& N : reps) {
      const auto red = cohom::ext1_reduced(M, N);
      const auto full = cohom::ext1_unreduced(M, N);
      bool nonsplit_ok = true;
      for (const auto& c : red.transversal) nonsplit_ok = nonsplit_ok && !cohom::find_splitting(M, N, c).split;
      // Random coboundary must split with a certified complement.
      auto phi0 = cohom::Mat::zero(ctx.field(), N.dim(), M.dim());
      for (auto& x : phi0.a) x = ctx.field()->from_int(static_cast<long long>(rng() % 7) - 3);
      const auto sp = cohom::find_splitting(M, N, cohom::coboundary(M, N, phi0));
      const bool split_ok = sp.split && sp.complement_certified && cohom::coboundary(M, N, sp.phi) == cohom::coboundary(M, N, phi0);
      pairs.push_back({{"M", M.name()},
                       {"N", N.name()},
                       {"ext1", red.ext1()},
                       {"ext1_unreduced", full.ext1()},
                       {"dim_z1", red.dim_z1},
                       {"dim_b1", red.dim_b1}});
      require(r, red.ext1() == full.ext1() && red.dim_z1 == full.dim_z1, "solvers disagree");
      if (maschke) require(r, red.ext1() == 0, "nonzero Ext^1 where the group order is invertible");
      require(r, nonsplit_ok, "a transversal cocycle split");
      require(r, split_ok, "coboundary did not split");
    }
  r.payload = {{"group_order", grp->size()}, {"characteristic", ch}, {"maschke", maschke}, {"pairs", pairs}};
  return r;
}

Report check_hom_mackey(const Context& ctx) {
  Report r = make("hom-mackey", 1, "module");
  if (ctx.field()->mode().characteristic() != 0) return skipped(r, "needs characteristic 0");
  const auto& G = ctx.group();
  if (G.order(Subgroup::G, 1) > kCohomGroupCap) return skipped(r, "group budget: |G_1| too large");
  auto grp = std::make_shared<const cohom::FiniteGroup>(G, 1);
  const auto exps = level_one_exponents(ctx.tower());
  json rows = json::array();
  for (long long a : exps)
    for (long long b : exps) {
      const TorusChar lam = ctx.character(a), mu = ctx.character(b);
      const auto M = cohom::induced_rep(grp, lam), N = cohom::induced_rep(grp, mu);
      const std::size_t solved = cohom::hom_space(M, N).size();
      const std::size_t mackey = cohom::hom_dim_double_coset(*grp, lam, mu);
      rows.push_back({{"lambda", lam.exponent()}, {"mu", mu.exponent()}, {"hom", solved}, {"double_coset", mackey}});
      require(r, solved == mackey, "hom_space disagrees with the double-coset count");
    }
  r.payload = {{"pairs", rows}};
  return r;
}

// ---------------------------------------------------------------------------

struct Entry {
  CheckInfo info;
  std::function<std::vector<unsigned>(const Context&)> levels;  // empty: levelless
  std::function<Report(const Context&, std::optional<unsigned>)> run;
};

std::vector<unsigned> range(unsigned lo, unsigned hi) {
  std::vector<unsigned> out;
  for (unsigned k = lo; k <= hi; ++k) out.push_back(k);
  return out;
}

const std::vector<Entry>& entries() {
  using towerext::System;
  static const std::vector<Entry> table = [] {
    std::vector<Entry> t;
    auto all_levels = [](const Context& c) { return range(1, c.tower().imax()); };
    auto lower = [](unsigned lo) {
      return [lo](const Context& c) { return range(lo, std::max(lo, c.tower().imax() - 1)); };
    };
    auto single = [](unsigned v) { return [v](const Context&) { return std::vector<unsigned>{v}; }; };
    t.push_back({{"sus", "s e(a) s factorization, all units of levels 1..L", "module"},
                 [](const Context& c) { return std::vector<unsigned>{c.tower().imax()}; },
                 [](const Context& c, std::optional<unsigned> l) { return check_sus(c, l.value_or(c.tower().imax())); }});
    t.push_back({{"bruhat", "Bruhat factorization round trip and cell sizes", "module"}, all_levels,
                 [](const Context& c, std::optional<unsigned> l) { return check_bruhat(c, l.value_or(1)); }});
    t.push_back({{"action", "rule-based action vs coset oracle; associativity", "module"}, all_levels,
                 [](const Context& c, std::optional<unsigned> l) { return check_action(c, l.value_or(1)); }});
    t.push_back({{"dims", "dim M_i and dim St_i", "module"}, all_levels,
                 [](const Context& c, std::optional<unsigned> l) { return check_dims(c, l.value_or(1)); }});
    t.push_back({{"suw", "s e(x) relations on 1 and eta", "module"}, all_levels,
                 [](const Context& c, std::optional<unsigned> l) { return check_suw(c, l.value_or(1)); }});
    t.push_back({{"coset-basis", "distinct cosets U_i t u_i t^-1 with negative control", "module"}, lower(1),
                 [](const Context& c, std::optional<unsigned> l) { return check_coset_basis(c, l.value_or(1)); }});
    t.push_back({{"eta-weight", "eta_i is U_i-fixed with T_i-weight lambda", "module"}, lower(1),
                 [](const Context& c, std::optional<unsigned> l) { return check_eta_weight_report(c, l.value_or(1)); }});
    t.push_back({{"counting", "counting inequalities with big integers", "big-integer"},
                 [](const Context&) { return range(1, kCountingMaxLevel); },
                 [](const Context& c, std::optional<unsigned> l) { return check_counting(c.tower().q(), l.value_or(2)); }});
    t.push_back({{"xi-invariant", "xi_i is nonzero and G_i-invariant", "module"}, lower(2),
                 [](const Context& c, std::optional<unsigned> l) { return check_xi(c, l.value_or(2)); }});
    t.push_back({{"zeta-relations", "zeta_i relations and distinct support", "module"}, lower(2),
                 [](const Context& c, std::optional<unsigned> l) { return check_zeta(c, l.value_or(2)); }});
    t.push_back({{"no-f", "F: eta_i outside M_i + U_{i+1}-invariants", "module"}, lower(1),
                 [](const Context& c, std::optional<unsigned> l) {
                   return check_system(c, System::F, c.lambda(), c.mu(), l.value_or(1), "no-f");
                 }});
    t.push_back({{"no-hg", "H: xi_i outside M_i + U_{i+1}-invariants", "module"}, lower(2),
                 [](const Context& c, std::optional<unsigned> l) {
                   return check_system(c, System::H, c.theta(), c.theta(), l.value_or(2), "no-hg");
                 }});
    t.push_back({{"no-lg", "L: zeta_i outside M_i + T_{i+1}-invariants", "module"}, lower(2),
                 [](const Context& c, std::optional<unsigned> l) {
                   return check_system(c, System::L, c.theta(), c.theta(), l.value_or(2), "no-lg");
                 }});
    t.push_back({{"normalize", "torus cochain normalization round trip", "module"}, lower(1),
                 [](const Context& c, std::optional<unsigned> l) { return check_normalize(c, l.value_or(1)); }});
    t.push_back({{"coxeter", "m x = 0 forces x = 0 iff char does not divide m", "arithmetic"}, nullptr,
                 [](const Context&, std::optional<unsigned>) { return check_coxeter(); }});
    t.push_back({{"ext1", "Ext^1 over G_1 by two cocycle solvers; splitting", "module"}, single(1),
                 [](const Context& c, std::optional<unsigned>) { return check_ext1(c); }});
    t.push_back({{"hom-mackey", "Hom over G_1 vs double cosets", "module"}, single(1),
                 [](const Context& c, std::optional<unsigned>) { return check_hom_mackey(c); }});
    return t;
  }();
  return table;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return e;
  throw UnknownCheck("unknown check id: " + id);
}

Report guarded(const Context& ctx, const Entry& e, std::optional<unsigned> level) {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    if (level && e.levels && e.info.regime == "module" && *level > ctx.tower().imax()) {
      r = skipped(make(e.info.id, level, e.info.regime), "level budget: level above imax");
    } else {
      r = e.run(ctx, level);
    }
  } catch (const coeff::UnsupportedOrder& ex) {
    r = skipped(make(e.info.id, level, e.info.regime), std::string("coefficient field lacks the character values: ") + ex.what());
  } catch (const grp::BudgetExceeded& ex) {
    r = skipped(make(e.info.id, level, e.info.regime), std::string("enumeration budget: ") + ex.what());
  } catch (const std::exception& ex) {
    r = make(e.info.id, level, e.info.regime);
    r.verdict = Verdict::Fail;
    r.reason = std::string("error: ") + ex.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

}  // namespace

// ---------------------------------------------------------------------------

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    case Verdict::Skipped: return "SKIPPED";
  }
  return "?";
}

void Params::validate() const {
  tower::split_prime_power(q);
  if (imax < 2) throw std::invalid_argument("imax must be >= 2");
  if (budget < 1000) throw std::invalid_argument("budget must be at least 1000");
  if (mode && mode->kind == coeff::Kind::PrimeField && !coeff::is_prime(mode->ell))
    throw std::invalid_argument("fp:l needs a prime l");
}

json Params::to_json() const {
  return {{"q", q},
          {"imax", imax},
          {"coeff", mode ? mode->to_string() : std::string("cyclo")},
          {"theta_exp", theta_exp},
          {"lambda_exp", lambda_exp},
          {"mu_exp", mu_exp},
          {"budget", budget}};
}

json Report::to_json(bool timings) const {
  json j = {{"id", id},
            {"level", level ? json(*level) : json(nullptr)},
            {"verdict", verify::to_string(verdict)},
            {"regime", regime},
            {"payload", payload}};
  if (!reason.empty()) j["reason"] = reason;
  if (timings) j["seconds"] = seconds;
  return j;
}

Context::Context(const Params& p) : params_(p) {
  params_.validate();
  tw_ = std::make_unique<tower::Tower>(tower::TowerConfig::from_q(p.q, p.imax));
  field_ = coeff::Field::make(p.mode ? *p.mode : charmod::default_mode(*tw_));
  G_ = std::make_unique<grp::Group>(*tw_, p.budget);
}

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> out = [] {
    std::vector<CheckInfo> v;
    for (const auto& e : entries()) v.push_back(e.info);
    return v;
  }();
  return out;
}

bool is_registered(const std::string& id) {
  for (const auto& e : entries())
    if (e.info.id == id) return true;
  return false;
}

Report check_coset_distinct(const Context& ctx, unsigned i, CosetMode mode, std::optional<Elem> a) {
  const auto& tw = ctx.tower();
  const auto& G = ctx.group();
  if (!needs_next_level(ctx, i)) return skipped(make("coset-distinct", i, "module"), level_budget(ctx, i));
  Report r = make("coset-distinct", i, "module");
  if (mode == CosetMode::AConjugates) {
    const Elem ai = a.value_or(tw.pick_a(i));
    const auto reps = G.center_quotient_reps(i);
    std::map<Elem, Elem> seen;  // coset key -> t
    std::optional<std::pair<Elem, Elem>> collision;
    bool hits_trivial = false;
    for (Elem t : reps) {
      const Elem key = coset_key(tw, tw.mul(ai, tw.mul(t, t)), i);
      if (key == 0) hits_trivial = true;
      auto [it, fresh] = seen.emplace(key, t);
      if (!fresh && !collision) collision = {it->second, t};
    }
    r.payload = {{"mode", "a-conjugates"},
                 {"a", tw.to_string(ai)},
                 {"representatives", reps.size()},
                 {"distinct", seen.size()},
                 {"expected", reps.size()},
                 {"meets_U_i", hits_trivial}};
    if (collision)
      r.payload["collision"] = {tw.to_string(collision->first), tw.to_string(collision->second)};
    require(r, seen.size() == reps.size(), "cosets collide");
    require(r, !hits_trivial, "a coset equals U_i itself");
    return r;
  }
  // b-cells: U_i-cosets met by ξ_i.
  const TorusChar th = ctx.theta();
  const auto xi = towerext::build_xi(G, th, i, a);
  std::set<Elem> keys;
  bool cell0 = false;
  for (const auto& [l, c] : xi) {
    if (!indmod::is_cell1(l)) {
      cell0 = true;
      continue;
    }
    keys.insert(coset_key(tw, indmod::cell1_x(l), i));
  }
  const std::uint64_t tmod = G.center_quotient_reps(i).size();
  const std::uint64_t expected = tmod * (1 + G.order(Subgroup::U, i));
  r.payload = {{"mode", "b-cells"},
               {"support", xi.size()},
               {"distinct_cosets", keys.size()},
               {"expected", expected},
               {"labels_per_coset", G.order(Subgroup::U, i)}};
  require(r, !cell0 && keys.size() == expected, "distinct coset count differs");
  require(r, xi.size() == expected * G.order(Subgroup::U, i), "support is not a union of full cosets");
  return r;
}

Report check_coset_criterion(const Context& ctx, unsigned i, std::optional<Elem> a) {
  const auto& tw = ctx.tower();
  Report r = make("coset-criterion", i, "module");
  if (!needs_next_level(ctx, i)) return skipped(r, level_budget(ctx, i));
  const Elem ai = a.value_or(tw.pick_a(i));
  const auto reps = ctx.group().center_quotient_reps(i);
  std::size_t pairs = 0, bad = 0;
  for (std::size_t x = 0; x < reps.size(); ++x) {
    for (std::size_t y = x + 1; y < reps.size(); ++y) {
      ++pairs;
      const Elem d = tw.mul(ai, tw.sub(tw.mul(reps[x], reps[x]), tw.mul(reps[y], reps[y])));
      if (tw.in_level(d, i)) ++bad;
    }
  }
  r.payload = {{"a_outside_level", !tw.in_level(ai, i)}, {"pairs", pairs}, {"differences_in_level", bad}};
  require(r, !tw.in_level(ai, i), "a lies in the level");
  require(r, bad == 0, "a difference lies in the level");
  return r;
}

Report check_counting(std::uint64_t q, unsigned i) {
  Report r = make("counting", i, "big-integer");
  const auto a = counting::clm(q, i), b = counting::eq36(q, i), c = counting::no_lg(q, i);
  r.payload = {{"q", q}, {"clm", a.to_json()}, {"eq36", b.to_json()}, {"noLG", c.to_json()}};
  if (i < 2) {
    require(r, a.holds(), "clm fails");
    if (r.verdict == Verdict::Fail) return r;
    return skipped(r, "i >= 2 required; b_1 does not exist");
  }
  require(r, a.holds(), "clm fails");
  require(r, b.holds(), "eq36 fails");
  require(r, c.holds(), "noLG fails");
  return r;
}

Report run_lemma(const Context& ctx, const std::string& id, std::optional<unsigned> level) {
  return guarded(ctx, entry(id), level);
}

std::vector<Report> run_all(const Context& ctx, const std::vector<std::string>& ids) {
  for (const auto& id : ids) entry(id);  // reject unknown ids up front
  std::vector<Report> out;
  for (const auto& e : entries()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), e.info.id) == ids.end()) continue;
    if (!e.levels) {
      out.push_back(guarded(ctx, e, std::nullopt));
      continue;
    }
    for (unsigned l : e.levels(ctx)) out.push_back(guarded(ctx, e, l));
  }
  return out;
}

bool any_fail(const std::vector<Report>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.verdict == Verdict::Fail; });
}

json report_document(const Params& p, const std::vector<Report>& reports) {
  json arr = json::array();
  std::size_t pass = 0, fail = 0, skip = 0;
  for (const auto& r : reports) {
    arr.push_back(r.to_json(p.timings));
    (r.verdict == Verdict::Pass ? pass : r.verdict == Verdict::Fail ? fail : skip)++;
  }
  return {{"version", kDocVersion},
          {"config", p.to_json()},
          {"reports", arr},
          {"summary", {{"pass", pass}, {"fail", fail}, {"skipped", skip}, {"total", reports.size()}}}};
}

std::string render_text(const json& doc) {
  std::ostringstream os;
  const auto& cfg = doc.at("config");
  os << "config: q=" << cfg.at("q") << " imax=" << cfg.at("imax") << " coeff=" << cfg.at("coeff").get<std::string>()
     << " theta=" << cfg.at("theta_exp") << " lambda=" << cfg.at("lambda_exp") << " mu=" << cfg.at("mu_exp") << "\n";
  for (const auto& r : doc.at("reports")) {
    os << "[" << r.at("verdict").get<std::string>() << "] " << r.at("id").get<std::string>();
    if (!r.at("level").is_null()) os << " i=" << r.at("level");
    if (r.contains("reason")) os << "  (" << r.at("reason").get<std::string>() << ")";
    if (r.contains("seconds")) os << "  " << r.at("seconds").get<double>() << "s";
    os << "\n";
  }
  const auto& s = doc.at("summary");
  os << "summary: " << s.at("pass") << " pass, " << s.at("fail") << " fail, " << s.at("skipped") << " skipped\n";
  return os.str();
}

// ---------------------------------------------------------------------------

json ext_table(const Context& ctx) {
  using towerext::System;
  const unsigned top = ctx.tower().imax() - 1;
  const std::uint64_t ch = ctx.field()->mode().characteristic();
  const bool hyp = ch == 0 || (ch >= 3 && ch != ctx.tower().p());
  const TorusChar th = ctx.theta(), lam = ctx.lambda(), mu = ctx.mu(), tr = ctx.character(0);
  auto nonzero_row = [&](const std::string& M, const std::string& N, System sys, const TorusChar& a,
                         const TorusChar& b, const std::string& why) {
    const std::string id = sys == System::F ? "no-f" : sys == System::H ? "no-hg" : "no-lg";
    const unsigned i = std::max(top, sys == System::F ? 1u : 2u);
    const Report r = guarded(ctx,
                             {{id, "", "module"}, nullptr,
                              [&](const Context& c, std::optional<unsigned>) { return check_system(c, sys, a, b, i, id); }},
                             i);
    return json{{"M", M},
                {"N", N},
                {"claim", "nonzero"},
                {"because", why},
                {"backing", id},
                {"backing_characters", sys == System::F ? json{{"lambda", a.exponent()}, {"mu", b.exponent()}}
                                                        : json{{"theta", a.exponent()}}},
                {"witness", to_string(r.verdict) + " at i=" + std::to_string(i)},
                {"witness_reason", r.reason}};
  };
  auto zero_row = [&](const std::string& M, const std::string& N, const std::string& why) {
    return json{{"M", M}, {"N", N}, {"claim", "zero"}, {"because", why}, {"backing", "hypothesis"}, {"witness", hyp ? "hypothesis met" : "hypothesis not met"}};
  };
  auto nm = [](const TorusChar& c) { return "M(" + std::to_string(c.exponent()) + ")"; };

  json rows = json::array();
  json notes = json::array();
  const bool theta_irr = !th.is_trivial();
  std::vector<std::string> irr = {"tr", "St"};
  if (theta_irr) irr.push_back(nm(th));
  else notes.push_back("theta is trivial; M(tr) is reducible and its rows are omitted");
  for (const auto& M : irr) rows.push_back(zero_row(M, "tr", "Ext^1(M, tr) = 0 for every M in Irr(G, T)"));
  rows.push_back(json{{"M", "tr"},
                      {"N", "St"},
                      {"claim", "nonzero"},
                      {"because", "M(tr) is a nonsplit extension of tr by St"},
                      {"backing", "dims"},
                      {"witness", "structural"}});
  rows.push_back(nonzero_row("St", "St", System::L, tr, tr, "follows from Ext^1(St, M(tr)) != 0"));
  if (theta_irr) {
    const bool c = th.is_trivial_on_center();
    rows.push_back(c ? nonzero_row(nm(th), "St", System::F, th, tr, "isomorphic to Ext^1(M(theta), M(tr)); theta|_C = tr")
                     : zero_row(nm(th), "St", "theta|_C != tr"));
    rows.push_back(c ? nonzero_row("tr", nm(th), System::H, th, th, "theta|_C = tr")
                     : zero_row("tr", nm(th), "theta|_C != tr"));
    rows.push_back(c ? nonzero_row("St", nm(th), System::L, th, th, "theta|_C = tr")
                     : zero_row("St", nm(th), "theta|_C != tr"));
  }
  if (!lam.is_trivial() && !mu.is_trivial()) {
    rows.push_back(same_on_center(lam, mu)
                       ? nonzero_row(nm(lam), nm(mu), System::F, lam, mu, "lambda|_C = mu|_C")
                       : zero_row(nm(lam), nm(mu), "lambda|_C != mu|_C"));
  } else {
    notes.push_back("lambda or mu is trivial; the M(lambda), M(mu) row is omitted");
  }
  return {{"version", kDocVersion},
          {"config", ctx.params().to_json()},
          {"hypothesis", {{"statement", "char k = 0, or char k >= 3 and char k != p"}, {"met", hyp}}},
          {"level", top},
          {"rows", rows},
          {"notes", notes}};
}

std::string render_table(const json& table) {
  std::ostringstream os;
  os << "Ext^1(M, N) for SL_2 at finite level i=" << table.at("level") << " (hypothesis "
     << (table.at("hypothesis").at("met").get<bool>() ? "met" : "NOT met") << ")\n";
  for (const auto& r : table.at("rows")) {
    os << "  (" << r.at("M").get<std::string>() << ", " << r.at("N").get<std::string>() << "): "
       << (r.at("claim") == "zero" ? "0" : "!=0") << "  [" << r.at("because").get<std::string>() << "; ";
    if (r.at("backing") != "hypothesis") os << r.at("backing").get<std::string>() << ": ";
    os << r.at("witness").get<std::string>() << "]\n";
  }
  for (const auto& n : table.at("notes")) os << "  note: " << n.get<std::string>() << "\n";
  return os.str();
}

}  // namespace extwb::verify
