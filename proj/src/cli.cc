// Copyright 2026 The qduopoly Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qduopoly/cli.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <ostream>
#include <random>
#include <stdexcept>

#include "CLI11.hpp"
#include "qduopoly/eq_solver.h"
#include "qduopoly/scheme_ldm.h"
#include "qduopoly/scheme_mw.h"
#include "qduopoly/scheme_rsm.h"

namespace qduopoly {
namespace cli {
namespace {

constexpr double kDefaultLdmFigureGamma = 0.5;
constexpr double kDefaultRsmFigureGamma = 0.52359877559829887308;  // pi/6
constexpr double kFigure0Step = 0.5;
constexpr double kFigure0MaxA = 40.0;

struct Options {
  std::string scheme = "classical";
  double a = 30.0;
  double c = 3.0;
  double b = 0.5;
  double gamma = 0.0;
  double q1 = 0.0, q2 = 0.0;
  double x1 = 0.0, x2 = 0.0;
  double p1 = 0.0, p2 = 0.0;
  std::string initial = "00";
  std::string op = "M";
  bool refined = false;
  int grid_points = 0;
  double xmax = 0.0;
  double eps = 0.0;
  std::string out;
  // verify batteries
  bool fock = false;
  bool trivial_operator = false;
  bool hull = false;
  bool uniqueness = false;
  int cutoff = 24;
};

// Options registered on one subcommand, so tests of "was this flag given"
// go through CLI11's own counts.
class Flags {
 public:
  explicit Flags(CLI::App* app) : app_(app) {}

  template <typename T>
  void Add(const std::string& name, T& target, const std::string& help) {
    opts_[name] = app_->add_option(name, target, help);
  }
  void AddFlag(const std::string& name, bool& target, const std::string& help) {
    opts_[name] = app_->add_flag(name, target, help);
  }
  bool Given(const std::string& name) const {
    auto it = opts_.find(name);
    return it != opts_.end() && it->second->count() > 0;
  }
  CLI::Option* Get(const std::string& name) { return opts_.at(name); }

 private:
  CLI::App* app_;
  std::map<std::string, CLI::Option*> opts_;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void AddMarketFlags(Flags& f, Options& o) {
  f.Add("--scheme", o.scheme, "classical | bertrand | mw | ldm | rsm");
  f.Get("--scheme")->check(
      CLI::IsMember({"classical", "bertrand", "mw", "ldm", "rsm"}));
  f.Add("--a", o.a, "demand intercept");
  f.Add("--c", o.c, "marginal cost");
  f.Add("--b", o.b, "Bertrand substitution coefficient in (0, 1)");
  f.Add("--gamma", o.gamma, "entanglement parameter");
  f.Add("--grid-points", o.grid_points, "grid points per axis");
  f.Add("--xmax", o.xmax, "strategy box edge");
  f.Add("--eps", o.eps, "eps-Nash tolerance");
  f.Add("--out", o.out, "output path");
}

void AddProfileFlags(Flags& f, Options& o) {
  f.Add("--q1", o.q1, "quantity of firm 1");
  f.Add("--q2", o.q2, "quantity of firm 2");
  f.Add("--x1", o.x1, "strategy of player 1");
  f.Add("--x2", o.x2, "strategy of player 2");
  f.Add("--p1", o.p1, "price of firm 1");
  f.Add("--p2", o.p2, "price of firm 2");
  f.Add("--initial", o.initial, "initial basis state 00 | 01 | 10 | 11");
  f.Get("--initial")->check(CLI::IsMember({"00", "01", "10", "11"}));
  f.Add("--operator", o.op, "payoff operator M | Mprime | Mdoubleprime");
  f.Get("--operator")->check(CLI::IsMember({"M", "Mprime", "Mdoubleprime"}));
  f.AddFlag("--refined", o.refined, "use the price-aware payoff");
}

double RequireGamma(const Flags& f, const Options& o) {
  if (!f.Given("--gamma")) {
    throw UsageError("--gamma is required for scheme " + o.scheme);
  }
  return o.gamma;
}

eq::GridSpec ResolveGrid(const Flags& f, const Options& o, double default_xmax,
                         int default_points) {
  return eq::GridSpec(f.Given("--xmax") ? o.xmax : default_xmax,
                      f.Given("--grid-points") ? o.grid_points : default_points);
}

double ResolveEps(const Flags& f, const Options& o, double default_eps) {
  return f.Given("--eps") ? o.eps : default_eps;
}

std::string Pair(double u, double v) {
  return "(" + FormatNumber(u) + ", " + FormatNumber(v) + ")";
}

std::string Pair(const StrategyProfile& s) { return Pair(s.s1, s.s2); }

void Recertify(eq::EquilibriumResult& result, const eq::PayoffPair& game,
               const eq::GridSpec& grid, double eps) {
  const std::vector<StrategyProfile> reps = result.representatives;
  result.representatives.clear();
  result.payoffs.clear();
  result.certification.clear();
  for (const StrategyProfile& p : reps) {
    eq::AddRepresentative(result, game, p, grid, eps);
  }
}

void PrintEquilibrium(std::ostream& out, const eq::EquilibriumResult& r) {
  switch (r.kind) {
    case eq::EquilibriumKind::kPoint:
      out << "kind: point\n";
      out << "equilibrium: " << Pair(r.point) << "\n";
      break;
    case eq::EquilibriumKind::kSegment:
      out << "kind: segment\n";
      out << "segment: s1 + s2 = "
          << FormatNumber(r.segment_begin.s1 + r.segment_begin.s2) << " from "
          << Pair(r.segment_begin) << " to " << Pair(r.segment_end) << "\n";
      break;
    case eq::EquilibriumKind::kRegion:
      out << "kind: region (non-unique)\n";
      out << "region: s1 >= " << FormatNumber(r.region.lower1)
          << ", s2 >= " << FormatNumber(r.region.lower2) << "\n";
      break;
    case eq::EquilibriumKind::kEmpty:
      out << "kind: empty\n";
      break;
  }
  for (std::size_t k = 0; k < r.representatives.size(); ++k) {
    const eq::EpsNashReport& cert = r.certification[k];
    out << "profile " << Pair(r.representatives[k]) << " payoffs "
        << Pair(r.payoffs[k].u1, r.payoffs[k].u2) << " max gain "
        << Pair(cert.max_gain_1, cert.max_gain_2) << " eps "
        << FormatNumber(cert.eps) << (cert.certified ? " certified" : " NOT certified")
        << "\n";
  }
  out << "certified: " << (r.certified() ? "yes" : "no") << "\n";
}

int CmdEquilibrium(const Flags& f, const Options& o, std::ostream& out) {
  if (o.scheme == "bertrand") {
    throw UsageError(
        "equilibrium is not available for scheme bertrand; use payoff or verify");
  }
  const MarketParams params(o.a, o.c);
  if (o.scheme == "ldm" || o.scheme == "rsm") RequireGamma(f, o);
  out << "scheme: " << o.scheme << "\n";
  if (o.scheme == "mw") {
    const eq::GridSpec grid = ResolveGrid(f, o, params.a(), 601);
    const mw::HalfEquilibriumReport rep = mw::CheckHalfEquilibrium(params, grid);
    out << "profile: " << Pair(rep.report.profile) << " (initial 11, operator Mprime)\n";
    out << "threshold: a >= " << FormatNumber(rep.threshold)
        << (rep.condition_holds ? " (holds)" : " (fails)") << "\n";
    out << "payoffs: " << Pair(rep.payoffs.u1, rep.payoffs.u2) << "\n";
    double eps = rep.report.eps;
    bool certified = rep.report.certified;
    if (f.Given("--eps")) {
      eps = o.eps;
      certified = rep.report.max_gain_1 <= eps && rep.report.max_gain_2 <= eps;
    }
    out << "max gain: " << Pair(rep.report.max_gain_1, rep.report.max_gain_2)
        << " eps " << FormatNumber(eps) << "\n";
    out << "certified: " << (certified ? "yes" : "no") << "\n";
    return certified ? kExitOk : kExitCheckFailed;
  }

  eq::EquilibriumResult result;
  eq::PayoffPair game;
  double default_xmax = params.a();
  int default_points = 601;
  if (o.scheme == "classical") {
    result = market::ClassicalEquilibrium(params);
    game = market::CournotGame(params);
    if (params.c() == 0.0) default_xmax = 2.0 * params.a();
  } else if (o.scheme == "ldm") {
    const double gamma = RequireGamma(f, o);
    result = ldm::Equilibrium(gamma, params);
    game = ldm::Game(gamma, params, ldm::PayoffForm::kRefined);
    default_xmax = ldm::StrategyBound(gamma, params);
    if (params.c() == 0.0) default_xmax *= 2.0;
    default_points = 401;
  } else {
    const double gamma = RequireGamma(f, o);
    result = rsm::EquilibriumSet(gamma, params);
    game = rsm::Game(gamma, params);
    default_points = 401;
  }
  if (f.Given("--xmax") || f.Given("--grid-points") || f.Given("--eps")) {
    const eq::GridSpec grid = ResolveGrid(f, o, default_xmax, default_points);
    Recertify(result, game, grid,
              ResolveEps(f, o, eq::LipschitzEps(params.Lipschitz(), grid)));
  }
  PrintEquilibrium(out, result);
  return result.certified() ? kExitOk : kExitCheckFailed;
}

quantum::TwoQubitState InitialState(const std::string& bits) {
  return quantum::BasisState(bits[0] - '0', bits[1] - '0');
}

mw::OperatorVariant Variant(const std::string& name) {
  if (name == "Mprime") return mw::OperatorVariant::MPrime();
  if (name == "Mdoubleprime") return mw::OperatorVariant::MDoublePrime();
  return mw::OperatorVariant::M();
}

int CmdPayoff(const Flags& f, const Options& o, std::ostream& out) {
  PayoffValues v;
  if (o.scheme == "bertrand") {
    const BertrandParams params(o.a, o.b, o.c);
    v = f.Given("--gamma")
            ? mw::BertrandQuantumPayoffs(o.p1, o.p2, o.gamma, params)
            : market::BertrandPayoffs(o.p1, o.p2, params);
  } else {
    const MarketParams params(o.a, o.c);
    if (o.scheme == "classical") {
      const QuantityPair q(o.q1, o.q2);
      v = {market::CournotPayoff(Player::kFirst, q, params),
           market::CournotPayoff(Player::kSecond, q, params)};
    } else if (o.scheme == "mw") {
      const QuantityPair q(o.q1, o.q2);
      const quantum::TwoQubitState rho = InitialState(o.initial);
      const mw::OperatorVariant variant = Variant(o.op);
      v = {mw::Payoff(Player::kFirst, q, rho, variant, params),
           mw::Payoff(Player::kSecond, q, rho, variant, params)};
    } else if (o.scheme == "ldm") {
      const ldm::LdmStrategy s(o.x1, o.x2, RequireGamma(f, o));
      const auto form =
          o.refined ? ldm::PayoffForm::kRefined : ldm::PayoffForm::kOriginal;
      v = {ldm::Payoff(Player::kFirst, s, params, form),
           ldm::Payoff(Player::kSecond, s, params, form)};
    } else {
      const rsm::RsmStrategy s(o.x1, o.x2, RequireGamma(f, o));
      v = {rsm::Payoff(Player::kFirst, s, params),
           rsm::Payoff(Player::kSecond, s, params)};
    }
  }
  out << "u1 = " << FormatNumber(v.u1) << "\n";
  out << "u2 = " << FormatNumber(v.u2) << "\n";
  return kExitOk;
}

int CmdFigures(const Flags& f, const Options& o, std::ostream& out) {
  FigureOptions fig;
  fig.a = o.a;
  fig.c = o.c;
  if (f.Given("--gamma")) fig.gamma = o.gamma;
  const std::filesystem::path dir = o.out.empty() ? "figures" : o.out;
  for (const auto& p : WriteFigures(dir, fig)) out << p.string() << "\n";
  return kExitOk;
}

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

double MaxDistance(const std::vector<StrategyProfile>& set,
                   const StrategyProfile& center) {
  double d = 0.0;
  for (const StrategyProfile& p : set) {
    d = std::max({d, std::abs(p.s1 - center.s1), std::abs(p.s2 - center.s2)});
  }
  return d;
}

// Brute-force scan around an analytic point whose best replies have slope
// magnitude `slope` < 1: grid equilibria lie within h (1 + 1/(sqrt(2)(1-slope)))
// of it when eps is the quadratic grid tolerance.
Check UniquenessCheck(const std::string& name, const eq::PayoffPair& game,
                      const eq::GridSpec& grid, double eps,
                      const StrategyProfile& point, double slope) {
  const auto set = eq::BruteForceEquilibria(game, grid, eps);
  const double h = grid.step();
  const double radius = h * (1.0 + 1.0 / (std::sqrt(2.0) * (1.0 - slope))) +
                        1e-9 * h;
  const double dist = MaxDistance(set, point);
  Check c{name, !set.empty() && dist <= radius, ""};
  c.detail = std::to_string(set.size()) + " grid equilibria, max distance " +
             FormatNumber(dist) + " from " + Pair(point) + " (bound " +
             FormatNumber(radius) + ")";
  return c;
}

std::vector<Check> VerifyClassical(const Flags& f, const Options& o) {
  const MarketParams params(o.a, o.c);
  std::vector<Check> checks;
  if (params.c() > 0.0) {
    const eq::GridSpec grid = ResolveGrid(f, o, params.a(), 301);
    const double q = params.margin() / 3.0;
    const auto set = eq::BruteForceEquilibria(
        market::CournotGame(params), grid,
        ResolveEps(f, o, eq::QuadraticEps(1.0, grid)));
    const double dist = MaxDistance(set, {q, q});
    checks.push_back({"uniqueness", !set.empty() && dist <= grid.step() * (1 + 1e-9),
                      std::to_string(set.size()) + " grid equilibria within " +
                          FormatNumber(dist) + " of " + Pair(q, q)});
  } else {
    const eq::GridSpec grid = ResolveGrid(f, o, 2.0 * params.a(), 201);
    const auto set = eq::BruteForceEquilibria(market::CournotGame(params), grid,
                                              ResolveEps(f, o, 1e-9));
    // Deviations below a - q_opp earn at most the best grid point, so the
    // grid set may extend one step below the region boundary. The interior
    // point (a/3, a/3) is also an equilibrium when c = 0.
    const double h = grid.step() * (1 + 1e-9);
    const double edge = params.a() - h;
    const double third = params.a() / 3.0;
    std::size_t expected = 0;
    for (int i = 0; i < grid.n(); ++i) {
      if (grid.Point(i) >= params.a()) ++expected;
    }
    std::size_t inside_region = 0;
    bool near = true;
    for (const StrategyProfile& p : set) {
      const bool interior =
          std::abs(p.s1 - third) <= h && std::abs(p.s2 - third) <= h;
      near = near && (interior || (p.s1 >= edge && p.s2 >= edge));
      if (p.s1 >= params.a() && p.s2 >= params.a()) ++inside_region;
    }
    checks.push_back({"continuum", near && inside_region == expected * expected,
                      std::to_string(set.size()) +
                          " grid equilibria, all within one step of q1, q2 >= " +
                          FormatNumber(params.a()) + " or of " + Pair(third, third) +
                          ", region fully covered"});
  }
  const eq::EquilibriumResult r = market::ClassicalEquilibrium(params);
  checks.push_back({"certification", r.certified(), "analytic equilibrium eps-Nash"});
  return checks;
}

std::vector<Check> VerifyBertrand(const Flags& f, const Options& o) {
  const BertrandParams params(o.a, o.b, o.c);
  std::vector<Check> checks;
  const eq::GridSpec grid = ResolveGrid(f, o, params.PriceBound(), 801);
  const double sup = market::BertrandJointSupremum(params);
  const auto scan = eq::ParetoScanGrid(market::BertrandGame(params), grid, 0.0);
  const double rel = std::abs(scan.max_sum - sup) / sup;
  checks.push_back({"joint-supremum", rel <= 5e-3,
                    "grid max " + FormatNumber(scan.max_sum) + " vs closed form " +
                        FormatNumber(sup)});
  const double p2 = mw::BertrandDivergenceWitness(params, 10.0 * sup);
  const double half_pi = std::acos(0.0);
  const PayoffValues w = mw::BertrandQuantumPayoffs(0.0, p2, half_pi, params);
  checks.push_back({"divergence", w.Sum() > 10.0 * sup,
                    "gamma = pi/2, prices (0, " + FormatNumber(p2) +
                        ") give joint payoff " + FormatNumber(w.Sum())});
  return checks;
}

std::vector<Check> VerifyMw(const Flags& f, const Options& o) {
  const MarketParams params(o.a, o.c);
  const bool all = !o.trivial_operator && !o.hull && !o.uniqueness;
  std::vector<Check> checks;
  if (all || o.trivial_operator) {
    const QuantityPair q(f.Given("--q1") ? o.q1 : 2.0, f.Given("--q2") ? o.q2 : 3.0);
    const mw::TrivialOperatorSolution sol =
        mw::SolveTrivialOperator(q, Player::kFirst, params);
    if (sol.singular) {
      checks.push_back({"trivial-operator", false,
                        "singular system: rank " + std::to_string(sol.rank) +
                            ", solution manifold dimension " +
                            std::to_string(sol.nullity)});
    } else {
      double dev = 0.0;
      for (double x : *sol.coefficients) dev = std::max(dev, std::abs(x - sol.expected));
      checks.push_back({"trivial-operator", dev <= 1e-9,
                        "all-equal solution " + FormatNumber(sol.expected) +
                            ", max deviation " + FormatNumber(dev)});
    }
  }
  if (all || o.hull) {
    const mw::HullReport rep = mw::ConvexHullViolationCheck(params);
    std::string detail = rep.violated
                             ? "violation exhibited: witness " +
                                   Pair(rep.witness->q1(), rep.witness->q2()) +
                                   " joint payoff " +
                                   FormatNumber(rep.witness_payoffs.Sum())
                             : std::string("no violation found");
    if (rep.half_equilibrium_payoff) {
      detail += ", payoff at (a/2, a/2) " + FormatNumber(*rep.half_equilibrium_payoff);
    }
    detail += " > classical bound " + FormatNumber(rep.classical_joint_max);
    checks.push_back({"hull", rep.violated, detail});
  }
  if (all || o.uniqueness) {
    const eq::GridSpec grid = ResolveGrid(f, o, params.a(), 601);
    const mw::HalfEquilibriumReport rep = mw::CheckHalfEquilibrium(params, grid);
    checks.push_back({"half-a-equilibrium", rep.report.certified,
                      "max gain " + Pair(rep.report.max_gain_1, rep.report.max_gain_2)});
  }
  return checks;
}

std::vector<Check> VerifyLdm(const Flags& f, const Options& o) {
  const MarketParams params(o.a, o.c);
  const double gamma = RequireGamma(f, o);
  const bool all = !o.fock && !o.uniqueness;
  std::vector<Check> checks;
  if (all || o.fock) {
    const ldm::LdmStrategy s(f.Given("--x1") ? o.x1 : 0.5,
                             f.Given("--x2") ? o.x2 : 0.3, gamma);
    const ldm::FockReport rep = ldm::FockVerifyQuantityMap(s, ldm::FockConfig(o.cutoff));
    const QuantityPair q = ldm::QuantityMap(s);
    const double err = std::max(std::abs(rep.q1 - q.q1()), std::abs(rep.q2 - q.q2()));
    checks.push_back({"fock", rep.tail_ok && err <= 1e-6,
                      "fock " + Pair(rep.q1, rep.q2) + " closed form " +
                          Pair(q.q1(), q.q2()) + " error " + FormatNumber(err) +
                          " tail mass " + FormatNumber(rep.tail_mass)});
  }
  if ((all || o.uniqueness) && params.c() > 0.0) {
    const eq::GridSpec grid =
        ResolveGrid(f, o, ldm::StrategyBound(gamma, params), 401);
    const double curvature = std::cosh(gamma) * std::exp(gamma);
    const double slope = std::exp(2 * gamma) / (std::exp(2 * gamma) + 1.0);
    checks.push_back(UniquenessCheck(
        "uniqueness", ldm::Game(gamma, params, ldm::PayoffForm::kRefined), grid,
        ResolveEps(f, o, eq::QuadraticEps(curvature, grid)),
        ldm::Equilibrium(gamma, params).point, slope));
  }
  return checks;
}

std::vector<Check> VerifyRsm(const Flags& f, const Options& o) {
  const MarketParams params(o.a, o.c);
  const double gamma = RequireGamma(f, o);
  std::vector<Check> checks;
  {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<double> xs(0.0, params.a());
    std::uniform_real_distribution<double> gs(0.0, rsm::kQuarterPi);
    double worst = 0.0;
    for (int k = 0; k < 500; ++k) {
      const rsm::RsmStrategy s(xs(rng), xs(rng), gs(rng));
      const QuantityPair q = rsm::QuantityMap(s);
      const double c2 = std::cos(s.gamma()) * std::cos(s.gamma());
      const double s2 = std::sin(s.gamma()) * std::sin(s.gamma());
      worst = std::max({worst, std::abs(q.q1() - (s.x1() * c2 + s.x2() * s2)),
                        std::abs(q.q2() - (s.x2() * c2 + s.x1() * s2))});
    }
    checks.push_back({"matrix-path", worst <= 1e-12,
                      "max deviation from closed form " + FormatNumber(worst)});
  }
  if (params.c() > 0.0) {
    const eq::GridSpec grid = ResolveGrid(f, o, params.a(), 401);
    const double cos2 = std::cos(gamma) * std::cos(gamma);
    const double eps = ResolveEps(f, o, eq::QuadraticEps(cos2, grid));
    const eq::EquilibriumResult r = rsm::EquilibriumSet(gamma, params);
    if (r.kind == eq::EquilibriumKind::kSegment) {
      const auto set = eq::BruteForceEquilibria(rsm::Game(gamma, params), grid, eps);
      const double target = params.margin() / 2.0;
      const bool in_band = std::all_of(set.begin(), set.end(), [&](const auto& p) {
        return std::abs(p.s1 + p.s2 - target) <= grid.step() * (1 + 1e-9);
      });
      checks.push_back({"segment", !set.empty() && in_band,
                        std::to_string(set.size()) +
                            " grid equilibria, all with s1 + s2 within one step of " +
                            FormatNumber(target)});
    } else {
      checks.push_back(UniquenessCheck("uniqueness", rsm::Game(gamma, params), grid,
                                       eps, r.point, 1.0 / (2.0 * cos2)));
    }
    checks.push_back({"certification", r.certified(), "analytic equilibrium eps-Nash"});
  }
  return checks;
}

int CmdVerify(const Flags& f, const Options& o, std::ostream& out) {
  std::vector<Check> checks;
  if (o.scheme == "classical") {
    checks = VerifyClassical(f, o);
  } else if (o.scheme == "bertrand") {
    checks = VerifyBertrand(f, o);
  } else if (o.scheme == "mw") {
    checks = VerifyMw(f, o);
  } else if (o.scheme == "ldm") {
    checks = VerifyLdm(f, o);
  } else {
    checks = VerifyRsm(f, o);
  }
  bool ok = true;
  for (const Check& c : checks) {
    out << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
    ok = ok && c.pass;
  }
  return ok ? kExitOk : kExitCheckFailed;
}

void WriteCsvRow(std::ostream& os, std::initializer_list<double> values) {
  bool first = true;
  for (double v : values) {
    if (!first) os << ',';
    os << FormatNumber(v);
    first = false;
  }
  os << '\n';
}

std::ofstream OpenCsv(const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot write " + path.string());
  return os;
}

}  // namespace

std::string FormatNumber(double v) {
  if (v == 0.0) v = 0.0;  // no "-0"
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<std::filesystem::path> WriteFigures(
    const std::filesystem::path& out_dir, const FigureOptions& options) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw std::runtime_error("cannot create " + out_dir.string());
  const MarketParams params(options.a, options.c);
  std::vector<std::filesystem::path> written;

  {
    // Classical equilibrium payoff vs the refined |11> payoff at (a/2, a/2),
    // for a from the equilibrium threshold upward.
    const auto path = out_dir / "fig0.csv";
    auto os = OpenCsv(path);
    os << "a,u_classical,u_quantum\n";
    const double c = options.c;
    const double start = mw::HalfEquilibriumThreshold(c);
    const quantum::TwoQubitState rho = quantum::BasisState(1, 1);
    for (int k = 0;; ++k) {
      const double a = start + kFigure0Step * k;
      if (a > kFigure0MaxA + 1e-12) break;
      const MarketParams p(a, c);
      const double q = p.margin() / 3.0;
      const double classical = market::CournotPayoff(Player::kFirst, {q, q}, p);
      const double quantum_payoff =
          mw::RefinedPayoff(Player::kFirst, {a / 2.0, a / 2.0}, rho, p);
      WriteCsvRow(os, {a, classical, quantum_payoff});
    }
    if (!os) throw std::runtime_error("write failed: " + path.string());
    written.push_back(path);
  }
  {
    const double gamma = options.gamma.value_or(kDefaultLdmFigureGamma);
    const double xmax = ldm::StrategyBound(gamma, params);
    const auto path = out_dir / "fig1.csv";
    auto os = OpenCsv(path);
    os << "x,beta1,beta2\n";
    const int n = options.best_reply_samples;
    for (int k = 0; k < n; ++k) {
      const double x = k == n - 1 ? xmax : xmax * k / (n - 1);
      WriteCsvRow(os, {x, ldm::BestReply(Player::kFirst, x, gamma, params),
                       ldm::BestReply(Player::kSecond, x, gamma, params)});
    }
    if (!os) throw std::runtime_error("write failed: " + path.string());
    written.push_back(path);
  }
  {
    const double gamma = options.gamma.value_or(kDefaultRsmFigureGamma);
    const double xmax = params.a();
    const auto path = out_dir / "fig2.csv";
    auto os = OpenCsv(path);
    os << "x,beta1,beta2\n";
    const int n = options.best_reply_samples;
    for (int k = 0; k < n; ++k) {
      const double x = k == n - 1 ? xmax : xmax * k / (n - 1);
      WriteCsvRow(os, {x, rsm::BestReply(Player::kFirst, x, gamma, params),
                       rsm::BestReply(Player::kSecond, x, gamma, params)});
    }
    if (!os) throw std::runtime_error("write failed: " + path.string());
    written.push_back(path);
  }
  {
    const auto path = out_dir / "fig3.csv";
    auto os = OpenCsv(path);
    os << "gamma,payoff\n";
    const int n = options.gamma_samples;
    for (int k = 0; k < n; ++k) {
      const double gamma =
          k == n - 1 ? rsm::kQuarterPi : rsm::kQuarterPi * k / (n - 1);
      WriteCsvRow(os, {gamma, rsm::EquilibriumPayoff(gamma, params)});
    }
    if (!os) throw std::runtime_error("write failed: " + path.string());
    written.push_back(path);
  }
  return written;
}

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Classical and quantum Cournot/Bertrand duopoly toolkit",
               "qduopoly"};
  app.require_subcommand(1);

  Options o;
  CLI::App* equilibrium = app.add_subcommand(
      "equilibrium", "analytic equilibrium with numeric certification");
  CLI::App* payoff = app.add_subcommand("payoff", "payoff pair at a profile");
  CLI::App* figures = app.add_subcommand("figures", "write figure CSV data");
  CLI::App* verify = app.add_subcommand("verify", "run a verification battery");

  Flags f_eq(equilibrium), f_pay(payoff), f_fig(figures), f_ver(verify);
  for (Flags* f : {&f_eq, &f_pay, &f_fig, &f_ver}) AddMarketFlags(*f, o);
  AddProfileFlags(f_pay, o);
  AddProfileFlags(f_ver, o);
  f_ver.AddFlag("--fock", o.fock, "truncated Fock check of the quantity map");
  f_ver.AddFlag("--trivial-operator", o.trivial_operator,
                "general payoff operator linear system");
  f_ver.AddFlag("--hull", o.hull, "classical payoff hull violation");
  f_ver.AddFlag("--uniqueness", o.uniqueness, "brute-force equilibrium scan");
  f_ver.Add("--cutoff", o.cutoff, "photon-number cutoff per mode");

  std::vector<const char*> argv{"qduopoly"};
  for (const std::string& s : args) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (equilibrium->parsed()) return CmdEquilibrium(f_eq, o, out);
    if (payoff->parsed()) return CmdPayoff(f_pay, o, out);
    if (figures->parsed()) return CmdFigures(f_fig, o, out);
    return CmdVerify(f_ver, o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace cli
}  // namespace qduopoly
