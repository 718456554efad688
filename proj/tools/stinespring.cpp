// Copyright 2026 The Stinespring Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "stinespring/bounds.hpp"
#include "stinespring/channel.hpp"
#include "stinespring/errors.hpp"
#include "stinespring/json_io.hpp"
#include "stinespring/learning.hpp"
#include "stinespring/schur.hpp"
#include "stinespring/superchannel.hpp"
#include "stinespring/symrep.hpp"
#include "stinespring/tensor.hpp"

using namespace stinespring;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kCap = 3;

struct Common {
  int n = 2, da = 2, db = 2, r = 2, d = 2;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  double tol = 1e-9;
  unsigned threads = 0;
  std::string out;
  std::string channel_file;
  bool emit = false;
};

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write(const Common& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw Usage("cannot open output file " + c.out);
  f << text;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw Usage("invalid parameters: " + what);
}

KrausChannel pick_channel(const Common& c) {
  if (!c.channel_file.empty()) {
    std::ifstream f(c.channel_file);
    if (!f) throw Usage("cannot read " + c.channel_file);
    KrausChannel ch = channel_from_json(Json::parse(f));
    require(ch.d_in() == c.da && ch.d_out() == c.db, "channel file dimensions differ from --da/--db");
    return ch;
  }
  Rng rng = substream(c.seed, 0);
  return random_channel(c.da, c.db, c.r, rng);
}

Json instance_params(const Common& c) {
  return {{"n", c.n}, {"d_a", c.da}, {"d_b", c.db}, {"r", c.r}, {"seed", c.seed}};
}

void check_instance(const Common& c) {
  require(c.n >= 1, "n >= 1");
  require(c.da >= 1 && c.db >= 1 && c.r >= 1, "dimensions must be positive");
  require(c.r <= c.da * c.db, "r <= d_a*d_b");
  require(c.r * c.db >= c.da, "r*d_b >= d_a (otherwise no channel has Choi rank r)");
}

Json check_json(const std::string& name, const CheckReport& r) {
  return {{"check", name}, {"max_deviation", r.max_deviation}, {"tolerance", r.tolerance},
          {"pass", r.pass()}};
}

Json mc_json(const std::string& name, const McComparison& m) {
  return {{"check", name}, {"max_deviation", m.max_deviation}, {"max_z", m.max_z},
          {"entries", m.entries}, {"entries_outside", m.outside}, {"sigmas", m.sigmas},
          {"pass", m.pass()}};
}

// Finalizes a report whose "checks" entries each carry a pass flag.
int finish(const Common& c, Json params, const Json& checks) {
  double worst = 0;
  bool pass = true;
  for (const auto& ch : checks) {
    worst = std::max(worst, ch.at("max_deviation").get<double>());
    pass = pass && ch.at("pass").get<bool>();
  }
  const Json report{{"params", std::move(params)}, {"checks", checks}, {"max_deviation", worst},
                    {"tolerance", c.tol}, {"pass", pass}};
  write(c, report.dump(2) + "\n");
  return pass ? kPass : kFail;
}

ComplexMatrix twirled_purification_power(const ComplexMatrix& rho, int d, int n) {
  ComplexVector g = ComplexVector::Zero(d * d);
  for (int i = 0; i < d; ++i) g[i * d + i] = 1.0;
  const ComplexVector psi = kron(hermitian_sqrt(rho), identity(d)) * g;
  std::vector<int> bs;
  for (int k = 0; k < n; ++k) bs.push_back(2 * k + 1);
  return partial_haar_twirl(kron_power(psi * psi.adjoint(), n), SystemShape::uniform(d, 2 * n), bs);
}

Json purification_checks(const Common& c, int d, int n) {
  const PurificationSpec spec{d, n};
  const ComplexMatrix sr = hermitian_sqrt(r_n_operator(spec));
  Rng rng = substream(c.seed, 1);
  const ComplexMatrix rho = random_density_matrix(d, d, rng);
  const ComplexMatrix got = random_purification_apply(spec, sr, kron_power(rho, n));
  const CheckReport prop{max_abs_diff(got, twirled_purification_power(rho, d, n)), c.tol};
  const std::size_t dim = checked_pow(d, n);
  const ComplexMatrix x = ginibre(static_cast<int>(dim), static_cast<int>(dim), rng);
  const ComplexMatrix y = random_purification_apply(spec, sr, x);
  const CheckReport tp{std::abs(y.trace() - x.trace()), 1e-10};
  return Json::array({check_json("purification_property", prop), check_json("purification_trace", tp)});
}

int cmd_verify(const Common& c) {
  check_instance(c);
  const KrausChannel ch = pick_channel(c);
  const Superoperator omega = omega_explicit(ch, c.n, c.r);
  const Superoperator circ = circuit_superchannel(ch, c.n, c.r);
  const SuperchannelSpec spec{c.n, c.da, c.db, c.r};
  Json checks = Json::array();
  checks.push_back(check_json("circuit_vs_formula", {max_abs_diff(circ.matrix, omega.matrix), c.tol}));
  checks.push_back(check_json("marginal", marginal_check(omega, ch, c.n, std::max(c.tol, 1e-10))));
  checks.push_back(check_json("covariance", covariance_check(omega, spec, c.tol)));
  const CptpReport cp = superoperator_cptp(omega);
  checks.push_back({{"check", "cptp"}, {"max_deviation", std::max(-cp.min_eigenvalue, cp.tp_deviation)},
                    {"pass", cp.pass(1e-9, 1e-10)}});
  const McEstimate est = stinespring_rand_isometry_mc(kraus_to_stinespring(pad_kraus(ch, c.r)), c.n,
                                                      c.samples, c.seed, c.threads);
  checks.push_back(mc_json("formula_vs_monte_carlo", compare_to_estimate(omega.matrix, est)));
  for (auto& j : purification_checks(c, c.da, c.n)) checks.push_back(j);
  try {
    checks.push_back(check_json("choi_consistency", choi_consistency_check(ch, c.n, c.tol)));
  } catch (const InstanceTooLarge&) {
    checks.push_back({{"check", "choi_consistency"}, {"skipped", "instance too large"},
                      {"max_deviation", 0.0}, {"pass", true}});
  }
  // Representation theory at (d_a, n).
  const SchurBasis sb = schur_transform(c.da, c.n);
  double inter = 0;
  for (const auto& p : all_permutations(c.n)) {
    const ComplexMatrix lhs = sb.u_schur.adjoint() * permutation_unitary(p, c.da) * sb.u_schur;
    inter = std::max(inter, max_abs_diff(lhs, sb.block_action(p).cast<Complex>()));
  }
  checks.push_back(check_json("schur_intertwining", {inter, c.tol}));
  const ComplexMatrix q = sn_qft(c.n);
  checks.push_back(check_json("qft_unitarity", {isometry_defect(q), 1e-10}));
  const WeingartenTable wg(c.n, c.da);
  const auto perms = all_permutations(c.n);
  Eigen::MatrixXd gram(perms.size(), perms.size());
  for (std::size_t s = 0; s < perms.size(); ++s) {
    for (std::size_t t = 0; t < perms.size(); ++t) {
      gram(s, t) = std::pow(double(c.da), (perms[s].inverse() * perms[t]).cycle_count());
    }
  }
  const Eigen::MatrixXd w = wg.pair_matrix();
  const Eigen::MatrixXd pinv = gram.completeOrthogonalDecomposition().pseudoInverse();
  checks.push_back(check_json("weingarten_vs_gram", {(w - pinv).cwiseAbs().maxCoeff(), 1e-10}));
  Json params = instance_params(c);
  params["samples"] = c.samples;
  return finish(c, params, checks);
}

int cmd_purify(const Common& c) {
  require(c.d >= 1 && c.n >= 1, "d, n >= 1");
  return finish(c, {{"d", c.d}, {"n", c.n}, {"seed", c.seed}}, purification_checks(c, c.d, c.n));
}

int cmd_omega(const Common& c, bool circuit) {
  check_instance(c);
  const KrausChannel ch = pick_channel(c);
  const Superoperator omega = omega_explicit(ch, c.n, c.r);
  Json checks = Json::array();
  Superoperator shown = omega;
  if (circuit) {
    shown = circuit_superchannel(ch, c.n, c.r);
    checks.push_back(check_json("circuit_vs_formula", {max_abs_diff(shown.matrix, omega.matrix), c.tol}));
  }
  checks.push_back(check_json("marginal", marginal_check(shown, ch, c.n, std::max(c.tol, 1e-10))));
  const CptpReport cp = superoperator_cptp(shown);
  checks.push_back({{"check", "cptp"}, {"max_deviation", std::max(-cp.min_eigenvalue, cp.tp_deviation)},
                    {"pass", cp.pass(1e-9, 1e-10)}});
  if (c.emit) {
    write(c, matrix_to_json(shown.matrix).dump() + "\n");
    bool pass = true;
    for (const auto& j : checks) pass = pass && j.at("pass").get<bool>();
    return pass ? kPass : kFail;
  }
  return finish(c, instance_params(c), checks);
}

int cmd_schur(const Common& c) {
  require(c.d >= 1 && c.n >= 1, "d, n >= 1");
  const SchurBasis sb = schur_transform(c.d, c.n);
  Json j = matrix_to_json(sb.u_schur, SystemShape::uniform(c.d, c.n));
  Json labels = Json::array();
  for (const auto& l : sb.labels) labels.push_back({{"lambda", l.lambda.parts}, {"i", l.i}, {"alpha", l.alpha}});
  j["labels"] = labels;
  write(c, j.dump() + "\n");
  return kPass;
}

int cmd_qft(const Common& c) {
  require(c.n >= 1, "n >= 1");
  Json j = matrix_to_json(sn_qft(c.n));
  Json labels = Json::array();
  for (const auto& l : sn_fourier_basis(c.n).labels) labels.push_back({{"lambda", l.lambda.parts}, {"i", l.i}, {"j", l.j}});
  j["labels"] = labels;
  write(c, j.dump() + "\n");
  return kPass;
}

int cmd_weingarten(const Common& c) {
  require(c.n >= 1 && c.d >= 1, "n, d >= 1");
  const WeingartenTable t(c.n, c.d);
  Json values = Json::object();
  for (const auto& [mu, v] : t.values) values[mu.str()] = v;
  write(c, Json{{"n", c.n}, {"d", c.d}, {"values", values}}.dump(2) + "\n");
  return kPass;
}

int cmd_learn(const Common& c, const std::vector<std::uint64_t>& shots, int bases) {
  check_instance(c);
  const KrausChannel ch = pick_channel(c);
  std::ostringstream csv;
  csv.precision(17);
  csv << "shots,choi_distance,dilation_distance,seed\n";
  for (auto s : shots) {
    TomographyConfig cfg;
    cfg.shots = s;
    cfg.bases = bases > 0 ? bases : minimum_bases(c.da, c.db, c.r);
    cfg.seed = c.seed;
    const LearnResult res = learn_channel(ch, c.r, cfg);
    csv << s << ',' << res.choi_distance << ',' << res.dilation_distance << ',' << c.seed << '\n';
  }
  write(c, csv.str());
  return kPass;
}

int cmd_bounds(const Common& c, const std::string& m, int n, double cq, double eps, double clo,
               double chi) {
  require(c.da >= 1 && c.db >= 1 && c.r >= 1, "dimensions must be positive");
  Json j{{"params", {{"d_a", c.da}, {"d_b", c.db}, {"r", c.r}}}};
  const int D = c.r * c.da * c.db;
  if (!m.empty()) {
    BigInt big;
    try {
      big = BigInt(m);
    } catch (const std::exception&) {
      throw Usage("invalid parameters: --m must be a decimal integer");
    }
    require(big >= 1, "M >= 1");
    const BoundReport rep = distinguishing_bound_check(big, std::max(n, 0), c.da, c.db, c.r);
    j["D"] = rep.D;
    j["M"] = rep.M.str();
    j["n"] = rep.n;
    j["sym_count"] = rep.sym_count.str();
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["pass"] = rep.pass;
    j["n_min"] = rep.n_min ? Json(*rep.n_min) : Json(nullptr);
    j["satisfiable"] = rep.n_min.has_value();
  }
  if (cq > 0) {
    j["c"] = cq;
    j["query_lower_bound"] = query_lower_bound(cq, D);
    if (D > 1) j["g_inverse"] = invert_bosonic_entropy(cq);
  }
  if (eps > 0) {
    const PackingReport p = packing_log_cardinality(c.da, c.db, c.r, eps, clo, chi);
    j["packing"] = {{"epsilon", eps}, {"dimension_count", p.dimension_count}, {"lower", p.lower},
                    {"upper", p.upper}, {"sandwich", p.sandwich}};
  }
  write(c, j.dump(2) + "\n");
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random Stinespring superchannel toolkit"};
  app.require_subcommand(1);
  Common c;
  std::string cap;

  auto add_common = [&](CLI::App* s) {
    s->add_option("--seed", c.seed, "master seed");
    s->add_option("--tol", c.tol, "tolerance for exact identities");
    s->add_option("--out", c.out, "output path (default stdout)");
    s->add_option("--threads", c.threads, "worker threads (0 = hardware)");
    s->add_option("--max-entries", cap, "cap on matrix entries");
  };
  auto add_instance = [&](CLI::App* s) {
    s->add_option("--n", c.n, "copies");
    s->add_option("--da", c.da, "input dimension");
    s->add_option("--db", c.db, "output dimension");
    s->add_option("--r", c.r, "Choi rank / environment dimension");
    s->add_option("--channel", c.channel_file, "channel JSON (default: random from seed)");
  };

  auto* verify = app.add_subcommand("verify", "run the equality suite for one instance");
  add_common(verify);
  add_instance(verify);
  verify->add_option("--samples", c.samples, "Monte-Carlo samples");

  auto* purify = app.add_subcommand("purify", "random purification channel checks");
  add_common(purify);
  purify->add_option("--d", c.d, "local dimension");
  purify->add_option("--n", c.n, "copies");

  auto* omega = app.add_subcommand("omega", "closed-form superchannel");
  auto* circuit = app.add_subcommand("circuit", "circuit superchannel");
  for (auto* s : {omega, circuit}) {
    add_common(s);
    add_instance(s);
    s->add_flag("--emit", c.emit, "print the superoperator as matrix JSON");
  }

  auto* schur = app.add_subcommand("schur", "Schur transform as matrix JSON");
  auto* qft = app.add_subcommand("qft", "S_n Fourier transform as matrix JSON");
  auto* wg = app.add_subcommand("weingarten", "Weingarten table");
  for (auto* s : {schur, qft, wg}) {
    add_common(s);
    s->add_option("--n", c.n, "copies");
  }
  schur->add_option("--d", c.d, "local dimension");
  wg->add_option("--d", c.d, "local dimension");

  std::vector<std::uint64_t> shots{100, 1000, 10000, 100000};
  int bases = 0;
  auto* learn = app.add_subcommand("learn", "tomography through the dilation");
  add_common(learn);
  add_instance(learn);
  learn->add_option("--shots", shots, "shots per basis (0 = exact)")->delimiter(',');
  learn->add_option("--bases", bases, "measurement bases (default (d_a d_b r)^2)");

  std::string m;
  int bn = 0;
  double cq = 0, eps = 0, clo = 1, chi = 1;
  auto* bounds = app.add_subcommand("bounds", "query-complexity calculators");
  add_common(bounds);
  bounds->add_option("--da", c.da, "input dimension");
  bounds->add_option("--db", c.db, "output dimension");
  bounds->add_option("--r", c.r, "Choi rank");
  bounds->add_option("--m", m, "number of hypotheses");
  bounds->add_option("--n", bn, "queries to test");
  bounds->add_option("--c", cq, "entropy target c");
  bounds->add_option("--epsilon", eps, "packing scale");
  bounds->add_option("--c-lower", clo, "lower constant");
  bounds->add_option("--c-upper", chi, "upper constant");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (!cap.empty()) set_max_entries(std::stoull(cap));
    if (*verify) return cmd_verify(c);
    if (*purify) return cmd_purify(c);
    if (*omega) return cmd_omega(c, false);
    if (*circuit) return cmd_omega(c, true);
    if (*schur) return cmd_schur(c);
    if (*qft) return cmd_qft(c);
    if (*wg) return cmd_weingarten(c);
    if (*learn) return cmd_learn(c, shots, bases);
    if (*bounds) return cmd_bounds(c, m, bn, cq, eps, clo, chi);
  } catch (const InstanceTooLarge& e) {
    std::cerr << e.what() << "\n";
    return kCap;
  } catch (const Usage& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const FrameIncomplete& e) {
    std::cerr << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
