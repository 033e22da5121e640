// Copyright 2026 The qrflab Authors
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

// qrflab command-line driver.

#include <cmath>
#include <cstdlib>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qrflab/alignment.hpp"
#include "qrflab/config.hpp"
#include "qrflab/invariants.hpp"
#include "qrflab/io.hpp"
#include "qrflab/paradox.hpp"
#include "qrflab/random.hpp"
#include "qrflab/sectors.hpp"
#include "qrflab/symmetry.hpp"
#include "qrflab/traces.hpp"
#include "qrflab/verify.hpp"

namespace {

using namespace qrf;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;
constexpr int kDomain = 3;


bool holds_operator(const json& j) {
  const SpaceLabel space = space_from_json(j.at("space"));
  return j.at("data").size() == space.dim() * space.dim() && space.dim() > 1;
}

StateVector load_state(const std::string& path) {
  const json j = read_json_file(path);
  if (holds_operator(j)) throw StructuralError("'" + path + "' holds an operator, expected a state");
  return state_from_json(j);
}

// --- verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string group;
  int particles = 0;
  std::string suite = "all";
  std::uint64_t seed = 1;
  std::size_t max_dim = 4096;
  unsigned workers = 1;
  std::string out = "-";
};

int cmd_verify(const VerifyArgs& a) {
  SuiteOptions opts;
  opts.selector = a.suite;
  opts.seed = a.seed;
  opts.max_dim = a.max_dim;
  opts.workers = a.workers;
  opts.progress = &std::cerr;
  const SuiteResult r = run_suite(GroupSpec::parse(a.group), a.particles, opts);
  write_json_file(a.out, to_json(r));
  std::size_t failed = 0;
  for (const auto& c : r.checks) failed += c.passed ? 0 : 1;
  std::cerr << r.checks.size() - failed << "/" << r.checks.size() << " checks passed in " << r.runtime_seconds
            << " s\n";
  return failed == 0 ? kOk : kCheckFailed;
}

// --- paradox -----------------------------------------------------------------

struct ParadoxArgs {
  int n = 16, a = 3, b = 2, c = 5;
  double theta = std::numbers::pi / 2;
  std::optional<double> m1, m2;
  std::string out = "-";
  std::string trace = "all";
  bool operators = false;
};

int cmd_paradox(const ParadoxArgs& a) {
  ParadoxConfig cfg = ParadoxConfig::with_default_masses(a.n, a.a, a.b, a.c, a.theta);
  if (a.m1) cfg.m1 = *a.m1;
  if (a.m2) cfg.m2 = *a.m2;
  cfg.validate();
  if (!cfg.masses_balanced()) std::cerr << "warning: m1*a != m2*b, the center-of-mass trace may lose theta\n";
  const ParadoxReport rep = run_paradox(cfg);
  if (rep.branches_share_sector) std::cerr << "warning: 2(a+b) = 0 mod n, both branches share one sector\n";
  if (rep.angelo_cross_terms) std::cerr << "warning: cross terms contribute to the T expectation\n";
  json j = to_json(rep, a.operators || a.trace != "all");
  if (a.trace != "all") {
    rep.method(a.trace);  // validates the name
    for (const char* key : {"methods", "theta_visible"}) {
      json kept = json::object();
      kept[a.trace] = j[key][a.trace];
      j[key] = std::move(kept);
    }
  }
  write_json_file(a.out, j);
  return rep.matches_expected ? kOk : kCheckFailed;
}

// --- transform / align -------------------------------------------------------

int cmd_transform(const std::string& in, int from, int to, const std::string& out) {
  const StateVector psi = load_state(in);
  const SpaceLabel& space = psi.space();
  const int N = space.particles();
  if (from < 1 || from > N || to < 1 || to > N) throw StructuralError("particle index out of range");
  // Bring the state into the frame of particle `from` unless it is already there.
  StateVector aligned = psi;
  bool already = true;
  for (std::size_t i = 0; i < space.dim() && already; ++i) {
    if (std::abs(psi[i]) > kSupportThreshold && configuration_of(space, i)[static_cast<std::size_t>(from - 1)] != 0) {
      already = false;
    }
  }
  if (!already) aligned = reconstruct(align_to(psi, from), true);
  const StateVector result = qrf_symmetry(from, to, space).apply(aligned);
  write_json_file(out, to_json(result));
  return kOk;
}

int cmd_align(const std::string& in, int particle, const std::string& out) {
  const StateVector psi = load_state(in);
  const AlignedForm form = align_to(psi, particle);
  json j = to_json(form);
  j["decomposition"] = to_json(*decompose_alignable(psi), psi.space());
  write_json_file(out, j);
  return kOk;
}

// --- trace -------------------------------------------------------------------

struct TraceArgs {
  std::string input;
  std::string kind = "trel";
  int keep = 0;
  int particle = 1;
  std::vector<double> masses;
  std::string out = "-";
};

int cmd_trace(const TraceArgs& a) {
  const json j = read_json_file(a.input);
  const bool is_op = holds_operator(j);
  const SpaceLabel space = space_from_json(j.at("space"));
  const int total = space.particles();
  const int keep = a.keep > 0 ? a.keep : total - 1;
  if (keep < 1 || keep >= total) throw StructuralError("--keep must lie in [1, particles - 1]");
  const int M = total - keep;
  std::optional<EmbeddingSpec> spec;
  if (a.kind == "trinv1") {
    spec = EmbeddingSpec::particle_frame(keep, M, 1);
  } else if (a.kind == "particle") {
    spec = EmbeddingSpec::particle_frame(keep, M, a.particle);
  } else if (a.kind == "com") {
    std::vector<double> masses = a.masses;
    if (masses.empty()) masses.assign(static_cast<std::size_t>(keep), 1.0);
    spec = EmbeddingSpec::center_of_mass(keep, M, masses);
  } else if (a.kind == "trel") {
    spec = EmbeddingSpec::relational(keep, M);
  } else if (a.kind != "conditional" && a.kind != "standard") {
    throw StructuralError("unknown trace kind '" + a.kind + "'");
  }
  Operator result = Operator::zero(space.with_particles(keep));
  double weight = 0;
  if (is_op) {
    const Operator rho = operator_from_json(j);
    if (a.kind == "conditional") result = conditional_state(rho, M, tolerance());
    else if (a.kind == "standard") result = partial_trace_last(rho, M);
    else result = trace_out(*spec, rho);
    weight = relational_weight(rho);
  } else {
    const StateVector psi = state_from_json(j);
    if (a.kind == "conditional") result = conditional_state(psi, M, tolerance());
    else if (a.kind == "standard") result = partial_trace_last(psi, M);
    else result = trace_out(*spec, psi);
    weight = relational_weight(psi);
  }
  const cplx tr = result.trace();
  write_json_file(a.out, json{{"kind", a.kind},
                              {"kept", keep},
                              {"traced", M},
                              {"trace", json::array({tr.real(), tr.imag()})},
                              {"relational_weight", weight},
                              {"operator", to_json(result)}});
  return kOk;
}

// --- classify / basis / random ----------------------------------------------

int cmd_classify(const std::string& in, const std::string& out) {
  const json j = read_json_file(in);
  const Operator op = holds_operator(j) ? operator_from_json(j) : density(state_from_json(j));
  const double eps = tolerance();
  json members = json::object();
  for (AlgebraTag t : {AlgebraTag::PHYS, AlgebraTag::ALG, AlgebraTag::INV, AlgebraTag::INV_PRIME}) {
    members[to_string(t)] = in_algebra(op, t, eps);
  }
  write_json_file(out, json{{"finest", to_string(classify(op, eps))}, {"member_of", members}});
  return kOk;
}

int cmd_basis(const std::string& group, int particles, std::size_t max_dim, const std::string& out) {
  const GroupSpec G = GroupSpec::parse(group);
  if (checked_dim(G, particles, max_dim) == 0) throw DomainError("dimension exceeds the cap");
  const SpaceLabel space(G, particles);
  auto sb = SectorBasis::of(space);
  json columns = json::array();
  for (std::size_t r = 0; r < sb->relations(); ++r) {
    json h = json::array();
    for (const auto& g : relation_tuple(space, r).relations) h.push_back(g.residues());
    for (std::size_t k = 0; k < sb->order(); ++k) {
      columns.push_back(json{{"relation", h}, {"character", G.element(k).residues()}});
    }
  }
  write_json_file(out, json{{"space", to_json(space)},
                            {"columns", std::move(columns)},
                            {"change_of_basis", to_json(change_of_basis(space))}});
  return kOk;
}

int cmd_random(const std::string& group, int particles, const std::string& kind, std::uint64_t seed,
               const std::string& out) {
  const GroupSpec G = GroupSpec::parse(group);
  if (checked_dim(G, particles, 4096) == 0) throw DomainError("dimension exceeds the cap");
  const SpaceLabel space(G, particles);
  Rng rng = make_rng(seed, "cli.random." + kind);
  json j;
  if (kind == "state") j = to_json(random_state(space, rng));
  else if (kind == "alignable") j = to_json(random_alignable_state(space, rng));
  else if (kind == "density") j = to_json(random_density(space, rng));
  else if (kind == "hermitian") j = to_json(random_hermitian(space, rng));
  else if (kind == "symmetry") j = to_json(random_symmetry(space, rng, true));
  else throw StructuralError("unknown kind '" + kind + "'");
  write_json_file(out, j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qrflab: quantum reference frame transformations on finite Abelian groups"};
  app.require_subcommand(1);
  std::optional<double> eps;
  app.add_option("--eps", eps, "numeric tolerance (overrides QRFLAB_EPS, default 1e-10)")
      ->check(CLI::PositiveNumber);

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "run the property suites");
  verify->add_option("--group", va.group, "group, e.g. Z8 or Z2xZ3")->required();
  verify->add_option("--particles", va.particles)->required()->check(CLI::PositiveNumber);
  verify->add_option("--suite", va.suite)->check(CLI::IsMember(suite_selectors()));
  verify->add_option("--seed", va.seed);
  verify->add_option("--max-dim", va.max_dim);
  verify->add_option("--workers", va.workers)->check(CLI::Range(1u, 64u));
  verify->add_option("--out", va.out, "JSON result, '-' for stdout");

  ParadoxArgs pa;
  auto* paradox = app.add_subcommand("paradox", "run the third-particle scenario");
  paradox->add_option("--n", pa.n);
  paradox->add_option("--a", pa.a);
  paradox->add_option("--b", pa.b);
  paradox->add_option("--c", pa.c);
  paradox->add_option("--theta", pa.theta);
  paradox->add_option("--m1", pa.m1);
  paradox->add_option("--m2", pa.m2);
  paradox->add_option("--json", pa.out, "report file, '-' for stdout");
  paradox->add_option("--trace", pa.trace)
      ->check(CLI::IsMember({"all", "standard", "trinv1", "com", "trel", "conditional"}));
  paradox->add_flag("--operators", pa.operators, "include the output operators");

  std::string state_in, out = "-";
  int from = 1, to = 2;
  auto* transform = app.add_subcommand("transform", "change reference frame from particle i to j");
  transform->add_option("--state", state_in)->required();
  transform->add_option("--from", from)->required();
  transform->add_option("--to", to)->required();
  transform->add_option("--out", out);

  int align_to_particle = 1;
  auto* align = app.add_subcommand("align", "aligned form of an alignable state");
  align->add_option("--state", state_in)->required();
  align->add_option("--to-particle", align_to_particle)->required();
  align->add_option("--out", out);

  TraceArgs ta;
  auto* trace = app.add_subcommand("trace", "invariant or relational partial trace");
  trace->add_option("--input", ta.input)->required();
  trace->add_option("--kind", ta.kind)
      ->check(CLI::IsMember({"trinv1", "particle", "com", "trel", "conditional", "standard"}));
  trace->add_option("--keep", ta.keep, "number of leading particles kept");
  trace->add_option("--particle", ta.particle, "frame particle for --kind particle");
  trace->add_option("--masses", ta.masses)->delimiter(',');
  trace->add_option("--out", ta.out);

  std::string classify_in;
  auto* classify_cmd = app.add_subcommand("classify", "finest algebra containing an operator");
  classify_cmd->add_option("--input", classify_in)->required();
  classify_cmd->add_option("--out", out);

  std::string group;
  int particles = 0;
  std::size_t max_dim = 4096;
  auto* basis = app.add_subcommand("basis", "dump the relation/character basis");
  basis->add_option("--group", group)->required();
  basis->add_option("--particles", particles)->required()->check(CLI::PositiveNumber);
  basis->add_option("--max-dim", max_dim);
  basis->add_option("--out", out);

  std::string kind = "state";
  std::uint64_t seed = 1;
  auto* random = app.add_subcommand("random", "seeded random fixtures");
  random->add_option("--group", group)->required();
  random->add_option("--particles", particles)->required()->check(CLI::PositiveNumber);
  random->add_option("--kind", kind)->check(CLI::IsMember({"state", "alignable", "density", "hermitian", "symmetry"}));
  random->add_option("--seed", seed);
  random->add_option("--out", out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (eps) set_tolerance(*eps);
    if (*verify) return cmd_verify(va);
    if (*paradox) return cmd_paradox(pa);
    if (*transform) return cmd_transform(state_in, from, to, out);
    if (*align) return cmd_align(state_in, align_to_particle, out);
    if (*trace) return cmd_trace(ta);
    if (*classify_cmd) return cmd_classify(classify_in, out);
    if (*basis) return cmd_basis(group, particles, max_dim, out);
    if (*random) return cmd_random(group, particles, kind, seed, out);
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const UnsupportedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kCheckFailed;
  }
  return kUsage;
}
