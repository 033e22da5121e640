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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>

#include "qrflab/config.hpp"
#include "qrflab/io.hpp"
#include "qrflab/paradox.hpp"
#include "qrflab/random.hpp"
#include "qrflab/symmetry.hpp"
#include "qrflab/verify.hpp"

using namespace qrf;
using nlohmann::json;

namespace {

bool bit_equal(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a.data()[i].real() != b.data()[i].real() || a.data()[i].imag() != b.data()[i].imag()) return false;
  return true;
}

}  // namespace

TEST(Io, GroupFromStringAndObject) {
  EXPECT_EQ(group_from_json(json("Z2xZ3")), GroupSpec({2, 3}));
  EXPECT_EQ(group_from_json(json{{"moduli", {4, 2}}}), GroupSpec({4, 2}));
  EXPECT_EQ(group_from_json(to_json(GroupSpec({5}))), GroupSpec({5}));
  EXPECT_THROW(group_from_json(json{{"moduli", "x"}}), StructuralError);
  EXPECT_THROW(group_from_json(json{{"other", 1}}), StructuralError);
}

TEST(Io, StateRoundTripIsBitExact) {
  Rng rng = make_rng(11, "io.state");
  const SpaceLabel s(GroupSpec({2, 3}), 2);
  for (int t = 0; t < 10; ++t) {
    const StateVector psi = random_state(s, rng);
    const json j = json::parse(to_json(psi).dump());
    const StateVector back = state_from_json(j);
    EXPECT_EQ(back.space(), s);
    EXPECT_TRUE(bit_equal(back.amplitudes(), psi.amplitudes()));
  }
}

TEST(Io, OperatorRoundTripIsBitExact) {
  Rng rng = make_rng(12, "io.operator");
  const SpaceLabel s(GroupSpec({3}), 2);
  const Operator A = random_operator(s, rng);
  const Operator back = operator_from_json(json::parse(to_json(A).dump()));
  EXPECT_TRUE(bit_equal(back.matrix(), A.matrix()));
}

TEST(Io, SymmetryRoundTrip) {
  Rng rng = make_rng(13, "io.symmetry");
  const SpaceLabel s(GroupSpec({4}), 3);
  const SymmetryElement u = random_symmetry(s, rng, true);
  const SymmetryElement back = symmetry_from_json(json::parse(to_json(u).dump()));
  EXPECT_EQ(back.assignment(), u.assignment());
  EXPECT_EQ(back.phase(), u.phase());
  json j = to_json(u);
  j["assignment"].erase("0");
  EXPECT_THROW(symmetry_from_json(j), StructuralError);
  j = to_json(u);
  j["assignment"]["0"] = 99;
  EXPECT_THROW(symmetry_from_json(j), StructuralError);
}

TEST(Io, MalformedInputIsStructuralError) {
  const SpaceLabel s(GroupSpec({2}), 2);
  json j = to_json(StateVector::basis(s, 0));
  j["data"].erase(0);
  EXPECT_THROW(state_from_json(j), StructuralError);
  j = to_json(StateVector::basis(s, 0));
  j["data"][0] = "x";
  EXPECT_THROW(state_from_json(j), StructuralError);
  j = to_json(StateVector::basis(s, 0));
  j.erase("space");
  EXPECT_THROW(state_from_json(j), StructuralError);
  EXPECT_THROW(operator_from_json(to_json(StateVector::basis(s, 0))), StructuralError);
  EXPECT_THROW(state_from_json(json::array()), StructuralError);
}

TEST(Io, FileRoundTrip) {
  const auto path = std::filesystem::temp_directory_path() / "qrflab_io_test.json";
  Rng rng = make_rng(14, "io.file");
  const StateVector psi = random_state(SpaceLabel(GroupSpec({3}), 2), rng);
  write_json_file(path.string(), to_json(psi));
  const StateVector back = state_from_json(read_json_file(path.string()));
  EXPECT_TRUE(bit_equal(back.amplitudes(), psi.amplitudes()));
  std::filesystem::remove(path);
  EXPECT_ANY_THROW(read_json_file(path.string()));
}

TEST(Io, ParadoxReportJson) {
  const ParadoxReport rep = run_paradox(ParadoxConfig::with_default_masses(8, 1, 1, 2, 1.0));
  const json slim = to_json(rep, false);
  EXPECT_TRUE(slim["theta_visible"]["trel"].get<bool>());
  EXPECT_FALSE(slim["methods"]["standard"].contains("at_theta"));
  const json full = to_json(rep, true);
  EXPECT_NO_THROW(operator_from_json(full["methods"]["com"]["at_theta"]));
}

TEST(Rng, Deterministic) {
  Rng a = make_rng(5, "x"), b = make_rng(5, "x"), c = make_rng(5, "y"), d = make_rng(6, "x");
  const auto va = a(), vb = b(), vc = c(), vd = d();
  EXPECT_EQ(va, vb);
  EXPECT_NE(va, vc);
  EXPECT_NE(va, vd);
}

TEST(Suite, JsonAndErrors) {
  SuiteOptions opts;
  opts.selector = "group";
  const SuiteResult r = run_suite(GroupSpec({4}), 2, opts);
  EXPECT_TRUE(r.all_passed());
  const json j = to_json(r);
  ASSERT_TRUE(j["checks"].is_array());
  EXPECT_EQ(j["checks"].size(), r.checks.size());
  for (const auto& c : j["checks"]) {
    EXPECT_TRUE(c.contains("name"));
    EXPECT_TRUE(c.contains("passed"));
    EXPECT_TRUE(c.contains("max_deviation"));
  }
  for (std::size_t i = 1; i < r.checks.size(); ++i) EXPECT_LT(r.checks[i - 1].name, r.checks[i].name);
  opts.selector = "nonsense";
  EXPECT_THROW(run_suite(GroupSpec({4}), 2, opts), StructuralError);
  opts.selector = "all";
  opts.max_dim = 16;
  EXPECT_THROW(run_suite(GroupSpec({4}), 3, opts), DomainError);
}

TEST(Suite, DeterministicUnderSeed) {
  SuiteOptions opts;
  opts.selector = "alignment";
  opts.seed = 7;
  const SuiteResult a = run_suite(GroupSpec({3}), 3, opts);
  const SuiteResult b = run_suite(GroupSpec({3}), 3, opts);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) EXPECT_EQ(a.checks[i].max_deviation, b.checks[i].max_deviation);
}
