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

#include "qrflab/io.hpp"

#include <fstream>
#include <iostream>

#include "qrflab/config.hpp"
#include "qrflab/sectors.hpp"

namespace qrf {
namespace {

using Index = Eigen::Index;

json complex_pair(cplx z) { return json::array({z.real(), z.imag()}); }

cplx pair_to_complex(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw StructuralError("expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw StructuralError(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::vector<cplx> read_data(const json& j) {
  const json& d = field(j, "data");
  if (!d.is_array()) throw StructuralError("'data' must be an array");
  std::vector<cplx> out;
  out.reserve(d.size());
  for (const auto& e : d) out.push_back(pair_to_complex(e));
  return out;
}

}  // namespace

json to_json(const GroupSpec& g) { return json{{"moduli", g.moduli()}}; }

json to_json(const SpaceLabel& s) { return json{{"group", to_json(s.group())}, {"particles", s.particles()}}; }

json to_json(const StateVector& psi) {
  json data = json::array();
  for (Index i = 0; i < psi.amplitudes().size(); ++i) data.push_back(complex_pair(psi.amplitudes()[i]));
  return json{{"space", to_json(psi.space())}, {"data", std::move(data)}};
}

json to_json(const Operator& op) {
  json data = json::array();
  const Mat& m = op.matrix();
  for (Index r = 0; r < m.rows(); ++r) {
    for (Index c = 0; c < m.cols(); ++c) data.push_back(complex_pair(m(r, c)));
  }
  return json{{"space", to_json(op.space())}, {"data", std::move(data)}};
}

json to_json(const SymmetryElement& u) {
  json assignment = json::object();
  for (std::size_t r = 0; r < u.assignment().size(); ++r) assignment[std::to_string(r)] = u.assignment()[r];
  return json{{"space", to_json(u.space())}, {"assignment", std::move(assignment)}, {"phase", u.phase()}};
}

json to_json(const AlignedForm& form) {
  return json{{"reference_particle", form.reference_particle},
              {"global_phase", form.global_phase},
              {"reduced_state", to_json(form.reduced_state)}};
}

json to_json(const AlignableDecomposition& dec, const SpaceLabel& space) {
  json terms = json::array();
  for (const auto& t : dec.terms) {
    json h = json::array();
    for (const auto& g : relation_tuple(space, t.relation).relations) h.push_back(g.residues());
    terms.push_back(json{{"relation_index", t.relation},
                         {"relation", std::move(h)},
                         {"alpha", complex_pair(t.alpha)},
                         {"anchor", space.group().element(t.anchor).residues()}});
  }
  return json{{"space", to_json(space)}, {"terms", std::move(terms)}};
}

json to_json(const ParadoxReport& report, bool include_operators) {
  const ParadoxConfig& c = report.config;
  json methods = json::object();
  json visible = json::object();
  for (const auto& m : report.methods) {
    json entry{{"theta_difference", m.theta_difference},
               {"theta_visible", m.theta_visible},
               {"frame_difference", m.frame_difference}};
    if (include_operators) {
      entry["at_theta"] = to_json(m.at_theta);
      entry["at_zero"] = to_json(m.at_zero);
    }
    methods[m.name] = std::move(entry);
    visible[m.name] = m.theta_visible;
  }
  return json{{"config", {{"n", c.n}, {"a", c.a}, {"b", c.b}, {"c", c.c}, {"theta", c.theta}, {"m1", c.m1}, {"m2", c.m2}}},
              {"theta_visible", std::move(visible)},
              {"methods", std::move(methods)},
              {"relational_weight", report.relational_weight},
              {"conditional_trace", report.conditional_trace},
              {"angelo_expectation", complex_pair(report.angelo_expectation)},
              {"branches_share_sector", report.branches_share_sector},
              {"angelo_cross_terms", report.angelo_cross_terms},
              {"masses_balanced", report.masses_balanced},
              {"matches_expected", report.matches_expected},
              {"runtime_seconds", report.runtime_seconds}};
}

GroupSpec group_from_json(const json& j) {
  if (j.is_string()) return GroupSpec::parse(j.get<std::string>());
  const json& m = field(j, "moduli");
  if (!m.is_array()) throw StructuralError("'moduli' must be an array");
  std::vector<int> moduli;
  for (const auto& e : m) {
    if (!e.is_number_integer()) throw StructuralError("moduli must be integers");
    moduli.push_back(e.get<int>());
  }
  return GroupSpec(std::move(moduli));
}

SpaceLabel space_from_json(const json& j) {
  const json& p = field(j, "particles");
  if (!p.is_number_integer()) throw StructuralError("'particles' must be an integer");
  return SpaceLabel(group_from_json(field(j, "group")), p.get<int>());
}

StateVector state_from_json(const json& j) {
  SpaceLabel space = space_from_json(field(j, "space"));
  const auto data = read_data(j);
  if (data.size() != space.dim()) throw StructuralError("state data length does not match |G|^N");
  Vec v(static_cast<Index>(data.size()));
  for (std::size_t i = 0; i < data.size(); ++i) v[static_cast<Index>(i)] = data[i];
  return StateVector(std::move(space), std::move(v));
}

Operator operator_from_json(const json& j) {
  SpaceLabel space = space_from_json(field(j, "space"));
  const auto data = read_data(j);
  const std::size_t d = space.dim();
  if (data.size() != d * d) throw StructuralError("operator data length does not match dim^2");
  Mat m(static_cast<Index>(d), static_cast<Index>(d));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < d; ++c) m(static_cast<Index>(r), static_cast<Index>(c)) = data[r * d + c];
  }
  return Operator(std::move(space), std::move(m));
}

SymmetryElement symmetry_from_json(const json& j) {
  SpaceLabel space = space_from_json(field(j, "space"));
  const json& a = field(j, "assignment");
  if (!a.is_object()) throw StructuralError("'assignment' must be an object");
  const std::size_t R = space.dim() / space.local_dim();
  std::vector<std::size_t> assignment(R);
  std::vector<bool> seen(R, false);
  for (const auto& [key, value] : a.items()) {
    std::size_t r = 0;
    try {
      r = std::stoul(key);
    } catch (const std::exception&) {
      throw StructuralError("assignment keys must be relation indices");
    }
    if (r >= R || !value.is_number_unsigned()) throw StructuralError("assignment entry out of range");
    assignment[r] = value.get<std::size_t>();
    seen[r] = true;
  }
  for (bool s : seen) {
    if (!s) throw StructuralError("assignment must cover every relation tuple");
  }
  const double phase = j.contains("phase") ? j.at("phase").get<double>() : 0.0;
  return SymmetryElement(std::move(space), std::move(assignment), phase);
}

json read_json_file(const std::string& path) {
  try {
    if (path == "-") return json::parse(std::cin);
    std::ifstream in(path);
    if (!in) throw StructuralError("cannot open '" + path + "'");
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw StructuralError("invalid JSON in '" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  if (path == "-") {
    std::cout << j.dump() << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw StructuralError("cannot write '" + path + "'");
  out << j.dump() << '\n';
}

}  // namespace qrf
