// Copyright 2026 The ChannelForge Authors
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

#include "channelforge/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace channelforge::io {

using nlohmann::json;

namespace {

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2)
    throw ParseError("complex entries must be [re, im] pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("matrix must be a nonempty array of rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j[0].size());
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const json& row = j[static_cast<std::size_t>(i)];
    if (static_cast<Index>(row.size()) != cols)
      throw ParseError("matrix rows have inconsistent lengths");
    for (Index c = 0; c < cols; ++c)
      m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)]);
  }
  return m;
}

json parse(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) throw ParseError("malformed JSON");
  return j;
}

std::string format17(double v) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", v);
  return buffer;
}

}  // namespace

std::string channel_to_json(const ChannelSpec& channel) {
  json j;
  j["dim"] = channel.dim();
  j["repr"] = repr_name(channel.tag());
  if (!channel.label.empty()) j["label"] = channel.label;
  if (channel.input_dim != channel.dim() || channel.output_dim != channel.dim()) {
    j["input_dim"] = channel.input_dim;
    j["output_dim"] = channel.output_dim;
  }
  json matrices = json::array();
  switch (channel.tag()) {
    case Repr::kKraus:
      for (const Matrix& op : std::get<KrausSet>(channel.repr).ops)
        matrices.push_back(matrix_to_json(op));
      break;
    case Repr::kSuperop:
      matrices.push_back(matrix_to_json(std::get<SuperOperator>(channel.repr).t));
      break;
    case Repr::kChoi:
      matrices.push_back(matrix_to_json(std::get<ChoiMatrix>(channel.repr).m));
      break;
  }
  j["matrices"] = std::move(matrices);
  return j.dump(2);
}

ChannelSpec channel_from_json(const std::string& text) {
  try {
    const json j = parse(text);
    const Index dim = j.at("dim").get<Index>();
    const Repr repr = repr_from_name(j.at("repr").get<std::string>());
    const json& matrices = j.at("matrices");
    if (!matrices.is_array() || matrices.empty())
      throw ParseError("channel file needs a nonempty \"matrices\" list");
    std::string label = j.value("label", std::string{});

    ChannelSpec out;
    switch (repr) {
      case Repr::kKraus: {
        std::vector<Matrix> ops;
        ops.reserve(matrices.size());
        for (const json& m : matrices) ops.push_back(matrix_from_json(m));
        const PaddedKraus padded = make_square_kraus(ops);
        if (padded.kraus.dim != dim && padded.input_dim != dim)
          throw ParseError("Kraus operator shape does not match \"dim\"");
        out = ChannelSpec::from_kraus(padded.kraus, std::move(label));
        out.input_dim = padded.input_dim;
        out.output_dim = padded.output_dim;
        break;
      }
      case Repr::kSuperop:
        out = ChannelSpec::from_superop(SuperOperator(dim, matrix_from_json(matrices[0])),
                                        std::move(label));
        break;
      case Repr::kChoi:
        out = ChannelSpec::from_choi(ChoiMatrix(dim, matrix_from_json(matrices[0])),
                                     std::move(label));
        break;
    }
    return out;
  } catch (const json::exception& e) {
    throw ParseError(std::string("channel file: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("channel file: ") + e.what());
  }
}

std::string circuit_to_json(const AdaptiveCircuit& circuit) {
  json j;
  j["dim"] = circuit.dim;
  j["depth"] = circuit.depth;
  json nodes = json::array();
  for (const auto& level : circuit.levels) {
    for (const TreeNode& node : level) {
      json n;
      n["label"] = node.label.str();
      n["block0"] = matrix_to_json(node.block0);
      n["block1"] = matrix_to_json(node.block1);
      nodes.push_back(std::move(n));
    }
  }
  j["nodes"] = std::move(nodes);
  json leaves = json::array();
  for (Index i = 0; i < circuit.leaf_count(); ++i) {
    json leaf;
    leaf["label"] = BinaryLabel::from_index(circuit.depth, i).str();
    leaf["kraus"] = matrix_to_json(circuit.leaf_ops[static_cast<std::size_t>(i)]);
    leaves.push_back(std::move(leaf));
  }
  j["leaves"] = std::move(leaves);
  return j.dump(2);
}

AdaptiveCircuit circuit_from_json(const std::string& text) {
  try {
    const json j = parse(text);
    AdaptiveCircuit circuit;
    circuit.dim = j.at("dim").get<Index>();
    circuit.depth = j.at("depth").get<int>();
    if (circuit.depth < 1) throw ParseError("circuit depth must be at least 1");

    circuit.levels.resize(static_cast<std::size_t>(circuit.depth));
    for (int l = 0; l < circuit.depth; ++l)
      circuit.levels[static_cast<std::size_t>(l)].resize(std::size_t{1} << l);
    std::vector<std::vector<bool>> seen(static_cast<std::size_t>(circuit.depth));
    for (int l = 0; l < circuit.depth; ++l)
      seen[static_cast<std::size_t>(l)].resize(std::size_t{1} << l, false);

    for (const json& n : j.at("nodes")) {
      TreeNode node;
      node.label = BinaryLabel::from_string(n.at("label").get<std::string>());
      node.block0 = matrix_from_json(n.at("block0"));
      node.block1 = matrix_from_json(n.at("block1"));
      if (node.label.level() >= circuit.depth)
        throw ParseError("node label longer than depth-1");
      if (node.block0.rows() != circuit.dim || node.block0.cols() != circuit.dim ||
          node.block1.rows() != circuit.dim || node.block1.cols() != circuit.dim)
        throw ParseError("node blocks must be dim×dim");
      const auto level = static_cast<std::size_t>(node.label.level());
      const auto index = static_cast<std::size_t>(node.label.index());
      seen[level][index] = true;
      circuit.levels[level][index] = std::move(node);
    }
    for (const auto& level : seen)
      for (bool s : level)
        if (!s) throw ParseError("circuit file is missing a node");

    circuit.leaf_ops.resize(std::size_t{1} << circuit.depth);
    std::vector<bool> leaf_seen(circuit.leaf_ops.size(), false);
    for (const json& leaf : j.at("leaves")) {
      const BinaryLabel label = BinaryLabel::from_string(leaf.at("label").get<std::string>());
      if (label.level() != circuit.depth)
        throw ParseError("leaf label length must equal depth");
      const auto index = static_cast<std::size_t>(label.index());
      circuit.leaf_ops[index] = matrix_from_json(leaf.at("kraus"));
      if (circuit.leaf_ops[index].rows() != circuit.dim ||
          circuit.leaf_ops[index].cols() != circuit.dim)
        throw ParseError("leaf operators must be dim×dim");
      leaf_seen[index] = true;
    }
    for (bool s : leaf_seen)
      if (!s) throw ParseError("circuit file is missing a leaf");
    return circuit;
  } catch (const json::exception& e) {
    throw ParseError(std::string("circuit file: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("circuit file: ") + e.what());
  }
}

std::string cqed_to_json(const CqedCircuit& circuit) {
  json j;
  j["dim"] = circuit.dim;
  j["depth"] = circuit.depth;
  json rounds = json::array();
  for (const auto& level : circuit.levels) {
    for (const CqedRound& round : level) {
      json r;
      r["label"] = round.label.str();
      r["V"] = matrix_to_json(round.v);
      r["theta"] = round.angles.theta;
      r["W0"] = matrix_to_json(round.w0);
      r["W1"] = matrix_to_json(round.w1);
      r["degenerate"] = round.degenerate;
      rounds.push_back(std::move(r));
    }
  }
  j["rounds"] = std::move(rounds);
  return j.dump(2);
}

CqedCircuit cqed_from_json(const std::string& text) {
  try {
    const json j = parse(text);
    CqedCircuit circuit;
    circuit.dim = j.at("dim").get<Index>();
    circuit.depth = j.at("depth").get<int>();
    circuit.levels.resize(static_cast<std::size_t>(circuit.depth));
    for (int l = 0; l < circuit.depth; ++l)
      circuit.levels[static_cast<std::size_t>(l)].resize(std::size_t{1} << l);
    for (const json& r : j.at("rounds")) {
      CqedRound round;
      round.label = BinaryLabel::from_string(r.at("label").get<std::string>());
      round.v = matrix_from_json(r.at("V"));
      round.angles.theta = r.at("theta").get<std::vector<double>>();
      round.w0 = matrix_from_json(r.at("W0"));
      round.w1 = matrix_from_json(r.at("W1"));
      round.degenerate = r.value("degenerate", false);
      circuit.levels.at(static_cast<std::size_t>(round.label.level()))
          .at(static_cast<std::size_t>(round.label.index())) = std::move(round);
    }
    return circuit;
  } catch (const json::exception& e) {
    throw ParseError(std::string("cqed circuit file: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("cqed circuit file: ") + e.what());
  }
}

std::string state_to_json(const DensityMatrix& state) {
  json j;
  j["dim"] = state.dim;
  j["rho"] = matrix_to_json(state.rho);
  return j.dump(2);
}

DensityMatrix state_from_json(const std::string& text) {
  try {
    const json j = parse(text);
    const Index dim = j.at("dim").get<Index>();
    return DensityMatrix(dim, matrix_from_json(j.at("rho")));
  } catch (const json::exception& e) {
    throw ParseError(std::string("state file: ") + e.what());
  } catch (const DimensionMismatch& e) {
    throw ParseError(std::string("state file: ") + e.what());
  }
}

std::string validation_to_json(const ValidationReport& report) {
  json j;
  j["completeness_residual"] = report.completeness_residual;
  j["choi_min_eigenvalue"] = report.choi_min_eigenvalue;
  j["choi_trace_deviation"] = report.choi_trace_deviation;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  return j.dump(2);
}

std::string verification_to_json(const VerificationReport& report) {
  json j;
  json nodes = json::array();
  for (const auto& node : report.nodes)
    nodes.push_back({{"label", node.label}, {"isometry_residual", node.isometry_residual}});
  json leaves = json::array();
  for (const auto& leaf : report.leaves)
    leaves.push_back({{"label", leaf.label}, {"product_residual", leaf.product_residual}});
  j["nodes"] = std::move(nodes);
  j["leaves"] = std::move(leaves);
  j["max_isometry_residual"] = report.max_isometry_residual;
  j["max_leaf_residual"] = report.max_leaf_residual;
  j["choi_distance"] = report.choi_distance;
  j["node_tolerance"] = report.node_tolerance;
  j["choi_tolerance"] = report.choi_tolerance;
  j["passed"] = report.passed;
  return j.dump(2);
}

std::string instrument_to_json(const InstrumentOutput& output) {
  json outcomes = json::array();
  for (const InstrumentOutcome& outcome : output.outcomes) {
    json o;
    o["label"] = outcome.label.str();
    o["p"] = outcome.probability;
    o["state"] = matrix_to_json(outcome.state.rho);
    outcomes.push_back(std::move(o));
  }
  json j;
  j["outcomes"] = std::move(outcomes);
  return j.dump(2);
}

std::string povm_to_json(const std::vector<std::pair<std::string, double>>& probabilities) {
  json j;
  for (const auto& [bits, p] : probabilities) j["probabilities"][bits] = p;
  return j.dump(2);
}

std::string trajectory_line(const TrajectoryRecord& record,
                            std::optional<double> fidelity_to) {
  json j;
  j["bits"] = record.outcome_bits.str();
  j["p"] = record.probability;
  if (fidelity_to) j["fidelity_to"] = *fidelity_to;
  return j.dump();
}

std::string monte_carlo_summary_json(const MonteCarloResult& result, RngSeed seed,
                                     double trace_distance_to_exact) {
  json j;
  j["trajectories"] = result.trajectories;
  j["seed"] = seed.seed;
  for (const auto& [bits, count] : result.histogram) j["histogram"][bits] = count;
  j["trace_distance_to_exact"] = trace_distance_to_exact;
  return j.dump(2);
}

std::string rank_table_csv(const std::vector<RankTablePoint>& table) {
  std::ostringstream out;
  out << "t,rank,magnitudes...\n";
  for (const RankTablePoint& point : table) {
    out << format17(point.t) << ',' << point.rank;
    for (double magnitude : point.magnitudes) out << ',' << format17(magnitude);
    out << '\n';
  }
  return out.str();
}

std::string path_states_csv(const std::vector<TrajectoryRecord>& records) {
  std::ostringstream out;
  out << "bits,p,amplitudes_re_im...\n";
  for (const TrajectoryRecord& record : records) {
    // Final states along a path are pure for pure inputs; export the
    // dominant eigenvector.
    const EigenSystem eigs = hermitian_eigs(record.final_state.rho);
    out << record.outcome_bits.str() << ',' << format17(record.probability);
    for (Index i = 0; i < record.final_state.dim; ++i)
      out << ',' << format17(eigs.vectors(i, 0).real()) << ','
          << format17(eigs.vectors(i, 0).imag());
    out << '\n';
  }
  return out.str();
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write file: " + path);
  out << content;
}

ChannelSpec read_channel(const std::string& path) { return channel_from_json(read_text(path)); }
void write_channel(const std::string& path, const ChannelSpec& channel) {
  write_text(path, channel_to_json(channel));
}
AdaptiveCircuit read_circuit(const std::string& path) {
  return circuit_from_json(read_text(path));
}
void write_circuit(const std::string& path, const AdaptiveCircuit& circuit) {
  write_text(path, circuit_to_json(circuit));
}
DensityMatrix read_state(const std::string& path) { return state_from_json(read_text(path)); }
void write_state(const std::string& path, const DensityMatrix& state) {
  write_text(path, state_to_json(state));
}

}  // namespace channelforge::io
