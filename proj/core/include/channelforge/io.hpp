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

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "channelforge/cat.hpp"
#include "channelforge/channel.hpp"
#include "channelforge/cqed.hpp"
#include "channelforge/simulate.hpp"
#include "channelforge/tree.hpp"

// Interchange formats. Complex numbers are [re, im] pairs, matrices are
// row-major nested lists, numbers round-trip exactly through the emitted
// text. Channel files: {"dim", "repr": "kraus"|"superop"|"choi",
// "matrices": [...]}; circuit files: {"dim", "depth", "nodes": [{"label",
// "block0", "block1"}], "leaves": [{"label", "kraus"}]} with root label "".
namespace channelforge::io {

std::string channel_to_json(const ChannelSpec& channel);
ChannelSpec channel_from_json(const std::string& text);

std::string circuit_to_json(const AdaptiveCircuit& circuit);
AdaptiveCircuit circuit_from_json(const std::string& text);

std::string cqed_to_json(const CqedCircuit& circuit);
CqedCircuit cqed_from_json(const std::string& text);

std::string state_to_json(const DensityMatrix& state);
DensityMatrix state_from_json(const std::string& text);

std::string validation_to_json(const ValidationReport& report);
std::string verification_to_json(const VerificationReport& report);
std::string instrument_to_json(const InstrumentOutput& output);
std::string povm_to_json(const std::vector<std::pair<std::string, double>>& probabilities);

// One log line per trajectory: {"bits": "...", "p": ..., "fidelity_to": ...}.
std::string trajectory_line(const TrajectoryRecord& record,
                            std::optional<double> fidelity_to = std::nullopt);
std::string monte_carlo_summary_json(const MonteCarloResult& result, RngSeed seed,
                                     double trace_distance_to_exact);

// Ragged CSV "t,rank,lambda_1..lambda_rank" preceded by a header line.
std::string rank_table_csv(const std::vector<RankTablePoint>& table);

// Fock-basis amplitudes of per-path final states:
// "bits,p,re_0,im_0,...,re_{d-1},im_{d-1}" (pure states only).
std::string path_states_csv(const std::vector<TrajectoryRecord>& records);

std::string read_text(const std::string& path);
void write_text(const std::string& path, const std::string& content);

ChannelSpec read_channel(const std::string& path);
void write_channel(const std::string& path, const ChannelSpec& channel);
AdaptiveCircuit read_circuit(const std::string& path);
void write_circuit(const std::string& path, const AdaptiveCircuit& circuit);
DensityMatrix read_state(const std::string& path);
void write_state(const std::string& path, const DensityMatrix& state);

}  // namespace channelforge::io
