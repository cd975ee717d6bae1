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

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

#include "channelforge/types.hpp"

namespace channelforge {

// Worker cap: min(hardware_concurrency, CHANNEL_FORGE_THREADS), at least 1.
int max_threads();

// Runs fn(i) for i in [0, n). Work is handed out as dynamically claimed
// index ranges; callers that need deterministic results must make fn(i)
// depend on i alone and reduce in index order afterwards.
void parallel_for(Index n, const std::function<void(Index)>& fn);

}  // namespace channelforge
