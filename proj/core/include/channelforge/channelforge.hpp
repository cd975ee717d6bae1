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

#include "channelforge/binomial.hpp"
#include "channelforge/cat.hpp"
#include "channelforge/channel.hpp"
#include "channelforge/cqed.hpp"
#include "channelforge/exotic.hpp"
#include "channelforge/io.hpp"
#include "channelforge/lindblad.hpp"
#include "channelforge/linalg.hpp"
#include "channelforge/parallel.hpp"
#include "channelforge/simulate.hpp"
#include "channelforge/stabilize.hpp"
#include "channelforge/tree.hpp"
#include "channelforge/types.hpp"
