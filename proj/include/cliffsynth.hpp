// Copyright 2026 The cliffsynth Authors
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


#pragma once

#include "cliffsynth/a2a.hpp"
#include "cliffsynth/circuit.hpp"
#include "cliffsynth/cz_network.hpp"
#include "cliffsynth/cz_space.hpp"
#include "cliffsynth/gf2.hpp"
#include "cliffsynth/hfree.hpp"
#include "cliffsynth/io.hpp"
#include "cliffsynth/lnn_clifford.hpp"
#include "cliffsynth/lnn_hfree.hpp"
#include "cliffsynth/lnn_linear.hpp"
#include "cliffsynth/qasm.hpp"
#include "cliffsynth/rng.hpp"
#include "cliffsynth/stats.hpp"
#include "cliffsynth/tableau.hpp"
