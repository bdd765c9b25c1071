// SPDX-License-Identifier: Apache-2.0
//
// eelm: link-level simulator and ELM-based channel estimator for RIS-assisted OFDM
// Copyright (C) 2026 the eelm authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef EELM_PARALLEL_HPP
#define EELM_PARALLEL_HPP

#include <cstdint>
#include <functional>

namespace eelm {

// Worker count: explicit request > EELM_THREADS env var > hardware threads.
int resolve_threads(int requested = 0);

// Runs fn(i) for i in [0, n) on a pool of workers. Work items must write only
// to disjoint state (results are deterministic because each index owns its
// output slot). The first exception thrown by any item is rethrown here.
void parallel_for(int64_t n, int threads, const std::function<void(int64_t)> &fn);

} // namespace eelm

#endif
