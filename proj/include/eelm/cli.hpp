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

#ifndef EELM_CLI_HPP
#define EELM_CLI_HPP

namespace eelm {

// Entry point behind the `eelm` binary: subcommands train | sweep |
// calibrate | report. Returns 0 on success, 2 on usage or config errors,
// 1 on runtime failures.
int cli_main(int argc, const char *const *argv);

} // namespace eelm

#endif
