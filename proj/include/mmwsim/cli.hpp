// SPDX-License-Identifier: Apache-2.0
//
// mmwsim: multi-operator mmWave spectrum access simulator
// Copyright (C) 2026 The mmwsim authors
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

#pragma once

#include <ostream>

namespace mmwsim
{

// Exit codes of the command-line tool.
inline constexpr int exit_ok = 0;
inline constexpr int exit_runtime_error = 1;
inline constexpr int exit_invalid = 2; // bad flags, unparsable or invalid config

// Entry point of the mmwsim tool: subcommands run, dump-deployment, validate.
// Config values are layered as defaults < config file < MMWSIM_SEED < flags.
int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace mmwsim
