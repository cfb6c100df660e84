// SPDX-License-Identifier: Apache-2.0
//
// ostbc-cr-precoder: minimum-variance OSTBC precoding for cognitive radio
// Copyright (C) 2026 The ostbc-cr-precoder authors
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

#include <filesystem>
#include <stdexcept>
#include <string>

#include "ostbccr/montecarlo.hpp"

namespace ostbccr::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Reads a YAML experiment file. Omitted optional keys take the SweepConfig
/// defaults; unknown keys, a missing interference cap and invalid values are
/// ConfigErrors naming the offending key. See tools/configs/annotated.yaml.
SweepConfig parse_config(const std::filesystem::path& path);
SweepConfig parse_config_text(const std::string& text);

/// Human-readable echo of a resolved config, one key per line.
std::string describe(const SweepConfig& cfg);

} // namespace ostbccr::cli
