/*
 * Copyright 2026 The submc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */


/// \file model_io.hpp
/// \brief JSON reading and writing of Icgs models.
#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "submc/icgs.hpp"

namespace submc {

/// Parses and validates a model document. Atoms are ordered by first
/// appearance in the state labels. The "indistinguishable" list and the
/// per-state "labels" may be omitted.
Icgs load_model(std::string_view json_text);
Icgs load_model_file(const std::filesystem::path& path);

/// Writes `m` in the same schema, pretty-printed. Indistinguishability is
/// emitted as the pairs (representative, member) of each class.
std::string serialize_model(const Icgs& m);

}  // namespace submc
