// Copyright 2026 The Stinespring Authors
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

#include <json.hpp>

#include "stinespring/channel.hpp"
#include "stinespring/types.hpp"

namespace stinespring {

using Json = nlohmann::json;

// {"rows": R, "cols": C, "shape": [...], "data": [[re, im], ...]}, row-major.
// Doubles are written with shortest round-trip precision.
Json matrix_to_json(const ComplexMatrix& m,
                    const std::optional<SystemShape>& shape = std::nullopt);
ComplexMatrix matrix_from_json(const Json& j);
std::optional<SystemShape> shape_from_json(const Json& j);

Json channel_to_json(const KrausChannel& ch);
KrausChannel channel_from_json(const Json& j);

}  // namespace stinespring
