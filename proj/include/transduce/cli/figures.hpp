// Copyright 2026 The Transduce Authors
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

#include <cstdint>
#include <string>
#include <vector>

#include "transduce/cli/dataset.hpp"

namespace transduce::cli {

// Known figure ids in display order.
const std::vector<std::string>& figure_ids();

// Datasets of one figure. Throws UnknownFigure for other ids. The seed only
// reaches the PA-array optimizer.
std::vector<Dataset> make_figure(const std::string& id, std::uint64_t seed);

}  // namespace transduce::cli
