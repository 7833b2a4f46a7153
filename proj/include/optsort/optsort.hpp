// Copyright 2026 The optsort Authors
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

// Umbrella header.

#ifndef OPTSORT_OPTSORT_HPP_
#define OPTSORT_OPTSORT_HPP_

#include "optsort/driver.hpp"
#include "optsort/instance.hpp"
#include "optsort/move_calculus.hpp"
#include "optsort/oracles.hpp"
#include "optsort/propagation.hpp"
#include "optsort/rules.hpp"
#include "optsort/solution_sets.hpp"
#include "optsort/timeline.hpp"

#endif  // OPTSORT_OPTSORT_HPP_
