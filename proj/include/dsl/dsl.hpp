// Copyright 2026 The dsl Authors.
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

// Umbrella header for the algebra library (no IO dependencies).

#ifndef DSL_DSL_HPP
#define DSL_DSL_HPP

#include "inertia.hpp"
#include "kv.hpp"
#include "lie.hpp"
#include "linalg.hpp"
#include "matrix_rep.hpp"
#include "rational.hpp"
#include "series.hpp"
#include "shuffle.hpp"
#include "tensor.hpp"
#include "word.hpp"

#endif  // DSL_DSL_HPP
