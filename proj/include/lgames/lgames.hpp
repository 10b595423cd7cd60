// Copyright 2026 The lgames Authors
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

// Umbrella header.

#ifndef LGAMES_LGAMES_HPP_
#define LGAMES_LGAMES_HPP_

#include "lgames/algebra.hpp"
#include "lgames/corpus.hpp"
#include "lgames/equilibria.hpp"
#include "lgames/error.hpp"
#include "lgames/formula.hpp"
#include "lgames/game.hpp"
#include "lgames/io.hpp"
#include "lgames/oracle.hpp"
#include "lgames/rational.hpp"
#include "lgames/repr.hpp"

#endif  // LGAMES_LGAMES_HPP_
