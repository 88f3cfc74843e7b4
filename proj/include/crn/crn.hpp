// Copyright 2026 The crn Authors
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

#include "crn/arrangement.hpp"
#include "crn/endotactic.hpp"
#include "crn/equivalence.hpp"
#include "crn/linalg.hpp"
#include "crn/lp.hpp"
#include "crn/network.hpp"
#include "crn/parse.hpp"
#include "crn/rational.hpp"
#include "crn/realization.hpp"
#include "crn/report.hpp"
#include "crn/structure.hpp"
