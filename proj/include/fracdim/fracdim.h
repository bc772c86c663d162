// Copyright 2026 The fracdim Authors.
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

#ifndef FRACDIM_FRACDIM_H_
#define FRACDIM_FRACDIM_H_

#include "fracdim/automorphism.h"
#include "fracdim/covering_lp.h"
#include "fracdim/dimension.h"
#include "fracdim/error.h"
#include "fracdim/family.h"
#include "fracdim/generators.h"
#include "fracdim/graph.h"
#include "fracdim/hitting_set.h"
#include "fracdim/metric.h"
#include "fracdim/oracle.h"
#include "fracdim/rational.h"
#include "fracdim/verify.h"

#endif  // FRACDIM_FRACDIM_H_
