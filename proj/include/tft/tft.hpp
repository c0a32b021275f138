// Copyright 2026 The TFT Authors.
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

#ifndef TFT_TFT_HPP_
#define TFT_TFT_HPP_

#include "tft/butterfly.hpp"
#include "tft/coefficient_file.hpp"
#include "tft/error.hpp"
#include "tft/inverse_truncated.hpp"
#include "tft/plan.hpp"
#include "tft/polymul.hpp"
#include "tft/ring.hpp"
#include "tft/schedule.hpp"
#include "tft/transform.hpp"
#include "tft/truncated.hpp"

#endif  // TFT_TFT_HPP_
