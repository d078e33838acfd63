/*
 * Copyright 2026 The owarank Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/// \file owarank.hpp
/// Umbrella header for the owarank library.

#pragma once

#include "owarank/aggregate.hpp"
#include "owarank/cli.hpp"
#include "owarank/compare.hpp"
#include "owarank/dataset.hpp"
#include "owarank/fraction.hpp"
#include "owarank/io.hpp"
#include "owarank/metrics.hpp"
#include "owarank/weights.hpp"
