// Copyright 2026 The Holder Arcs Authors
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

#include <cstddef>
#include <functional>

namespace holder {

/// Number of workers to use: `requested` when positive, otherwise the
/// hardware concurrency (at least 1).
unsigned resolve_jobs(unsigned requested);

/// Runs body(begin, end) over [0, count) split into contiguous chunks, one
/// per worker. Chunk boundaries depend only on `count` and `jobs`, and each
/// index is visited exactly once, so callers that write results by index
/// get output independent of scheduling.
void parallel_for(std::size_t count, unsigned jobs,
                  const std::function<void(std::size_t, std::size_t)>& body);

} // namespace holder
