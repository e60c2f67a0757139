// Copyright 2026 The lpgraph Authors
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

#ifndef LPGRAPH_PARALLEL_H_
#define LPGRAPH_PARALLEL_H_

#include <functional>

namespace lpgraph {

// Worker cap: LPGRAPH_THREADS if set to a positive integer, otherwise the
// hardware concurrency.
int WorkerCount();

// Runs body(i) for i in [0, count) on up to WorkerCount() threads. Each index
// runs exactly once; callers write results into per-index slots so the output
// does not depend on scheduling. The first exception thrown is rethrown.
void ParallelFor(int count, const std::function<void(int)>& body);

}  // namespace lpgraph

#endif  // LPGRAPH_PARALLEL_H_
