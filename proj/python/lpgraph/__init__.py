# Copyright 2026 The lpgraph Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""LP instances as weighted bipartite graphs.

Thin wrapper over the compiled ``_lpgraph`` extension: an exact simplex
solver, the minimum-norm optimal solution, the WL test on LP graphs, twin
certification, the instance generators and GNN training.
"""

from lpgraph._lpgraph import (
    Error,
    InvalidArgument,
    IoError,
    LpInstance,
    NotOptimal,
    check_twin,
    distinguishable,
    gen_random_lp,
    gen_twin_pair,
    lift_replicate,
    min_norm_optimal,
    num_params,
    read_dataset,
    solve,
    train,
    violation,
    wl,
    write_dataset,
)

__all__ = [
    "Error",
    "InvalidArgument",
    "IoError",
    "LpInstance",
    "NotOptimal",
    "check_twin",
    "distinguishable",
    "gen_random_lp",
    "gen_twin_pair",
    "lift_replicate",
    "min_norm_optimal",
    "num_params",
    "read_dataset",
    "solve",
    "train",
    "violation",
    "wl",
    "write_dataset",
]
