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

#ifndef LPGRAPH_ADAM_H_
#define LPGRAPH_ADAM_H_

#include <Eigen/Dense>
#include <cstdint>

namespace lpgraph {

struct AdamOptions {
  double learning_rate = 3e-4;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

struct AdamState {
  Eigen::VectorXd first_moment;
  Eigen::VectorXd second_moment;
  int64_t step = 0;

  static AdamState Zeros(Eigen::Index size);
};

// One bias-corrected Adam update of `params` in place. Sizes of state,
// params and gradient must agree.
void AdamStep(const AdamOptions& options, const Eigen::VectorXd& gradient,
              AdamState& state, Eigen::VectorXd& params);

}  // namespace lpgraph

#endif  // LPGRAPH_ADAM_H_
