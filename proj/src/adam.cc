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

#include "lpgraph/adam.h"

#include <cmath>

#include "lpgraph/errors.h"

namespace lpgraph {

AdamState AdamState::Zeros(Eigen::Index size) {
  return AdamState{Eigen::VectorXd::Zero(size), Eigen::VectorXd::Zero(size), 0};
}

void AdamStep(const AdamOptions& options, const Eigen::VectorXd& gradient,
              AdamState& state, Eigen::VectorXd& params) {
  if (gradient.size() != params.size() ||
      state.first_moment.size() != params.size() ||
      state.second_moment.size() != params.size()) {
    throw InvalidArgument("Adam state, parameters and gradient differ in size");
  }
  ++state.step;
  state.first_moment =
      options.beta1 * state.first_moment + (1 - options.beta1) * gradient;
  state.second_moment = options.beta2 * state.second_moment +
                        (1 - options.beta2) * gradient.cwiseAbs2();
  const double t = static_cast<double>(state.step);
  const double correction1 = 1 - std::pow(options.beta1, t);
  const double correction2 = 1 - std::pow(options.beta2, t);
  params.array() -=
      options.learning_rate * (state.first_moment.array() / correction1) /
      ((state.second_moment.array() / correction2).sqrt() + options.epsilon);
}

}  // namespace lpgraph
