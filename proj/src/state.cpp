// Copyright 2026 The qtele Authors
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

#include "qtele/state.hpp"

#include <algorithm>
#include <cmath>

#include "qtele/errors.hpp"

namespace qtele {

namespace {

std::size_t qubits_for_dim(std::size_t dim) {
  switch (dim) {
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default: throw RangeError("state dimension " + std::to_string(dim) + " is not 2, 4 or 8");
  }
}

void require_same_dim(const PureState& a, const PureState& b) {
  if (a.dim() != b.dim()) throw RangeError("state dimensions differ");
}

}  // namespace

PureState::PureState(std::vector<double> amps)
    : amps_(std::move(amps)), num_qubits_(qubits_for_dim(amps_.size())) {}

double PureState::squared_norm() const noexcept {
  double sum = 0.0;
  for (double a : amps_) sum += a * a;
  return sum;
}

double PureState::inner(const PureState& other) const {
  require_same_dim(*this, other);
  double sum = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) sum += amps_[i] * other.amps_[i];
  return sum;
}

double PureState::max_abs_diff(const PureState& other) const {
  require_same_dim(*this, other);
  double worst = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    worst = std::max(worst, std::fabs(amps_[i] - other.amps_[i]));
  }
  return worst;
}

PureState PureState::tensor(const PureState& other) const {
  std::vector<double> out;
  out.reserve(dim() * other.dim());
  for (double a : amps_) {
    for (double b : other.amps_) out.push_back(a * b);
  }
  return PureState(std::move(out));
}

PureState PureState::scaled(double c) const {
  std::vector<double> out(amps_);
  for (double& a : out) a *= c;
  return PureState(std::move(out));
}

PureState PureState::plus(const PureState& other) const {
  require_same_dim(*this, other);
  std::vector<double> out(amps_);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += other.amps_[i];
  return PureState(std::move(out));
}

}  // namespace qtele
