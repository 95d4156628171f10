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

#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace qtele {

/// Real amplitude vector of an n-qubit register, n in {1, 2, 3}. Wire 0 is
/// the most significant bit of the basis index, so |w0 w1 w2> sits at
/// 4*w0 + 2*w1 + w2.
class PureState {
 public:
  /// Throws RangeError unless amps.size() is 2, 4 or 8.
  explicit PureState(std::vector<double> amps);

  std::size_t num_qubits() const noexcept { return num_qubits_; }
  std::size_t dim() const noexcept { return amps_.size(); }
  std::span<const double> amplitudes() const noexcept { return amps_; }
  double operator[](std::size_t i) const { return amps_.at(i); }

  double squared_norm() const noexcept;
  double inner(const PureState& other) const;
  double max_abs_diff(const PureState& other) const;

  PureState tensor(const PureState& other) const;

  /// Linear combination helpers for decompositions.
  PureState scaled(double c) const;
  PureState plus(const PureState& other) const;

  friend bool operator==(const PureState&, const PureState&) = default;

 private:
  std::vector<double> amps_;
  std::size_t num_qubits_;
};

}  // namespace qtele
