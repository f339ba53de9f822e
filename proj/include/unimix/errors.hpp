// Copyright 2026 The unimix developers
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

#include <stdexcept>

namespace unimix {

/// Incompatible matrix shapes or tensor-factor dimensions.
struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Mixing probability beyond the decomposable range p <= 1/(d^2 - 1).
struct TheoremBoundError : std::domain_error {
  using std::domain_error::domain_error;
};

/// An iterative routine hit its iteration cap before reaching tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Group closure exceeded its element cap (bad generators).
struct EnumerationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Carathéodory pruning failed to find a usable affine dependency.
struct PruneError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Malformed or out-of-contract JSON/CSV input.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

} // namespace unimix
