// Copyright 2026 The qdecomp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#pragma once

#include <stdexcept>
#include <string>

namespace qdecomp {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad pattern strings, unparsable files, argument
/// values outside the supported range.
class InvalidArgument : public Error {
public:
  using Error::Error;
};

/// A matrix that was required to be unitary is not, within tolerance.
class NonUnitaryError : public Error {
public:
  NonUnitaryError(const std::string &what, double deviation)
      : Error(what), deviation_(deviation) {}

  double deviation() const noexcept { return deviation_; }

private:
  double deviation_;
};

/// The elimination finished but the work matrix is not the identity.
class ResidualError : public Error {
public:
  ResidualError(const std::string &what, double residual)
      : Error(what), residual_(residual) {}

  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

} // namespace qdecomp
