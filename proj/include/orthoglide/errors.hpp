// Copyright 2026 The Orthoglide Dynamics Authors
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
#include <string>

namespace orthoglide {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// The requested platform position has no real inverse-geometric solution.
class OutOfWorkspace : public Error {
 public:
  using Error::Error;
};

/// The configuration is too close to a kinematic singularity to solve.
class NearSingular : public Error {
 public:
  using Error::Error;
};

class UnknownLeg : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class MalformedCsv : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Numerical differencing stepped outside the reachable workspace.
class StepTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace orthoglide
