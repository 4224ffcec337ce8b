// Copyright 2026 The holoqc Authors
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

namespace holoqc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input errors. The command-line front end maps these to exit code 2.
class InputError : public Error {
 public:
  using Error::Error;
};

class InvalidGeometry : public InputError {
 public:
  using InputError::InputError;
};

class WireOutOfRange : public InputError {
 public:
  using InputError::InputError;
};

class MalformedCircuit : public InputError {
 public:
  using InputError::InputError;
};

class DimensionMismatch : public InputError {
 public:
  using InputError::InputError;
};

class NotUnitary : public InputError {
 public:
  using InputError::InputError;
};

class NotSignedPermutation : public InputError {
 public:
  using InputError::InputError;
};

class UnknownMode : public InputError {
 public:
  using InputError::InputError;
};

class MalformedPlan : public InputError {
 public:
  using InputError::InputError;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

// Numerical failures (exit code 1).
class NonuniformCoupling : public Error {
 public:
  using Error::Error;
};

class StepUnderflow : public Error {
 public:
  using Error::Error;
};

}  // namespace holoqc
