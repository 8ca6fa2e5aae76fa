// Copyright 2026 The Transduce Authors
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

#include <stdexcept>
#include <string>

namespace transduce {

// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Inputs outside an operation's stated domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Failures of the numerical machinery itself; the CLI maps these to exit 3.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NonConvergent : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegenerateInput : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class DegeneratePoles : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

class NotUnimodal : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// No finite cooperativity lifts the on-resonance efficiency above 1/2.
class NoThreshold : public DomainError {
 public:
  using DomainError::DomainError;
};

// The requested integral is infinite (G -> infinity with zeta_P = 1).
class Diverges : public DomainError {
 public:
  using DomainError::DomainError;
};

class GridMismatch : public DomainError {
 public:
  using DomainError::DomainError;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class UnknownFigure : public ConfigError {
 public:
  using ConfigError::ConfigError;
};

}  // namespace transduce
