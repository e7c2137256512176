// Copyright 2026 The numrad Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef NUMRAD_ERROR_HPP
#define NUMRAD_ERROR_HPP

#include <stdexcept>
#include <string>

namespace numrad {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Operand dimensions do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An argument violates a documented precondition (t outside [0,1],
/// non-finite entry, a non-normal matrix handed to a normal-only check...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An iterative method hit its iteration cap, or an integrand went non-finite.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file or command-line value.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace numrad

#endif  // NUMRAD_ERROR_HPP
