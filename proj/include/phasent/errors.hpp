// Copyright 2026 The phasent developers
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

namespace phasent {

/// Base class of every exception thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Qubit count or vector length outside the supported range.
class InvalidSizeError : public Error {
 public:
  using Error::Error;
};

/// Dimension mismatch between operands, or a malformed dimension.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Kernel is not unitary, so no inverse transform exists.
class NotInvertibleError : public Error {
 public:
  using Error::Error;
};

/// State is unusable for the requested analysis (zero or non-finite).
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// A precondition documented on the call was violated.
class ContractViolationError : public Error {
 public:
  using Error::Error;
};

/// Malformed serialized input; the message names the offending field.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Index (qubit or basis) outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

}  // namespace phasent
