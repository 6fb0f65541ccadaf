// Copyright 2026 The AQEC Authors
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

#ifndef AQEC_ERRORS_HPP
#define AQEC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace aqec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class DimMismatch : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

class NotPSD : public Error {
 public:
  using Error::Error;
};

class NotNormalized : public Error {
 public:
  using Error::Error;
};

/// Raised when the polar factors of the reversible effects do not map the
/// code onto mutually orthogonal subspaces, so syndromes are ambiguous.
class OrthogonalityViolation : public Error {
 public:
  using Error::Error;
};

class UnsupportedDim : public Error {
 public:
  using Error::Error;
};

/// Malformed JSON documents and similar input problems.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace aqec

#endif  // AQEC_ERRORS_HPP
