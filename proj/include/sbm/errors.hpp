// Copyright 2026 The sbm Authors.
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

#ifndef SBM_ERRORS_HPP_
#define SBM_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace sbm {

// Base for all errors raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (Matrix Market, b files, matching files).
class ParseError : public Error {
 public:
  using Error::Error;
};

// A value is outside the domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Instance too large for an exponential oracle.
class SizeError : public Error {
 public:
  using Error::Error;
};

// Capacities cannot accommodate the requested assignment.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbm

#endif  // SBM_ERRORS_HPP_
