// Copyright 2026 The Blotto Solver Authors
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

#ifndef BLOTTO_ERROR_HPP_
#define BLOTTO_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace blotto {

// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A precondition on an argument does not hold.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// A strategy set or an oracle input exceeds a hard size guard.
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A cache file cannot be read back: bad version, corrupt body, wrong game.
class FormatError : public Error {
 public:
  using Error::Error;
};

// An iterative solver hit its iteration cap.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

// A cooperative deadline expired.
class TimeoutError : public Error {
 public:
  using Error::Error;
};

// An invariant that should be impossible to break was broken.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace blotto

#endif  // BLOTTO_ERROR_HPP_
