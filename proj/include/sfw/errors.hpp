// Copyright 2026 The sfwitness Authors
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

namespace sfw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed or out-of-range arguments.
class InputError : public Error {
  public:
    using Error::Error;
};

/// The request would exceed a size cap (qubit count, dense matrix size).
class ResourceError : public Error {
  public:
    using Error::Error;
};

/// The arguments are valid but no closed form or routine covers them.
class UnsupportedCaseError : public Error {
  public:
    using Error::Error;
};

/// An internal consistency check failed.
class CheckFailure : public Error {
  public:
    using Error::Error;
};

}  // namespace sfw
