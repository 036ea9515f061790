// Copyright 2026 The lz4pw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace lz4pw {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A sequence violates the LZ4 block format (bad offset, short match).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A compressed block is malformed, truncated or overruns its output bound.
class DecodeError : public Error {
 public:
  using Error::Error;
};

/// A sequence list does not describe its source block.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// Invalid configuration or arguments supplied by a caller.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace lz4pw
