//==============================================================================
//
// Copyright 2026 The sbarron Authors. All Rights Reserved.
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
//
//==============================================================================

#pragma once

#include <stdexcept>
#include <string>

namespace sbarron {

// Base for every error raised by the library. The CLI maps the subclasses
// onto its exit-code contract (2 for input/config problems, 3 for precision).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidElementError : public Error {
 public:
  using Error::Error;
};

class UnknownIrrepError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

class UnsupportedOperationError : public Error {
 public:
  using Error::Error;
};

// Node set not closed under the group law.
class UnsupportedGridError : public Error {
 public:
  using Error::Error;
};

// Quadrature band too small for the requested transform.
class PrecisionError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class SchemaError : public Error {
 public:
  using Error::Error;
};

}  // namespace sbarron
