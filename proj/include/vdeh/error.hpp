/*
 * Copyright 2026 The vdeh authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace vdeh {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Invalid parameter value (bad psi, non-divisible code length, k out of range, ...).
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Dimension or size mismatch between related inputs.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// Bad data content: non-finite coordinates, insufficient distinct rows, ...
class DataError : public Error {
 public:
  using Error::Error;
};

/// File and serialization failures: missing file, bad magic, version or
/// checksum mismatch, truncation.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vdeh
