// Copyright 2026 The kgx Authors.
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

#ifndef KGX_ERROR_HPP_
#define KGX_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace kgx {

// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Missing, ill-typed or unknown field in an interchange document. The
// message starts with the JSON path of the offending value.
class SchemaError : public Error {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

// Character offset or token span out of range or inconsistent.
class SpanError : public Error {
 public:
  using Error::Error;
};

// An I tag that does not continue a B/I run of the same entity type.
class IobError : public Error {
 public:
  using Error::Error;
};

// Malformed row in a relation lookup table or classifier sidecar.
class SidecarFormatError : public Error {
 public:
  using Error::Error;
};

// Malformed triple / enriched TSV or JSONL input.
class FormatError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// The brute-force betweenness oracle refuses graphs above its size cap.
class OracleTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace kgx

#endif  // KGX_ERROR_HPP_
