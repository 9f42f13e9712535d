// Copyright 2026 The epi-flasher Authors.
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

#ifndef EPI_ERROR_HPP_
#define EPI_ERROR_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace epi {

// Base of every error raised by the pipeline.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed XML. offset() is the byte position reported by the parser.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : Error(what + " at byte " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Well-formed XML that is not an RSS 2.0 document.
class StructureError : public Error {
 public:
  using Error::Error;
};

class EncodingError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// A lexicon or configuration file could not be read.
class LoadError : public Error {
 public:
  using Error::Error;
};

// Content that violates an invariant (duplicate key, out-of-range value...).
class ValidationError : public Error {
 public:
  using Error::Error;
};

class FetchError : public Error {
 public:
  FetchError(std::string source_id, const std::string& what)
      : Error(source_id + ": " + what), source_id_(std::move(source_id)) {}
  const std::string& source_id() const { return source_id_; }

 private:
  std::string source_id_;
};

class EmptyMatrixError : public Error {
 public:
  using Error::Error;
};

}  // namespace epi

#endif  // EPI_ERROR_HPP_
