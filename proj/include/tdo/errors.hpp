// Copyright 2026 The tdo Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace tdo {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotReal : public Error {
 public:
  NotReal() : Error("value has a nonzero imaginary part") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class InvalidCircuit : public Error {
 public:
  using Error::Error;
};

/// Parse failure with a 1-based position into the offending input.
class SourceError : public Error {
 public:
  SourceError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " +
              message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class WidthMismatch : public Error {
 public:
  using Error::Error;
};

class TooWide : public Error {
 public:
  TooWide(std::size_t width, std::size_t cap)
      : Error("circuit width " + std::to_string(width) +
              " exceeds simulation cap " + std::to_string(cap)),
        width_(width),
        cap_(cap) {}

  std::size_t width() const { return width_; }
  std::size_t cap() const { return cap_; }

 private:
  std::size_t width_;
  std::size_t cap_;
};

class AncillaContractViolated : public Error {
 public:
  explicit AncillaContractViolated(std::size_t basis_input)
      : Error("ancillas not restored to |0> for main basis input " +
              std::to_string(basis_input)),
        basis_input_(basis_input) {}

  /// Main-register basis index (qubit 0 is the most significant bit).
  std::size_t basis_input() const { return basis_input_; }

 private:
  std::size_t basis_input_;
};

class UnknownConstruction : public Error {
 public:
  explicit UnknownConstruction(const std::string& name)
      : Error("unknown construction '" + name + "'") {}
};

class BadParams : public Error {
 public:
  using Error::Error;
};

class NotAControlledCircuit : public Error {
 public:
  NotAControlledCircuit()
      : Error("circuit does not act as identity when qubit 0 is |0>") {}
};

class NotAlmostClassical : public Error {
 public:
  NotAlmostClassical(std::string gate, std::size_t position)
      : Error("gate '" + gate + "' at position " + std::to_string(position) +
              " is not almost classical"),
        gate_(std::move(gate)),
        position_(position) {}

  const std::string& gate() const { return gate_; }
  /// 0-based index into the circuit's gate list.
  std::size_t position() const { return position_; }

 private:
  std::string gate_;
  std::size_t position_;
};

class NotTDepthOneShape : public Error {
 public:
  NotTDepthOneShape(std::size_t position, const std::string& why)
      : Error("gate at position " + std::to_string(position) + ": " + why),
        position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class NotClifford : public Error {
 public:
  explicit NotClifford(const std::string& gate)
      : Error("gate '" + gate + "' is not a Clifford gate") {}
};

}  // namespace tdo
