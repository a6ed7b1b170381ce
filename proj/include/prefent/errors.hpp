// Copyright 2026 The prefent Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PREFENT_ERRORS_HPP_
#define PREFENT_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace prefent {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Malformed input text (formulas, model files, tables). Carries the
/// 0-based offset of the offending character within the parsed text.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// A formula mentions a proposition outside the ambient vocabulary.
class UnknownSymbolError : public ParseError {
 public:
  UnknownSymbolError(const std::string& symbol, std::size_t position)
      : ParseError("unknown symbol '" + symbol + "'", position),
        symbol_(symbol) {}

  const std::string& symbol() const noexcept { return symbol_; }

 private:
  std::string symbol_;
};

/// A state name does not occur in the model it is used with.
class UnknownStateError : public Error {
 public:
  explicit UnknownStateError(const std::string& state)
      : Error("unknown state '" + state + "'"), state_(state) {}

  const std::string& state() const noexcept { return state_; }

 private:
  std::string state_;
};

/// An enumeration or sweep would exceed the configured size cap.
class SizeGuardError : public Error {
 public:
  using Error::Error;
};

/// A MAK model was required to be supra classical but is not. Carries a
/// witness: a state whose satisfied-formula set is not deductively closed,
/// and one class on which the closure test fails.
class NotSupraClassicalError : public Error {
 public:
  NotSupraClassicalError(const std::string& what, std::string state,
                         std::uint32_t witness_class)
      : Error(what), state_(std::move(state)), witness_class_(witness_class) {}

  const std::string& state() const noexcept { return state_; }
  std::uint32_t witness_class() const noexcept { return witness_class_; }

 private:
  std::string state_;
  std::uint32_t witness_class_;
};

/// A pre-circumscription table fails (CT) or (CM) where the operation
/// requires a cumulative one. `rule` is "CT" or "CM".
class NotCumulativeError : public Error {
 public:
  NotCumulativeError(const std::string& what, std::string rule)
      : Error(what), rule_(std::move(rule)) {}

  const std::string& rule() const noexcept { return rule_; }

 private:
  std::string rule_;
};

/// A constructed object failed its post-validation.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A generator could not reach its target kind within its resample budget,
/// or a counterexample search exhausted its trial budget.
class GenerationError : public Error {
 public:
  using Error::Error;
};

}  // namespace prefent

#endif  // PREFENT_ERRORS_HPP_
