//  Copyright 2026 The openq Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#ifndef OPENQ_ERROR_HPP_
#define OPENQ_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace openq {

enum class ErrorKind {
  NotAPartialOrder,
  NoBottom,
  MissingJoin,
  NotSupPreserving,
  NotMeetClosed,
  InvalidQuantale,
  InvalidHomomorphism,
  InvalidGroupTable,
  TooLarge,
  NotContinuous,
  NotOpen,
  InvalidTopology,
  HypothesisFailure,
  NotUnital,
  NotALocale,
  MissingDirectImage,
  EnumerationBoundExceeded,
  NotBimorphism,
  TruncationOverflow,
  NotAlternating,
  InternalInvariantViolation,
  Parse,
  Usage,
};

std::string_view to_string(ErrorKind kind);

// Library-wide exception. Witness carries element indices (or grades, for
// TruncationOverflow) that reproduce the failure.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<std::size_t> witness = {})
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind), witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<std::size_t> witness_;
};

// Value-or-error for operations whose failure is an expected outcome rather
// than a fault (adjoints that may not exist, factorizations that may fail).
template <class T, class E>
class Result {
 public:
  Result(T value) : v_(std::in_place_index<0>, std::move(value)) {}
  Result(E error) : v_(std::in_place_index<1>, std::move(error)) {}

  bool ok() const { return v_.index() == 0; }
  explicit operator bool() const { return ok(); }

  const T& value() const& {
    if (!ok()) throw std::logic_error("Result::value() on error");
    return std::get<0>(v_);
  }
  T&& value() && {
    if (!ok()) throw std::logic_error("Result::value() on error");
    return std::get<0>(std::move(v_));
  }
  const E& error() const {
    if (ok()) throw std::logic_error("Result::error() on value");
    return std::get<1>(v_);
  }

 private:
  std::variant<T, E> v_;
};

}  // namespace openq

#endif  // OPENQ_ERROR_HPP_
