// Copyright 2026 The pbij Authors
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

#include <stdexcept>
#include <string>

namespace pbij {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A precondition of an operation was not met by its arguments.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Evaluation of a partial map at a point outside its domain.
class OutOfDomain : public Error {
 public:
  using Error::Error;
};

class WindowTooSmall : public Error {
 public:
  using Error::Error;
};

/// The requested configuration is outside what the representation supports.
class UnsupportedConfiguration : public Error {
 public:
  using Error::Error;
};

class NotAlmostDisjoint : public Error {
 public:
  using Error::Error;
};

class NotInSemigroup : public Error {
 public:
  using Error::Error;
};

/// Window too small for the finite truncation to emulate fresh-point choices.
class HeadroomViolation : public Error {
 public:
  using Error::Error;
};

class InvalidOpen : public Error {
 public:
  using Error::Error;
};

class UnsupportedFamily : public Error {
 public:
  using Error::Error;
};

/// Malformed literal or config; `where` locates the problem in the input.
class ParseError : public Error {
 public:
  ParseError(std::string where, const std::string& what)
      : Error(where.empty() ? what : where + ": " + what), where_(std::move(where)) {}

  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

}  // namespace pbij
