// Copyright 2026 The galois3 Authors
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

#ifndef GALOIS3_ERRORS_HPP
#define GALOIS3_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace galois3 {

// Base class for all library errors. Subclasses map onto CLI exit codes:
// input/precondition errors -> 1, budget errors -> 2, Obstructed -> 3,
// UnsupportedCase -> 4.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class FactorBudgetExceeded : public Error {
  public:
    using Error::Error;
};

class SearchBudgetExceeded : public Error {
  public:
    using Error::Error;
};

class DegenerateParameter : public Error {
  public:
    using Error::Error;
};

class WrongDegree : public Error {
  public:
    using Error::Error;
};

class DiscriminantClassMismatch : public Error {
  public:
    using Error::Error;
};

class ImpossibleClass : public Error {
  public:
    using Error::Error;
};

class EvenizeDegenerate : public Error {
  public:
    using Error::Error;
};

class UnrecognizedGroup : public Error {
  public:
    using Error::Error;
};

class SingularCurve : public Error {
  public:
    using Error::Error;
};

class AnisotropyViolated : public Error {
  public:
    using Error::Error;
};

class DivideByZeroSeries : public Error {
  public:
    using Error::Error;
};

class Obstructed : public Error {
  public:
    using Error::Error;
};

class UnsupportedCase : public Error {
  public:
    using Error::Error;
};

class ParseError : public Error {
  public:
    ParseError(const std::string& msg, std::size_t position)
        : Error(msg + " (at position " + std::to_string(position) + ")"), position_(position) {}

    std::size_t position() const { return position_; }

  private:
    std::size_t position_;
};

} // namespace galois3

#endif
