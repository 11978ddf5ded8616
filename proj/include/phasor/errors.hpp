/*
   Copyright 2026 The phasor Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef PHASOR_ERRORS_HPP
#define PHASOR_ERRORS_HPP

#include <stdexcept>

namespace phasor {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The element is a zero divisor (Minkowski modulus 0) and has no inverse.
class LightlikeNotInvertible : public Error {
  public:
    using Error::Error;
};

/// A result left the finite range of double precision.
class OverflowError : public Error {
  public:
    using Error::Error;
};

/// A truncated series hit its term cap before the stopping rule triggered.
class NoConvergence : public Error {
  public:
    using Error::Error;
};

/// Two phasors with different frequencies cannot be added into one term.
class FrequencyMismatch : public Error {
  public:
    using Error::Error;
};

/// Both coefficients are zero; there is no term to canonicalize.
class ZeroSignal : public Error {
  public:
    using Error::Error;
};

/// The principal argument of the origin is undefined.
class UndefinedArgument : public Error {
  public:
    using Error::Error;
};

/// The split-complex polar rewrite is only derived for a > |b|.
class OutsideDerivationDomain : public Error {
  public:
    using Error::Error;
};

/// An argument violated a documented precondition.
class DomainError : public Error {
  public:
    using Error::Error;
};

/// Oscillator problems require strictly positive mass.
class InvalidMass : public Error {
  public:
    using Error::Error;
};

/// Invalid sampling or checking range.
class RangeError : public Error {
  public:
    using Error::Error;
};

}  // namespace phasor

#endif  // PHASOR_ERRORS_HPP
