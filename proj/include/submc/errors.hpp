/*
 * Copyright 2026 The submc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace submc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Model loading.
class SchemaError : public Error {
 public:
  using Error::Error;
};
class ProtocolError : public Error {
 public:
  using Error::Error;
};
class TransitionError : public Error {
 public:
  using Error::Error;
};
class NameError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in a formula, with the byte offset where it was detected.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Malformed coalition such as `<<a,>>` or `<<a,a>>`.
class ArityError : public ParseError {
 public:
  using ParseError::ParseError;
};

/// Temporal operator outside of any strategic or path quantifier.
class ScopeError : public ParseError {
 public:
  using ParseError::ParseError;
};

class InitialStateRemoved : public Error {
 public:
  using Error::Error;
};

/// Path formula outside the fragment the strategic checker can decide.
class UnsupportedFormula : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition (e.g. imperfect information for
/// a coalition agent when perfect information is required).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// Both the universal check succeeded and the existential check failed, or
/// negative labels escaped the positive ones. Signals a bug, never a verdict.
class InternalSoundnessError : public Error {
 public:
  using Error::Error;
};

class SearchSpaceTooLarge : public Error {
 public:
  using Error::Error;
};

}  // namespace submc
