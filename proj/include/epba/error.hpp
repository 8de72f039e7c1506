// Copyright 2026 The epba Authors
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

namespace epba {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size cap (elements, cliques, states, search nodes for closures) was hit.
class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// meet/join table entries exist outside the compatibility relation, or
/// conflicting entries were supplied for one pair.
class MalformedTable : public Error {
 public:
  using Error::Error;
};

class UnknownElement : public Error {
 public:
  using Error::Error;
};

/// A backtracking search hit its node budget before deciding.
class SearchBudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// The operation needs the algebra to satisfy the exclusivity principle.
class LepRequired : public Error {
 public:
  using Error::Error;
};

/// Some nonzero element is not the join of the atoms below it.
class NotAtomSpanned : public Error {
 public:
  using Error::Error;
};

class SolverFailure : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotRankOne : public Error {
 public:
  using Error::Error;
};

class NotAProjector : public Error {
 public:
  using Error::Error;
};

/// Input that does not describe the expected object (bad JSON shape, bad state).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

}  // namespace epba
