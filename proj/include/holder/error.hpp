// Copyright 2026 The Holder Arcs Authors
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

namespace holder {

/// Base class of every error raised by the library. The CLI maps these to
/// exit code 1; usage problems are reported separately with exit code 2.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Index range outside the arc, or a table that does not cover a request.
class RangeError : public Error {
public:
    using Error::Error;
};

/// Malformed arc data (non-finite values, non-increasing parameters,
/// repeated consecutive points, length mismatch).
class ArcError : public Error {
public:
    using Error::Error;
};

/// Invalid spiral description.
class SpecError : public Error {
public:
    using Error::Error;
};

/// Out-of-domain numeric parameter (s < 1, alpha outside (0,1], ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Input too large for an exact O(n^2) computation.
class SizeError : public Error {
public:
    using Error::Error;
};

/// Parameter grid that does not contain the ring boundaries t = 2*pi*j.
class AlignmentError : public Error {
public:
    using Error::Error;
};

/// Zero variation where a positive one is required.
class DegeneracyError : public Error {
public:
    using Error::Error;
};

/// Classification requested outside the criterion's hypothesis (s <= 1).
class HypothesisError : public Error {
public:
    using Error::Error;
};

/// Two arcs that are expected to share a parameter grid do not.
class CorrespondenceError : public Error {
public:
    using Error::Error;
};

/// Arc or config file that cannot be parsed. The message names the field
/// and, for line-oriented formats, the line.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace holder
