// Copyright 2026 The Lexiscribe Authors
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

namespace lexiscribe {

/// Base class for every error raised by the library. Each error message
/// names the offending file, entry, or value so batch logs stay readable.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// corpus
class MissingFileError : public Error {
public:
  using Error::Error;
};
class DuplicateIdError : public Error {
public:
  using Error::Error;
};
class MalformedManifestError : public Error {
public:
  using Error::Error;
};

// text handling
class InvalidUtf8Error : public Error {
public:
  using Error::Error;
};

// sonnex
class MalformedRuleFileError : public Error {
public:
  using Error::Error;
};
class UnknownPhonemeSymbolError : public Error {
public:
  using Error::Error;
};
class AmbiguousRuleError : public Error {
public:
  using Error::Error;
};
class EmptyWordError : public Error {
public:
  using Error::Error;
};

// metrics
class EmptyReferenceError : public Error {
public:
  using Error::Error;
};
class EmptySelectionError : public Error {
public:
  using Error::Error;
};

// costing
class NegativeMinutesError : public Error {
public:
  using Error::Error;
};
class PricingError : public Error {
public:
  using Error::Error;
};

// asr_client
class AdapterUnavailableError : public Error {
public:
  using Error::Error;
};
class DuplicateJobError : public Error {
public:
  using Error::Error;
};

// report
class MissingSelectionError : public Error {
public:
  using Error::Error;
};
class IoError : public Error {
public:
  using Error::Error;
};
class VersionError : public Error {
public:
  using Error::Error;
};

// cli / config
class ConfigError : public Error {
public:
  using Error::Error;
};

}  // namespace lexiscribe
