// Copyright 2026 The latesearch authors
//
// Licensed under the Apache License, Version 2.0 (the "License"); you may not
// use this file except in compliance with the License. You may obtain a copy
// of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

#pragma once

#include <iostream>
#include <stdexcept>
#include <string>

namespace latesearch {

/// Malformed or inconsistent data: corpus records, index files, run files.
/// The CLI maps this to exit code 1.
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameters or missing inputs. The CLI maps this to exit code 2.
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Non-fatal diagnostics (skipped documents, clamped parameters, ...).
inline void log_warning(const std::string& msg) {
  std::cerr << "warning: " << msg << std::endl;
}

}  // namespace latesearch
