// Copyright 2026 qcoll developers
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

#ifndef QCOLL_ERROR_HPP
#define QCOLL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace qcoll {

enum class ErrorKind {
    Argument,   // bad value passed by the caller
    Dimension,  // matrix dimension mismatch or overflow
    Contract,   // a numerical precondition (hermiticity, state validity) failed
    Config,     // unusable sweep/CLI configuration
    Io,         // file read/write failure
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& message) : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept {
        return kind_;
    }

  private:
    ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& message) {
    throw Error(kind, message);
}

}  // namespace qcoll

#endif
