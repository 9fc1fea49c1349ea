// Copyright 2026 The chambers Authors
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

#ifndef CHAMBERS_ERROR_H_
#define CHAMBERS_ERROR_H_

#include <stdexcept>
#include <string>

namespace chambers {

// Raised for inputs outside an operation's domain: malformed files, graphs
// with short cycles where a CAT(0) link is required, unsupported orders, etc.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace chambers

#endif  // CHAMBERS_ERROR_H_
