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

#ifndef CHAMBERS_TEXT_UTIL_H_
#define CHAMBERS_TEXT_UTIL_H_

#include <string>
#include <string_view>
#include <vector>

namespace chambers {

struct TokenLine {
  int line = 0;  // 1-based source line
  std::vector<std::string> tokens;
};

// Splits text into whitespace-separated tokens per line, dropping comments
// ('#' to end of line) and blank lines.
std::vector<TokenLine> TokenizeLines(std::string_view text);

int ParseInt(const std::string& token, const std::string& where);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, const std::string& contents);

}  // namespace chambers

#endif  // CHAMBERS_TEXT_UTIL_H_
