// Copyright 2026 The slicegeo Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace slicegeo::cli {

// Exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;   // check failed, or a domain / consistency error
inline constexpr int kExitParse = 2;  // bad flags or malformed input

// Runs `slicegeo <args...>` (args without the program name). Input that is
// not given by --file or --input is read from `in`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err);

}  // namespace slicegeo::cli
