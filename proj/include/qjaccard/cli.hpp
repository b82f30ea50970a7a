// Copyright 2026 The qjaccard authors
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

#include <cstdint>
#include <iosfwd>
#include <string>

namespace qjaccard {

/// Parsed command line. Filled by run_cli; exposed for tests.
struct CliConfig {
    std::string command;          // jaccard | intersect | union | export-qasm | stats
    std::string x;                // MSB-first bitstring
    std::string y;
    std::string backend = "auto";  // dense | basis | auto
    std::uint64_t shots = 1024;
    std::uint64_t seed = 0;
    std::string output = "text";  // text | json
    std::string circuit;          // intersect | union (export-qasm, stats)
    std::string out_path;         // export-qasm target file; empty = stdout
};

/// Full command-line front end against the given streams. Returns the
/// process exit code: 0 on success, 1 on usage errors, 2 when a backend
/// refuses the width or the exporter cannot express a gate.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qjaccard
