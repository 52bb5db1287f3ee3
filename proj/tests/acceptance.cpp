// Copyright 2026 The sfwitness Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Prints one PASS/FAIL line per acceptance criterion. With a criterion id as
// argument the exit status reflects that criterion alone.

#include <cstdlib>
#include <iostream>
#include <string>

#include "report.hpp"

int main(int argc, char **argv) {
    const std::string only = argc > 1 ? argv[1] : "";
    bool ok = true;
    bool seen = only.empty();
    for (const auto &c : sfw::report::reproduce_paper({})) {
        std::cout << (c.passed ? "PASS" : "FAIL") << "  criterion " << c.id << " (" << c.name
                  << "): " << c.detail << "\n";
        if (only.empty() || c.id == only) {
            ok = ok && c.passed;
            seen = true;
        }
    }
    if (!seen) {
        std::cerr << "unknown criterion '" << only << "'\n";
        return EXIT_FAILURE;
    }
    return ok ? EXIT_SUCCESS : EXIT_FAILURE;
}
