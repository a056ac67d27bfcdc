// Copyright (c) 2026 The cpplab Authors
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

#ifndef CPPLAB_CLI_HPP
#define CPPLAB_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cpplab/verify.hpp"

namespace cpplab::cli {

inline constexpr const char* kToolVersion = "1.0.0";

/// Fully resolved invocation. Exit codes: 0 all checks pass, 1 a theorem
/// assertion failed, 2 usage or hypothesis error.
struct RunConfig {
    std::string command;  // enumerate | verify | inverse
    std::optional<FamilyClass> cls;
    uint32_t p = 3;
    uint32_t m = 1;
    uint32_t s = 2;
    QuadModulus modulus = QuadModulus::x2_plus_1;
    bool modulus_given = false;
    std::string format = "json";  // json | csv | text
    uint64_t max_q = kDefaultSweepCap;
    unsigned workers = 1;
    std::string out;                   // empty -> stdout
    std::optional<std::string> d_str;  // inverse: explicit exponent (decimal)
    std::optional<uint64_t> q_value;   // inverse: explicit field size
};

/// Parses argv (without the program name) and dispatches. All human/machine
/// output goes to `out`, diagnostics to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int run_cli(int argc, char** argv);

// Report encoders (stable JSON schema; CSV flattens the per-v rows).
nlohmann::ordered_json element_json(const FieldCtx& ctx, const FieldElem& x);
nlohmann::ordered_json report_json(const FieldCtx& ctx, const VerifyReport& rep,
                                   const RunConfig& cfg);
void write_report_csv(std::ostream& os, const FieldCtx& ctx, const VerifyReport& rep);
void write_report_text(std::ostream& os, const FieldCtx& ctx, const VerifyReport& rep);

}  // namespace cpplab::cli

#endif  // CPPLAB_CLI_HPP
