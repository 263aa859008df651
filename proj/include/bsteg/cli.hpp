// Copyright Contributors to the bsteg project.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace bsteg {

// Exit statuses are disjoint; stderr carries diagnostics, stdout carries
// payload data and reports only.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int usage = 1;      // bad flags or missing arguments
inline constexpr int format = 2;     // unreadable, truncated or unsupported files
inline constexpr int capacity = 3;   // payload larger than the image can hold
inline constexpr int params = 4;     // invalid embedding parameters
inline constexpr int not_stego = 5;  // marker absent or payload frame corrupt
}  // namespace exit_code

// Runs one cover/uncover/inspect invocation. args excludes the program
// name.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace bsteg
