// SPDX-License-Identifier: Apache-2.0
//
// gdof: exact GDoF region calculator for the two-user MIMO interference channel
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gdof/geometry.hpp"
#include "gdof/rational.hpp"
#include "gdof/region.hpp"

namespace gdof::cli {

enum class Command { kRegion, kSym, kSweep, kReciprocity, kSplit, kSimulate, kClassify };
enum class Format { kJson, kCsv, kSvg };

std::string_view to_string(Command command);
std::string_view to_string(Format format);

inline constexpr std::string_view kOutputDirEnv = "GDOF_OUTPUT_DIR";

struct JobSpec {
  Command command = Command::kRegion;
  std::vector<int> antennas;             // M1 N1 M2 N2, or M N for classify
  std::vector<Rational> alpha;           // [a11, a12, a21, a22], or one value for classify
  ExponentTemplate shape;                // sweep only
  std::vector<Rational> grid;            // sweep only
  std::optional<Point2> point;           // split only
  Format format = Format::kJson;
  std::optional<std::string> output;     // stdout when absent
  std::uint64_t seed = 1;                // simulate only
  int draws = 5;                         // simulate only
  std::vector<double> ladder{1e8, 1e12}; // simulate only
};

/// Parses command-line arguments (without the program name).
/// Throws gdof::Error with kInvalidArgument on bad usage.
JobSpec parse_command_line(const std::vector<std::string>& args);

/// "a,b,c,d" of rationals.
std::vector<Rational> parse_rational_list(std::string_view text);
/// "lo:hi:step" or a comma separated list.
std::vector<Rational> parse_grid(std::string_view text);
/// Four comma separated affine expressions in `a`, e.g. "1,a,1/2+a/2,1".
ExponentTemplate parse_template(std::string_view text);

/// Renders the job's artifact as text. Throws gdof::Error on invalid jobs.
std::string render(const JobSpec& spec);

/// Writes `content` next to `path` and renames it into place.
void write_atomic(const std::string& path, std::string_view content);

/// Resolves a relative output path against $GDOF_OUTPUT_DIR when set.
std::string resolve_output_path(const std::string& path);

/// Renders and writes the job. On failure prints {"error": {...}} to `err` and
/// returns a nonzero status.
int run(const JobSpec& spec, std::ostream& out, std::ostream& err);

/// Full entry point: parse, then run.
int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Plot emitters, exposed for testing.
std::string region_svg(const GdofRegion& region, std::string_view title,
                       const std::vector<Point2>& marks = {});
std::string sweep_svg(const std::vector<SweepPoint>& points, std::string_view title);

}  // namespace gdof::cli
