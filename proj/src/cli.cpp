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

#include "gdof/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "gdof/closed_forms.hpp"
#include "gdof/error.hpp"
#include "gdof/finite_snr.hpp"
#include "gdof/hk_scheme.hpp"

namespace gdof::cli {

using gdof::to_string;

using nlohmann::ordered_json;

std::string_view to_string(Command command) {
  switch (command) {
    case Command::kRegion: return "region";
    case Command::kSym: return "sym";
    case Command::kSweep: return "sweep";
    case Command::kReciprocity: return "reciprocity";
    case Command::kSplit: return "split";
    case Command::kSimulate: return "simulate";
    case Command::kClassify: return "classify";
  }
  return "?";
}

std::string_view to_string(Format format) {
  switch (format) {
    case Format::kJson: return "json";
    case Format::kCsv: return "csv";
    case Format::kSvg: return "svg";
  }
  return "?";
}

namespace {

[[noreturn]] void usage(const std::string& what) { throw Error(ErrorCode::kInvalidArgument, what); }

Rational rational_arg(std::string_view text) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    usage(e.what());
  }
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Affine expression in `a`: signed terms such as "1", "a", "2a", "2*a", "a/2", "3a/4".
std::pair<Rational, Rational> parse_affine(std::string_view expr) {
  std::string s;
  for (char c : expr) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) usage("empty template entry");
  Rational offset(0), slope(0);
  std::size_t k = 0;
  while (k < s.size()) {
    int sign = 1;
    if (s[k] == '+' || s[k] == '-') {
      sign = s[k] == '-' ? -1 : 1;
      ++k;
    }
    std::size_t end = s.find_first_of("+-", k);
    std::string term = s.substr(k, end == std::string::npos ? std::string::npos : end - k);
    k = end == std::string::npos ? s.size() : end;
    if (term.empty()) usage("malformed template entry '" + std::string(expr) + "'");
    if (term.find('a') != std::string::npos) {
      std::string coef;
      for (char c : term) {
        if (c != 'a' && c != '*') coef.push_back(c);
      }
      if (coef.empty()) coef = "1";
      if (coef.front() == '/') coef = "1" + coef;
      slope += sign * rational_arg(coef);
    } else {
      offset += sign * rational_arg(term);
    }
  }
  return {offset, slope};
}

ordered_json rational_json(const Rational& r) { return to_string(r); }

ordered_json point_json(const Point2& p) { return ordered_json::array({to_string(p.x), to_string(p.y)}); }

ordered_json antennas_json(const AntennaProfile& a) {
  return ordered_json::array({a.tx(1), a.rx(1), a.tx(2), a.rx(2)});
}

ordered_json alpha_json(const ExponentProfile& e) {
  ordered_json out = ordered_json::array();
  for (const auto& v : e.values()) out.push_back(rational_json(v));
  return out;
}

ordered_json region_json(const GdofRegion& region) {
  ordered_json bounds = ordered_json::array();
  for (const auto& b : region.bounds()) {
    bounds.push_back({{"kind", to_string(b.kind)},
                      {"c1", rational_json(b.c1)},
                      {"c2", rational_json(b.c2)},
                      {"rhs", rational_json(b.rhs)}});
  }
  ordered_json vertices = ordered_json::array();
  for (const auto& v : region.vertices()) vertices.push_back(point_json(v));
  return {{"bounds", bounds}, {"vertices", vertices}};
}

ChannelProfile channel_of(const JobSpec& spec) {
  if (spec.antennas.size() != 4) usage("expected four antenna counts M1 N1 M2 N2");
  if (spec.alpha.size() != 4) usage("--alpha needs four exponents a11,a12,a21,a22");
  return ChannelProfile{
      AntennaProfile(spec.antennas[0], spec.antennas[1], spec.antennas[2], spec.antennas[3]),
      ExponentProfile(spec.alpha[0], spec.alpha[1], spec.alpha[2], spec.alpha[3])};
}

std::string profile_title(const ChannelProfile& ch) {
  const auto& a = ch.antennas;
  std::ostringstream t;
  t << "(" << a.tx(1) << "," << a.rx(1) << "," << a.tx(2) << "," << a.rx(2) << ") IC, alpha=[";
  for (std::size_t k = 0; k < 4; ++k) t << (k ? "," : "") << to_string(ch.exponents.values()[k]);
  t << "]";
  return t.str();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

[[noreturn]] void unsupported(const JobSpec& spec) {
  usage("format " + std::string(to_string(spec.format)) + " is not available for " +
        std::string(to_string(spec.command)));
}

std::string render_region(const JobSpec& spec) {
  const auto ch = channel_of(spec);
  const auto region = gdof_region(ch);
  switch (spec.format) {
    case Format::kJson: {
      ordered_json j = {{"antennas", antennas_json(ch.antennas)}, {"alpha", alpha_json(ch.exponents)}};
      j.update(region_json(region));
      return dump(j);
    }
    case Format::kCsv: {
      std::string csv = "d1,d2\n";
      for (const auto& v : region.vertices()) csv += to_string(v.x) + "," + to_string(v.y) + "\n";
      return csv;
    }
    case Format::kSvg:
      return region_svg(region, "GDoF region of the " + profile_title(ch));
  }
  unsupported(spec);
}

std::string render_sym(const JobSpec& spec) {
  const auto ch = channel_of(spec);
  const auto sym = symmetric_gdof(ch);
  if (spec.format == Format::kSvg) {
    return region_svg(gdof_region(ch), "Symmetric GDoF of the " + profile_title(ch),
                      {Point2{sym.value, sym.value}});
  }
  if (spec.format != Format::kJson) unsupported(spec);
  return dump({{"antennas", antennas_json(ch.antennas)},
               {"alpha", alpha_json(ch.exponents)},
               {"d_sym", rational_json(sym.value)},
               {"active_bound", to_string(sym.active)}});
}

std::string render_sweep(const JobSpec& spec) {
  if (spec.antennas.size() != 4) usage("expected four antenna counts M1 N1 M2 N2");
  const AntennaProfile ant(spec.antennas[0], spec.antennas[1], spec.antennas[2], spec.antennas[3]);
  const auto points = sweep_alpha(ant, spec.shape, spec.grid);
  switch (spec.format) {
    case Format::kCsv: {
      std::string csv = "alpha,d_sym,active_bound_kind,is_breakpoint\n";
      for (const auto& p : points) {
        csv += to_string(p.alpha) + "," + to_string(p.d_sym) + "," + std::string(to_string(p.active)) +
               "," + (p.is_breakpoint ? "true" : "false") + "\n";
      }
      return csv;
    }
    case Format::kJson: {
      ordered_json rows = ordered_json::array();
      ordered_json breaks = ordered_json::array();
      for (const auto& p : points) {
        rows.push_back({{"alpha", rational_json(p.alpha)},
                        {"d_sym", rational_json(p.d_sym)},
                        {"active_bound_kind", to_string(p.active)},
                        {"is_breakpoint", p.is_breakpoint}});
        if (p.is_breakpoint) breaks.push_back(rational_json(p.alpha));
      }
      ordered_json shape = ordered_json::array();
      for (std::size_t k = 0; k < 4; ++k) {
        shape.push_back({{"offset", rational_json(spec.shape.offset[k])},
                         {"slope", rational_json(spec.shape.slope[k])}});
      }
      return dump({{"antennas", antennas_json(ant)},
                   {"template", shape},
                   {"points", rows},
                   {"breakpoints", breaks}});
    }
    case Format::kSvg: {
      std::ostringstream t;
      t << "Symmetric GDoF of the (" << ant.tx(1) << "," << ant.rx(1) << "," << ant.tx(2) << ","
        << ant.rx(2) << ") IC";
      return sweep_svg(points, t.str());
    }
  }
  unsupported(spec);
}

std::string render_reciprocity(const JobSpec& spec) {
  const auto ch = channel_of(spec);
  const auto rec = reciprocal(ch);
  const auto region = gdof_region(ch);
  const auto rec_region = gdof_region(rec);
  const bool equal = regions_equal(region, rec_region);
  if (spec.format == Format::kSvg) {
    return region_svg(region, "GDoF region of the " + profile_title(ch) +
                                  (equal ? " (equal to its reciprocal)" : " (differs from its reciprocal)"),
                      rec_region.vertices());
  }
  if (spec.format != Format::kJson) unsupported(spec);
  ordered_json vertices = ordered_json::array();
  for (const auto& v : region.vertices()) vertices.push_back(point_json(v));
  ordered_json rec_vertices = ordered_json::array();
  for (const auto& v : rec_region.vertices()) rec_vertices.push_back(point_json(v));
  return dump({{"antennas", antennas_json(ch.antennas)},
               {"alpha", alpha_json(ch.exponents)},
               {"reciprocal", {{"antennas", antennas_json(rec.antennas)}, {"alpha", alpha_json(rec.exponents)}}},
               {"equal", equal},
               {"vertices", vertices},
               {"reciprocal_vertices", rec_vertices}});
}

std::string render_split(const JobSpec& spec) {
  const auto ch = channel_of(spec);
  if (!spec.point) usage("split needs --point d1,d2");
  const auto split = split_solver(ch, *spec.point);
  if (spec.format == Format::kSvg) {
    return region_svg(gdof_region(ch), "HK split target in the " + profile_title(ch), {*spec.point});
  }
  if (spec.format != Format::kJson) unsupported(spec);
  const Point2 publics{split.d1c, split.d2c};
  ordered_json constraints = ordered_json::array();
  for (const auto& c : split_constraints(ch, *spec.point)) {
    const Rational lhs = c.plane.c1 * publics.x + c.plane.c2 * publics.y;
    constraints.push_back({{"label", c.label},
                           {"slack", rational_json(c.plane.rhs - lhs)},
                           {"satisfied", c.plane.admits(publics)}});
  }
  return dump({{"antennas", antennas_json(ch.antennas)},
               {"alpha", alpha_json(ch.exponents)},
               {"point", point_json(*spec.point)},
               {"split",
                {{"d1c", rational_json(split.d1c)},
                 {"d1p", rational_json(split.d1p)},
                 {"d2c", rational_json(split.d2c)},
                 {"d2p", rational_json(split.d2p)}}},
               {"constraints", constraints}});
}

ordered_json slope_json(int user, const SlopeEstimate& s) {
  return {{"user", user}, {"slope", s.value}, {"spread", s.spread}, {"min", s.min},
          {"max", s.max}, {"draws", s.draws}, {"seed", s.seed}};
}

std::string render_simulate(const JobSpec& spec) {
  const auto ch = channel_of(spec);
  if (spec.format != Format::kJson) unsupported(spec);
  const SnrLadder ladder(spec.ladder);
  const auto [tin1, tin2] = estimate_tin_gdof(ch, ladder, spec.draws, spec.seed);
  return dump({{"antennas", antennas_json(ch.antennas)},
               {"alpha", alpha_json(ch.exponents)},
               {"seed", spec.seed},
               {"draws", spec.draws},
               {"ladder", ladder.values()},
               {"tin", ordered_json::array({slope_json(1, tin1), slope_json(2, tin2)})},
               {"fundamental_d_sym", rational_json(symmetric_gdof(ch).value)}});
}

std::string render_classify(const JobSpec& spec) {
  if (spec.antennas.size() != 2) usage("classify expects M N");
  if (spec.alpha.size() != 1) usage("classify needs a single --alpha value");
  if (spec.format != Format::kJson) unsupported(spec);
  const int m = spec.antennas[0];
  const int n = spec.antennas[1];
  return dump({{"M", m},
               {"N", n},
               {"alpha", rational_json(spec.alpha[0])},
               {"regime", to_string(classify_regime(m, n, spec.alpha[0]))},
               {"alpha_star", rational_json(alpha_star(m, n))}});
}

void build_app(CLI::App& app, JobSpec& spec, std::string& alpha, std::string& grid, std::string& shape,
               std::string& point, std::string& format, std::string& ladder) {
  app.require_subcommand(1);
  struct Sub {
    Command command;
    const char* help;
  };
  const Sub subs[] = {
      {Command::kRegion, "GDoF region: bounds and vertices"},
      {Command::kSym, "symmetric GDoF"},
      {Command::kSweep, "symmetric GDoF along an exponent template"},
      {Command::kReciprocity, "compare the region with that of the reciprocal channel"},
      {Command::kSplit, "public/private HK split of a region point"},
      {Command::kSimulate, "Monte Carlo TIN slopes at finite SNR"},
      {Command::kClassify, "interference regime of the (M,N,M,N) channel"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(std::string(to_string(s.command)), s.help);
    const Command command = s.command;
    sub->callback([&spec, command] { spec.command = command; });
    const std::size_t count = command == Command::kClassify ? 2 : 4;
    sub->add_option("antennas", spec.antennas, command == Command::kClassify ? "M N" : "M1 N1 M2 N2")
        ->expected(static_cast<int>(count))
        ->required();
    if (command != Command::kSweep) {
      sub->add_option("--alpha", alpha, command == Command::kClassify ? "alpha" : "a11,a12,a21,a22")
          ->required();
    }
    sub->add_option("--format", format, "json, csv or svg");
    sub->add_option("--output,-o", spec.output, "output file (stdout when omitted)");
    if (command == Command::kSweep) {
      sub->add_option("--grid", grid, "lo:hi:step or a comma separated list")->default_str("0:3:1/60");
      sub->add_option("--template", shape, "four affine expressions in a")->default_str("1,a,a,1");
    }
    if (command == Command::kSplit) sub->add_option("--point", point, "d1,d2")->required();
    if (command == Command::kSimulate) {
      sub->add_option("--seed", spec.seed, "random seed");
      sub->add_option("--draws", spec.draws, "channel draws");
      sub->add_option("--ladder", ladder, "comma separated nominal SNRs");
    }
  }
}

JobSpec finish(JobSpec spec, const std::string& alpha, const std::string& grid, const std::string& shape,
               const std::string& point, const std::string& format, const std::string& ladder) {
  if (!alpha.empty()) spec.alpha = parse_rational_list(alpha);
  spec.grid = parse_grid(grid.empty() ? "0:3:1/60" : grid);
  if (!shape.empty()) spec.shape = parse_template(shape);
  if (!point.empty()) {
    auto p = parse_rational_list(point);
    if (p.size() != 2) usage("--point needs two coordinates d1,d2");
    spec.point = Point2{p[0], p[1]};
  }
  if (format.empty()) {
    spec.format = spec.command == Command::kSweep ? Format::kCsv : Format::kJson;
  } else if (format == "json") {
    spec.format = Format::kJson;
  } else if (format == "csv") {
    spec.format = Format::kCsv;
  } else if (format == "svg") {
    spec.format = Format::kSvg;
  } else {
    usage("unknown format '" + format + "'");
  }
  if (!ladder.empty()) {
    spec.ladder.clear();
    for (auto part : split(ladder, ',')) {
      try {
        spec.ladder.push_back(std::stod(std::string(part)));
      } catch (const std::exception&) {
        usage("bad --ladder value '" + std::string(part) + "'");
      }
    }
  }
  return spec;
}

ordered_json error_json(std::string_view code, std::string_view message) {
  return {{"error", {{"code", code}, {"message", message}}}};
}

}  // namespace

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto part : split(text, ',')) out.push_back(rational_arg(part));
  return out;
}

std::vector<Rational> parse_grid(std::string_view text) {
  auto parts = split(text, ':');
  if (parts.size() == 3) {
    return make_grid(rational_arg(parts[0]), rational_arg(parts[1]), rational_arg(parts[2]));
  }
  if (parts.size() != 1) usage("grid must be lo:hi:step or a comma separated list");
  return parse_rational_list(text);
}

ExponentTemplate parse_template(std::string_view text) {
  auto parts = split(text, ',');
  if (parts.size() != 4) usage("template needs four comma separated entries");
  ExponentTemplate shape;
  for (std::size_t k = 0; k < 4; ++k) std::tie(shape.offset[k], shape.slope[k]) = parse_affine(parts[k]);
  return shape;
}

JobSpec parse_command_line(const std::vector<std::string>& args) {
  JobSpec spec;
  std::string alpha, grid, shape, point, format, ladder;
  CLI::App app{"gdof"};
  build_app(app, spec, alpha, grid, shape, point, format, ladder);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    usage(e.what());
  }
  return finish(std::move(spec), alpha, grid, shape, point, format, ladder);
}

std::string render(const JobSpec& spec) {
  switch (spec.command) {
    case Command::kRegion: return render_region(spec);
    case Command::kSym: return render_sym(spec);
    case Command::kSweep: return render_sweep(spec);
    case Command::kReciprocity: return render_reciprocity(spec);
    case Command::kSplit: return render_split(spec);
    case Command::kSimulate: return render_simulate(spec);
    case Command::kClassify: return render_classify(spec);
  }
  usage("unknown command");
}

std::string resolve_output_path(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(std::string(kOutputDirEnv).c_str()); dir && *dir) {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p.string();
}

void write_atomic(const std::string& path, std::string_view content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    f.flush();
    if (!f) throw Error(ErrorCode::kIo, "failed writing " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error(ErrorCode::kIo, "cannot move output into place at " + target.string());
  }
}

int run(const JobSpec& spec, std::ostream& out, std::ostream& err) {
  try {
    const std::string text = render(spec);
    if (spec.output) {
      write_atomic(resolve_output_path(*spec.output), text);
    } else {
      out << text;
    }
    return 0;
  } catch (const Error& e) {
    ordered_json j = error_json(to_string(e.code()), e.what());
    if (const auto* infeasible = dynamic_cast<const InfeasibleSplit*>(&e)) {
      j["error"]["conflict"] = infeasible->conflict();
    }
    err << j.dump() << "\n";
    return e.code() == ErrorCode::kInvalidArgument ? 2 : 1;
  } catch (const std::exception& e) {
    err << error_json("internal", e.what()).dump() << "\n";
    return 1;
  }
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec spec;
  std::string alpha, grid, shape, point, format, ladder;
  CLI::App app{"Exact GDoF regions of the two-user MIMO interference channel", "gdof"};
  build_app(app, spec, alpha, grid, shape, point, format, ladder);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    spec = finish(std::move(spec), alpha, grid, shape, point, format, ladder);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << error_json("invalid_argument", e.what()).dump() << "\n";
    return 2;
  } catch (const Error& e) {
    err << error_json(to_string(e.code()), e.what()).dump() << "\n";
    return 2;
  }
  return run(spec, out, err);
}

}  // namespace gdof::cli
