// surfhh: Hochschild cohomology of Jacobian algebras of triangulated surfaces.
//
//   surfhh analyze <input> [--nmax N] [--char P] [--method M] [--format text|json]
//   surfhh crosscheck [inputs...] [--polygons A..B] [--nmax N] [--threads T]
//   surfhh ag-compare <input> <input> [--nmax N] [--format text|json]
//   surfhh generate --polygon N --out DIR
//
// An input is a triangulation file or the name of a shipped fixture; the
// word "fixtures" stands for all of them. Exit codes: 0 ok, 2 invalid
// input, 3 methods disagree.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "surfhh/ag_invariant.hpp"
#include "surfhh/corpus.hpp"
#include "surfhh/io.hpp"
#include "surfhh/linalg.hpp"
#include "surfhh/report.hpp"

using namespace surfhh;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 2;
constexpr int kExitDisagree = 3;

struct InvalidInput : std::runtime_error {
  using std::runtime_error::runtime_error;
};

TriangulatedSurface load_surface(const TriangulationInput& input, const std::string& origin) {
  try {
    return build_surface(input);
  } catch (const SurfaceError& e) {
    throw InvalidInput(origin + ": " + to_string(e.kind()) + ": " + e.what());
  }
}

std::vector<TriangulatedSurface> resolve(const std::string& arg) {
  std::vector<TriangulatedSurface> out;
  if (std::filesystem::exists(arg)) {
    try {
      out.push_back(load_surface(load_triangulation(arg), arg));
    } catch (const ParseError& e) {
      throw InvalidInput(arg + ": " + e.what());
    }
    return out;
  }
  try {
    if (arg == "fixtures") {
      for (const auto& f : builtin_fixtures()) out.push_back(build_surface(f.input));
      return out;
    }
    if (const auto* f = find_fixture(arg)) {
      out.push_back(build_surface(f->input));
      return out;
    }
  } catch (const FixtureCorrupt& e) {
    throw InvalidInput(e.what());
  }
  throw InvalidInput(arg + ": no such file or shipped fixture");
}

TriangulatedSurface resolve_one(const std::string& arg) {
  auto all = resolve(arg);
  if (all.size() != 1) throw InvalidInput(arg + ": expected a single triangulation");
  return std::move(all.front());
}

int run_analyze(const std::string& input, int nmax, int characteristic, const std::string& method,
                const std::string& format) {
  std::vector<Method> methods = all_methods();
  if (method != "all") methods = {*parse_method(method)};
  const auto report = analyze(resolve_one(input), characteristic, nmax, methods);
  if (format == "json")
    std::cout << render_json(report).dump(2) << '\n';
  else
    std::cout << render_text(report);
  return report.agree ? kExitOk : kExitDisagree;
}

int run_crosscheck(const std::vector<std::string>& inputs, const std::string& polygons, int nmax, unsigned threads) {
  std::vector<TriangulatedSurface> surfaces;
  if (!polygons.empty()) {
    static const std::regex range(R"((\d+)\.\.(\d+))");
    std::smatch m;
    if (!std::regex_match(polygons, m, range)) throw InvalidInput("--polygons expects A..B");
    const int lo = std::stoi(m[1]), hi = std::stoi(m[2]);
    if (lo < 3 || hi < lo) throw InvalidInput("--polygons needs 3 <= A <= B");
    for (int n = lo; n <= hi; ++n)
      for (const auto& t : generate_polygon_triangulations(n)) surfaces.push_back(load_surface(t, t.name));
  }
  for (const auto& arg : inputs)
    for (auto& s : resolve(arg)) surfaces.push_back(std::move(s));
  if (inputs.empty() && polygons.empty())
    for (auto& s : resolve("fixtures")) surfaces.push_back(std::move(s));

  const auto rows = crosscheck(surfaces, nmax, threads);
  std::size_t width = 8;
  for (const auto& r : rows) width = std::max(width, r.name.size());
  std::cout << std::string("instance").append(width - 8 + 2, ' ') << "char0  char2\n";
  std::size_t failed = 0;
  const CrosscheckRow* first_failure = nullptr;
  for (const auto& r : rows) {
    std::cout << r.name << std::string(width - r.name.size() + 2, ' ') << (r.pass_char0 ? "PASS " : "FAIL ")
              << "  " << (r.pass_char2 ? "PASS" : "FAIL") << '\n';
    if (!r.pass()) {
      ++failed;
      if (!first_failure) first_failure = &r;
    }
  }
  std::cout << rows.size() << " instances, " << rows.size() - failed << " passed, " << failed << " failed\n";
  if (first_failure) {
    std::cout << "\nfirst failure:\n" << first_failure->detail;
    return kExitDisagree;
  }
  return kExitOk;
}

int run_ag_compare(const std::string& a, const std::string& b, int nmax, const std::string& format) {
  const auto sa = resolve_one(a), sb = resolve_one(b);
  const auto cmp = compare_ag(ag_invariant(sa), ag_invariant(sb));
  std::vector<Report> reports;
  for (int ch : {0, 2}) {
    reports.push_back(analyze(sa, ch, nmax));
    reports.push_back(analyze(sb, ch, nmax));
  }
  bool agree = true;
  for (const auto& r : reports) agree = agree && r.agree;
  const bool same_hh = reports[0].tables.front().table.same_dims(reports[1].tables.front().table) &&
                       reports[2].tables.front().table.same_dims(reports[3].tables.front().table);

  if (format == "json") {
    nlohmann::json diffs = nlohmann::json::array();
    for (const auto& d : cmp.differences) diffs.push_back({d.key.first, d.key.second, d.left, d.right});
    nlohmann::json doc{{"left", render_json(reports[0])},
                       {"right", render_json(reports[1])},
                       {"left_char2", render_json(reports[2])},
                       {"right_char2", render_json(reports[3])},
                       {"hh_identical", same_hh},
                       {"ag_equal", cmp.equal},
                       {"differences", diffs},
                       {"verdict", cmp.verdict}};
    if (!cmp.equal)
      doc["witness"] = {cmp.witness.key.first, cmp.witness.key.second, cmp.witness.left, cmp.witness.right};
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto* r : {&reports[0], &reports[1]}) {
      std::cout << "AG invariant of " << r->name << ":\n";
      std::istringstream lines(r->ag.to_lines());
      for (std::string line; std::getline(lines, line);) std::cout << "  " << line << '\n';
    }
    for (const auto& r : reports)
      std::cout << "HH " << r.name << " char " << r.characteristic << ": " << format_dims(r.tables.front().table.dims)
                << '\n';
    std::cout << "HH tables: " << (same_hh ? "identical" : "different") << '\n';
    for (const auto& d : cmp.differences)
      std::cout << "phi(" << d.key.first << ',' << d.key.second << "): " << d.left << " vs " << d.right << '\n';
    std::cout << "verdict: " << cmp.verdict;
    if (!cmp.equal)
      std::cout << " (witness (" << cmp.witness.key.first << ',' << cmp.witness.key.second
                << "): " << cmp.witness.left << " vs " << cmp.witness.right << ')';
    std::cout << '\n';
  }
  return agree ? kExitOk : kExitDisagree;
}

int run_generate(int n, const std::string& out) {
  const auto all = generate_polygon_triangulations(n);
  std::filesystem::create_directories(out);
  for (const auto& t : all) {
    const auto path = std::filesystem::path(out) / (t.name + ".json");
    std::ofstream file(path);
    file << to_json(t).dump(2) << '\n';
    if (!file) throw std::runtime_error("cannot write " + path.string());
  }
  std::cout << "wrote " << all.size() << " triangulations to " << out << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hochschild cohomology of Jacobian algebras of triangulated unpunctured surfaces"};
  app.require_subcommand(1);

  int nmax = kDefaultNmax;
  int characteristic = 0;
  std::string method = "all", format = "text";
  auto nmax_check = CLI::Range(1, 64);
  auto char_check = CLI::Validator(
      [](std::string& s) -> std::string {
        try {
          FieldSpec(std::stoi(s));
        } catch (const std::exception&) {
          return "characteristic must be 0 or a prime";
        }
        return {};
      },
      "0|PRIME");

  auto* analyze_cmd = app.add_subcommand("analyze", "Report one triangulation");
  std::string input;
  analyze_cmd->add_option("input", input, "Triangulation file or fixture name")->required();
  analyze_cmd->add_option("--nmax", nmax, "Highest degree")->check(nmax_check);
  analyze_cmd->add_option("--char", characteristic, "Field characteristic")->check(char_check);
  analyze_cmd->add_option("--method", method, "Method")
      ->check(CLI::IsMember({"geometric", "rr", "oracle", "ladkani", "all"}));
  analyze_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* cross_cmd = app.add_subcommand("crosscheck", "Compare all methods in char 0 and 2");
  std::vector<std::string> inputs;
  std::string polygons;
  unsigned threads = 0;
  cross_cmd->add_option("inputs", inputs, "Files, fixture names, or 'fixtures'");
  cross_cmd->add_option("--polygons", polygons, "Polygon range A..B");
  cross_cmd->add_option("--nmax", nmax, "Highest degree")->check(nmax_check);
  cross_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  auto* ag_cmd = app.add_subcommand("ag-compare", "Compare AG invariants of two triangulations");
  std::string left, right;
  ag_cmd->add_option("left", left, "Triangulation file or fixture name")->required();
  ag_cmd->add_option("right", right, "Triangulation file or fixture name")->required();
  ag_cmd->add_option("--nmax", nmax, "Highest degree")->check(nmax_check);
  ag_cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));

  auto* gen_cmd = app.add_subcommand("generate", "Write all triangulations of a polygon");
  int polygon = 0;
  std::string out_dir;
  gen_cmd->add_option("--polygon", polygon, "Number of vertices")->required()->check(CLI::Range(3, 14));
  gen_cmd->add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*analyze_cmd) return run_analyze(input, nmax, characteristic, method, format);
    if (*cross_cmd) return run_crosscheck(inputs, polygons, nmax, threads);
    if (*ag_cmd) return run_ag_compare(left, right, nmax, format);
    if (*gen_cmd) return run_generate(polygon, out_dir);
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return kExitOk;
}
