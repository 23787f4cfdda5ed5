// pastebox: command-line front end for the pasting-shape library.
//
// Shape arguments are document paths, or @NAME for a shipped fixture
// (including @SQ(1,2) and @BOXDOT(...)).
//
// Exit codes: 0 yes/pass, 1 no/fail, 2 inconclusive (budget exhausted),
// 3 usage or input error.

#include <filesystem>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pastebox/document.hpp"
#include "pastebox/fixtures.hpp"
#include "pastebox/nerve.hpp"
#include "pastebox/suite.hpp"
#include "pastebox/toolkit.hpp"

using namespace pastebox;
using nlohmann::json;

namespace {

constexpr int kOutputSchema = 1;

enum Exit { kYes = 0, kNo = 1, kInconclusive = 2, kInputError = 3 };

Shape loadShape(const std::string& arg) {
  if (!arg.empty() && arg[0] == '@') return fixture(arg.substr(1));
  return loadShapeFile(arg);
}

json boxJson(const Box& b) { return json::array({b.lo.coords(), b.hi.coords()}); }

json witnessJson(const GridWitness& w) {
  return {{"lines", w.lines}, {"closed", w.closed}, {"corners", boxJson(w.corners())}};
}

json decompositionJson(const Decomposition& d) {
  json j = {{"window", boxJson(*d.shape.boundingBox())}, {"leaf", d.leaf}, {"height", d.height()}};
  if (!d.leaf) {
    j["base"] = witnessJson(d.baseWitness);
    j["pieces"] = json::array();
    for (const auto& p : d.pieces) j["pieces"].push_back(decompositionJson(p));
  }
  return j;
}

json filtrationJson(const Filtration& f) {
  json j = {{"base", witnessJson(f.baseWitness)}, {"steps", json::array()}};
  for (const auto& s : f.steps) j["steps"].push_back(witnessJson(s.witness));
  return j;
}

int verdictExit(Verdict v) { return v == Verdict::Yes ? kYes : v == Verdict::No ? kNo : kInconclusive; }

void emit(const json& j, bool asJson, const std::string& text) {
  if (asJson) {
    json out = j;
    out["schema"] = kOutputSchema;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << text;
  }
}

std::vector<int> parseLevel(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
  return out;
}

std::vector<std::vector<int>> levelsWithSumAtMost(int d, int maxSum) {
  std::vector<std::vector<int>> out;
  std::vector<int> n(static_cast<std::size_t>(d), 0);
  std::function<void(int, int)> rec = [&](int a, int left) {
    if (a == d) {
      out.push_back(n);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      n[static_cast<std::size_t>(a)] = v;
      rec(a + 1, left - v);
    }
  };
  rec(0, maxSum);
  return out;
}

int runCheck(const std::string& file, const std::string& mode, bool asJson) {
  const Shape s = loadShape(file);
  json j = {{"command", "check"}, {"property", mode}, {"boxes", s.size()}};
  std::ostringstream text;
  int code = kNo;
  if (mode == "grid") {
    const auto w = detectGrid(s);
    j["verdict"] = w ? "yes" : "no";
    if (w) {
      j["certificate"] = witnessJson(*w);
      text << (w->closed ? "closed" : "open") << " grid, lines " << json(w->lines).dump() << "\n";
    } else {
      text << "not a grid\n";
    }
    code = w ? kYes : kNo;
  } else if (mode == "admittable") {
    AdmittabilityEngine engine;
    const auto d = engine.decomposition(s);
    j["verdict"] = toString(d.verdict);
    j["nodes_visited"] = engine.nodesVisited();
    if (d.value) {
      j["certificate"] = {{"decomposition", decompositionJson(*d.value)}, {"filtration", filtrationJson(flatten(*d.value))}};
      text << "admittable, height " << d.value->height() << "\n" << j["certificate"].dump(2) << "\n";
    } else {
      text << (d.verdict == Verdict::No ? "not admittable\n" : "inconclusive: search budget exhausted\n");
    }
    code = verdictExit(d.verdict);
  } else {
    AdmittabilityEngine engine;
    const auto r = mode == "composable" ? isComposable(s, engine) : isLocallyComposable(s, engine);
    j["verdict"] = toString(r.verdict);
    if (!r.reason.empty()) j["reason"] = r.reason;
    if (r.failingWindow) j["failing_window"] = boxJson(*r.failingWindow);
    if (r.verdict == Verdict::Yes && mode == "composable") {
      const auto d = engine.decomposition(s);
      if (d.value) j["certificate"] = {{"decomposition", decompositionJson(*d.value)}};
    }
    text << mode << ": " << toString(r.verdict) << (r.reason.empty() ? "" : " (" + r.reason + ")") << "\n";
    code = verdictExit(r.verdict);
  }
  emit(j, asJson, text.str());
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pasting shapes: closure, structure deciders, vertebrae and nerves"};
  app.require_subcommand(1);
  bool asJson = false;
  app.add_flag("--json", asJson, "Machine-readable output");

  std::string file;
  int exitCode = kYes;

  auto* check = app.add_subcommand("check", "Decide a structural property");
  check->add_option("file", file, "Shape document or @FIXTURE")->required();
  bool fGrid = false, fAdm = false, fComp = false, fLocal = false;
  check->add_flag("--grid", fGrid);
  check->add_flag("--admittable", fAdm);
  check->add_flag("--composable", fComp);
  check->add_flag("--locally-composable", fLocal);
  check->add_flag("--json", asJson);

  auto* vert = app.add_subcommand("vertebrae", "List k-vertebrae");
  int k = -1;
  vert->add_option("file", file)->required();
  vert->add_option("--k", k, "Dimension (default: the ambient dimension)");
  vert->add_flag("--json", asJson);

  auto* nerve = app.add_subcommand("nerve", "Enumerate a nerve level");
  std::string level;
  bool count = false, list = false, serial = false;
  nerve->add_option("file", file)->required();
  nerve->add_option("--level", level, "n1,n2,...")->required();
  nerve->add_flag("--count", count);
  nerve->add_flag("--list", list);
  nerve->add_flag("--serial", serial, "Use the single-threaded reference enumeration");
  nerve->add_flag("--json", asJson);

  auto* segal = app.add_subcommand("segal", "Check Segal maps up to a total level");
  int maxLevel = 3;
  segal->add_option("file", file)->required();
  segal->add_option("--max-level", maxLevel, "Largest n1+...+nd");
  segal->add_flag("--json", asJson);

  auto* cover = app.add_subcommand("cover", "Check a covering");
  std::vector<std::string> parts;
  cover->add_option("file", file)->required();
  cover->add_option("--parts", parts, "Part documents")->delimiter(',')->required();
  cover->add_flag("--json", asJson);

  auto* paste = app.add_subcommand("paste-verify", "Compare a shape with the union of its vertebrae");
  paste->add_option("file", file)->required();
  paste->add_flag("--json", asJson);

  auto* render = app.add_subcommand("render", "Draw a shape as SVG");
  std::string out;
  render->add_option("file", file)->required();
  render->add_option("-o,--output", out, "Output path (default: stdout)");

  auto* suite = app.add_subcommand("suite", "Run the acceptance checks");
  SuiteConfig config;
  std::vector<std::string> skip;
  std::string fixtureDir;
  suite->add_option("--seed", config.seed);
  suite->add_option("--skip", skip, "Check names to skip")->delimiter(',');
  suite->add_flag("--quick", config.quick, "Skip checks tagged slow");
  suite->add_option("--fixture-dir", fixtureDir, "Directory of fixture overrides");
  suite->add_flag("--json", asJson);

  auto* fix = app.add_subcommand("fixture", "Write a fixture as an explicit document");
  std::string name;
  fix->add_option("name", name, "Fixture name, e.g. EX_I or SQ(2,1)");
  fix->add_option("-o,--output", out, "Output path (default: stdout)");
  bool listFixtures = false;
  fix->add_flag("--list", listFixtures, "List shipped fixture names instead");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  try {
    if (*check) {
      const int modes = fGrid + fAdm + fComp + fLocal;
      if (modes > 1) throw PasteboxError("choose one of --grid, --admittable, --composable, --locally-composable");
      const std::string mode = fGrid ? "grid" : fComp ? "composable" : fLocal ? "locally-composable" : "admittable";
      exitCode = runCheck(file, mode, asJson);
    } else if (*vert) {
      const Shape s = loadShape(file);
      if (k < 0) k = s.dim();
      json j = {{"command", "vertebrae"}, {"k", k}, {"vertebrae", json::array()}};
      std::ostringstream text;
      for (const auto& v : enumerateVertebrae(s, k)) {
        j["vertebrae"].push_back({{"window", boxJson(v.witness.window)},
                                  {"closed", v.witness.closed},
                                  {"open", v.witness.open},
                                  {"boxes", v.shape.size()}});
        text << toString(v.witness.window) << (v.witness.closed ? " closed" : "") << (v.witness.open ? " open" : "")
             << "\n";
      }
      emit(j, asJson, text.str());
    } else if (*nerve) {
      const Shape s = loadShape(file);
      const auto n = parseLevel(level);
      if (static_cast<int>(n.size()) != s.dim()) throw PasteboxError("level must have one entry per direction");
      const NerveLevel l = serial ? nerveLevelSerial(s, n) : nerveLevel(s, n);
      json j = {{"command", "nerve"}, {"level", n}, {"count", l.size()}, {"non_degenerate", nonDegenerateCount(l)}};
      std::ostringstream text;
      text << l.size() << "\n";
      if (list && !count) {
        j["simplices"] = json::array();
        for (const auto& x : l.simplices) {
          j["simplices"].push_back(x.maps);
          text << toString(x) << "\n";
        }
      }
      emit(j, asJson, text.str());
    } else if (*segal) {
      NerveCache cache(loadShape(file));
      json j = {{"command", "segal"}, {"max_level", maxLevel}, {"failures", json::array()}};
      int checked = 0;
      for (const auto& n : levelsWithSumAtMost(cache.shape().dim(), maxLevel)) {
        ++checked;
        if (!segalCheck(cache, n)) j["failures"].push_back(n);
      }
      j["levels_checked"] = checked;
      j["verdict"] = j["failures"].empty() ? "yes" : "no";
      emit(j, asJson, std::string(j["failures"].empty() ? "Segal maps bijective" : "Segal check failed") + " on " +
                          std::to_string(checked) + " levels\n");
      exitCode = j["failures"].empty() ? kYes : kNo;
    } else if (*cover) {
      const Shape s = loadShape(file);
      std::vector<Shape> shapes;
      for (const auto& p : parts) shapes.push_back(loadShape(p));
      const auto r = checkCovering(s, shapes);
      json j = {{"command", "cover"}, {"verdict", r.verdict ? "yes" : "no"}, {"violations", json::array()}};
      std::ostringstream text;
      text << (r.verdict ? "covering\n" : "not a covering\n");
      for (const auto& v : r.violations) {
        j["violations"].push_back({{"condition", v.condition}, {"part", v.part}, {"window", boxJson(v.window)}});
        text << "  condition " << v.condition << " at " << toString(v.window)
             << (v.part >= 0 ? " in part " + std::to_string(v.part) : "") << "\n";
      }
      emit(j, asJson, text.str());
      exitCode = r.verdict ? kYes : kNo;
    } else if (*paste) {
      const auto r = verifyVertebraUnion(loadShape(file));
      json j = {{"command", "paste-verify"}, {"verdict", r.holds ? "yes" : "no"}, {"mode", r.mode}, {"residual", json::array()}};
      std::ostringstream text;
      text << (r.holds ? "equals" : "differs from") << " the union of its " << r.mode << "\n";
      for (const Box& b : r.residual) {
        j["residual"].push_back(boxJson(b));
        text << "  missing " << toString(b) << "\n";
      }
      emit(j, asJson, text.str());
      exitCode = r.holds ? kYes : kNo;
    } else if (*render) {
      const std::string svg = renderSvg(loadShape(file));
      if (out.empty())
        std::cout << svg;
      else
        writeTextFile(out, svg);
    } else if (*suite) {
      config.skip.insert(skip.begin(), skip.end());
      if (!fixtureDir.empty()) config.fixtureDir = fixtureDir;
      const auto report = runSuite(config);
      if (asJson) {
        std::cout << report.toJson().dump(2) << "\n";
      } else {
        for (const auto& c : report.checks)
          std::cout << toString(c.status) << "  " << c.name << "  " << c.elapsedMs << " ms\n";
      }
      exitCode = report.passed() ? kYes : kNo;
    } else if (*fix) {
      if (listFixtures) {
        for (const auto& n : fixtureNames()) std::cout << n << "\n";
      } else if (name.empty()) {
        throw PasteboxError("fixture: give a name or --list");
      } else {
        const std::string text = serializeShape(fixture(name), name);
        if (out.empty())
          std::cout << text;
        else
          writeTextFile(out, text);
      }
    }
  } catch (const PasteboxError& e) {
    std::cerr << "pastebox: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "pastebox: " << e.what() << "\n";
    return kInputError;
  }
  return exitCode;
}
