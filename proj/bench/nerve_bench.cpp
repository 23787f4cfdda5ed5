// Times the OpenMP nerve enumeration against the serial reference and
// checks that both produce the same simplices.

#include <chrono>
#include <iomanip>
#include <iostream>

#include <omp.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "pastebox/fixtures.hpp"
#include "pastebox/nerve.hpp"

using namespace pastebox;

namespace {

struct Case {
  std::string shape;
  std::vector<int> level;
};

template <class F>
double bestOfMs(int repeat, F&& f) {
  double best = 1e300;
  for (int r = 0; r < repeat; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial vs OpenMP nerve enumeration"};
  int repeat = 3;
  bool quick = false;
  bool asJson = false;
  app.add_option("--repeat", repeat, "Timed runs per case; the best is reported")->check(CLI::PositiveNumber);
  app.add_flag("--quick", quick, "Small cases only");
  app.add_flag("--json", asJson);
  CLI11_PARSE(app, argc, argv);

  std::vector<Case> cases{{"EX_I", {2, 2}}, {"PW", {2, 2}}, {"EX_J", {1, 1, 1}}, {"SQ(4,4)", {2, 2}}};
  if (!quick) {
    cases.push_back({"EX_DECOMP", {3, 3}});
    cases.push_back({"SQ(6,6)", {3, 3}});
    cases.push_back({"EX_J", {2, 2, 1}});
  }

  nlohmann::json out = {{"schema", 1}, {"threads", omp_get_max_threads()}, {"cases", nlohmann::json::array()}};
  bool agree = true;
  if (!asJson)
    std::cout << std::left << std::setw(12) << "shape" << std::setw(10) << "level" << std::right << std::setw(10)
              << "simplices" << std::setw(12) << "serial ms" << std::setw(12) << "openmp ms" << std::setw(9)
              << "speedup" << "\n";
  for (const Case& c : cases) {
    const Shape s = fixture(c.shape);
    NerveLevel serial, parallel;
    const double ts = bestOfMs(repeat, [&] { serial = nerveLevelSerial(s, c.level); });
    const double tp = bestOfMs(repeat, [&] { parallel = nerveLevel(s, c.level); });
    const bool same = serial.simplices == parallel.simplices;
    agree = agree && same;
    std::string level;
    for (int n : c.level) level += (level.empty() ? "" : ",") + std::to_string(n);
    out["cases"].push_back({{"shape", c.shape}, {"level", c.level}, {"simplices", serial.size()}, {"serial_ms", ts},
                            {"openmp_ms", tp}, {"agree", same}});
    if (!asJson)
      std::cout << std::left << std::setw(12) << c.shape << std::setw(10) << level << std::right << std::setw(10)
                << serial.size() << std::fixed << std::setprecision(2) << std::setw(12) << ts << std::setw(12) << tp
                << std::setw(8) << ts / tp << "x" << (same ? "" : "  MISMATCH") << "\n";
  }
  if (asJson) std::cout << out.dump(2) << "\n";
  return agree ? 0 : 1;
}
