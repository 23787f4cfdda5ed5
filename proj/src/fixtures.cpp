#include "pastebox/fixtures.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <sstream>
#include <utility>

#include "pastebox/document.hpp"

namespace pastebox {

namespace detail {
// Generated at configure time from data/fixtures.
extern const std::pair<const char*, const char*> kEmbeddedFixtures[];
extern const std::size_t kEmbeddedFixtureCount;
}  // namespace detail

namespace {

std::mutex& overrideMutex() {
  static std::mutex m;
  return m;
}

std::optional<std::string>& overrideDir() {
  static std::optional<std::string> dir = [] {
    const char* env = std::getenv("PASTEBOX_FIXTURE_DIR");
    return env && *env ? std::optional<std::string>(env) : std::nullopt;
  }();
  return dir;
}

std::vector<int> parseInts(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size() || v < 0) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw PasteboxError("bad integer list '" + s + "'");
    }
  }
  return out;
}

std::optional<std::string> argumentsOf(const std::string& name, const std::string& family) {
  if (name.rfind(family + "(", 0) != 0 || name.back() != ')') return std::nullopt;
  return name.substr(family.size() + 1, name.size() - family.size() - 2);
}

}  // namespace

std::vector<std::string> fixtureNames() {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i)
    names.emplace_back(detail::kEmbeddedFixtures[i].first);
  std::sort(names.begin(), names.end());
  return names;
}

void setFixtureDirectory(std::optional<std::string> dir) {
  std::lock_guard lock(overrideMutex());
  overrideDir() = std::move(dir);
}

std::string fixtureText(const std::string& name) {
  std::optional<std::string> dir;
  {
    std::lock_guard lock(overrideMutex());
    dir = overrideDir();
  }
  if (dir) {
    std::filesystem::path p = std::filesystem::path(*dir) / (name + ".jsonl");
    if (std::filesystem::exists(p)) {
      std::ifstream in(p);
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
  }
  for (std::size_t i = 0; i < detail::kEmbeddedFixtureCount; ++i)
    if (name == detail::kEmbeddedFixtures[i].first) return detail::kEmbeddedFixtures[i].second;
  throw PasteboxError("unknown fixture '" + name + "'");
}

BoxdotSpec parseBoxdotSpec(const std::string& text) {
  std::string body = argumentsOf(text, "BOXDOT").value_or(text);
  std::vector<std::string> parts;
  std::stringstream ss(body);
  std::string part;
  while (std::getline(ss, part, ';')) parts.push_back(part);
  if (parts.empty()) throw PasteboxError("empty boxdot spec");
  BoxdotSpec spec;
  spec.extents = parseInts(parts[0]);
  if (parts.size() != spec.extents.size() + 1)
    throw PasteboxError("boxdot spec needs one window pair per direction");
  for (std::size_t a = 1; a < parts.size(); ++a) {
    auto w = parseInts(parts[a]);
    if (w.size() != 2) throw PasteboxError("window pair must have two entries");
    spec.window.emplace_back(w[0], w[1]);
  }
  spec.validate();
  return spec;
}

Shape fixture(const std::string& name) {
  if (auto args = argumentsOf(name, "SQ")) return standardGrid(parseInts(*args));
  if (argumentsOf(name, "BOXDOT")) return boxdotFamily(parseBoxdotSpec(name)).boxdot;
  return parseShape(fixtureText(name));
}

}  // namespace pastebox
