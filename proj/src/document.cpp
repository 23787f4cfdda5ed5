#include "pastebox/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace pastebox {

using nlohmann::json;

const char* toString(DocumentMode m) {
  switch (m) {
    case DocumentMode::Generators: return "generators";
    case DocumentMode::Explicit: return "explicit";
    case DocumentMode::Fill2d: return "fill2d";
  }
  return "?";
}

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw PasteboxError("line " + std::to_string(line) + ": " + what);
}

Vertex readVertex(const json& j, int dim, int line) {
  if (!j.is_array() || static_cast<int>(j.size()) != dim)
    fail(line, "expected a coordinate array of length " + std::to_string(dim));
  std::vector<Coord> c;
  for (const json& v : j) {
    if (!v.is_number_integer() || v.get<long long>() < 0) fail(line, "coordinates must be natural numbers");
    c.push_back(v.get<Coord>());
  }
  return Vertex(c);
}

DocumentMode readMode(const std::string& s, int line) {
  if (s == "generators") return DocumentMode::Generators;
  if (s == "explicit") return DocumentMode::Explicit;
  if (s == "fill2d") return DocumentMode::Fill2d;
  fail(line, "unknown mode '" + s + "'");
}

}  // namespace

ShapeDocument parseDocument(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineNo = 0;
  bool haveHeader = false;
  ShapeDocument doc;
  while (std::getline(in, raw)) {
    ++lineNo;
    if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(raw);
    } catch (const json::parse_error& e) {
      fail(lineNo, std::string("malformed JSON: ") + e.what());
    }
    if (!haveHeader) {
      if (!j.is_object()) fail(lineNo, "expected header object");
      if (j.value("schema", 0) != kDocumentSchema) fail(lineNo, "unsupported schema");
      if (!j.contains("dim") || !j["dim"].is_number_integer()) fail(lineNo, "header lacks integer dim");
      doc.dim = j["dim"].get<int>();
      if (doc.dim < 0 || doc.dim > kMaxDim) fail(lineNo, "dim out of range");
      if (j.contains("name")) doc.name = j["name"].get<std::string>();
      doc.mode = readMode(j.value("mode", std::string("generators")), lineNo);
      if (doc.mode == DocumentMode::Fill2d && doc.dim != 2) fail(lineNo, "fill2d requires dim 2");
      haveHeader = true;
      continue;
    }
    if (!j.is_array() || j.empty() || j.size() > 2) fail(lineNo, "expected [[lo],[hi]] or [[v]]");
    Vertex lo = readVertex(j[0], doc.dim, lineNo);
    Vertex hi = j.size() == 2 ? readVertex(j[1], doc.dim, lineNo) : lo;
    if (!lo.leq(hi)) fail(lineNo, "lo exceeds hi");
    doc.boxes.emplace_back(lo, hi);
  }
  if (!haveHeader) throw PasteboxError("empty document");
  return doc;
}

Shape fill2d(const Shape& shape) {
  if (shape.dim() != 2) throw PasteboxError("fill2d requires dim 2");
  Shape cur = shape;
  while (true) {
    std::vector<Box> added;
    for (const Box& h : cur.boxesOfDimension(1)) {
      if (!h.strictIn(0)) continue;
      for (const Box& v : cur.boxesOfDimension(1)) {
        if (!v.strictIn(1) || v.lo != h.lo) continue;
        Box sq(h.lo, Vertex{h.hi[0], v.hi[1]});
        if (cur.contains(sq)) continue;
        bool facetsPresent = true;
        for (const Box& f : facets(sq)) facetsPresent = facetsPresent && cur.contains(f);
        if (facetsPresent) added.push_back(sq);
      }
    }
    if (added.empty()) return cur;
    std::vector<Box> all(cur.boxes().begin(), cur.boxes().end());
    all.insert(all.end(), added.begin(), added.end());
    cur = close(2, all);
  }
}

Shape shapeFromDocument(const ShapeDocument& doc) {
  switch (doc.mode) {
    case DocumentMode::Explicit: return Shape::fromClosedBoxes(doc.dim, doc.boxes);
    case DocumentMode::Generators: return close(doc.dim, doc.boxes);
    case DocumentMode::Fill2d: return fill2d(close(doc.dim, doc.boxes));
  }
  throw PasteboxError("unknown mode");
}

Shape parseShape(std::string_view text) { return shapeFromDocument(parseDocument(text)); }

std::string serializeShape(const Shape& shape, const std::optional<std::string>& name) {
  json header = {{"schema", kDocumentSchema}, {"dim", shape.dim()}};
  if (name) header["name"] = *name;
  header["mode"] = "explicit";
  std::string out = header.dump() + "\n";
  for (const Box& b : shape.boxes()) {
    json j = json::array();
    j.push_back(b.lo.coords());
    if (b.lo != b.hi) j.push_back(b.hi.coords());
    out += j.dump() + "\n";
  }
  return out;
}

Shape loadShapeFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PasteboxError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parseShape(ss.str());
  } catch (const PasteboxError& e) {
    throw PasteboxError(path + ": " + e.what());
  }
}

void writeTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw PasteboxError("cannot write " + path);
  out << text;
}

}  // namespace pastebox
