#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pastebox/shape.hpp"

namespace pastebox {

enum class DocumentMode { Generators, Explicit, Fill2d };

/// Line-based JSON shape document. The first line is a header object
///   {"schema":1,"dim":2,"name":"PW","mode":"generators"}
/// and every following non-blank line holds one box [[lo...],[hi...]], or
/// [[v...]] for a vertex.
struct ShapeDocument {
  int dim = 0;
  std::optional<std::string> name;
  DocumentMode mode = DocumentMode::Generators;
  std::vector<Box> boxes;
};

inline constexpr int kDocumentSchema = 1;

const char* toString(DocumentMode m);

/// Throws PasteboxError with a line number on malformed input.
ShapeDocument parseDocument(std::string_view text);

/// Generators and fill2d documents are closed; explicit documents must
/// already be closed and the first missing face or join is reported.
Shape shapeFromDocument(const ShapeDocument& doc);
Shape parseShape(std::string_view text);

/// Explicit-mode document listing every box in canonical order.
std::string serializeShape(const Shape& shape, const std::optional<std::string>& name = std::nullopt);

/// Repeatedly adds each non-degenerate 2-box whose four edges are present,
/// re-closing until nothing changes. Requires dim 2.
Shape fill2d(const Shape& shape);

Shape loadShapeFile(const std::string& path);
void writeTextFile(const std::string& path, const std::string& text);

}  // namespace pastebox
