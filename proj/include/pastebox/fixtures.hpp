#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pastebox/grid.hpp"

namespace pastebox {

/// Names of the shipped fixture documents, sorted.
std::vector<std::string> fixtureNames();

/// Document text of a shipped fixture. A file <name>.jsonl in the override
/// directory (see setFixtureDirectory, or PASTEBOX_FIXTURE_DIR) takes
/// precedence over the embedded copy.
std::string fixtureText(const std::string& name);

void setFixtureDirectory(std::optional<std::string> dir);

/// A shipped fixture, or one of the parametrised families
///   SQ(n1,...,nd)             the standard grid
///   BOXDOT(n1,...;a0,a1;...)  the complement-of-window shape for the spec
/// Throws on an unknown name.
Shape fixture(const std::string& name);

/// Parses "BOXDOT(6,4;2,5;1,3)" or the bare "6,4;2,5;1,3".
BoxdotSpec parseBoxdotSpec(const std::string& text);

}  // namespace pastebox
