#pragma once

// Formal homotopy-type expressions: disjoint unions of groups of path
// components, each a product of named factors.

#include <string>
#include <vector>

namespace rhmap {

enum class FactorKind { EilenbergMacLane, Sphere, Heisenberg, NilmanifoldY, SpaceX, Point, Unrecognized };

struct Factor {
  FactorKind kind = FactorKind::Point;
  int degree = 0;        // for spheres and K(Q, j)
  int multiplicity = 1;
  std::string model;     // serialized minimal model, Unrecognized only

  friend bool operator==(const Factor&, const Factor&) = default;
};

enum class ComponentCount { One, CountablyMany };

struct ComponentGroup {
  ComponentCount count = ComponentCount::One;
  std::vector<Factor> factors;  // empty product is a point

  friend bool operator==(const ComponentGroup&, const ComponentGroup&) = default;
};

struct HomotopyTypeDescriptor {
  std::vector<ComponentGroup> groups;
  std::vector<std::string> notes;

  friend bool operator==(const HomotopyTypeDescriptor&, const HomotopyTypeDescriptor&) = default;
};

enum class FactorOrder { Ascending, Descending };

struct RenderOptions {
  bool unicode = false;
  FactorOrder order = FactorOrder::Ascending;
};

/// Merges equal factors, drops points from nonempty products, sorts.
std::vector<Factor> normalize_factors(std::vector<Factor> factors, FactorOrder order = FactorOrder::Ascending);

std::string render(const Factor& f, const RenderOptions& opts = {});
std::string render(const ComponentGroup& g, const RenderOptions& opts = {}, bool parenthesize = false);
std::string render(const HomotopyTypeDescriptor& d, const RenderOptions& opts = {});

/// Inverse of render for both ASCII and unicode output. Throws
/// Error("bad-descriptor").
HomotopyTypeDescriptor parse_descriptor(const std::string& text);

/// Comparison up to notation: odd spheres and K(Q, odd) agree (both are
/// the same rational space), factor order is irrelevant, notes are ignored.
bool equivalent(const HomotopyTypeDescriptor& a, const HomotopyTypeDescriptor& b);

std::string kind_name(FactorKind k);

}  // namespace rhmap
