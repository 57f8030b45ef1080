#include "rhmap/descriptor.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <optional>
#include <tuple>

#include "rhmap/error.hpp"

namespace rhmap {

namespace {

const std::array<const char*, 10> kSuperscripts = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(int n) {
  std::string out;
  for (char c : std::to_string(n)) out += c == '-' ? "⁻" : kSuperscripts[static_cast<std::size_t>(c - '0')];
  return out;
}

int sort_degree(const Factor& f) {
  switch (f.kind) {
    case FactorKind::Sphere:
    case FactorKind::EilenbergMacLane: return f.degree;
    case FactorKind::Heisenberg:
    case FactorKind::NilmanifoldY:
    case FactorKind::SpaceX: return 1;
    case FactorKind::Point: return 0;
    case FactorKind::Unrecognized: return 1 << 20;
  }
  return 0;
}

int kind_rank(FactorKind k) {
  switch (k) {
    case FactorKind::Sphere: return 0;
    case FactorKind::EilenbergMacLane: return 1;
    case FactorKind::Heisenberg: return 2;
    case FactorKind::NilmanifoldY: return 3;
    case FactorKind::SpaceX: return 4;
    case FactorKind::Point: return 5;
    case FactorKind::Unrecognized: return 6;
  }
  return 6;
}

std::string power(const std::string& base, int k, bool unicode, bool wrap) {
  if (k == 1) return base;
  std::string b = wrap ? "(" + base + ")" : base;
  return unicode ? b + superscript(k) : b + "^" + std::to_string(k);
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  HomotopyTypeDescriptor parse() {
    HomotopyTypeDescriptor d;
    d.groups.push_back(group());
    while (true) {
      skip();
      if (at_end()) break;
      if (!eat("⊔") && !eat("|_|")) fail("expected disjoint union");
      d.groups.push_back(group());
    }
    return d;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("bad-descriptor", what + " at offset " + std::to_string(pos_) + " in '" + s_ + "'");
  }
  bool at_end() const { return pos_ >= s_.size(); }
  void skip() {
    while (!at_end() && s_[pos_] == ' ') ++pos_;
  }
  bool peek(const std::string& t) const { return s_.compare(pos_, t.size(), t) == 0; }
  bool eat(const std::string& t) {
    if (!peek(t)) return false;
    pos_ += t.size();
    return true;
  }

  ComponentGroup group() {
    skip();
    ComponentGroup g;
    if (eat("⊔_N") || eat("⊔_ℕ") || eat("|_|_N")) g.count = ComponentCount::CountablyMany;
    g.factors = product();
    return g;
  }

  std::vector<Factor> product() {
    std::vector<Factor> out;
    while (true) {
      skip();
      auto part = term();
      out.insert(out.end(), part.begin(), part.end());
      skip();
      std::size_t save = pos_;
      if (eat("×") || (eat("x") && (at_end() || s_[pos_] == ' '))) continue;
      pos_ = save;
      break;
    }
    return out;
  }

  int integer() {
    skip();
    bool neg = eat("-");
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer");
    int v = std::stoi(s_.substr(start, pos_ - start));
    return neg ? -v : v;
  }

  std::optional<int> exponent() {
    if (eat("^")) return integer();
    std::string digits;
    bool found = true;
    while (found) {
      found = false;
      for (std::size_t d = 0; d < kSuperscripts.size(); ++d)
        if (eat(kSuperscripts[d])) {
          digits += static_cast<char>('0' + d);
          found = true;
        }
    }
    if (digits.empty()) return std::nullopt;
    return std::stoi(digits);
  }

  std::vector<Factor> term() {
    std::vector<Factor> fs;
    if (eat("(")) {
      fs = product();
      skip();
      if (!eat(")")) fail("expected ')'");
    } else {
      fs.push_back(atom());
    }
    if (auto e = exponent()) {
      if (fs.size() != 1) fail("power of a product");
      fs[0].multiplicity *= *e;
    }
    return fs;
  }

  Factor atom() {
    Factor f;
    if (eat("S")) {
      f.kind = FactorKind::Sphere;
      auto e = exponent();
      if (!e) fail("sphere without dimension");
      f.degree = *e;
    } else if (eat("K(")) {
      f.kind = FactorKind::EilenbergMacLane;
      if (!eat("Q") && !eat("ℚ")) fail("expected Q");
      skip();
      if (!eat(",")) fail("expected ','");
      f.degree = integer();
      skip();
      if (!eat(")")) fail("expected ')'");
    } else if (eat("H_e")) {
      f.kind = FactorKind::Heisenberg;
    } else if (eat("Y")) {
      f.kind = FactorKind::NilmanifoldY;
    } else if (eat("X")) {
      f.kind = FactorKind::SpaceX;
    } else if (eat("*")) {
      f.kind = FactorKind::Point;
    } else if (eat("?")) {
      f.kind = FactorKind::Unrecognized;
    } else {
      fail("unknown factor");
    }
    return f;
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::vector<ComponentGroup> canonical(const HomotopyTypeDescriptor& d) {
  std::vector<ComponentGroup> out;
  for (const auto& g : d.groups) {
    ComponentGroup c = g;
    for (auto& f : c.factors)
      if (f.kind == FactorKind::Sphere && f.degree % 2 != 0) f.kind = FactorKind::EilenbergMacLane;
    c.factors = normalize_factors(std::move(c.factors));
    out.push_back(std::move(c));
  }
  auto key = [](const ComponentGroup& g) {
    std::vector<std::tuple<int, int, int, std::string>> k;
    for (const auto& f : g.factors) k.emplace_back(static_cast<int>(f.kind), f.degree, f.multiplicity, f.model);
    return std::make_pair(static_cast<int>(g.count), k);
  };
  std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return key(a) < key(b); });
  return out;
}

}  // namespace

std::string kind_name(FactorKind k) {
  switch (k) {
    case FactorKind::EilenbergMacLane: return "eilenberg-maclane";
    case FactorKind::Sphere: return "sphere";
    case FactorKind::Heisenberg: return "heisenberg";
    case FactorKind::NilmanifoldY: return "nilmanifold-y";
    case FactorKind::SpaceX: return "space-x";
    case FactorKind::Point: return "point";
    case FactorKind::Unrecognized: return "unrecognized";
  }
  return "unrecognized";
}

std::vector<Factor> normalize_factors(std::vector<Factor> factors, FactorOrder order) {
  std::vector<Factor> merged;
  for (auto& f : factors) {
    if (f.kind == FactorKind::Point || f.multiplicity == 0) continue;
    auto it = std::find_if(merged.begin(), merged.end(), [&](const Factor& g) {
      return g.kind == f.kind && g.degree == f.degree && g.model == f.model;
    });
    if (it == merged.end())
      merged.push_back(std::move(f));
    else
      it->multiplicity += f.multiplicity;
  }
  std::stable_sort(merged.begin(), merged.end(), [order](const Factor& a, const Factor& b) {
    int da = sort_degree(a), db = sort_degree(b);
    if (da != db) return order == FactorOrder::Ascending ? da < db : da > db;
    if (kind_rank(a.kind) != kind_rank(b.kind)) return kind_rank(a.kind) < kind_rank(b.kind);
    return a.model < b.model;
  });
  return merged;
}

std::string render(const Factor& f, const RenderOptions& opts) {
  const bool u = opts.unicode;
  switch (f.kind) {
    case FactorKind::Sphere: {
      std::string base = u ? "S" + superscript(f.degree) : "S^" + std::to_string(f.degree);
      return power(base, f.multiplicity, u, true);
    }
    case FactorKind::EilenbergMacLane:
      return power(std::string("K(") + (u ? "ℚ" : "Q") + "," + std::to_string(f.degree) + ")", f.multiplicity, u,
                   false);
    case FactorKind::Heisenberg: return power("H_e", f.multiplicity, u, true);
    case FactorKind::NilmanifoldY: return power("Y", f.multiplicity, u, false);
    case FactorKind::SpaceX: return power("X", f.multiplicity, u, false);
    case FactorKind::Point: return "*";
    case FactorKind::Unrecognized: return power("?", f.multiplicity, u, true);
  }
  return "?";
}

std::string render(const ComponentGroup& g, const RenderOptions& opts, bool parenthesize) {
  auto factors = normalize_factors(g.factors, opts.order);
  std::string body;
  for (const auto& f : factors) body += (body.empty() ? "" : (opts.unicode ? " × " : " x ")) + render(f, opts);
  if (body.empty()) body = "*";
  const bool countable = g.count == ComponentCount::CountablyMany;
  if (factors.size() > 1 && (parenthesize || countable)) body = "(" + body + ")";
  if (countable) body = std::string(opts.unicode ? "⊔_ℕ " : "⊔_N ") + body;
  return body;
}

std::string render(const HomotopyTypeDescriptor& d, const RenderOptions& opts) {
  std::string out;
  for (const auto& g : d.groups) out += (out.empty() ? "" : " ⊔ ") + render(g, opts, d.groups.size() > 1);
  return out.empty() ? "*" : out;
}

HomotopyTypeDescriptor parse_descriptor(const std::string& text) { return Parser(text).parse(); }

bool equivalent(const HomotopyTypeDescriptor& a, const HomotopyTypeDescriptor& b) {
  return canonical(a) == canonical(b);
}

}  // namespace rhmap
