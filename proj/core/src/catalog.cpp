#include "cmred/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cmred {

namespace {

class CycleScanner {
public:
  explicit CycleScanner(std::string_view text) : text_(text) {}

  std::size_t offset() const { return pos_; }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool consume(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool consume_word(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  /// 1-based point; rejects zero, negative and malformed numbers.
  std::uint32_t point() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
    }
    std::uint64_t value = 0;
    bool any = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      if (value > 1'000'000) throw parse_error("point is out of range", start);
      ++pos_;
      any = true;
    }
    if (!any) throw parse_error("expected a point", start);
    if (negative || value == 0)
      throw parse_error("points must be positive", start);
    return static_cast<std::uint32_t>(value);
  }

  [[noreturn]] void fail(const std::string& reason) {
    skip_ws();
    throw parse_error(reason, pos_);
  }

private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

struct RawCycle {
  std::vector<std::uint32_t> points;  // 1-based
  std::size_t offset;
};

}  // namespace

std::vector<Permutation> parse_cycles(std::string_view text) {
  CycleScanner scan(text);
  if (scan.done()) scan.fail("empty permutation text");

  std::uint32_t declared_degree = 0;
  if (scan.consume_word("deg=")) {
    declared_degree = scan.point();
    if (!scan.consume(';')) scan.fail("expected ';' after the deg= header");
  }

  // First pass: raw cycles per permutation, tracking the largest point.
  std::vector<std::vector<RawCycle>> raw_perms;
  std::uint32_t max_point = 0;
  while (true) {
    std::vector<RawCycle> cycles;
    if (scan.consume_word("()")) {
      // identity: stands alone within one perm
    } else {
      while (scan.peek() == '(') {
        RawCycle cycle;
        cycle.offset = scan.offset();
        scan.consume('(');
        cycle.points.push_back(scan.point());
        while (scan.consume(',')) cycle.points.push_back(scan.point());
        if (!scan.consume(')')) scan.fail("unbalanced parenthesis in cycle");
        if (cycle.points.size() < 2)
          throw parse_error("a cycle needs at least two points", cycle.offset);
        for (std::size_t i = 0; i < cycle.points.size(); ++i)
          for (std::size_t j = i + 1; j < cycle.points.size(); ++j)
            if (cycle.points[i] == cycle.points[j])
              throw parse_error("repeated point " +
                                    std::to_string(cycle.points[i]) +
                                    " within one cycle",
                                cycle.offset);
        for (std::uint32_t p : cycle.points) max_point = std::max(max_point, p);
        cycles.push_back(std::move(cycle));
      }
      if (cycles.empty()) scan.fail("expected a cycle or \"()\"");
    }
    raw_perms.push_back(std::move(cycles));
    if (scan.done()) break;
    if (!scan.consume(';')) scan.fail("expected ';' between permutations");
    if (scan.done()) scan.fail("expected a permutation after ';'");
  }

  const std::size_t degree = std::max<std::uint32_t>(
      {1, max_point, declared_degree});

  std::vector<Permutation> perms;
  perms.reserve(raw_perms.size());
  for (const std::vector<RawCycle>& cycles : raw_perms) {
    Permutation perm = Permutation::identity(degree);
    for (const RawCycle& cycle : cycles) {
      std::vector<std::uint32_t> images(degree);
      for (std::uint32_t i = 0; i < degree; ++i) images[i] = i;
      for (std::size_t i = 0; i < cycle.points.size(); ++i) {
        const std::uint32_t from = cycle.points[i] - 1;
        const std::uint32_t to = cycle.points[(i + 1) % cycle.points.size()] - 1;
        images[from] = to;
      }
      perm = perm * Permutation(std::move(images));
    }
    perms.push_back(std::move(perm));
  }
  return perms;
}

std::string print_cycles(const std::vector<Permutation>& perms) {
  std::string out;
  for (std::size_t i = 0; i < perms.size(); ++i) {
    if (i > 0) out.push_back(';');
    out += perms[i].cycle_string();
  }
  return out;
}

namespace {

struct SpecScanner {
  std::string_view text;
  std::size_t pos = 0;

  bool starts_with(std::string_view word) const {
    return text.substr(pos, word.size()) == word;
  }
  void expect(std::string_view word) {
    if (!starts_with(word))
      throw parse_error("expected \"" + std::string(word) + "\" in group spec",
                        pos);
    pos += word.size();
  }
  std::size_t integer() {
    std::size_t start = pos;
    std::uint64_t value = 0;
    bool any = false;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
      if (value > 1'000'000'000) throw parse_error("number out of range", start);
      ++pos;
      any = true;
    }
    if (!any) throw parse_error("expected a number in group spec", start);
    return static_cast<std::size_t>(value);
  }
};

GroupSpec parse_spec(SpecScanner& scan);

// Generator text: cycles, ';' separators and an optional deg= header. Stops
// at a comma outside parentheses so product lists can follow.
std::string scan_generator_text(SpecScanner& scan) {
  const std::size_t start = scan.pos;
  int depth = 0;
  while (scan.pos < scan.text.size()) {
    const char c = scan.text[scan.pos];
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) break;
    ++scan.pos;
  }
  std::string out(scan.text.substr(start, scan.pos - start));
  if (out.empty())
    throw parse_error("expected generator text in group spec", start);
  return out;
}

std::string scan_plain_text(SpecScanner& scan) {
  const std::size_t start = scan.pos;
  while (scan.pos < scan.text.size() && scan.text[scan.pos] != ',') ++scan.pos;
  std::string out(scan.text.substr(start, scan.pos - start));
  if (out.empty()) throw parse_error("expected a name in group spec", start);
  return out;
}

GroupSpec parse_spec(SpecScanner& scan) {
  GroupSpec spec;
  if (scan.starts_with("cyclic:")) {
    scan.expect("cyclic:");
    spec.kind = GroupSpec::Kind::Cyclic;
    spec.n = scan.integer();
  } else if (scan.starts_with("dihedral:")) {
    scan.expect("dihedral:");
    spec.kind = GroupSpec::Kind::Dihedral;
    spec.n = scan.integer();
  } else if (scan.starts_with("symmetric:")) {
    scan.expect("symmetric:");
    spec.kind = GroupSpec::Kind::Symmetric;
    spec.n = scan.integer();
  } else if (scan.starts_with("alternating:")) {
    scan.expect("alternating:");
    spec.kind = GroupSpec::Kind::Alternating;
    spec.n = scan.integer();
  } else if (scan.starts_with("product:")) {
    scan.expect("product:");
    spec.kind = GroupSpec::Kind::Product;
    spec.factors.push_back(parse_spec(scan));
    scan.expect(",");
    spec.factors.push_back(parse_spec(scan));
  } else if (scan.starts_with("wreath-c2:")) {
    scan.expect("wreath-c2:");
    spec.kind = GroupSpec::Kind::WreathC2;
    spec.factors.push_back(parse_spec(scan));
  } else if (scan.starts_with("builtin:")) {
    scan.expect("builtin:");
    spec.kind = GroupSpec::Kind::Builtin;
    spec.text = scan_plain_text(scan);
  } else if (scan.starts_with("file:")) {
    scan.expect("file:");
    spec.kind = GroupSpec::Kind::File;
    spec.text = scan_plain_text(scan);
  } else if (scan.starts_with("generators:")) {
    scan.expect("generators:");
    spec.kind = GroupSpec::Kind::Generators;
    spec.text = scan_generator_text(scan);
  } else {
    throw parse_error("unknown group spec kind", scan.pos);
  }
  return spec;
}

}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  SpecScanner scan{text};
  GroupSpec spec = parse_spec(scan);
  if (scan.pos != text.size())
    throw parse_error("trailing characters after group spec", scan.pos);
  return spec;
}

std::vector<GroupSpec> GroupSpec::parse_list(std::string_view text) {
  SpecScanner scan{text};
  std::vector<GroupSpec> specs;
  specs.push_back(parse_spec(scan));
  while (scan.pos < scan.text.size()) {
    scan.expect(",");
    specs.push_back(parse_spec(scan));
  }
  return specs;
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case Kind::Cyclic: return "cyclic:" + std::to_string(n);
    case Kind::Dihedral: return "dihedral:" + std::to_string(n);
    case Kind::Symmetric: return "symmetric:" + std::to_string(n);
    case Kind::Alternating: return "alternating:" + std::to_string(n);
    case Kind::Product:
      return "product:" + factors[0].to_string() + "," + factors[1].to_string();
    case Kind::WreathC2: return "wreath-c2:" + factors[0].to_string();
    case Kind::Builtin: return "builtin:" + text;
    case Kind::File: return "file:" + text;
    case Kind::Generators: return "generators:" + text;
  }
  return {};
}

namespace {

FiniteGroup build_cyclic(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw invalid_input("cyclic group order must be positive");
  if (n == 1) return FiniteGroup::trivial(1);
  std::vector<std::uint32_t> images(n);
  for (std::uint32_t i = 0; i < n; ++i) images[i] = (i + 1) % n;
  return FiniteGroup::generate(n, {Permutation(std::move(images))}, order_cap);
}

FiniteGroup build_dihedral(std::size_t order, std::size_t order_cap) {
  if (order < 6 || order % 2 != 0)
    throw invalid_input("dihedral spec takes an even order >= 6 (acts on "
                        "order/2 points)");
  const std::size_t k = order / 2;
  std::vector<std::uint32_t> rot(k);
  for (std::uint32_t i = 0; i < k; ++i) rot[i] = (i + 1) % k;
  std::vector<std::uint32_t> refl(k);
  for (std::uint32_t i = 0; i < k; ++i) refl[i] = static_cast<std::uint32_t>((k - i) % k);
  return FiniteGroup::generate(
      k, {Permutation(std::move(rot)), Permutation(std::move(refl))}, order_cap);
}

FiniteGroup build_symmetric(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw invalid_input("symmetric group needs at least one point");
  if (n == 1) return FiniteGroup::trivial(1);
  std::vector<Permutation> gens = parse_cycles("deg=" + std::to_string(n) +
                                               ";(1,2)");
  if (n > 2) {
    std::string big = "(1";
    for (std::size_t i = 2; i <= n; ++i) big += "," + std::to_string(i);
    big += ")";
    gens.push_back(parse_cycles(big)[0]);
  }
  return FiniteGroup::generate(n, std::move(gens), order_cap);
}

FiniteGroup build_alternating(std::size_t n, std::size_t order_cap) {
  if (n == 0) throw invalid_input("alternating group needs at least one point");
  if (n <= 2) return FiniteGroup::trivial(n);
  std::vector<Permutation> gens = parse_cycles("deg=" + std::to_string(n) +
                                               ";(1,2,3)");
  if (n > 3) {
    std::string big = n % 2 == 1 ? "(1" : "(2";
    for (std::size_t i = (n % 2 == 1 ? 2 : 3); i <= n; ++i)
      big += "," + std::to_string(i);
    big += ")";
    gens.push_back(parse_cycles("deg=" + std::to_string(n) + ";" + big)[0]);
  }
  return FiniteGroup::generate(n, std::move(gens), order_cap);
}

FiniteGroup build_product(const FiniteGroup& a, const FiniteGroup& b,
                          std::size_t order_cap) {
  const std::size_t degree = a.degree() + b.degree();
  std::vector<Permutation> gens;
  for (const Permutation& p : a.generators()) gens.push_back(p.extended(degree));
  for (const Permutation& p : b.generators()) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t i = 0; i < a.degree(); ++i) images[i] = i;
    for (std::uint32_t i = 0; i < b.degree(); ++i)
      images[a.degree() + i] = static_cast<std::uint32_t>(a.degree()) + p.apply(i);
    gens.push_back(Permutation(std::move(images)));
  }
  return FiniteGroup::generate(degree, std::move(gens), order_cap);
}

// C2 wr H for H on k points: blocks {2i-1, 2i}, one flip per block plus H
// lifted to the blocks. Order 2^k * |H| for any H.
FiniteGroup build_wreath_c2(const FiniteGroup& h, std::size_t order_cap) {
  const std::size_t k = h.degree();
  const std::size_t degree = 2 * k;
  std::vector<Permutation> gens;
  for (std::uint32_t i = 0; i < k; ++i) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t j = 0; j < degree; ++j) images[j] = j;
    images[2 * i] = 2 * i + 1;
    images[2 * i + 1] = 2 * i;
    gens.push_back(Permutation(std::move(images)));
  }
  for (const Permutation& p : h.generators()) {
    std::vector<std::uint32_t> images(degree);
    for (std::uint32_t i = 0; i < k; ++i) {
      images[2 * i] = 2 * p.apply(i);
      images[2 * i + 1] = 2 * p.apply(i) + 1;
    }
    gens.push_back(Permutation(std::move(images)));
  }
  return FiniteGroup::generate(degree, std::move(gens), order_cap);
}

LabeledGroup build_from_file(const std::string& path, std::size_t order_cap) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open group file: " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input("group file " + path + " is not valid JSON: " + e.what());
  }
  if (!doc.is_object() || !doc.contains("degree") || !doc.contains("generators"))
    throw invalid_input("group file " + path +
                        " must be an object with \"degree\" and \"generators\"");
  if (!doc["degree"].is_number_unsigned() || doc["degree"].get<std::size_t>() == 0)
    throw invalid_input("group file " + path + ": \"degree\" must be a positive integer");
  const std::size_t degree = doc["degree"].get<std::size_t>();
  if (!doc["generators"].is_array())
    throw invalid_input("group file " + path + ": \"generators\" must be an array");

  std::vector<Permutation> gens;
  for (const auto& item : doc["generators"]) {
    if (!item.is_string())
      throw invalid_input("group file " + path +
                          ": generators must be cycle-notation strings");
    for (Permutation& p : parse_cycles(item.get<std::string>())) {
      if (p.degree() > degree)
        throw invalid_input("group file " + path + ": generator " +
                            item.get<std::string>() +
                            " moves points beyond the declared degree");
      gens.push_back(p.extended(degree));
    }
  }
  std::string label = "file:" + path;
  if (doc.contains("label")) {
    if (!doc["label"].is_string())
      throw invalid_input("group file " + path + ": \"label\" must be a string");
    label = doc["label"].get<std::string>();
  }
  return LabeledGroup{std::move(label),
                      FiniteGroup::generate(degree, std::move(gens), order_cap)};
}

}  // namespace

LabeledGroup build_group(const GroupSpec& spec, std::size_t order_cap) {
  switch (spec.kind) {
    case GroupSpec::Kind::Cyclic:
      return {spec.to_string(), build_cyclic(spec.n, order_cap)};
    case GroupSpec::Kind::Dihedral:
      return {spec.to_string(), build_dihedral(spec.n, order_cap)};
    case GroupSpec::Kind::Symmetric:
      return {spec.to_string(), build_symmetric(spec.n, order_cap)};
    case GroupSpec::Kind::Alternating:
      return {spec.to_string(), build_alternating(spec.n, order_cap)};
    case GroupSpec::Kind::Product: {
      LabeledGroup a = build_group(spec.factors[0], order_cap);
      LabeledGroup b = build_group(spec.factors[1], order_cap);
      return {spec.to_string(), build_product(a.group, b.group, order_cap)};
    }
    case GroupSpec::Kind::WreathC2: {
      LabeledGroup h = build_group(spec.factors[0], order_cap);
      return {spec.to_string(), build_wreath_c2(h.group, order_cap)};
    }
    case GroupSpec::Kind::Builtin: {
      if (spec.text == "G40_12") {
        std::vector<Permutation> gens =
            parse_cycles("deg=10;(2,7)(3,4,8,9);(1,4,3,8)");
        return {spec.to_string(),
                FiniteGroup::generate(10, std::move(gens), order_cap)};
      }
      throw invalid_input("unknown builtin group: " + spec.text);
    }
    case GroupSpec::Kind::File:
      return build_from_file(spec.text, order_cap);
    case GroupSpec::Kind::Generators: {
      std::vector<Permutation> gens = parse_cycles(spec.text);
      const std::size_t degree = gens.empty() ? 1 : gens[0].degree();
      return {spec.to_string(),
              FiniteGroup::generate(degree, std::move(gens), order_cap)};
    }
  }
  throw invalid_input("unhandled group spec kind");
}

LabeledGroup build_group(std::string_view spec_text, std::size_t order_cap) {
  return build_group(GroupSpec::parse(spec_text), order_cap);
}

const std::vector<CatalogEntry>& builtin_catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"builtin:G40_12", "40", "10",
       "order-40 subgroup of S10; the g = 5 worked example"},
      {"cyclic:n", "n", "n", "n-cycle; cyclic:2 covers g = 1, cyclic:4 g = 2, "
       "cyclic:6 g = 3"},
      {"dihedral:n", "n", "n/2",
       "rotation plus reflection on n/2 points; even n >= 6; dihedral:8 g = 2, "
       "dihedral:12 g = 3"},
      {"symmetric:n", "n!", "n", "wreath base; trivial center for n >= 3"},
      {"alternating:n", "n!/2", "n", "wreath/product component"},
      {"product:A,B", "order(A)*order(B)", "deg A + deg B",
       "disjoint-support direct product; product:alternating:4,cyclic:2 g = 3"},
      {"wreath-c2:H", "2^k*order(H)", "2k",
       "C2 wr H for H on k points; wreath-c2:symmetric:3 g = 3, "
       "wreath-c2:symmetric:4 g = 4 (raise --subgroup-cap to 500); "
       "wreath-c2:symmetric:5 (order 3840) is best-effort and needs --delta"},
      {"generators:<perms>", "closure", "max point",
       "explicit generators in cycle notation, ';'-separated, optional deg= "
       "header"},
      {"file:<path>", "closure", "declared",
       "JSON file {\"degree\": n, \"generators\": [\"(1,2)...\"], "
       "\"label\": \"...\"}"},
  };
  return entries;
}

}  // namespace cmred
