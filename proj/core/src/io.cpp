#include "pomlab/io.hpp"

#include "json.hpp"

#include <fstream>
#include <sstream>

namespace pomlab {

namespace {

using nlohmann::json;

json parse_json(const std::string& text) {
  try {
    return json::parse(text, nullptr, true, /*ignore_comments=*/true);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::FormatError, std::string("invalid JSON: ") + e.what());
  }
}

template <class T>
T field(const json& j, const char* name) {
  if (!j.contains(name))
    throw Error(ErrorKind::FormatError, std::string("missing field \"") + name + "\"");
  try {
    return j.at(name).get<T>();
  } catch (const json::exception&) {
    throw Error(ErrorKind::FormatError, std::string("field \"") + name + "\" has the wrong type");
  }
}

Poset poset_from_json(const json& j) {
  int n = field<int>(j, "size");
  std::vector<Element> inv = field<std::vector<Element>>(j, "inv");
  Element bottom = field<Element>(j, "bottom");
  Element top = field<Element>(j, "top");
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = field<std::vector<std::string>>(j, "labels");
  const bool has_hasse = j.contains("hasse");
  const bool has_le = j.contains("le");
  if (has_hasse == has_le)
    throw Error(ErrorKind::FormatError, "exactly one of \"hasse\"/\"le\" must be present");
  if (has_hasse) {
    auto edges = field<std::vector<std::vector<Element>>>(j, "hasse");
    std::vector<std::pair<Element, Element>> covers;
    for (const auto& e : edges) {
      if (e.size() != 2) throw Error(ErrorKind::FormatError, "hasse edges must be pairs");
      covers.emplace_back(e[0], e[1]);
    }
    return Poset::from_hasse(n, covers, std::move(inv), bottom, top, std::move(labels));
  }
  RawPoset raw;
  raw.size = n;
  raw.le = field<std::vector<std::vector<bool>>>(j, "le");
  raw.inv = std::move(inv);
  raw.bottom = bottom;
  raw.top = top;
  raw.labels = std::move(labels);
  return Poset::validate(raw);
}

Directoid directoid_from_json(const json& j) {
  RawDirectoid raw;
  raw.size = field<int>(j, "size");
  raw.meet = field<std::vector<std::vector<Element>>>(j, "meet");
  raw.inv = field<std::vector<Element>>(j, "inv");
  raw.zero = field<Element>(j, "zero");
  raw.one = field<Element>(j, "one");
  return Directoid::validate(raw);
}

EffectAlgebra ea_from_json(const json& j) {
  RawEffectAlgebra raw;
  raw.size = field<int>(j, "size");
  raw.zero = field<Element>(j, "zero");
  raw.one = field<Element>(j, "one");
  if (!j.contains("oplus") || !j.at("oplus").is_array())
    throw Error(ErrorKind::FormatError, "missing or malformed \"oplus\"");
  const json& rows = j.at("oplus");
  for (const auto& row : rows) {
    std::vector<Element> r;
    for (const auto& cell : row) {
      if (cell.is_null())
        r.push_back(kUndefined);
      else
        r.push_back(cell.get<Element>());
    }
    raw.oplus.push_back(std::move(r));
  }
  return EffectAlgebra::validate(raw);
}

}  // namespace

Structure parse_structure(const std::string& text) {
  json j = parse_json(text);
  std::string kind = field<std::string>(j, "kind");
  if (kind == "poset") return poset_from_json(j);
  if (kind == "directoid") return directoid_from_json(j);
  if (kind == "effect_algebra") return ea_from_json(j);
  throw Error(ErrorKind::FormatError, "unknown kind \"" + kind + "\"");
}

Structure load_structure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FormatError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_structure(buf.str());
}

std::string to_json_string(const Poset& p, bool pretty) {
  json j;
  j["kind"] = "poset";
  j["size"] = p.size();
  std::vector<std::vector<bool>> le(static_cast<size_t>(p.size()),
                                    std::vector<bool>(static_cast<size_t>(p.size()), false));
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y) le[static_cast<size_t>(x)][static_cast<size_t>(y)] = p.le(x, y);
  j["le"] = le;
  std::vector<Element> inv;
  for (Element x = 0; x < p.size(); ++x) inv.push_back(p.inv(x));
  j["inv"] = inv;
  j["bottom"] = p.bottom();
  j["top"] = p.top();
  if (!p.labels().empty()) j["labels"] = p.labels();
  return pretty ? j.dump(2) : j.dump();
}

std::string to_json_string(const Directoid& d, bool pretty) {
  json j;
  j["kind"] = "directoid";
  j["size"] = d.size();
  j["meet"] = d.table();
  std::vector<Element> inv;
  for (Element x = 0; x < d.size(); ++x) inv.push_back(d.inv(x));
  j["inv"] = inv;
  j["zero"] = d.zero();
  j["one"] = d.one();
  return pretty ? j.dump(2) : j.dump();
}

std::string to_json_string(const EffectAlgebra& a, bool pretty) {
  json j;
  j["kind"] = "effect_algebra";
  j["size"] = a.size();
  json rows = json::array();
  for (Element x = 0; x < a.size(); ++x) {
    json row = json::array();
    for (Element y = 0; y < a.size(); ++y) {
      if (a.defined(x, y))
        row.push_back(a.oplus(x, y));
      else
        row.push_back(nullptr);
    }
    rows.push_back(std::move(row));
  }
  j["oplus"] = std::move(rows);
  j["zero"] = a.zero();
  j["one"] = a.one();
  return pretty ? j.dump(2) : j.dump();
}

std::string to_json_string(const B6Witness& w, bool pretty) {
  json j;
  j["roles"] = {{"0", w.zero}, {"a", w.a}, {"b", w.b}, {"b'", w.b_prime}, {"a'", w.a_prime}, {"1", w.one}};
  return pretty ? j.dump(2) : j.dump();
}

std::string completion_to_json_string(const DmCompletion& dm, bool pretty) {
  json j = json::parse(to_json_string(dm.lattice, false));
  j["embedding"] = dm.embedding;
  json universe = json::array();
  for (const Subset& s : dm.universe) universe.push_back(elements_of(s));
  j["closed_sets"] = std::move(universe);
  return pretty ? j.dump(2) : j.dump();
}

std::string to_dot(const Poset& p) {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (Element x = 0; x < p.size(); ++x)
    os << "  n" << x << " [label=\"" << p.label(x) << "\"];\n";
  for (auto [a, b] : p.covers()) os << "  n" << a << " -> n" << b << ";\n";
  for (Element x = 0; x < p.size(); ++x) {
    Element y = p.inv(x);
    if (x < y && !(x == p.bottom() && y == p.top()))
      os << "  n" << x << " -> n" << y << " [dir=none, style=dashed, constraint=false];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace pomlab
