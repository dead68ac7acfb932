#include "pomlab/effect_algebra.hpp"

namespace pomlab {

EffectAlgebra EffectAlgebra::validate(const RawEffectAlgebra& raw) {
  const int n = raw.size;
  if (n < 1) throw Error(ErrorKind::FormatError, "effect algebra size must be at least 1");
  if (static_cast<int>(raw.oplus.size()) != n)
    throw Error(ErrorKind::FormatError, "oplus table has wrong number of rows");
  for (const auto& row : raw.oplus) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::FormatError, "oplus table has a row of wrong width");
    for (Element v : row)
      if (v != kUndefined && (v < 0 || v >= n))
        throw Error(ErrorKind::FormatError, "oplus table entry out of range");
  }
  if (raw.zero < 0 || raw.zero >= n || raw.one < 0 || raw.one >= n)
    throw Error(ErrorKind::FormatError, "zero/one index out of range");

  auto val = [&](Element a, Element b) { return raw.oplus[static_cast<size_t>(a)][static_cast<size_t>(b)]; };
  auto def = [&](Element a, Element b) { return val(a, b) != kUndefined; };

  // (E1)
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (def(x, y) != def(y, x))
        throw Error(ErrorKind::E1Violation, "definedness is not symmetric at (" + std::to_string(x) + "," +
                                                std::to_string(y) + ")",
                    {x, y});
      if (def(x, y) && val(x, y) != val(y, x))
        throw Error(ErrorKind::E1Violation,
                    "x + y != y + x at (" + std::to_string(x) + "," + std::to_string(y) + ")", {x, y});
    }
  // (E2)
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!def(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!def(val(x, y), z)) continue;
        if (!def(y, z) || !def(x, val(y, z)) || val(val(x, y), z) != val(x, val(y, z)))
          throw Error(ErrorKind::E2Violation,
                      "associativity pattern broken at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                          std::to_string(z) + ")",
                      {x, y, z});
      }
    }
  // (E3)
  std::vector<Element> inv(static_cast<size_t>(n), kUndefined);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y)
      if (def(x, y) && val(x, y) == raw.one) {
        if (inv[static_cast<size_t>(x)] != kUndefined)
          throw Error(ErrorKind::E3Violation, "two complements for " + std::to_string(x),
                      {x, inv[static_cast<size_t>(x)], y});
        inv[static_cast<size_t>(x)] = y;
      }
    if (inv[static_cast<size_t>(x)] == kUndefined)
      throw Error(ErrorKind::E3Violation, "no complement for " + std::to_string(x), {x});
  }
  // (E4)
  for (Element x = 0; x < n; ++x)
    if (def(x, raw.one) && x != raw.zero)
      throw Error(ErrorKind::E4Violation, "x + 1 defined for x = " + std::to_string(x), {x});

  EffectAlgebra ea;
  ea.n_ = n;
  ea.oplus_ = raw.oplus;
  ea.inv_ = std::move(inv);
  ea.zero_ = raw.zero;
  ea.one_ = raw.one;
  return ea;
}

std::optional<Element> EffectAlgebra::ominus(Element b, Element a) const {
  if (!defined(a, inv(b))) return std::nullopt;  // defined iff a <= b
  return inv(oplus(a, inv(b)));
}

Poset induced_order(const EffectAlgebra& ea) {
  const int n = ea.size();
  RawPoset raw;
  raw.size = n;
  raw.le.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (Element a = 0; a < n; ++a)
    for (Element c = 0; c < n; ++c)
      if (ea.defined(a, c)) raw.le[static_cast<size_t>(a)][static_cast<size_t>(ea.oplus(a, c))] = true;
  raw.inv.resize(static_cast<size_t>(n));
  for (Element x = 0; x < n; ++x) raw.inv[static_cast<size_t>(x)] = ea.inv(x);
  raw.bottom = ea.zero();
  raw.top = ea.one();
  try {
    return Poset::validate(raw);
  } catch (const Error& e) {
    // the induced relation of a validated effect algebra is always a bounded
    // involutive order; reaching this indicates a validator defect
    throw Error(ErrorKind::StructuralInconsistency,
                std::string("induced order failed validation: ") + e.what(), e.witness());
  }
}

bool is_orthoalgebra(const EffectAlgebra& ea) {
  return static_cast<bool>(check(induced_order(ea), PosetProperty::orthoposet));
}

EffectAlgebra orthoalgebra_from_ortho_directoid(const Directoid& d) {
  if (auto r = check_class(d, DirectoidClass::ortho_directoid); !r)
    throw Error(ErrorKind::NotOrthoDirectoid, "directoid fails the ortho-directoid identities", r.witness);
  const int n = d.size();
  RawEffectAlgebra raw;
  raw.size = n;
  raw.oplus.assign(static_cast<size_t>(n), std::vector<Element>(static_cast<size_t>(n), kUndefined));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (d.induced_le(x, d.inv(y))) raw.oplus[static_cast<size_t>(x)][static_cast<size_t>(y)] = d.join(x, y);
  raw.zero = d.zero();
  raw.one = d.one();
  return EffectAlgebra::validate(raw);
}

namespace {

struct JoinCell {
  Element a, b;
  std::vector<Element> choices;
};

// Join table skeleton: forced entries filled, free upper-bound cells listed.
std::vector<std::vector<Element>> base_join_table(const EffectAlgebra& ea, const Poset& p,
                                                  std::vector<JoinCell>& cells) {
  const int n = ea.size();
  std::vector<std::vector<Element>> join(static_cast<size_t>(n), std::vector<Element>(static_cast<size_t>(n), 0));
  for (Element x = 0; x < n; ++x)
    for (Element y = x; y < n; ++y) {
      Element v = kUndefined;
      if (p.le(x, p.inv(y))) {
        v = ea.oplus(x, y);
      } else if (p.comparable(x, y)) {
        v = p.le(x, y) ? y : x;
      }
      if (v != kUndefined) {
        join[static_cast<size_t>(x)][static_cast<size_t>(y)] = v;
        join[static_cast<size_t>(y)][static_cast<size_t>(x)] = v;
      } else {
        cells.push_back({x, y, elements_of(p.upper_cone(x, y))});
      }
    }
  return join;
}

Directoid join_table_to_directoid(const EffectAlgebra& ea, const std::vector<std::vector<Element>>& join) {
  const int n = ea.size();
  RawDirectoid raw;
  raw.size = n;
  raw.meet.assign(static_cast<size_t>(n), std::vector<Element>(static_cast<size_t>(n), 0));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      raw.meet[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          ea.inv(join[static_cast<size_t>(ea.inv(x))][static_cast<size_t>(ea.inv(y))]);
  raw.inv.resize(static_cast<size_t>(n));
  for (Element x = 0; x < n; ++x) raw.inv[static_cast<size_t>(x)] = ea.inv(x);
  raw.zero = ea.zero();
  raw.one = ea.one();
  return Directoid::validate(raw);
}

}  // namespace

Directoid directoid_from_orthoalgebra(const EffectAlgebra& ea) {
  if (!is_orthoalgebra(ea))
    throw Error(ErrorKind::NotOrthoalgebra, "induced order is not an orthoposet");
  Poset p = induced_order(ea);
  std::vector<JoinCell> cells;
  auto join = base_join_table(ea, p, cells);
  for (const auto& cell : cells) {
    join[static_cast<size_t>(cell.a)][static_cast<size_t>(cell.b)] = cell.choices.front();
    join[static_cast<size_t>(cell.b)][static_cast<size_t>(cell.a)] = cell.choices.front();
  }
  return join_table_to_directoid(ea, join);
}

bool for_each_directoid_from_orthoalgebra(const EffectAlgebra& ea, uint64_t cap,
                                          const std::function<bool(const Directoid&)>& fn,
                                          CapBehavior on_cap) {
  if (!is_orthoalgebra(ea))
    throw Error(ErrorKind::NotOrthoalgebra, "induced order is not an orthoposet");
  Poset p = induced_order(ea);
  std::vector<JoinCell> cells;
  auto join = base_join_table(ea, p, cells);
  uint64_t fanout = 1;
  for (const auto& c : cells) {
    if (fanout > cap) break;
    fanout = (c.choices.empty()) ? 0 : fanout * static_cast<uint64_t>(c.choices.size());
  }
  if (on_cap == CapBehavior::throw_error && fanout > cap)
    throw Error(ErrorKind::CapExceeded, "upper-bound fan-out exceeds cap " + std::to_string(cap));
  uint64_t produced = 0;
  std::vector<size_t> idx(cells.size(), 0);
  while (true) {
    if (produced >= cap) return true;
    for (size_t i = 0; i < cells.size(); ++i) {
      Element v = cells[i].choices[idx[i]];
      join[static_cast<size_t>(cells[i].a)][static_cast<size_t>(cells[i].b)] = v;
      join[static_cast<size_t>(cells[i].b)][static_cast<size_t>(cells[i].a)] = v;
    }
    ++produced;
    if (!fn(join_table_to_directoid(ea, join))) return false;
    if (cells.empty()) return true;
    size_t i = cells.size();
    bool advanced = false;
    while (i > 0) {
      --i;
      if (++idx[i] < cells[i].choices.size()) {
        advanced = true;
        break;
      }
      idx[i] = 0;
    }
    if (!advanced) return true;
  }
}

EffectAlgebra effect_algebra_from_omp(const Poset& p) {
  if (auto r = check(p, PosetProperty::orthomodular); !r)
    throw Error(ErrorKind::UsageError, "poset is not orthomodular");
  const int n = p.size();
  RawEffectAlgebra raw;
  raw.size = n;
  raw.oplus.assign(static_cast<size_t>(n), std::vector<Element>(static_cast<size_t>(n), kUndefined));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.le(x, p.inv(y))) raw.oplus[static_cast<size_t>(x)][static_cast<size_t>(y)] = *p.join(x, y);
  raw.zero = p.bottom();
  raw.one = p.top();
  return EffectAlgebra::validate(raw);
}

}  // namespace pomlab
