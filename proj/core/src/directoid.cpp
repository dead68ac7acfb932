#include "pomlab/directoid.hpp"

#include <algorithm>
#include <numeric>

namespace pomlab {

Directoid Directoid::validate(const RawDirectoid& raw) {
  const int n = raw.size;
  if (n < 1) throw Error(ErrorKind::FormatError, "directoid size must be at least 1");
  if (static_cast<int>(raw.meet.size()) != n)
    throw Error(ErrorKind::FormatError, "meet table has wrong number of rows");
  for (const auto& row : raw.meet) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::FormatError, "meet table has a row of wrong width");
    for (Element v : row)
      if (v < 0 || v >= n) throw Error(ErrorKind::FormatError, "meet table entry out of range");
  }
  if (static_cast<int>(raw.inv.size()) != n)
    throw Error(ErrorKind::FormatError, "involution has wrong length");
  if (raw.zero < 0 || raw.zero >= n || raw.one < 0 || raw.one >= n)
    throw Error(ErrorKind::FormatError, "zero/one index out of range");

  auto m = [&](Element a, Element b) { return raw.meet[static_cast<size_t>(a)][static_cast<size_t>(b)]; };

  for (Element x = 0; x < n; ++x)
    if (m(x, x) != x)
      throw Error(ErrorKind::NotIdempotent, "x n x != x at " + std::to_string(x), {x});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (m(x, y) != m(y, x))
        throw Error(ErrorKind::NotCommutative,
                    "x n y != y n x at (" + std::to_string(x) + "," + std::to_string(y) + ")", {x, y});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        Element w = m(y, z);
        if (m(m(x, w), z) != m(x, w))
          throw Error(ErrorKind::NotWeaklyAssociative,
                      "(x n (y n z)) n z != x n (y n z) at (" + std::to_string(x) + "," + std::to_string(y) +
                          "," + std::to_string(z) + ")",
                      {x, y, z});
      }
  for (Element x = 0; x < n; ++x) {
    Element y = raw.inv[static_cast<size_t>(x)];
    if (y < 0 || y >= n)
      throw Error(ErrorKind::NotInvolution, "involution image out of range at " + std::to_string(x), {x});
    if (raw.inv[static_cast<size_t>(y)] != x)
      throw Error(ErrorKind::NotInvolution, "involution is not self-inverse at " + std::to_string(x), {x});
  }

  Directoid d;
  d.n_ = n;
  d.meet_ = raw.meet;
  d.inv_ = raw.inv;
  d.zero_ = raw.zero;
  d.one_ = raw.one;
  return d;
}

Poset induced_poset(const Directoid& d) {
  const int n = d.size();
  RawPoset raw;
  raw.size = n;
  raw.le.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (d.meet(x, y) == x) raw.le[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
  for (Element x = 0; x < n; ++x) {
    if (!raw.le[static_cast<size_t>(d.zero())][static_cast<size_t>(x)])
      throw Error(ErrorKind::InducedOrderUnbounded, "designated zero is not the least element", {x});
    if (!raw.le[static_cast<size_t>(x)][static_cast<size_t>(d.one())])
      throw Error(ErrorKind::InducedOrderUnbounded, "designated one is not the greatest element", {x});
  }
  raw.inv.resize(static_cast<size_t>(n));
  for (Element x = 0; x < n; ++x) raw.inv[static_cast<size_t>(x)] = d.inv(x);
  raw.bottom = d.zero();
  raw.top = d.one();
  return Poset::validate(raw);
}

Element derived_join(const Directoid& d, Element a, Element b) { return d.join(a, b); }

Subset cone_via_directoid(const Directoid& d, Element a, Element b) {
  Subset out(static_cast<size_t>(d.size()));
  for (Element x = 0; x < d.size(); ++x)
    out.set(static_cast<size_t>(d.meet(d.meet(x, a), d.meet(x, b))));
  return out;
}

const char* to_string(DirectoidClass c) {
  switch (c) {
    case DirectoidClass::involutive45: return "involutive45";
    case DirectoidClass::cond6: return "cond6";
    case DirectoidClass::qid8: return "qid8";
    case DirectoidClass::qid9: return "qid9";
    case DirectoidClass::id14: return "id14";
    case DirectoidClass::sharply_paraorthomodular_directoid: return "para_directoid_sharp";
    case DirectoidClass::orthomodular_directoid: return "orthomodular_directoid";
    case DirectoidClass::ortho_directoid: return "ortho_directoid";
    case DirectoidClass::largest_quasivariety: return "largest_quasivariety";
    case DirectoidClass::canonical_image: return "canonical_image";
    case DirectoidClass::para_directoid_weak: return "para_directoid_weak";
  }
  return "unknown";
}

std::optional<DirectoidClass> directoid_class_from_string(const std::string& name) {
  using C = DirectoidClass;
  for (C c : {C::involutive45, C::cond6, C::qid8, C::qid9, C::id14, C::para_directoid_sharp,
              C::orthomodular_directoid, C::ortho_directoid, C::largest_quasivariety, C::canonical_image,
              C::para_directoid_weak})
    if (name == to_string(c)) return c;
  if (name == "sharply_paraorthomodular_directoid") return C::sharply_paraorthomodular_directoid;
  return std::nullopt;
}

std::vector<std::string> witness_variables(DirectoidClass c) {
  switch (c) {
    case DirectoidClass::id14:
    case DirectoidClass::orthomodular_directoid:
    case DirectoidClass::ortho_directoid:
      return {"x", "y", "z"};
    default:
      return {"x", "y"};
  }
}

namespace {

CheckResult check_involutive45(const Directoid& d) {
  const int n = d.size();
  for (Element x = 0; x < n; ++x)
    if (d.inv(d.inv(x)) != x) return CheckResult::fail({x, x});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (d.meet(d.inv(d.meet(x, y)), d.inv(y)) != d.inv(y)) return CheckResult::fail({x, y});
  return CheckResult::ok();
}

CheckResult check_cond6(const Directoid& d) {
  const int n = d.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element c = d.inv(d.meet(x, y));
      bool all_zero = true;
      for (Element z = 0; z < n && all_zero; ++z)
        if (d.meet(d.meet(c, z), d.meet(x, z)) != d.zero()) all_zero = false;
      if (all_zero && !d.induced_le(x, y)) return CheckResult::fail({x, y});
    }
  return CheckResult::ok();
}

CheckResult check_qid8(const Directoid& d) {
  const int n = d.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (d.meet(d.inv(d.meet(x, y)), y) == d.zero() && d.meet(x, y) != y)
        return CheckResult::fail({x, y});
  return CheckResult::ok();
}

CheckResult check_qid9(const Directoid& d) {
  const int n = d.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element m = d.meet(x, y);
      Element lhs = d.join(d.meet(d.inv(m), y), d.meet(d.inv(y), m));
      if (lhs == d.zero() && m != y) return CheckResult::fail({x, y});
    }
  return CheckResult::ok();
}

CheckResult check_id14(const Directoid& d) {
  const int n = d.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        Element yz = d.join(y, z);
        Element w = d.meet(d.join(d.join(x, z), d.inv(yz)), yz);
        if (d.meet(z, w) != z) return CheckResult::fail({x, y, z});
      }
  return CheckResult::ok();
}

CheckResult check_orthomodular_directoid(const Directoid& d) {
  const int n = d.size();
  for (Element x = 0; x < n; ++x)
    if (d.join(x, d.inv(x)) != d.one()) return CheckResult::fail({x, x, x});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      for (Element z = 0; z < n; ++z) {
        Element yz = d.join(y, z);
        Element w = d.meet(d.join(d.join(x, z), d.inv(yz)), yz);
        if (d.meet(w, z) != z) return CheckResult::fail({x, y, z});
      }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element m = d.meet(x, y);
      if (d.join(m, d.inv(d.join(m, d.inv(y)))) != y) return CheckResult::fail({x, y, y});
    }
  return CheckResult::ok();
}

CheckResult check_ortho_directoid(const Directoid& d) {
  const int n = d.size();
  // (i) commutativity holds by validation; (ii) x u x' = 1; (iii) 0 u x = x
  for (Element x = 0; x < n; ++x) {
    if (d.join(x, d.inv(x)) != d.one()) return CheckResult::fail({x, x, x});
    if (d.join(d.zero(), x) != x) return CheckResult::fail({x, x, x});
  }
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      // (v)
      Element m = d.meet(x, y);
      if (d.join(m, d.inv(d.join(m, d.inv(y)))) != y) return CheckResult::fail({x, y, y});
      Element a = d.join(d.meet(x, d.inv(y)), y);  // (x n y') u y
      for (Element z = 0; z < n; ++z) {
        Element t = d.inv(d.join(a, z));  // ((x n y') u y) u z)'
        // (iv)
        if (d.join(a, t) != d.join(d.meet(x, d.inv(y)), d.join(y, t)))
          return CheckResult::fail({x, y, z});
        // (vi)
        Element u = d.inv(d.join(y, t));
        if (d.join(d.meet(x, d.inv(y)), u) != u) return CheckResult::fail({x, y, z});
      }
    }
  return CheckResult::ok();
}

}  // namespace

CheckResult check_class(const Directoid& d, DirectoidClass c) {
  switch (c) {
    case DirectoidClass::involutive45: return check_involutive45(d);
    case DirectoidClass::cond6: return check_cond6(d);
    case DirectoidClass::qid8: return check_qid8(d);
    case DirectoidClass::qid9: return check_qid9(d);
    case DirectoidClass::id14: return check_id14(d);
    case DirectoidClass::sharply_paraorthomodular_directoid: {
      if (auto r = check_id14(d); !r) return r;
      return check_qid8(d);
    }
    case DirectoidClass::orthomodular_directoid: return check_orthomodular_directoid(d);
    case DirectoidClass::ortho_directoid: return check_ortho_directoid(d);
    case DirectoidClass::largest_quasivariety: {
      if (auto r = check_involutive45(d); !r) return r;
      return check_qid9(d);
    }
    case DirectoidClass::canonical_image: {
      if (auto r = check_involutive45(d); !r) return r;
      return check_qid8(d);
    }
    case DirectoidClass::para_directoid_weak: {
      if (auto r = check_involutive45(d); !r) return r;
      return check_cond6(d);
    }
  }
  throw Error(ErrorKind::UsageError, "unknown directoid class");
}

std::vector<Element> assignment_choices(const Poset& p, Element a, Element b,
                                        const AssignmentPolicy& policy) {
  if (p.comparable(a, b)) return {p.le(a, b) ? a : b};
  Subset lc = p.lower_cone(a, b);
  if (policy.meet_respecting)
    if (auto m = p.max_of(lc)) return {*m};
  bool avoid_zero = false;
  if (policy.mode == AssignmentPolicy::Mode::canonical) {
    bool guard = (p.lt(p.inv(a), b)) || (p.lt(p.inv(b), a));
    bool nontrivial = lc.count() > 1;  // L(a,b) != {0}; the bottom is always a member
    avoid_zero = guard && nontrivial;
  }
  std::vector<Element> out;
  for (auto i = lc.find_first(); i != Subset::npos; i = lc.find_next(i)) {
    if (avoid_zero && static_cast<Element>(i) == p.bottom()) continue;
    out.push_back(static_cast<Element>(i));
  }
  return out;
}

namespace {

struct FreeCell {
  Element a, b;
  std::vector<Element> choices;
};

std::vector<FreeCell> free_cells(const Poset& p, const AssignmentPolicy& policy) {
  std::vector<FreeCell> cells;
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = a + 1; b < p.size(); ++b) {
      if (p.comparable(a, b)) continue;
      cells.push_back({a, b, assignment_choices(p, a, b, policy)});
    }
  return cells;
}

Directoid table_to_directoid(const Poset& p, const std::vector<std::vector<Element>>& meet) {
  RawDirectoid raw;
  raw.size = p.size();
  raw.meet = meet;
  raw.inv.resize(static_cast<size_t>(p.size()));
  for (Element x = 0; x < p.size(); ++x) raw.inv[static_cast<size_t>(x)] = p.inv(x);
  raw.zero = p.bottom();
  raw.one = p.top();
  return Directoid::validate(raw);
}

std::vector<std::vector<Element>> base_table(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<Element>> meet(static_cast<size_t>(n), std::vector<Element>(static_cast<size_t>(n), 0));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b)
      if (p.comparable(a, b)) meet[static_cast<size_t>(a)][static_cast<size_t>(b)] = p.le(a, b) ? a : b;
  return meet;
}

}  // namespace

uint64_t assignment_fanout(const Poset& p, const AssignmentPolicy& policy) {
  uint64_t total = 1;
  for (const auto& cell : free_cells(p, policy)) {
    uint64_t k = cell.choices.size();
    if (k == 0) return 0;  // cannot happen: lower cones contain the bottom
    if (total > UINT64_MAX / k) return UINT64_MAX;
    total *= k;
  }
  return total;
}

Directoid assigned_directoid(const Poset& p, const AssignmentPolicy& policy) {
  auto meet = base_table(p);
  for (const auto& cell : free_cells(p, policy)) {
    Element v = cell.choices.front();
    meet[static_cast<size_t>(cell.a)][static_cast<size_t>(cell.b)] = v;
    meet[static_cast<size_t>(cell.b)][static_cast<size_t>(cell.a)] = v;
  }
  return table_to_directoid(p, meet);
}

bool for_each_assigned_directoid(const Poset& p, const AssignmentPolicy& policy, uint64_t cap,
                                 const std::function<bool(const Directoid&)>& fn, CapBehavior on_cap) {
  if (!policy.enumerate_all) {
    return fn(assigned_directoid(p, policy));
  }
  if (on_cap == CapBehavior::throw_error && assignment_fanout(p, policy) > cap)
    throw Error(ErrorKind::CapExceeded, "assignment fan-out exceeds cap " + std::to_string(cap));
  auto cells = free_cells(p, policy);
  auto meet = base_table(p);
  uint64_t produced = 0;
  // odometer over choice indices, least-significant cell last
  std::vector<size_t> idx(cells.size(), 0);
  while (true) {
    if (produced >= cap) return true;  // truncate
    for (size_t i = 0; i < cells.size(); ++i) {
      Element v = cells[i].choices[idx[i]];
      meet[static_cast<size_t>(cells[i].a)][static_cast<size_t>(cells[i].b)] = v;
      meet[static_cast<size_t>(cells[i].b)][static_cast<size_t>(cells[i].a)] = v;
    }
    ++produced;
    if (!fn(table_to_directoid(p, meet))) return false;
    size_t i = cells.size();
    while (i > 0) {
      --i;
      if (++idx[i] < cells[i].choices.size()) break;
      idx[i] = 0;
      if (i == 0) return true;
    }
    if (cells.empty()) return true;
  }
}

bool is_canonical_assignment_of_induced(const Directoid& d) {
  Poset p = induced_poset(d);
  for (Element a = 0; a < d.size(); ++a)
    for (Element b = a + 1; b < d.size(); ++b) {
      if (p.comparable(a, b)) continue;  // value is forced to the minimum already
      Subset lc = p.lower_cone(a, b);
      bool guard = p.lt(p.inv(a), b) || p.lt(p.inv(b), a);
      bool nontrivial = lc.count() > 1;
      if (guard && nontrivial && d.meet(a, b) == p.bottom()) return false;
    }
  return true;
}

Directoid extend_with_pair(const Directoid& d) {
  induced_poset(d);  // require bounds and antitone involution
  if (d.zero() == d.one())
    throw Error(ErrorKind::UsageError, "extension requires distinct bounds");
  const int n = d.size();
  const int m = n + 2;
  const Element a = n, ap = n + 1;
  const Element zero = d.zero(), one = d.one();
  auto in_d = [&](Element x) { return x < n; };
  RawDirectoid raw;
  raw.size = m;
  raw.meet.assign(static_cast<size_t>(m), std::vector<Element>(static_cast<size_t>(m), 0));
  for (Element x = 0; x < m; ++x)
    for (Element y = 0; y < m; ++y) {
      Element v;
      if (x == zero || y == zero) {
        v = zero;
      } else if (in_d(x) && in_d(y)) {
        Element w = d.meet(x, y);
        v = (w == zero) ? a : w;
      } else if (x == a || y == a) {
        v = a;
      } else {
        // one argument is a'; a' sits directly below the top
        Element other = (x == ap) ? y : x;
        v = (other == one || other == ap) ? ap : other;
      }
      raw.meet[static_cast<size_t>(x)][static_cast<size_t>(y)] = v;
    }
  raw.inv.resize(static_cast<size_t>(m));
  for (Element x = 0; x < n; ++x) raw.inv[static_cast<size_t>(x)] = d.inv(x);
  raw.inv[static_cast<size_t>(a)] = ap;
  raw.inv[static_cast<size_t>(ap)] = a;
  raw.zero = zero;
  raw.one = one;
  return Directoid::validate(raw);
}

Directoid quotient_theta(const Directoid& m, Element a) {
  const int n = m.size();
  if (a < 0) a = n - 2;
  if (a < 0 || a >= n) throw Error(ErrorKind::UsageError, "collapsed element out of range");
  const Element ap = m.inv(a);
  const Element zero = m.zero(), one = m.one();
  if (a == zero || a == one || ap == zero || ap == one || a == ap)
    throw Error(ErrorKind::ThetaNotCongruence, "collapsed pair clashes with the bounds", {a});

  std::vector<Element> cls(static_cast<size_t>(n));
  std::iota(cls.begin(), cls.end(), 0);
  cls[static_cast<size_t>(a)] = zero;
  cls[static_cast<size_t>(ap)] = one;
  auto rep = [&](Element x) { return cls[static_cast<size_t>(x)]; };

  for (Element x = 0; x < n; ++x) {
    if (rep(m.inv(x)) != rep(m.inv(rep(x))))
      throw Error(ErrorKind::ThetaNotCongruence, "involution does not respect the partition", {x});
    for (Element y = 0; y < n; ++y)
      if (rep(m.meet(x, y)) != rep(m.meet(rep(x), rep(y))))
        throw Error(ErrorKind::ThetaNotCongruence, "meet does not respect the partition", {x, y});
  }

  std::vector<Element> keep;
  for (Element x = 0; x < n; ++x)
    if (x != a && x != ap) keep.push_back(x);
  std::vector<Element> new_index(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < keep.size(); ++i) new_index[static_cast<size_t>(keep[i])] = static_cast<Element>(i);

  RawDirectoid raw;
  raw.size = static_cast<int>(keep.size());
  raw.meet.assign(keep.size(), std::vector<Element>(keep.size(), 0));
  raw.inv.resize(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    raw.inv[i] = new_index[static_cast<size_t>(rep(m.inv(keep[i])))];
    for (size_t j = 0; j < keep.size(); ++j)
      raw.meet[i][j] = new_index[static_cast<size_t>(rep(m.meet(keep[i], keep[j])))];
  }
  raw.zero = new_index[static_cast<size_t>(zero)];
  raw.one = new_index[static_cast<size_t>(one)];
  return Directoid::validate(raw);
}

Subdirectoid subdirectoid_generated(const Directoid& d, const std::vector<Element>& generators) {
  const int n = d.size();
  Subset members(static_cast<size_t>(n));
  members.set(static_cast<size_t>(d.zero()));
  members.set(static_cast<size_t>(d.one()));
  for (Element g : generators) {
    if (g < 0 || g >= n) throw Error(ErrorKind::UsageError, "generator out of range");
    members.set(static_cast<size_t>(g));
  }
  bool changed = true;
  while (changed) {
    changed = false;
    auto elems = elements_of(members);
    for (Element x : elems) {
      if (!members.test(static_cast<size_t>(d.inv(x)))) {
        members.set(static_cast<size_t>(d.inv(x)));
        changed = true;
      }
      for (Element y : elems) {
        Element w = d.meet(x, y);
        if (!members.test(static_cast<size_t>(w))) {
          members.set(static_cast<size_t>(w));
          changed = true;
        }
      }
    }
  }
  auto elems = elements_of(members);
  std::vector<Element> new_index(static_cast<size_t>(n), -1);
  for (size_t i = 0; i < elems.size(); ++i) new_index[static_cast<size_t>(elems[i])] = static_cast<Element>(i);
  RawDirectoid raw;
  raw.size = static_cast<int>(elems.size());
  raw.meet.assign(elems.size(), std::vector<Element>(elems.size(), 0));
  raw.inv.resize(elems.size());
  for (size_t i = 0; i < elems.size(); ++i) {
    raw.inv[i] = new_index[static_cast<size_t>(d.inv(elems[i]))];
    for (size_t j = 0; j < elems.size(); ++j)
      raw.meet[i][j] = new_index[static_cast<size_t>(d.meet(elems[i], elems[j]))];
  }
  raw.zero = new_index[static_cast<size_t>(d.zero())];
  raw.one = new_index[static_cast<size_t>(d.one())];
  return {Directoid::validate(raw), elems};
}

namespace {

bool iso_backtrack(const Directoid& a, const Directoid& b, std::vector<Element>& map,
                   std::vector<bool>& used, size_t next) {
  const int n = a.size();
  if (next == static_cast<size_t>(n)) {
    for (Element x = 0; x < n; ++x) {
      if (map[static_cast<size_t>(a.inv(x))] != b.inv(map[static_cast<size_t>(x)])) return false;
      for (Element y = 0; y < n; ++y)
        if (map[static_cast<size_t>(a.meet(x, y))] != b.meet(map[static_cast<size_t>(x)], map[static_cast<size_t>(y)]))
          return false;
    }
    return true;
  }
  Element x = static_cast<Element>(next);
  for (Element img = 0; img < n; ++img) {
    if (used[static_cast<size_t>(img)]) continue;
    if ((x == a.zero()) != (img == b.zero())) continue;
    if ((x == a.one()) != (img == b.one())) continue;
    map[static_cast<size_t>(x)] = img;
    used[static_cast<size_t>(img)] = true;
    // consistency against elements whose images are already fixed
    bool ok = true;
    if (a.inv(x) <= x && b.inv(img) != map[static_cast<size_t>(a.inv(x))]) ok = false;
    for (Element y = 0; ok && y <= x; ++y) {
      Element u = a.meet(x, y);
      if (u > x) continue;  // image not yet fixed
      if (map[static_cast<size_t>(u)] != b.meet(img, map[static_cast<size_t>(y)])) ok = false;
    }
    if (ok && iso_backtrack(a, b, map, used, next + 1)) return true;
    used[static_cast<size_t>(img)] = false;
    map[static_cast<size_t>(x)] = -1;
  }
  return false;
}

}  // namespace

bool directoid_isomorphic(const Directoid& a, const Directoid& b) {
  if (a.size() != b.size()) return false;
  std::vector<Element> map(static_cast<size_t>(a.size()), -1);
  std::vector<bool> used(static_cast<size_t>(a.size()), false);
  return iso_backtrack(a, b, map, used, 0);
}

}  // namespace pomlab
