#include "pomlab/poset.hpp"

#include <algorithm>
#include <sstream>

namespace pomlab {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotBounded: return "NotBounded";
    case ErrorKind::NotInvolution: return "NotInvolution";
    case ErrorKind::NotAntitone: return "NotAntitone";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::NotCommutative: return "NotCommutative";
    case ErrorKind::NotWeaklyAssociative: return "NotWeaklyAssociative";
    case ErrorKind::InducedOrderUnbounded: return "InducedOrderUnbounded";
    case ErrorKind::E1Violation: return "E1Violation";
    case ErrorKind::E2Violation: return "E2Violation";
    case ErrorKind::E3Violation: return "E3Violation";
    case ErrorKind::E4Violation: return "E4Violation";
    case ErrorKind::NotOrthoDirectoid: return "NotOrthoDirectoid";
    case ErrorKind::NotOrthoalgebra: return "NotOrthoalgebra";
    case ErrorKind::NotACompleteLattice: return "NotACompleteLattice";
    case ErrorKind::ThetaNotCongruence: return "ThetaNotCongruence";
    case ErrorKind::StructuralInconsistency: return "StructuralInconsistency";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::SignatureMismatch: return "SignatureMismatch";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::FormatError: return "FormatError";
    case ErrorKind::UsageError: return "UsageError";
  }
  return "Unknown";
}

std::string subset_to_string(const Subset& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) {
    if (!first) os << ',';
    os << i;
    first = false;
  }
  os << '}';
  return os.str();
}

Poset Poset::validate(const RawPoset& raw) {
  const int n = raw.size;
  if (n < 1) throw Error(ErrorKind::FormatError, "poset size must be at least 1");
  if (static_cast<int>(raw.le.size()) != n)
    throw Error(ErrorKind::FormatError, "le relation has wrong number of rows");
  for (const auto& row : raw.le)
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::FormatError, "le relation has a row of wrong width");
  if (static_cast<int>(raw.inv.size()) != n)
    throw Error(ErrorKind::FormatError, "involution has wrong length");
  if (raw.bottom < 0 || raw.bottom >= n || raw.top < 0 || raw.top >= n)
    throw Error(ErrorKind::FormatError, "bottom/top index out of range");

  auto le = [&](Element x, Element y) { return raw.le[static_cast<size_t>(x)][static_cast<size_t>(y)]; };

  for (Element x = 0; x < n; ++x)
    if (!le(x, x))
      throw Error(ErrorKind::NotAPartialOrder, "relation is not reflexive at " + std::to_string(x), {x});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (x != y && le(x, y) && le(y, x))
        throw Error(ErrorKind::NotAPartialOrder,
                    "relation is not antisymmetric at (" + std::to_string(x) + "," + std::to_string(y) + ")",
                    {x, y});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (le(x, y))
        for (Element z = 0; z < n; ++z)
          if (le(y, z) && !le(x, z))
            throw Error(ErrorKind::NotAPartialOrder,
                        "relation is not transitive at (" + std::to_string(x) + "," + std::to_string(y) + "," +
                            std::to_string(z) + ")",
                        {x, y, z});

  for (Element x = 0; x < n; ++x) {
    if (!le(raw.bottom, x))
      throw Error(ErrorKind::NotBounded, "bottom is not below " + std::to_string(x), {x});
    if (!le(x, raw.top))
      throw Error(ErrorKind::NotBounded, "top is not above " + std::to_string(x), {x});
  }

  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (Element x = 0; x < n; ++x) {
    Element y = raw.inv[static_cast<size_t>(x)];
    if (y < 0 || y >= n)
      throw Error(ErrorKind::NotInvolution, "involution image out of range at " + std::to_string(x), {x});
    seen[static_cast<size_t>(y)] = true;
  }
  for (Element x = 0; x < n; ++x)
    if (!seen[static_cast<size_t>(x)])
      throw Error(ErrorKind::NotInvolution, "involution is not a permutation", {x});
  for (Element x = 0; x < n; ++x)
    if (raw.inv[static_cast<size_t>(raw.inv[static_cast<size_t>(x)])] != x)
      throw Error(ErrorKind::NotInvolution, "involution is not self-inverse at " + std::to_string(x), {x});
  if (raw.inv[static_cast<size_t>(raw.bottom)] != raw.top)
    throw Error(ErrorKind::NotInvolution, "involution does not map bottom to top", {raw.bottom});
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (le(x, y) && !le(raw.inv[static_cast<size_t>(y)], raw.inv[static_cast<size_t>(x)]))
        throw Error(ErrorKind::NotAntitone,
                    "involution is not antitone at (" + std::to_string(x) + "," + std::to_string(y) + ")",
                    {x, y});

  Poset p;
  p.n_ = n;
  p.inv_ = raw.inv;
  p.bottom_ = raw.bottom;
  p.top_ = raw.top;
  p.labels_ = raw.labels;
  p.down_.assign(static_cast<size_t>(n), Subset(static_cast<size_t>(n)));
  p.up_.assign(static_cast<size_t>(n), Subset(static_cast<size_t>(n)));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (le(x, y)) {
        p.down_[static_cast<size_t>(y)].set(static_cast<size_t>(x));
        p.up_[static_cast<size_t>(x)].set(static_cast<size_t>(y));
      }
  return p;
}

Poset Poset::from_hasse(int n, const std::vector<std::pair<Element, Element>>& covers,
                        std::vector<Element> inv, Element bottom, Element top,
                        std::vector<std::string> labels) {
  if (n < 1) throw Error(ErrorKind::FormatError, "poset size must be at least 1");
  std::vector<std::vector<bool>> le(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (Element x = 0; x < n; ++x) le[static_cast<size_t>(x)][static_cast<size_t>(x)] = true;
  for (auto [a, b] : covers) {
    if (a < 0 || a >= n || b < 0 || b >= n)
      throw Error(ErrorKind::FormatError, "cover edge index out of range");
    le[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
  }
  // Warshall closure; validation then re-checks the axioms.
  for (Element k = 0; k < n; ++k)
    for (Element x = 0; x < n; ++x)
      if (le[static_cast<size_t>(x)][static_cast<size_t>(k)])
        for (Element y = 0; y < n; ++y)
          if (le[static_cast<size_t>(k)][static_cast<size_t>(y)]) le[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
  RawPoset raw;
  raw.size = n;
  raw.le = std::move(le);
  raw.inv = std::move(inv);
  raw.bottom = bottom;
  raw.top = top;
  raw.labels = std::move(labels);
  return validate(raw);
}

Subset Poset::lower_cone(const Subset& a) const {
  Subset out = full();
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) out &= down_[i];
  return out;
}

Subset Poset::upper_cone(const Subset& a) const {
  Subset out = full();
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i)) out &= up_[i];
  return out;
}

Subset Poset::inv_image(const Subset& a) const {
  Subset out(static_cast<size_t>(n_));
  for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i))
    out.set(static_cast<size_t>(inv_[i]));
  return out;
}

std::optional<Element> Poset::max_of(const Subset& s) const {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    if (s.is_subset_of(down_[i])) return static_cast<Element>(i);
  return std::nullopt;
}

std::optional<Element> Poset::min_of(const Subset& s) const {
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i))
    if (s.is_subset_of(up_[i])) return static_cast<Element>(i);
  return std::nullopt;
}

std::optional<Element> Poset::meet(Element a, Element b) const { return max_of(lower_cone(a, b)); }

std::optional<Element> Poset::join(Element a, Element b) const { return min_of(upper_cone(a, b)); }

std::string Poset::label(Element x) const {
  if (x >= 0 && static_cast<size_t>(x) < labels_.size() && !labels_[static_cast<size_t>(x)].empty())
    return labels_[static_cast<size_t>(x)];
  return std::to_string(x);
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  for (Element x = 0; x < n_; ++x)
    for (Element y = 0; y < n_; ++y) {
      if (x == y || !le(x, y)) continue;
      bool is_cover = true;
      for (Element z = 0; z < n_ && is_cover; ++z)
        if (z != x && z != y && le(x, z) && le(z, y)) is_cover = false;
      if (is_cover) out.emplace_back(x, y);
    }
  return out;
}

bool Poset::same_structure(const Poset& other) const {
  return n_ == other.n_ && down_ == other.down_ && inv_ == other.inv_ && bottom_ == other.bottom_ &&
         top_ == other.top_;
}

Subset cone(const Poset& p, const Subset& a, Cone dir) {
  return dir == Cone::lower ? p.lower_cone(a) : p.upper_cone(a);
}

const char* to_string(PosetProperty prop) {
  switch (prop) {
    case PosetProperty::distributive: return "distributive";
    case PosetProperty::modular: return "modular";
    case PosetProperty::paraorthomodular: return "paraorthomodular";
    case PosetProperty::orthoposet: return "orthoposet";
    case PosetProperty::orthomodular: return "orthomodular";
    case PosetProperty::pseudo_orthomodular: return "pseudo_orthomodular";
    case PosetProperty::sharply_paraorthomodular: return "sharply_paraorthomodular";
    case PosetProperty::cond12: return "cond12";
    case PosetProperty::cond13: return "cond13";
  }
  return "unknown";
}

std::optional<PosetProperty> poset_property_from_string(const std::string& name) {
  using P = PosetProperty;
  for (P p : {P::distributive, P::modular, P::paraorthomodular, P::orthoposet, P::orthomodular,
              P::pseudo_orthomodular, P::sharply_paraorthomodular, P::cond12, P::cond13})
    if (name == to_string(p)) return p;
  return std::nullopt;
}

std::vector<std::string> witness_variables(PosetProperty p) {
  switch (p) {
    case PosetProperty::distributive:
    case PosetProperty::modular:
      return {"x", "y", "z"};
    case PosetProperty::orthoposet:
      return {"x"};
    default:
      return {"x", "y"};
  }
}

namespace {

// L(S ∪ {z}) etc. computed with bitset intersections.
CheckResult check_distributive(const Poset& p) {
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Subset uxy = p.upper_cone(x, y);
      Subset luxy = p.lower_cone(uxy);
      for (Element z = 0; z < n; ++z) {
        Subset lhs = luxy & p.down(z);
        Subset t = (p.down(x) & p.down(z)) | (p.down(y) & p.down(z));
        Subset rhs = p.lower_cone(p.upper_cone(t));
        if (lhs != rhs) return CheckResult::fail({x, y, z});
      }
    }
  return CheckResult::ok();
}

CheckResult check_modular(const Poset& p) {
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Subset uxy = p.upper_cone(x, y);
      Subset luxy = p.lower_cone(uxy);
      for (Element z = 0; z < n; ++z) {
        if (!p.le(x, z)) continue;
        Subset lhs = luxy & p.down(z);
        Subset t = p.down(y) & p.down(z);
        t.set(static_cast<size_t>(x));
        Subset rhs = p.lower_cone(p.upper_cone(t));
        if (lhs != rhs) return CheckResult::fail({x, y, z});
      }
    }
  return CheckResult::ok();
}

CheckResult check_paraorthomodular(const Poset& p) {
  const int n = p.size();
  const Subset zero_only = p.single(p.bottom());
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y || !p.le(x, y)) continue;
      if ((p.down(p.inv(x)) & p.down(y)) == zero_only) return CheckResult::fail({x, y});
    }
  return CheckResult::ok();
}

CheckResult check_orthoposet(const Poset& p) {
  const int n = p.size();
  const Subset zero_only = p.single(p.bottom());
  const Subset one_only = p.single(p.top());
  for (Element x = 0; x < n; ++x) {
    if ((p.down(x) & p.down(p.inv(x))) != zero_only) return CheckResult::fail({x});
    if ((p.up(x) & p.up(p.inv(x))) != one_only) return CheckResult::fail({x});
  }
  return CheckResult::ok();
}

CheckResult check_cond12(const Poset& p) {
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.le(x, p.inv(y)) && !p.join(x, y)) return CheckResult::fail({x, y});
  return CheckResult::ok();
}

CheckResult check_cond13(const Poset& p) {
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.le(x, y) && !p.meet(p.inv(x), y)) return CheckResult::fail({x, y});
  return CheckResult::ok();
}

CheckResult check_orthomodular(const Poset& p) {
  if (auto c = check_orthoposet(p); !c) return c;
  if (auto c = check_cond12(p); !c) return c;
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (!p.le(x, y)) continue;
      auto m = p.meet(y, p.inv(x));
      if (!m)
        throw Error(ErrorKind::StructuralInconsistency,
                    "y /\\ x' missing although orthogonal joins exist", {x, y});
      auto j = p.join(x, *m);
      if (!j)
        throw Error(ErrorKind::StructuralInconsistency,
                    "x \\/ (y /\\ x') missing although orthogonal joins exist", {x, y});
      if (*j != y) return CheckResult::fail({x, y});
    }
  return CheckResult::ok();
}

CheckResult check_pseudo_orthomodular(const Poset& p) {
  if (auto c = check_orthoposet(p); !c) return c;
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Subset lxy = p.lower_cone(x, y);
      Subset s = p.upper_cone(lxy) & p.up(p.inv(y));
      Subset lhs = p.lower_cone(s) & p.down(y);
      if (lhs != lxy) return CheckResult::fail({x, y});
    }
  return CheckResult::ok();
}

CheckResult check_sharply(const Poset& p) {
  if (auto c = check_cond12(p); !c) return c;
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y || !p.le(x, y)) continue;
      auto m = p.meet(p.inv(x), y);
      if (m && *m == p.bottom()) return CheckResult::fail({x, y});
    }
  return CheckResult::ok();
}

}  // namespace

CheckResult check(const Poset& p, PosetProperty prop) {
  switch (prop) {
    case PosetProperty::distributive: return check_distributive(p);
    case PosetProperty::modular: return check_modular(p);
    case PosetProperty::paraorthomodular: return check_paraorthomodular(p);
    case PosetProperty::orthoposet: return check_orthoposet(p);
    case PosetProperty::orthomodular: return check_orthomodular(p);
    case PosetProperty::pseudo_orthomodular: return check_pseudo_orthomodular(p);
    case PosetProperty::sharply_paraorthomodular: return check_sharply(p);
    case PosetProperty::cond12: return check_cond12(p);
    case PosetProperty::cond13: return check_cond13(p);
  }
  throw Error(ErrorKind::UsageError, "unknown poset property");
}

CheckResult paraorthomodular_meet_form(const Poset& p) {
  const int n = p.size();
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (x == y || !p.le(x, y)) continue;
      auto m = p.meet(p.inv(x), y);
      if (m && *m == p.bottom()) return CheckResult::fail({x, y});
    }
  return CheckResult::ok();
}

std::optional<Element> partial_meet(const Poset& p, Element a, Element b) { return p.meet(a, b); }
std::optional<Element> partial_join(const Poset& p, Element a, Element b) { return p.join(a, b); }

Poset add_bounds(const Poset& p) {
  const int n = p.size();
  const int m = n + 2;
  RawPoset raw;
  raw.size = m;
  raw.le.assign(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
  for (Element x = 0; x < m; ++x) raw.le[static_cast<size_t>(x)][static_cast<size_t>(x)] = true;
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.le(x, y)) raw.le[static_cast<size_t>(x)][static_cast<size_t>(y)] = true;
  for (Element x = 0; x < m; ++x) {
    raw.le[static_cast<size_t>(n)][static_cast<size_t>(x)] = true;       // fresh bottom
    raw.le[static_cast<size_t>(x)][static_cast<size_t>(n) + 1] = true;   // fresh top
  }
  raw.inv.resize(static_cast<size_t>(m));
  for (Element x = 0; x < n; ++x) raw.inv[static_cast<size_t>(x)] = p.inv(x);
  raw.inv[static_cast<size_t>(n)] = n + 1;
  raw.inv[static_cast<size_t>(n) + 1] = n;
  raw.bottom = n;
  raw.top = n + 1;
  return Poset::validate(raw);
}

}  // namespace pomlab
