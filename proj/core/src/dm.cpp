#include "pomlab/dm.hpp"

#include <algorithm>
#include <set>

namespace pomlab {

int DmCompletion::index_of(const Subset& closed) const {
  auto key = [](const Subset& s) { return std::make_pair(s.count(), s); };
  auto it = std::lower_bound(universe.begin(), universe.end(), closed,
                             [&](const Subset& a, const Subset& b) { return key(a) < key(b); });
  if (it != universe.end() && *it == closed) return static_cast<int>(it - universe.begin());
  return -1;
}

Subset DmCompletion::orthocomplement(const Subset& x) const {
  return source.lower_cone(source.inv_image(x));
}

DmCompletion dm_complete(const Poset& p) {
  const int n = p.size();
  std::set<Subset> family;
  std::vector<Subset> members;
  auto add = [&](const Subset& s) {
    if (family.insert(s).second) members.push_back(s);
  };
  add(p.full());  // L(empty set)
  for (Element x = 0; x < n; ++x) add(p.down(x));
  // Close under intersection; the family {L(A)} is exactly the
  // intersection closure of the principal cones plus the full set.
  for (size_t i = 0; i < members.size(); ++i)
    for (size_t j = 0; j < i; ++j) add(members[i] & members[j]);

  DmCompletion dm{p, {}, p, {}};
  dm.universe.assign(family.begin(), family.end());
  std::sort(dm.universe.begin(), dm.universe.end(), [](const Subset& a, const Subset& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  });

  const int m = static_cast<int>(dm.universe.size());
  RawPoset raw;
  raw.size = m;
  raw.le.assign(static_cast<size_t>(m), std::vector<bool>(static_cast<size_t>(m), false));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (dm.universe[static_cast<size_t>(i)].is_subset_of(dm.universe[static_cast<size_t>(j)]))
        raw.le[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
  raw.inv.resize(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    Subset perp = p.lower_cone(p.inv_image(dm.universe[static_cast<size_t>(i)]));
    int j = -1;
    for (int k = 0; k < m; ++k)
      if (dm.universe[static_cast<size_t>(k)] == perp) {
        j = k;
        break;
      }
    if (j < 0)
      throw Error(ErrorKind::StructuralInconsistency, "orthocomplement left the closed family", {i});
    raw.inv[static_cast<size_t>(i)] = j;
  }
  raw.bottom = 0;        // {bottom} is the least closed set
  raw.top = m - 1;       // the full set is the greatest and largest
  dm.lattice = Poset::validate(raw);

  dm.embedding.resize(static_cast<size_t>(n));
  for (Element x = 0; x < n; ++x) {
    int idx = dm.index_of(p.down(x));
    if (idx < 0) throw Error(ErrorKind::StructuralInconsistency, "principal cone missing", {x});
    dm.embedding[static_cast<size_t>(x)] = idx;
  }
  // the embedding is an order isomorphism onto the image
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y)
      if (p.le(x, y) != dm.lattice.le(dm.embedding[static_cast<size_t>(x)], dm.embedding[static_cast<size_t>(y)]))
        throw Error(ErrorKind::StructuralInconsistency, "embedding does not preserve the order", {x, y});
  return dm;
}

namespace {

void require_budget(const Poset& p, SweepMode mode, const DmOptions& opts) {
  int limit = mode == SweepMode::raw_subsets ? opts.raw_max_n : opts.reduced_max_n;
  if (p.size() > limit)
    throw Error(ErrorKind::BudgetExceeded,
                "structure size " + std::to_string(p.size()) + " exceeds the configured budget " +
                    std::to_string(limit) + " for this sweep mode");
}

Subset from_mask(const Poset& p, uint64_t mask) {
  Subset s(static_cast<size_t>(p.size()));
  for (int i = 0; i < p.size(); ++i)
    if (mask & (uint64_t{1} << i)) s.set(static_cast<size_t>(i));
  return s;
}

// WDC for one concrete pair (B, C) with B <= C.
bool wdc_pair(const Poset& p, const Subset& b, const Subset& c, const Subset& zero_only) {
  Subset antecedent = p.lower_cone(c) & p.lower_cone(p.inv_image(b));
  if (antecedent != zero_only) return true;
  // conclusion: L(C) <= U(B), i.e. L(C) within the lower cone of U(B)
  Subset lc = p.lower_cone(c);
  Subset lub = p.lower_cone(p.upper_cone(b));
  return lc.is_subset_of(lub);
}

bool flp_pair(const Poset& p, const Subset& x, const Subset& y, const Subset& zero_only) {
  Subset lx = p.lower_cone(x), ly = p.lower_cone(y);
  if (!(lx.is_proper_subset_of(ly))) return true;
  Subset lux = p.lower_cone(p.upper_cone(p.inv_image(x)));
  return (ly & lux) != zero_only;
}

}  // namespace

SubsetPairResult is_weakly_d_continuous(const Poset& p, SweepMode mode, const DmOptions& opts) {
  require_budget(p, mode, opts);
  const Subset zero_only = p.single(p.bottom());
  if (mode == SweepMode::raw_subsets) {
    const int n = p.size();
    for (uint64_t bm = 0; bm < (uint64_t{1} << n); ++bm) {
      Subset b = from_mask(p, bm);
      Subset ub = p.upper_cone(b);
      // C must lie inside U(B) for B <= C; walk the subsets of U(B)
      uint64_t ubm = 0;
      for (int i = 0; i < n; ++i)
        if (ub.test(static_cast<size_t>(i))) ubm |= uint64_t{1} << i;
      uint64_t cm = ubm;
      while (true) {
        Subset c = from_mask(p, cm);
        if (!wdc_pair(p, b, c, zero_only)) return {false, b, c};
        if (cm == 0) break;
        cm = (cm - 1) & ubm;
      }
    }
    return {};
  }
  DmCompletion dm = dm_complete(p);
  for (const Subset& b : dm.universe)
    for (const Subset& y : dm.universe) {
      if (!b.is_subset_of(y)) continue;
      Subset c = p.upper_cone(y);
      if (!wdc_pair(p, b, c, zero_only)) return {false, b, c};
    }
  return {};
}

SubsetPairResult satisfies_flp(const Poset& p, SweepMode mode, const DmOptions& opts) {
  require_budget(p, mode, opts);
  const Subset zero_only = p.single(p.bottom());
  if (mode == SweepMode::raw_subsets) {
    const int n = p.size();
    for (uint64_t xm = 0; xm < (uint64_t{1} << n); ++xm) {
      Subset x = from_mask(p, xm);
      for (uint64_t ym = 0; ym < (uint64_t{1} << n); ++ym) {
        Subset y = from_mask(p, ym);
        if (!flp_pair(p, x, y, zero_only)) return {false, x, y};
      }
    }
    return {};
  }
  DmCompletion dm = dm_complete(p);
  for (const Subset& cx : dm.universe)
    for (const Subset& cy : dm.universe) {
      Subset x = p.upper_cone(cx), y = p.upper_cone(cy);
      if (!flp_pair(p, x, y, zero_only)) return {false, x, y};
    }
  return {};
}

bool is_complete_lattice(const Poset& p) {
  for (Element x = 0; x < p.size(); ++x)
    for (Element y = 0; y < p.size(); ++y)
      if (!p.meet(x, y) || !p.join(x, y)) return false;
  return true;  // finite bounded lattices are complete
}

std::optional<Element> sup_of(const Poset& p, const Subset& s) { return p.min_of(p.upper_cone(s)); }

std::optional<Element> inf_of(const Poset& p, const Subset& s) { return p.max_of(p.lower_cone(s)); }

bool is_doubly_dense(const Subset& x, const Poset& l) {
  if (!is_complete_lattice(l))
    throw Error(ErrorKind::NotACompleteLattice, "ambient structure is not a complete lattice");
  if (!x.test(static_cast<size_t>(l.bottom())) || !x.test(static_cast<size_t>(l.top()))) return false;
  if (!l.inv_image(x).is_subset_of(x)) return false;
  for (Element a = 0; a < l.size(); ++a) {
    auto s = sup_of(l, l.down(a) & x);
    auto i = inf_of(l, l.up(a) & x);
    if (!s || *s != a || !i || *i != a) return false;
  }
  return true;
}

}  // namespace pomlab
