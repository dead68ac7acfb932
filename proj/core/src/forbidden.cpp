#include "pomlab/forbidden.hpp"

#include <array>

namespace pomlab {

Subset B6Witness::as_subset(int n) const {
  Subset s(static_cast<size_t>(n));
  for (Element e : roles()) s.set(static_cast<size_t>(e));
  return s;
}

StrongSubsetResult is_strong_subset(const Poset& p, const Subset& a) {
  if (!a.test(static_cast<size_t>(p.bottom())) || !a.test(static_cast<size_t>(p.top())))
    return {false, {p.bottom(), p.top()}};
  if (!p.inv_image(a).is_subset_of(a)) {
    for (auto i = a.find_first(); i != Subset::npos; i = a.find_next(i))
      if (!a.test(static_cast<size_t>(p.inv(static_cast<Element>(i)))))
        return {false, {static_cast<Element>(i), p.inv(static_cast<Element>(i))}};
  }
  auto members = elements_of(a);
  for (Element x : members)
    for (Element y : members) {
      Subset inner_l = p.lower_cone(x, y) & a;   // L_A(x,y)
      Subset inner_u = p.upper_cone(x, y) & a;   // U_A(x,y)
      if (p.upper_cone(inner_l) != p.upper_cone(p.lower_cone(x, y))) return {false, {x, y}};
      if (p.lower_cone(inner_u) != p.lower_cone(p.upper_cone(x, y))) return {false, {x, y}};
    }
  return {};
}

bool verify_b6_witness(const Poset& p, const B6Witness& w) {
  auto roles = w.roles();
  // pairwise distinct
  for (size_t i = 0; i < roles.size(); ++i)
    for (size_t j = i + 1; j < roles.size(); ++j)
      if (roles[i] == roles[j]) return false;
  if (w.zero != p.bottom() || w.one != p.top()) return false;
  if (p.inv(w.a) != w.a_prime || p.inv(w.b) != w.b_prime) return false;
  // exact hexagon order on the six elements
  auto expect = [&](Element x, Element y, bool rel) { return p.le(x, y) == rel; };
  const Element z = w.zero, a = w.a, b = w.b, bp = w.b_prime, ap = w.a_prime, o = w.one;
  bool ok = expect(z, a, true) && expect(z, bp, true) && expect(a, b, true) && expect(bp, ap, true) &&
            expect(b, o, true) && expect(ap, o, true) &&
            expect(a, bp, false) && expect(bp, a, false) && expect(a, ap, false) &&
            expect(ap, a, false) && expect(b, bp, false) && expect(bp, b, false) &&
            expect(b, ap, false) && expect(ap, b, false) && expect(b, a, false) &&
            expect(ap, bp, false);
  if (!ok) return false;
  return static_cast<bool>(is_strong_subset(p, w.as_subset(p.size())));
}

std::optional<B6Witness> find_b6_witness(const Poset& p, B6SearchStats* stats) {
  const Subset zero_only = p.single(p.bottom());
  for (Element a = 0; a < p.size(); ++a)
    for (Element b = 0; b < p.size(); ++b) {
      if (a == b || !p.le(a, b)) continue;
      if ((p.down(p.inv(a)) & p.down(b)) != zero_only) continue;
      B6Witness w{p.bottom(), a, b, p.inv(b), p.inv(a), p.top()};
      if (verify_b6_witness(p, w)) return w;
      if (stats) ++stats->degenerate_pairs;
    }
  return std::nullopt;
}

}  // namespace pomlab
