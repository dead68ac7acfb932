#include "pomlab/fixtures.hpp"

namespace pomlab::fixtures {

namespace {

Poset hasse(int n, std::vector<std::pair<Element, Element>> covers, std::vector<Element> inv,
            std::vector<std::string> labels) {
  return Poset::from_hasse(n, covers, std::move(inv), 0, n - 1, std::move(labels));
}

}  // namespace

Poset fig1() {
  // atoms a,b,c below every coatom c',b',a'
  std::vector<std::pair<Element, Element>> covers;
  for (Element atom : {1, 2, 3}) {
    covers.push_back({0, atom});
    for (Element coatom : {4, 5, 6}) covers.push_back({atom, coatom});
  }
  for (Element coatom : {4, 5, 6}) covers.push_back({coatom, 7});
  return hasse(8, covers, {7, 6, 5, 4, 3, 2, 1, 0},
               {"0", "a", "b", "c", "c'", "b'", "a'", "1"});
}

Poset fig2() {
  return hasse(6, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 5}, {4, 5}},
               {5, 4, 3, 2, 1, 0}, {"0", "a", "b", "b'", "a'", "1"});
}

Poset fig3() {
  // a: 1, b: 2, c: 3, d: 4, d': 5, c': 6, b': 7, a': 8
  std::vector<std::pair<Element, Element>> covers = {
      {0, 1}, {0, 2}, {0, 3}, {0, 4},
      {1, 5}, {1, 6}, {1, 7},          // a < d', c', b'
      {2, 5}, {2, 8},                  // b < d', a'
      {3, 5}, {3, 8},                  // c < d', a'
      {4, 6}, {4, 7}, {4, 8},          // d < c', b', a'
      {5, 9}, {6, 9}, {7, 9}, {8, 9},
  };
  return hasse(10, covers, {9, 8, 7, 6, 5, 4, 3, 2, 1, 0},
               {"0", "a", "b", "c", "d", "d'", "c'", "b'", "a'", "1"});
}

Poset b6() {
  return hasse(6, {{0, 1}, {1, 2}, {2, 5}, {0, 3}, {3, 4}, {4, 5}},
               {5, 4, 3, 2, 1, 0}, {"0", "a", "b", "b'", "a'", "1"});
}

Poset fig5() {
  // left chain 0 < c' < b' < a' < c < 1, right chain 0 < c' < a < b < c < 1
  return hasse(8,
               {{0, 1}, {1, 2}, {1, 3}, {2, 4}, {3, 5}, {4, 6}, {5, 6}, {6, 7}},
               {7, 6, 5, 4, 3, 2, 1, 0}, {"0", "c'", "b'", "a", "a'", "b", "c", "1"});
}

Directoid fig5_directoid() {
  Poset p = fig5();
  const int n = p.size();
  RawDirectoid raw;
  raw.size = n;
  raw.meet.assign(static_cast<size_t>(n), std::vector<Element>(static_cast<size_t>(n), 0));
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      if (p.le(x, y))
        raw.meet[static_cast<size_t>(x)][static_cast<size_t>(y)] = x;
      else if (p.le(y, x))
        raw.meet[static_cast<size_t>(x)][static_cast<size_t>(y)] = y;
      else
        raw.meet[static_cast<size_t>(x)][static_cast<size_t>(y)] = 0;  // all four incomparable pairs
    }
  raw.inv.resize(static_cast<size_t>(n));
  for (Element x = 0; x < n; ++x) raw.inv[static_cast<size_t>(x)] = p.inv(x);
  raw.zero = p.bottom();
  raw.one = p.top();
  return Directoid::validate(raw);
}

Poset diamond() {
  return hasse(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {3, 2, 1, 0}, {"0", "p", "q", "1"});
}

Poset chain(int n) {
  std::vector<std::pair<Element, Element>> covers;
  for (Element i = 0; i + 1 < n; ++i) covers.push_back({i, i + 1});
  std::vector<Element> inv(static_cast<size_t>(n));
  for (Element i = 0; i < n; ++i) inv[static_cast<size_t>(i)] = n - 1 - i;
  return hasse(n, covers, std::move(inv), {});
}

EffectAlgebra boolean_ea() {
  RawEffectAlgebra raw;
  raw.size = 4;
  const Element u = kUndefined;
  raw.oplus = {{0, 1, 2, 3}, {1, u, 3, u}, {2, 3, u, u}, {3, u, u, u}};
  raw.zero = 0;
  raw.one = 3;
  return EffectAlgebra::validate(raw);
}

EffectAlgebra mv3_ea() {
  RawEffectAlgebra raw;
  raw.size = 3;
  const Element u = kUndefined;
  raw.oplus = {{0, 1, 2}, {1, 2, u}, {2, u, u}};
  raw.zero = 0;
  raw.one = 2;
  return EffectAlgebra::validate(raw);
}

Poset poset_by_name(const std::string& name) {
  if (name == "fig1") return fig1();
  if (name == "fig2") return fig2();
  if (name == "fig3") return fig3();
  if (name == "fig4" || name == "b6") return b6();
  if (name == "fig5") return fig5();
  if (name == "diamond") return diamond();
  if (name == "chain2") return chain(2);
  throw Error(ErrorKind::UsageError, "unknown fixture " + name);
}

}  // namespace pomlab::fixtures
