#include "pomlab/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <thread>
#include <unordered_set>

namespace pomlab {

namespace {

constexpr int kMaxN = 12;  // hard ceiling for canonical labeling inputs

// Relational structure handed to the canonical labeler: a binary relation,
// an optional unary partner map (the involution), and pin classes that a
// relabeling must preserve (bounds).
struct CanonStruct {
  int n = 0;
  std::array<uint16_t, kMaxN> rel{};
  std::array<int8_t, kMaxN> partner{};  // -1 when absent
  std::array<int8_t, kMaxN> pin{};
};

bool rel_at(const CanonStruct& s, int i, int j) { return (s.rel[static_cast<size_t>(i)] >> j) & 1; }

// Invariant color classes, refined to a fixpoint. Signatures are strings so
// that class order is label-independent.
std::vector<int> invariant_colors(const CanonStruct& s, std::vector<std::vector<int>>* classes_out) {
  const int n = s.n;
  std::vector<std::string> sig(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    int down = 0, up = 0;
    for (int j = 0; j < n; ++j) {
      if (rel_at(s, j, i)) ++down;
      if (rel_at(s, i, j)) ++up;
    }
    sig[static_cast<size_t>(i)] = std::string(1, static_cast<char>('A' + s.pin[static_cast<size_t>(i)])) +
                                  std::to_string(down) + "," + std::to_string(up) + "," +
                                  (s.partner[static_cast<size_t>(i)] == i ? "s" : "p");
  }
  std::vector<int> color(static_cast<size_t>(n), 0);
  for (int round = 0; round < n; ++round) {
    // rank-compress current signatures
    std::vector<std::string> sorted(sig);
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    std::vector<int> next(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      next[static_cast<size_t>(i)] = static_cast<int>(
          std::lower_bound(sorted.begin(), sorted.end(), sig[static_cast<size_t>(i)]) - sorted.begin());
    if (next == color && round > 0) break;
    color = next;
    // refine: neighbour color multisets and the partner's color
    for (int i = 0; i < n; ++i) {
      std::vector<int> downc, upc;
      for (int j = 0; j < n; ++j) {
        if (rel_at(s, j, i)) downc.push_back(color[static_cast<size_t>(j)]);
        if (rel_at(s, i, j)) upc.push_back(color[static_cast<size_t>(j)]);
      }
      std::sort(downc.begin(), downc.end());
      std::sort(upc.begin(), upc.end());
      std::string t = std::to_string(color[static_cast<size_t>(i)]) + "|";
      for (int c : downc) t += std::to_string(c) + ".";
      t += "|";
      for (int c : upc) t += std::to_string(c) + ".";
      t += "|";
      int pr = s.partner[static_cast<size_t>(i)];
      t += pr < 0 ? "-" : std::to_string(color[static_cast<size_t>(pr)]);
      sig[static_cast<size_t>(i)] = t;
    }
  }
  if (classes_out) {
    int k = *std::max_element(color.begin(), color.end()) + 1;
    classes_out->assign(static_cast<size_t>(k), {});
    for (int i = 0; i < n; ++i) (*classes_out)[static_cast<size_t>(color[static_cast<size_t>(i)])].push_back(i);
  }
  return color;
}

// One byte per (position, earlier-position) pair: relation both ways plus
// partner matches.
uint8_t pair_byte(const CanonStruct& s, int a, int b) {
  uint8_t v = 0;
  if (rel_at(s, a, b)) v |= 1;
  if (rel_at(s, b, a)) v |= 2;
  if (s.partner[static_cast<size_t>(a)] == b) v |= 4;
  if (s.partner[static_cast<size_t>(b)] == a) v |= 8;
  return v;
}

struct CanonSearch {
  const CanonStruct& s;
  std::vector<int> pos_class;          // class id expected at each position
  std::vector<std::vector<int>> classes;
  std::vector<int> color;
  std::vector<int> placed;             // placed[p] = original element at position p
  std::vector<bool> used;
  std::vector<uint8_t> current, best;
  bool have_best = false;

  explicit CanonSearch(const CanonStruct& st) : s(st) {
    color = invariant_colors(st, &classes);
    for (size_t c = 0; c < classes.size(); ++c)
      for (size_t k = 0; k < classes[c].size(); ++k) pos_class.push_back(static_cast<int>(c));
    placed.assign(static_cast<size_t>(st.n), -1);
    used.assign(static_cast<size_t>(st.n), false);
  }

  // The whole prefix is re-compared against the live best at every node;
  // best can change mid-search, so no comparison state is carried down.
  void dfs(int p) {
    const int n = s.n;
    if (p == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    size_t chunk_begin = current.size();
    for (int e : classes[static_cast<size_t>(pos_class[static_cast<size_t>(p)])]) {
      if (used[static_cast<size_t>(e)]) continue;
      current.resize(chunk_begin);
      for (int q = 0; q < p; ++q) current.push_back(pair_byte(s, e, placed[static_cast<size_t>(q)]));
      current.push_back(pair_byte(s, e, e));
      if (have_best &&
          std::lexicographical_compare(best.begin(), best.begin() + static_cast<long>(current.size()),
                                       current.begin(), current.end()))
        continue;  // prefix already larger than the best
      placed[static_cast<size_t>(p)] = e;
      used[static_cast<size_t>(e)] = true;
      dfs(p + 1);
      used[static_cast<size_t>(e)] = false;
      placed[static_cast<size_t>(p)] = -1;
    }
    current.resize(chunk_begin);
  }

  std::string run() {
    dfs(0);
    std::string out;
    out.push_back(static_cast<char>(s.n));
    for (size_t c = 0; c < classes.size(); ++c) out.push_back(static_cast<char>(classes[c].size()));
    out.push_back('#');
    out.append(best.begin(), best.end());
    return out;
  }
};

std::string canonical_bytes(const CanonStruct& s) {
  if (s.n > kMaxN) throw Error(ErrorKind::CapExceeded, "structure too large for canonical labeling");
  CanonSearch search(s);
  return search.run();
}

CanonStruct canon_of_poset(const Poset& p) {
  CanonStruct s;
  s.n = p.size();
  for (Element x = 0; x < p.size(); ++x) {
    s.partner[static_cast<size_t>(x)] = static_cast<int8_t>(p.inv(x));
    s.pin[static_cast<size_t>(x)] = 0;
    for (Element y = 0; y < p.size(); ++y)
      if (p.le(x, y)) s.rel[static_cast<size_t>(x)] |= static_cast<uint16_t>(1u << y);
  }
  s.pin[static_cast<size_t>(p.bottom())] |= 1;
  s.pin[static_cast<size_t>(p.top())] |= 2;
  return s;
}

// ---------------------------------------------------------------------------
// inner posets (the structure strictly between the bounds)

struct SmallPoset {
  int m = 0;
  std::array<uint16_t, kMaxN> below{};  // strict down-sets
};

std::string small_poset_key(const SmallPoset& sp) {
  CanonStruct s;
  s.n = sp.m;
  for (int i = 0; i < sp.m; ++i) {
    s.partner[static_cast<size_t>(i)] = -1;
    s.rel[static_cast<size_t>(i)] = sp.below[static_cast<size_t>(i)];
  }
  return canonical_bytes(s);
}

std::vector<SmallPoset> inner_posets(int m) {
  std::vector<SmallPoset> level = {SmallPoset{}};
  for (int k = 1; k <= m; ++k) {
    std::vector<SmallPoset> next;
    std::unordered_set<std::string> seen;
    for (const SmallPoset& p : level) {
      const uint16_t all = static_cast<uint16_t>((1u << (k - 1)) - 1);
      for (uint16_t ideal = 0;; ++ideal) {
        bool closed = true;
        for (int i = 0; i < k - 1 && closed; ++i)
          if ((ideal >> i) & 1)
            if ((p.below[static_cast<size_t>(i)] & ~ideal) != 0) closed = false;
        if (closed) {
          SmallPoset q = p;
          q.m = k;
          q.below[static_cast<size_t>(k - 1)] = ideal;
          if (seen.insert(small_poset_key(q)).second) next.push_back(q);
        }
        if (ideal == all) break;
      }
    }
    level = std::move(next);
  }
  return level;
}

// Involutive order-reversing bijections of an inner poset.
void anti_automorphisms(const SmallPoset& p, std::vector<std::array<int8_t, kMaxN>>& out) {
  const int m = p.m;
  std::array<uint16_t, kMaxN> above{};
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((p.below[static_cast<size_t>(j)] >> i) & 1) above[static_cast<size_t>(i)] |= static_cast<uint16_t>(1u << j);
  std::array<int8_t, kMaxN> sigma{};
  sigma.fill(-1);

  auto consistent = [&](int i, int j) {
    // sigma(i) = j demands |below(i)| = |above(j)| and dually
    if (__builtin_popcount(p.below[static_cast<size_t>(i)]) != __builtin_popcount(above[static_cast<size_t>(j)]))
      return false;
    if (__builtin_popcount(above[static_cast<size_t>(i)]) != __builtin_popcount(p.below[static_cast<size_t>(j)]))
      return false;
    // order reversal against every already assigned element
    for (int k = 0; k < m; ++k) {
      if (sigma[static_cast<size_t>(k)] < 0 || k == i) continue;
      bool k_lt_i = (p.below[static_cast<size_t>(i)] >> k) & 1;
      bool i_lt_k = (p.below[static_cast<size_t>(k)] >> i) & 1;
      bool sj_lt_sk = (p.below[static_cast<size_t>(sigma[static_cast<size_t>(k)])] >> j) & 1;
      bool sk_lt_sj = (p.below[static_cast<size_t>(j)] >> sigma[static_cast<size_t>(k)]) & 1;
      if (k_lt_i != sj_lt_sk) return false;  // k < i iff sigma(i) < sigma(k)
      if (i_lt_k != sk_lt_sj) return false;
    }
    return true;
  };

  std::array<bool, kMaxN> used{};
  auto rec = [&](auto&& self, int i) -> void {
    while (i < m && sigma[static_cast<size_t>(i)] >= 0) ++i;
    if (i == m) {
      out.push_back(sigma);
      return;
    }
    for (int j = 0; j < m; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      if (j == i) {
        if (!consistent(i, i)) continue;
        sigma[static_cast<size_t>(i)] = static_cast<int8_t>(i);
        used[static_cast<size_t>(i)] = true;
        self(self, i + 1);
        sigma[static_cast<size_t>(i)] = -1;
        used[static_cast<size_t>(i)] = false;
      } else {
        if (!consistent(i, j) || !consistent(j, i)) continue;
        sigma[static_cast<size_t>(i)] = static_cast<int8_t>(j);
        sigma[static_cast<size_t>(j)] = static_cast<int8_t>(i);
        used[static_cast<size_t>(i)] = used[static_cast<size_t>(j)] = true;
        self(self, i + 1);
        sigma[static_cast<size_t>(i)] = sigma[static_cast<size_t>(j)] = -1;
        used[static_cast<size_t>(i)] = used[static_cast<size_t>(j)] = false;
      }
    }
  };
  rec(rec, 0);
}

Poset assemble(const SmallPoset& inner, const std::array<int8_t, kMaxN>& sigma) {
  const int m = inner.m;
  const int n = m + 2;
  RawPoset raw;
  raw.size = n;
  raw.le.assign(static_cast<size_t>(n), std::vector<bool>(static_cast<size_t>(n), false));
  for (int i = 0; i < n; ++i) raw.le[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if ((inner.below[static_cast<size_t>(j)] >> i) & 1)
        raw.le[static_cast<size_t>(i) + 1][static_cast<size_t>(j) + 1] = true;
  for (int i = 0; i < n; ++i) {
    raw.le[0][static_cast<size_t>(i)] = true;
    raw.le[static_cast<size_t>(i)][static_cast<size_t>(n) - 1] = true;
  }
  raw.inv.resize(static_cast<size_t>(n));
  raw.inv[0] = n - 1;
  raw.inv[static_cast<size_t>(n) - 1] = 0;
  for (int i = 0; i < m; ++i) raw.inv[static_cast<size_t>(i) + 1] = sigma[static_cast<size_t>(i)] + 1;
  raw.bottom = 0;
  raw.top = n - 1;
  return Poset::validate(raw);
}

std::mutex cache_mutex;

const std::vector<Poset>& poset_cache(int n) {
  static std::map<int, std::unique_ptr<std::vector<Poset>>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto result = std::make_unique<std::vector<Poset>>();
  if (n == 1) {
    RawPoset raw;
    raw.size = 1;
    raw.le = {{true}};
    raw.inv = {0};
    raw.bottom = raw.top = 0;
    result->push_back(Poset::validate(raw));
  } else {
    std::map<std::string, Poset> by_form;
    for (const SmallPoset& inner : inner_posets(n - 2)) {
      std::vector<std::array<int8_t, kMaxN>> sigmas;
      anti_automorphisms(inner, sigmas);
      for (const auto& sigma : sigmas) {
        Poset p = assemble(inner, sigma);
        by_form.emplace(canonical_bytes(canon_of_poset(p)), std::move(p));
      }
    }
    for (auto& [key, p] : by_form) result->push_back(std::move(p));
  }
  auto [pos, inserted] = cache.emplace(n, std::move(result));
  return *pos->second;
}

}  // namespace

CanonicalForm canonical_form(const Poset& p) { return {canonical_bytes(canon_of_poset(p))}; }

std::vector<std::vector<Element>> ortho_automorphisms(const Poset& p) {
  const int n = p.size();
  std::vector<std::vector<Element>> out;
  std::vector<Element> perm(static_cast<size_t>(n), -1);
  std::vector<bool> used(static_cast<size_t>(n), false);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      out.push_back(perm);
      return;
    }
    for (Element j = 0; j < n; ++j) {
      if (used[static_cast<size_t>(j)]) continue;
      if ((i == p.bottom()) != (j == p.bottom())) continue;
      if ((i == p.top()) != (j == p.top())) continue;
      bool ok = true;
      for (Element k = 0; ok && k < i; ++k) {
        if (p.le(i, k) != p.le(j, perm[static_cast<size_t>(k)])) ok = false;
        if (p.le(k, i) != p.le(perm[static_cast<size_t>(k)], j)) ok = false;
      }
      if (ok && p.inv(i) < i && perm[static_cast<size_t>(p.inv(i))] != p.inv(j)) ok = false;
      if (!ok) continue;
      perm[static_cast<size_t>(i)] = j;
      used[static_cast<size_t>(j)] = true;
      self(self, i + 1);
      used[static_cast<size_t>(j)] = false;
      perm[static_cast<size_t>(i)] = -1;
    }
  };
  rec(rec, 0);
  // drop maps that break the involution on partners placed later
  std::vector<std::vector<Element>> checked;
  for (const auto& f : out) {
    bool ok = true;
    for (Element x = 0; ok && x < n; ++x)
      if (f[static_cast<size_t>(p.inv(x))] != p.inv(f[static_cast<size_t>(x)])) ok = false;
    if (ok) checked.push_back(f);
  }
  return checked;
}

const std::vector<Poset>& all_posets(int n, const EnumOptions& opts) {
  if (n < 1) throw Error(ErrorKind::UsageError, "size must be positive");
  if (n > opts.poset_cap)
    throw Error(ErrorKind::CapExceeded,
                "poset enumeration capped at n = " + std::to_string(opts.poset_cap));
  if (n > kMaxN) throw Error(ErrorKind::CapExceeded, "hard ceiling for enumeration is n = 12");
  return poset_cache(n);
}

void enumerate_posets(int n, const std::vector<PosetProperty>& filters,
                      const std::function<bool(const Poset&)>& fn, const EnumOptions& opts) {
  const auto& list = all_posets(n, opts);
  if (filters.empty()) {
    for (const Poset& p : list)
      if (!fn(p)) return;
    return;
  }
  std::vector<char> keep(list.size(), 1);
  // property checks are independent per structure
  auto eval = [&](size_t i) {
    for (PosetProperty prop : filters)
      if (!check(list[i], prop)) {
        keep[i] = 0;
        return;
      }
  };
  if (opts.threads > 1) {
    std::vector<std::thread> workers;
    std::atomic<size_t> next{0};
    for (int t = 0; t < opts.threads; ++t)
      workers.emplace_back([&] {
        for (size_t i = next.fetch_add(1); i < list.size(); i = next.fetch_add(1)) eval(i);
      });
    for (auto& w : workers) w.join();
  } else {
    for (size_t i = 0; i < list.size(); ++i) eval(i);
  }
  for (size_t i = 0; i < list.size(); ++i)
    if (keep[i] && !fn(list[i])) return;
}

void enumerate_directoids(const Poset& p, const AssignmentPolicy& policy,
                          const std::function<bool(const Directoid&)>& fn, const EnumOptions& opts,
                          CapBehavior on_cap) {
  for_each_assigned_directoid(p, policy, opts.directoid_fanout_cap, fn, on_cap);
}

// ---------------------------------------------------------------------------
// effect algebras, enumerated order-first

namespace {

std::string table_key(const std::vector<std::vector<Element>>& t) {
  std::string s;
  for (const auto& row : t)
    for (Element v : row) s.push_back(static_cast<char>(v + 2));
  return s;
}

struct EaSearch {
  const Poset& p;
  int n;
  std::vector<std::vector<Element>> table;
  std::vector<Subset> row_used;  // values already present per row (cancellativity)
  std::vector<std::pair<Element, Element>> cells;
  std::vector<std::vector<std::vector<Element>>> results;  // accepted tables

  explicit EaSearch(const Poset& poset)
      : p(poset),
        n(poset.size()),
        table(static_cast<size_t>(poset.size()),
              std::vector<Element>(static_cast<size_t>(poset.size()), kUndefined)),
        row_used(static_cast<size_t>(poset.size()), Subset(static_cast<size_t>(poset.size()))) {}

  void put(Element a, Element b, Element v) {
    table[static_cast<size_t>(a)][static_cast<size_t>(b)] = v;
    table[static_cast<size_t>(b)][static_cast<size_t>(a)] = v;
    row_used[static_cast<size_t>(a)].set(static_cast<size_t>(v));
    if (a != b) row_used[static_cast<size_t>(b)].set(static_cast<size_t>(v));
  }
  void erase(Element a, Element b, Element v) {
    table[static_cast<size_t>(a)][static_cast<size_t>(b)] = kUndefined;
    table[static_cast<size_t>(b)][static_cast<size_t>(a)] = kUndefined;
    row_used[static_cast<size_t>(a)].reset(static_cast<size_t>(v));
    if (a != b) row_used[static_cast<size_t>(b)].reset(static_cast<size_t>(v));
  }

  void prepare() {
    const Element zero = p.bottom(), one = p.top();
    for (Element x = 0; x < n; ++x) put(zero, x, x);  // includes zero + one = one
    for (Element x = 0; x < n; ++x)
      if (x != zero && table[static_cast<size_t>(x)][static_cast<size_t>(p.inv(x))] == kUndefined)
        put(x, p.inv(x), one);
    for (Element a = 0; a < n; ++a)
      for (Element b = a; b < n; ++b) {
        if (a == zero || b == zero) continue;
        if (!p.le(a, p.inv(b))) continue;                                   // domain fixed by the order
        if (table[static_cast<size_t>(a)][static_cast<size_t>(b)] != kUndefined) continue;
        cells.emplace_back(a, b);
      }
  }

  void dfs(size_t k) {
    if (k == cells.size()) {
      finish();
      return;
    }
    auto [a, b] = cells[k];
    Subset candidates = p.upper_cone(a, b);
    for (auto v = candidates.find_first(); v != Subset::npos; v = candidates.find_next(v)) {
      Element e = static_cast<Element>(v);
      if (e == a || e == b || e == p.top()) continue;  // sum above both; 1 only against complements
      if (row_used[static_cast<size_t>(a)].test(v)) continue;
      if (a != b && row_used[static_cast<size_t>(b)].test(v)) continue;
      put(a, b, e);
      dfs(k + 1);
      erase(a, b, e);
    }
  }

  void finish() {
    RawEffectAlgebra raw{n, table, p.bottom(), p.top()};
    try {
      EffectAlgebra ea = EffectAlgebra::validate(raw);
      // the domain rule pins the induced order to p; anything else is a bug
      if (!induced_order(ea).same_structure(p))
        throw Error(ErrorKind::StructuralInconsistency,
                    "validated table induced a different order than it was built over");
      results.push_back(table);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::StructuralInconsistency) throw;
      // otherwise the candidate table fails an axiom; drop it
    }
  }
};

const std::vector<EffectAlgebra>& ea_cache(int n, const EnumOptions& opts) {
  static std::map<int, std::unique_ptr<std::vector<EffectAlgebra>>> cache;
  static std::mutex ea_mutex;
  std::lock_guard<std::mutex> lock(ea_mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto result = std::make_unique<std::vector<EffectAlgebra>>();
  EnumOptions local = opts;
  local.poset_cap = std::max(opts.poset_cap, n);
  for (const Poset& p : all_posets(n, local)) {
    EaSearch search(p);
    search.prepare();
    search.dfs(0);
    if (search.results.empty()) continue;
    // dedup within the poset by the ortho-automorphism orbit of the table
    auto auts = ortho_automorphisms(p);
    std::map<std::string, std::vector<std::vector<Element>>> reps;
    for (const auto& t : search.results) {
      std::string best;
      for (const auto& f : auts) {
        std::vector<std::vector<Element>> moved(static_cast<size_t>(p.size()),
                                                std::vector<Element>(static_cast<size_t>(p.size())));
        for (Element x = 0; x < p.size(); ++x)
          for (Element y = 0; y < p.size(); ++y) {
            Element v = t[static_cast<size_t>(x)][static_cast<size_t>(y)];
            moved[static_cast<size_t>(f[static_cast<size_t>(x)])][static_cast<size_t>(f[static_cast<size_t>(y)])] =
                v == kUndefined ? kUndefined : f[static_cast<size_t>(v)];
          }
        std::string key = table_key(moved);
        if (best.empty() || key < best) best = key;
      }
      if (!reps.count(best)) reps.emplace(best, t);
    }
    for (auto& [key, t] : reps)
      result->push_back(EffectAlgebra::validate(RawEffectAlgebra{p.size(), t, p.bottom(), p.top()}));
  }
  auto [pos, inserted] = cache.emplace(n, std::move(result));
  return *pos->second;
}

}  // namespace

CanonicalForm canonical_form(const Directoid& d) {
  const int n = d.size();
  if (n > kMaxN) throw Error(ErrorKind::CapExceeded, "structure too large for canonical labeling");
  std::vector<Element> perm(static_cast<size_t>(n));
  std::vector<Element> inner;
  for (Element x = 0; x < n; ++x)
    if (x != d.zero() && x != d.one()) inner.push_back(x);
  std::string best;
  std::sort(inner.begin(), inner.end());
  do {
    perm[static_cast<size_t>(d.zero())] = 0;
    perm[static_cast<size_t>(d.one())] = n - 1;
    int at = (n > 1) ? 1 : 0;
    for (Element x : inner) perm[static_cast<size_t>(x)] = at++;
    std::string key(static_cast<size_t>(n) * static_cast<size_t>(n) + static_cast<size_t>(n), 0);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y)
        key[static_cast<size_t>(perm[static_cast<size_t>(x)]) * static_cast<size_t>(n) +
            static_cast<size_t>(perm[static_cast<size_t>(y)])] =
            static_cast<char>(perm[static_cast<size_t>(d.meet(x, y))] + 1);
      key[static_cast<size_t>(n) * static_cast<size_t>(n) + static_cast<size_t>(perm[static_cast<size_t>(x)])] =
          static_cast<char>(perm[static_cast<size_t>(d.inv(x))] + 1);
    }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(inner.begin(), inner.end()));
  return {std::string(1, static_cast<char>(n)) + best};
}

CanonicalForm canonical_form(const EffectAlgebra& a) {
  const int n = a.size();
  if (n > kMaxN) throw Error(ErrorKind::CapExceeded, "structure too large for canonical labeling");
  std::vector<Element> perm(static_cast<size_t>(n));
  std::vector<Element> inner;
  for (Element x = 0; x < n; ++x)
    if (x != a.zero() && x != a.one()) inner.push_back(x);
  std::string best;
  std::sort(inner.begin(), inner.end());
  do {
    perm[static_cast<size_t>(a.zero())] = 0;
    perm[static_cast<size_t>(a.one())] = n - 1;
    int at = (n > 1) ? 1 : 0;
    for (Element x : inner) perm[static_cast<size_t>(x)] = at++;
    std::string key(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y) {
        Element v = a.defined(x, y) ? a.oplus(x, y) : kUndefined;
        key[static_cast<size_t>(perm[static_cast<size_t>(x)]) * static_cast<size_t>(n) +
            static_cast<size_t>(perm[static_cast<size_t>(y)])] =
            static_cast<char>((v == kUndefined ? 0 : perm[static_cast<size_t>(v)] + 1));
      }
    if (best.empty() || key < best) best = key;
  } while (std::next_permutation(inner.begin(), inner.end()));
  return {std::string(1, static_cast<char>(n)) + best};
}

void enumerate_effect_algebras(int n, const std::function<bool(const EffectAlgebra&)>& fn,
                               const EnumOptions& opts) {
  for (const EffectAlgebra& a : all_effect_algebras(n, opts))
    if (!fn(a)) return;
}

const std::vector<EffectAlgebra>& all_effect_algebras(int n, const EnumOptions& opts) {
  if (n < 1) throw Error(ErrorKind::UsageError, "size must be positive");
  if (n > opts.ea_cap)
    throw Error(ErrorKind::CapExceeded,
                "effect algebra enumeration capped at n = " + std::to_string(opts.ea_cap));
  return ea_cache(n, opts);
}

std::optional<Poset> search_counterexample(const std::vector<PosetProperty>& antecedent,
                                           const std::vector<PosetProperty>& consequent, int n_max,
                                           const EnumOptions& opts) {
  for (int n = 1; n <= n_max; ++n) {
    for (const Poset& p : all_posets(n, opts)) {
      bool ante = true;
      for (PosetProperty prop : antecedent)
        if (!check(p, prop)) {
          ante = false;
          break;
        }
      if (!ante) continue;
      for (PosetProperty prop : consequent)
        if (!check(p, prop)) return p;
    }
  }
  return std::nullopt;
}

}  // namespace pomlab
