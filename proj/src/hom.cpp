#include "nilloop/hom.hpp"

#include <algorithm>
#include <map>

namespace nilloop {

Homomorphism Homomorphism::checked(const FiniteLoop& src, const FiniteLoop& dst,
                                   std::vector<int32_t> map) {
  if (map.size() != static_cast<size_t>(src.order()))
    throw validation_error("BadParameter", "map length does not match source order");
  for (int32_t v : map)
    if (v < 0 || v >= dst.order())
      throw validation_error("BadParameter", "map value out of range");
  if (map[0] != 0)
    throw validation_error("NotHomomorphism", "map does not send identity to identity");
  const int n = src.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (map[src.mul(x, y)] != dst.mul(map[x], map[y]))
        throw validation_error("NotHomomorphism",
                               "map breaks at (" + std::to_string(x) + "," +
                                   std::to_string(y) + ")");

  Homomorphism h;
  h.src_ = std::make_shared<FiniteLoop>(src);
  h.dst_ = std::make_shared<FiniteLoop>(dst);
  h.map_ = std::move(map);
  std::vector<uint8_t> hit(dst.order(), 0);
  for (int32_t v : h.map_) hit[v] = 1;
  h.surjective_ = std::all_of(hit.begin(), hit.end(), [](uint8_t b) { return b; });
  return h;
}

Homomorphism Homomorphism::identity(const FiniteLoop& L) {
  std::vector<int32_t> id(L.order());
  for (int i = 0; i < L.order(); ++i) id[i] = i;
  return checked(L, L, std::move(id));
}

ElemSet Homomorphism::kernel() const {
  ElemSet k(src_->order());
  for (int x = 0; x < src_->order(); ++x)
    if (map_[x] == 0) k.set(x);
  return k;
}

ElemSet Homomorphism::image() const {
  ElemSet im(dst_->order());
  for (int32_t v : map_) im.set(v);
  return im;
}

Homomorphism compose(const Homomorphism& g, const Homomorphism& f) {
  if (!f.target().same_table(g.source()))
    throw validation_error("BadParameter", "composition mismatch");
  std::vector<int32_t> m(f.source().order());
  for (int x = 0; x < f.source().order(); ++x) m[x] = g.map_[f.map_[x]];
  return Homomorphism::checked(f.source(), g.target(), std::move(m));
}

std::vector<int> generating_sequence(const FiniteLoop& L) {
  const int n = L.order();
  std::vector<int> gens;
  std::vector<uint8_t> in(n, 0);
  in[0] = 1;
  int covered = 1;
  auto close = [&] {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int a = 0; a < n; ++a) {
        if (!in[a]) continue;
        for (int b = 0; b < n; ++b) {
          if (!in[b]) continue;
          int c = L.mul(a, b);
          if (!in[c]) {
            in[c] = 1;
            ++covered;
            changed = true;
          }
        }
      }
    }
  };
  while (covered < n) {
    int pick = 0;
    while (in[pick]) ++pick;
    gens.push_back(pick);
    in[pick] = 1;
    ++covered;
    close();
  }
  return gens;
}

namespace {

// Propagates a partial map under m[a*b] = m[a]*m[b]; returns false on clash.
bool propagate(const FiniteLoop& X, const FiniteLoop& Y, std::vector<int32_t>& m) {
  const int n = X.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a = 0; a < n; ++a) {
      if (m[a] < 0) continue;
      for (int b = 0; b < n; ++b) {
        if (m[b] < 0) continue;
        int c = X.mul(a, b);
        int v = Y.mul(m[a], m[b]);
        if (m[c] < 0) {
          m[c] = v;
          changed = true;
        } else if (m[c] != v) {
          return false;
        }
      }
    }
  }
  return true;
}

void search_homs(const FiniteLoop& X, const FiniteLoop& Y,
                 const std::vector<int>& gens, size_t gi,
                 const std::vector<int32_t>& partial,
                 std::vector<Homomorphism>& out) {
  bool total = true;
  for (int32_t v : partial)
    if (v < 0) {
      total = false;
      break;
    }
  if (gi == gens.size()) {
    if (total) out.push_back(Homomorphism::checked(X, Y, partial));
    return;
  }
  if (partial[gens[gi]] >= 0) {
    search_homs(X, Y, gens, gi + 1, partial, out);
    return;
  }
  for (int y = 0; y < Y.order(); ++y) {
    std::vector<int32_t> next = partial;
    next[gens[gi]] = y;
    if (propagate(X, Y, next)) search_homs(X, Y, gens, gi + 1, next, out);
  }
}

} // namespace

std::vector<Homomorphism> enumerate_homs(const FiniteLoop& X, const FiniteLoop& Y,
                                         int order_guard) {
  if (X.order() > order_guard)
    throw guard_error("TooLarge", "hom enumeration guarded at order " +
                                      std::to_string(order_guard));
  std::vector<int> gens = generating_sequence(X);
  std::vector<int32_t> start(X.order(), -1);
  start[0] = 0;
  std::vector<Homomorphism> out;
  if (!propagate(X, Y, start)) return out;
  search_homs(X, Y, gens, 0, start, out);
  // canonical order: lexicographic on the map
  std::sort(out.begin(), out.end(),
            [](const Homomorphism& a, const Homomorphism& b) {
              return a.map() < b.map();
            });
  return out;
}

namespace {

std::vector<int> element_orders(const FiniteLoop& L) {
  // order of x under left powers x, x*x, x*(x*x), ... (well defined for the
  // isomorphism-invariant fingerprint even without associativity)
  std::vector<int> ord(L.order());
  for (int x = 0; x < L.order(); ++x) {
    int acc = x, k = 1;
    while (acc != 0 && k <= L.order() + 1) {
      acc = L.mul(x, acc);
      ++k;
    }
    ord[x] = k;
  }
  return ord;
}

bool iso_search(const FiniteLoop& A, const FiniteLoop& B,
                const std::vector<int>& ordA, const std::vector<int>& ordB,
                const std::vector<int>& gens, size_t gi, std::vector<int32_t>& m) {
  if (gi == gens.size()) {
    // generators map closure to all of B iff the propagated map is a
    // bijective total hom
    std::vector<uint8_t> hit(B.order(), 0);
    for (int32_t v : m) {
      if (v < 0) return false;
      if (hit[v]++) return false;
    }
    return true;
  }
  int g = gens[gi];
  if (m[g] >= 0) return iso_search(A, B, ordA, ordB, gens, gi + 1, m);
  for (int y = 0; y < B.order(); ++y) {
    if (ordA[g] != ordB[y]) continue;
    std::vector<int32_t> next = m;
    next[g] = y;
    if (!propagate(A, B, next)) continue;
    if (iso_search(A, B, ordA, ordB, gens, gi + 1, next)) {
      m = next;
      return true;
    }
  }
  return false;
}

} // namespace

std::optional<std::vector<int32_t>> find_isomorphism(const FiniteLoop& A,
                                                     const FiniteLoop& B) {
  if (A.order() != B.order()) return std::nullopt;
  auto ordA = element_orders(A), ordB = element_orders(B);
  {
    auto sa = ordA, sb = ordB;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> gens = generating_sequence(A);
  std::vector<int32_t> m(A.order(), -1);
  m[0] = 0;
  if (!iso_search(A, B, ordA, ordB, gens, 0, m)) return std::nullopt;
  Homomorphism::checked(A, B, m); // sanity: verified hom
  return m;
}

} // namespace nilloop
