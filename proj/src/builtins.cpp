#include "nilloop/builtins.hpp"

#include <array>

namespace nilloop {

namespace {

FiniteLoop from_fn(int n, auto&& f, std::vector<std::string> names = {}) {
  std::vector<int32_t> t(static_cast<size_t>(n) * n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[x * n + y] = f(x, y);
  return FiniteLoop::validate(t, n, std::move(names));
}

// signed quaternion units: index pair (sign s in {0,1}, basis b in 1,i,j,k)
struct Quat {
  int s, b;
};

Quat qmul(Quat a, Quat c) {
  // basis products as (sign, basis)
  static constexpr int bs[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  static constexpr int bb[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  return Quat{(a.s + c.s + bs[a.b][c.b]) & 1, bb[a.b][c.b]};
}

Quat qconj(Quat a) { return a.b == 0 ? a : Quat{a.s ^ 1, a.b}; }

} // namespace

FiniteLoop make_cyclic(int n) {
  if (n < 1) throw validation_error("BadParameter", "cyclic order must be >= 1");
  return from_fn(n, [n](int x, int y) { return (x + y) % n; });
}

FiniteLoop make_dihedral(int n) {
  if (n < 1) throw validation_error("BadParameter", "dihedral parameter must be >= 1");
  // element a + f*n is r^a s^f, with s r s = r^-1
  return from_fn(2 * n, [n](int x, int y) {
    int a = x % n, f = x / n, b = y % n, g = y / n;
    int rot = f ? (a - b + n) % n : (a + b) % n;
    return rot + (f ^ g) * n;
  });
}

FiniteLoop make_quaternion8() {
  // index 2b+s is (-1)^s q_b with q_0..q_3 = 1,i,j,k
  std::vector<std::string> names = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
  return from_fn(
      8,
      [](int x, int y) {
        Quat a{x & 1, x >> 1}, b{y & 1, y >> 1};
        Quat c = qmul(a, b);
        return 2 * c.b + c.s;
      },
      std::move(names));
}

FiniteLoop make_elementary_abelian(int p, int k) {
  if (p < 2) throw validation_error("BadParameter", "p must be >= 2");
  if (k < 0) throw validation_error("BadParameter", "k must be >= 0");
  int n = 1;
  for (int i = 0; i < k; ++i) n *= p;
  return from_fn(n, [p, k](int x, int y) {
    int r = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
      r += (x % p + y % p) % p * mult;
      x /= p;
      y /= p;
      mult *= p;
    }
    return r;
  });
}

FiniteLoop direct_product(const FiniteLoop& A, const FiniteLoop& B) {
  const int nb = B.order();
  return from_fn(A.order() * nb, [&](int x, int y) {
    return A.mul(x / nb, y / nb) * nb + B.mul(x % nb, y % nb);
  });
}

FiniteLoop make_heisenberg27() {
  // triples (a,b,c) over F_3 with (a1,b1,c1)(a2,b2,c2) = (a1+a2, b1+b2, c1+c2+a1*b2)
  return from_fn(27, [](int x, int y) {
    int a1 = x / 9, b1 = x / 3 % 3, c1 = x % 3;
    int a2 = y / 9, b2 = y / 3 % 3, c2 = y % 3;
    return (a1 + a2) % 3 * 9 + (b1 + b2) % 3 * 3 + (c1 + c2 + a1 * b2) % 3;
  });
}

FiniteLoop make_octonion_loop() {
  // (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)) on the pairs with exactly
  // one nonzero quaternion-unit component
  struct Oct {
    int half; // 0: (q,0), 1: (0,q)
    Quat q;
  };
  auto omul = [](Oct u, Oct v) -> Oct {
    if (u.half == 0 && v.half == 0) return {0, qmul(u.q, v.q)};
    if (u.half == 0 && v.half == 1) return {1, qmul(v.q, u.q)};
    if (u.half == 1 && v.half == 0) return {1, qmul(u.q, qconj(v.q))};
    Quat m = qmul(qconj(v.q), u.q);
    return {0, Quat{m.s ^ 1, m.b}};
  };
  auto to_index = [](Oct u) { return 2 * (u.half * 4 + u.q.b) + u.q.s; };
  auto from_index = [](int i) {
    int g = i / 2, s = i & 1;
    return Oct{g / 4, Quat{s, g % 4}};
  };
  std::vector<std::string> names;
  for (int g = 0; g < 8; ++g)
    for (int s = 0; s < 2; ++s) {
      std::string base = g == 0 ? "1" : "e" + std::to_string(g);
      names.push_back(s ? "-" + base : base);
    }
  return from_fn(
      16,
      [&](int x, int y) { return to_index(omul(from_index(x), from_index(y))); },
      std::move(names));
}

FiniteLoop make_s3() {
  // permutations of {0,1,2}; pinned order id,(01),(02),(12),(012),(021)
  static constexpr std::array<std::array<int, 3>, 6> perm = {{
      {0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}}};
  auto compose_idx = [&](int x, int y) {
    std::array<int, 3> c;
    for (int t = 0; t < 3; ++t) c[t] = perm[x][perm[y][t]]; // y then x
    for (int i = 0; i < 6; ++i)
      if (perm[i] == c) return i;
    return -1;
  };
  std::vector<std::string> names = {"id", "(12)", "(13)", "(23)", "(123)", "(132)"};
  return from_fn(6, compose_idx, std::move(names));
}

FiniteLoop make_semidirect_zm_s3(int m) {
  if (m < 1) throw validation_error("BadParameter", "m must be >= 1");
  FiniteLoop s3 = make_s3();
  auto sgn = [](int s) { return s >= 1 && s <= 3 ? -1 : 1; };
  return from_fn(6 * m, [&](int x, int y) {
    int a = x / 6, s = x % 6, b = y / 6, t = y % 6;
    int c = ((a + sgn(s) * b) % m + m) % m;
    return c * 6 + s3.mul(s, t);
  });
}

FiniteLoop builtin_loop(const std::string& name) {
  if (name == "o16") return make_octonion_loop();
  if (name == "q8") return make_quaternion8();
  if (name == "s3") return make_s3();
  if (name == "d4") return make_dihedral(4);
  if (name == "d8") return make_dihedral(8);
  if (name == "heisenberg27") return make_heisenberg27();
  if (name == "z9_semidirect_s3") return make_semidirect_zm_s3(9);
  if (name == "z3_semidirect_s3") return make_semidirect_zm_s3(3);
  if (name.rfind("z/", 0) == 0) {
    int n = std::stoi(name.substr(2));
    return make_cyclic(n);
  }
  if (name.rfind("ea", 0) == 0) {
    auto us = name.find('_');
    if (us != std::string::npos) {
      int p = std::stoi(name.substr(2, us - 2));
      int k = std::stoi(name.substr(us + 1));
      return make_elementary_abelian(p, k);
    }
  }
  throw validation_error("BadParameter", "unknown builtin '" + name + "'");
}

} // namespace nilloop
