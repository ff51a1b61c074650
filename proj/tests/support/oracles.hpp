#pragma once

// Independent reference computations for the test suites. Nothing here calls
// into the library.

#include <array>
#include <cstddef>
#include <string>
#include <vector>

namespace oracle {

// Unit quaternions ±1, ±i, ±j, ±k as (sign, axis) with axis 0 = 1, 1 = i,
// 2 = j, 3 = k, multiplied by Hamilton's rules.
struct Quat {
  int sign;
  int axis;
  bool operator==(const Quat&) const = default;
};

inline Quat qmul(Quat a, Quat b) {
  // axis products: table[a][b] = (sign, axis)
  static constexpr std::array<std::array<Quat, 4>, 4> table = {{
      {{{1, 0}, {1, 1}, {1, 2}, {1, 3}}},
      {{{1, 1}, {-1, 0}, {1, 3}, {-1, 2}}},
      {{{1, 2}, {-1, 3}, {-1, 0}, {1, 1}}},
      {{{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}},
  }};
  const Quat t = table[a.axis][b.axis];
  return {a.sign * b.sign * t.sign, t.axis};
}

inline Quat qinv(Quat a) { return a.axis == 0 ? a : Quat{-a.sign, a.axis}; }

inline std::string qlabel(Quat a) {
  static const char* names[] = {"1", "i", "j", "k"};
  return (a.sign < 0 ? "-" : "") + std::string(names[a.axis]);
}

inline Quat qparse(const std::string& s) {
  const int sign = s[0] == '-' ? -1 : 1;
  const char c = s.back();
  const int axis = c == '1' ? 0 : c == 'i' ? 1 : c == 'j' ? 2 : 3;
  return {sign, axis};
}

inline int mod(long a, long p) { return static_cast<int>(((a % p) + p) % p); }

// Multiplicative inverse modulo a prime by search.
inline int inv_mod(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if (mod(static_cast<long>(a) * x, p) == 1) return x;
  }
  return 0;
}

// The Z_3 automorphism field Φ(p)(v)(x) = x + a_p·v.
struct Z3Field {
  std::vector<int> a;

  int apply(int p, int v, int x) const { return mod(x + a[p] * v, 3); }
  int division_at(int p, int x, int y) const { return mod(inv_mod(a[p], 3) * (y - x), 3); }
  int pullback(int v, int q, int p) const { return mod(inv_mod(a[p], 3) * a[q] * v, 3); }

  int torsion1_star(int x, int u, int v) const {
    const int y = apply(x, u, x), z = apply(x, v, x);
    const int t = apply(y, v, y), t2 = apply(z, u, z);
    return division_at(t, t, t2);
  }
};

// Fields of bijections β_p: (Z_2)² → Z_4 with x + v̄^p = x + β_p(v). Vectors
// are indexed lexicographically, so they add by xor; points add mod 4.
struct Z4BijectionField {
  std::vector<std::vector<std::size_t>> beta;

  int plus(int x, int p, int v) const { return mod(x + static_cast<int>(beta[p][v]), 4); }
  int unbeta(int p, int t) const {
    for (int v = 0; v < 4; ++v) {
      if (static_cast<int>(beta[p][v]) == t) return v;
    }
    return -1;
  }
  int division_at(int p, int x, int y) const { return unbeta(p, mod(y - x, 4)); }

  int curvature0(int x, int w, int u, int v) const {
    const int r = plus(x, x, w), s = plus(r, r, u), t = plus(s, s, v);
    const int pulled = unbeta(r, static_cast<int>(beta[s][v]));
    return division_at(t, t, plus(r, r, u ^ pulled));
  }
};

// Ternary laws by direct quantification over a raw n³ table.
enum class Law { A1, A2, A3, A4, K3, K4, commutative, associative };

inline bool ternary_law(const std::vector<std::size_t>& t, std::size_t n, Law law) {
  auto k = [&](std::size_t x, std::size_t y, std::size_t z) { return t[(x * n + y) * n + z]; };
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        switch (law) {
          case Law::A1: if (k(x, y, y) != x) return false; break;
          case Law::A2: if (k(x, x, y) != y) return false; break;
          case Law::K3: if (k(x, y, k(y, x, z)) != z) return false; break;
          case Law::K4: if (k(k(y, x, z), z, x) != y) return false; break;
          case Law::commutative: if (k(x, y, z) != k(z, y, x)) return false; break;
          default:
            for (std::size_t p = 0; p < n; ++p) {
              if (law == Law::A3 && k(p, x, k(x, y, z)) != k(p, y, z)) return false;
              if (law == Law::A4 && k(k(p, x, y), y, z) != k(p, x, z)) return false;
              if (law == Law::associative) {
                for (std::size_t q = 0; q < n; ++q) {
                  if (k(k(x, y, z), p, q) != k(x, y, k(z, p, q))) return false;
                }
              }
            }
        }
      }
    }
  }
  return true;
}

}  // namespace oracle
