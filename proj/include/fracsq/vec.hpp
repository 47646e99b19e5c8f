#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <string>

namespace fracsq {

using Coord = std::int64_t;

// Dimensions 2 and 3 are supported; unused trailing coordinates stay zero.
inline constexpr int kMaxDim = 3;

/// Integer lattice vector. Used for digits, cell coordinates and offsets.
struct Vec {
  std::array<Coord, kMaxDim> c{};

  constexpr Vec() = default;
  constexpr Vec(Coord x, Coord y, Coord z = 0) : c{x, y, z} {}

  constexpr Coord& operator[](int i) { return c[static_cast<std::size_t>(i)]; }
  constexpr Coord operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  constexpr Vec& operator+=(const Vec& o) {
    for (int i = 0; i < kMaxDim; ++i) (*this)[i] += o[i];
    return *this;
  }
  constexpr Vec& operator-=(const Vec& o) {
    for (int i = 0; i < kMaxDim; ++i) (*this)[i] -= o[i];
    return *this;
  }

  friend constexpr Vec operator+(Vec a, const Vec& b) { return a += b; }
  friend constexpr Vec operator-(Vec a, const Vec& b) { return a -= b; }
  friend constexpr Vec operator-(Vec a) {
    for (auto& x : a.c) x = -x;
    return a;
  }
  friend constexpr Vec operator*(Coord s, Vec a) {
    for (auto& x : a.c) x *= s;
    return a;
  }

  friend constexpr bool operator==(const Vec&, const Vec&) = default;
  friend constexpr auto operator<=>(const Vec&, const Vec&) = default;
};

/// L-infinity norm.
constexpr Coord chebyshev(const Vec& v) {
  Coord r = 0;
  for (auto x : v.c) r = std::max(r, x < 0 ? -x : x);
  return r;
}

inline std::string to_string(const Vec& v, int dim) {
  std::string s = "(";
  for (int i = 0; i < dim; ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

/// Number of offsets in {-1,0,1}^dim.
constexpr int neighborhood_size(int dim) {
  int n = 1;
  for (int i = 0; i < dim; ++i) n *= 3;
  return n;
}

/// The offset with base-3 code `code`, each digit shifted to {-1,0,1}.
constexpr Vec unit_offset(int code, int dim) {
  Vec v;
  for (int i = 0; i < dim; ++i) {
    v[i] = code % 3 - 1;
    code /= 3;
  }
  return v;
}

/// Inverse of unit_offset; requires chebyshev(v) <= 1.
constexpr int unit_offset_code(const Vec& v, int dim) {
  int code = 0;
  for (int i = dim - 1; i >= 0; --i) code = code * 3 + static_cast<int>(v[i] + 1);
  return code;
}

}  // namespace fracsq
