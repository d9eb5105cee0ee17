#pragma once

#include <initializer_list>
#include <vector>

#include "crosskiss/rational.hpp"

namespace crosskiss {

/// Fixed-length vector of exact rationals. Length is set at construction.
class RatVec {
public:
  RatVec() = default;
  explicit RatVec(int n) : c_(static_cast<std::size_t>(n)) {}
  RatVec(std::initializer_list<Rational> init) : c_(init) {}
  explicit RatVec(std::vector<Rational> coords) : c_(std::move(coords)) {}

  /// Parses "1/4,-1/4,0,1/2".
  static RatVec parse(std::string_view csv);

  int size() const { return static_cast<int>(c_.size()); }
  Rational& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }
  const Rational& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }

  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }
  auto begin() { return c_.begin(); }
  auto end() { return c_.end(); }

  RatVec& operator+=(const RatVec& o);
  RatVec& operator-=(const RatVec& o);
  friend RatVec operator+(RatVec a, const RatVec& b) { a += b; return a; }
  friend RatVec operator-(RatVec a, const RatVec& b) { a -= b; return a; }
  RatVec operator-() const;
  RatVec scaled(const Rational& c) const;

  friend bool operator==(const RatVec& a, const RatVec& b) { return a.c_ == b.c_; }
  friend bool operator!=(const RatVec& a, const RatVec& b) { return !(a == b); }

  bool is_zero() const;
  std::string str() const;  // "a,b,c" with exact entries

private:
  std::vector<Rational> c_;
};

Rational l1_norm(const RatVec& v);
Rational linf_norm(const RatVec& v);
Rational l1_distance(const RatVec& a, const RatVec& b);

/// Indices i with v[i] != 0 (0-based internally; I/O layers emit 1-based).
std::vector<int> support(const RatVec& v);

/// Indices attaining linf_norm(v); throws std::domain_error on the zero vector.
std::vector<int> max_coordinates(const RatVec& v);

/// (x, y) -> (x+y, x-y). Converts l1 geometry on the plane to linf geometry:
/// linf(result) == l1(input) exactly. Throws on length != 2.
RatVec hadamard_pair_transform(const RatVec& v);

/// Coordinate-wise lexicographic order using the (num, den) canonical scalar
/// order; shorter vectors sort first on length mismatch.
bool canonical_less(const RatVec& a, const RatVec& b);

/// One representative of {v, -v}: flips sign so the first nonzero coordinate
/// is positive. Zero vector returned unchanged.
RatVec sign_normalized(const RatVec& v);

}  // namespace crosskiss
