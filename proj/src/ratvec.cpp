#include "crosskiss/ratvec.hpp"

#include <stdexcept>

namespace crosskiss {

RatVec RatVec::parse(std::string_view csv) {
  std::vector<Rational> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    auto comma = csv.find(',', pos);
    auto piece = csv.substr(pos, comma == std::string_view::npos ? csv.size() - pos : comma - pos);
    // trim spaces
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    out.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (out.empty()) throw std::invalid_argument("empty vector");
  return RatVec(std::move(out));
}

RatVec& RatVec::operator+=(const RatVec& o) {
  if (size() != o.size()) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < size(); ++i) c_[static_cast<std::size_t>(i)] += o[i];
  return *this;
}

RatVec& RatVec::operator-=(const RatVec& o) {
  if (size() != o.size()) throw std::invalid_argument("dimension mismatch");
  for (int i = 0; i < size(); ++i) c_[static_cast<std::size_t>(i)] -= o[i];
  return *this;
}

RatVec RatVec::operator-() const {
  RatVec r(size());
  for (int i = 0; i < size(); ++i) r[i] = -(*this)[i];
  return r;
}

RatVec RatVec::scaled(const Rational& c) const {
  RatVec r(size());
  for (int i = 0; i < size(); ++i) r[i] = (*this)[i] * c;
  return r;
}

bool RatVec::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

std::string RatVec::str() const {
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i) s += ',';
    s += (*this)[i].str();
  }
  return s;
}

Rational l1_norm(const RatVec& v) {
  Rational s;
  for (const auto& x : v) s += abs(x);
  return s;
}

Rational linf_norm(const RatVec& v) {
  Rational m;
  for (const auto& x : v) {
    Rational a = abs(x);
    if (a > m) m = a;
  }
  return m;
}

Rational l1_distance(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dimension mismatch");
  Rational s;
  for (int i = 0; i < a.size(); ++i) s += abs(a[i] - b[i]);
  return s;
}

std::vector<int> support(const RatVec& v) {
  std::vector<int> idx;
  for (int i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) idx.push_back(i);
  return idx;
}

std::vector<int> max_coordinates(const RatVec& v) {
  if (v.is_zero()) throw std::domain_error("max_coordinates undefined for zero vector");
  Rational m = linf_norm(v);
  std::vector<int> idx;
  for (int i = 0; i < v.size(); ++i)
    if (abs(v[i]) == m) idx.push_back(i);
  return idx;
}

RatVec hadamard_pair_transform(const RatVec& v) {
  if (v.size() != 2) throw std::invalid_argument("hadamard_pair_transform requires length 2");
  return RatVec{v[0] + v[1], v[0] - v[1]};
}

bool canonical_less(const RatVec& a, const RatVec& b) {
  int n = a.size() < b.size() ? a.size() : b.size();
  for (int i = 0; i < n; ++i) {
    if (a[i] != b[i]) return canonical_less(a[i], b[i]);
  }
  return a.size() < b.size();
}

RatVec sign_normalized(const RatVec& v) {
  for (int i = 0; i < v.size(); ++i) {
    if (v[i].is_zero()) continue;
    return v[i].sign() < 0 ? -v : v;
  }
  return v;
}

}  // namespace crosskiss
