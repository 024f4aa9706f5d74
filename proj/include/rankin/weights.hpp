#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rankin/halfint.hpp"

namespace rankin {

using Entry = std::int64_t;

/// A highest-weight candidate for GL_n: an integer n-tuple.
///
/// Dominance (weakly decreasing entries) is a property checked on demand;
/// operations that need a dominant weight validate and throw NotDominant.
class GLWeight {
 public:
  GLWeight() = default;
  explicit GLWeight(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  GLWeight(std::initializer_list<Entry> entries) : entries_(entries) {}

  static GLWeight zero(std::size_t n) { return GLWeight(std::vector<Entry>(n, 0)); }
  static GLWeight constant(std::size_t n, Entry c) { return GLWeight(std::vector<Entry>(n, c)); }

  std::size_t n() const { return entries_.size(); }
  std::span<const Entry> entries() const { return entries_; }
  const std::vector<Entry>& vec() const { return entries_; }
  Entry operator[](std::size_t i) const { return entries_[i]; }
  Entry& operator[](std::size_t i) { return entries_[i]; }

  bool is_dominant() const;
  bool is_zero() const;
  Entry sum() const;

  GLWeight operator+(const GLWeight& other) const;
  GLWeight operator-(const GLWeight& other) const;
  /// Adds c to every entry (a twist by det^c).
  GLWeight shifted(Entry c) const;
  GLWeight reversed() const;

  friend bool operator==(const GLWeight&, const GLWeight&) = default;
  friend auto operator<=>(const GLWeight& a, const GLWeight& b) { return a.entries_ <=> b.entries_; }

  std::string to_string() const;

 private:
  std::vector<Entry> entries_;
};

std::ostream& operator<<(std::ostream& os, const GLWeight& w);

/// Throws NotDominant unless w is weakly decreasing.
void require_dominant(const GLWeight& w, std::string_view what = "weight");
/// Throws DimensionMismatch unless both have the same rank.
void require_same_n(const GLWeight& a, const GLWeight& b);

/// A dominant pair (left; right) for GL_n x GL_n with left_i + right_{n+1-i} = w.
class PureWeight {
 public:
  /// Validates a raw 2n-tuple (left half followed by right half).
  static PureWeight validate(std::span<const Entry> raw);
  static PureWeight from_halves(const GLWeight& left, const GLWeight& right);
  /// The pure weight (left; w - reverse(left)).
  static PureWeight from_left(const GLWeight& left, Entry w);

  std::size_t n() const { return left_.n(); }
  const GLWeight& left() const { return left_; }
  const GLWeight& right() const { return right_; }
  Entry w() const { return w_; }

  friend bool operator==(const PureWeight&, const PureWeight&) = default;

  std::string to_string() const;

 private:
  PureWeight(GLWeight left, GLWeight right, Entry w)
      : left_(std::move(left)), right_(std::move(right)), w_(w) {}

  GLWeight left_;
  GLWeight right_;
  Entry w_ = 0;
};

PureWeight validate_pure(std::span<const Entry> raw);

/// Highest weight of the contragredient: negate, then reverse.
GLWeight dual(const GLWeight& lambda);
/// Sorts entries weakly decreasing.
GLWeight dominant_rep(const GLWeight& v);
/// (w + w') / 2.
HalfInt kappa(Entry w, Entry w_prime);
HalfInt kappa(const PureWeight& mu, const PureWeight& nu);
/// Sum of the left halves of mu and nu.
Entry k_eta(const PureWeight& mu, const PureWeight& nu);

struct InfCharParam {
  HalfInt a;
  HalfInt b;
  friend bool operator==(const InfCharParam&, const InfCharParam&) = default;
};
/// a_i = mu_i + (n+1-2i)/2 and b_i = w - a_i.
std::vector<InfCharParam> inf_char(const PureWeight& mu);

/// (n-1, n-3, ..., 1-n), the half-sum of positive roots doubled.
GLWeight rho2(std::size_t n);

// Literal grammar: comma-separated integers; halves separated by ';'.
std::vector<Entry> parse_entries(std::string_view text);
GLWeight parse_weight(std::string_view text);
/// Parses "l1,...,ln;r1,...,rn" into the raw 2n-tuple (left then right).
std::vector<Entry> parse_pair_raw(std::string_view text);
std::pair<GLWeight, GLWeight> parse_pair(std::string_view text);
PureWeight parse_pure(std::string_view text);

}  // namespace rankin
