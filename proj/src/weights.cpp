#include "rankin/weights.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "rankin/error.hpp"

namespace rankin {

bool GLWeight::is_dominant() const {
  return std::is_sorted(entries_.begin(), entries_.end(), std::greater<>{});
}

bool GLWeight::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](Entry e) { return e == 0; });
}

Entry GLWeight::sum() const { return std::accumulate(entries_.begin(), entries_.end(), Entry{0}); }

GLWeight GLWeight::operator+(const GLWeight& other) const {
  require_same_n(*this, other);
  std::vector<Entry> out(n());
  for (std::size_t i = 0; i < n(); ++i) out[i] = entries_[i] + other.entries_[i];
  return GLWeight(std::move(out));
}

GLWeight GLWeight::operator-(const GLWeight& other) const {
  require_same_n(*this, other);
  std::vector<Entry> out(n());
  for (std::size_t i = 0; i < n(); ++i) out[i] = entries_[i] - other.entries_[i];
  return GLWeight(std::move(out));
}

GLWeight GLWeight::shifted(Entry c) const {
  std::vector<Entry> out(entries_);
  for (Entry& e : out) e += c;
  return GLWeight(std::move(out));
}

GLWeight GLWeight::reversed() const {
  return GLWeight(std::vector<Entry>(entries_.rbegin(), entries_.rend()));
}

std::string GLWeight::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) os << ',';
    os << entries_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const GLWeight& w) { return os << w.to_string(); }

void require_dominant(const GLWeight& w, std::string_view what) {
  if (!w.is_dominant())
    throw Error(Errc::NotDominant, std::string(what) + " " + w.to_string() + " is not weakly decreasing");
}

void require_same_n(const GLWeight& a, const GLWeight& b) {
  if (a.n() != b.n())
    throw Error(Errc::DimensionMismatch,
                "ranks differ: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
}

PureWeight PureWeight::validate(std::span<const Entry> raw) {
  if (raw.empty() || raw.size() % 2 != 0)
    throw Error(Errc::Parse, "a pure weight needs an even, positive number of entries");
  const std::size_t n = raw.size() / 2;
  GLWeight left(std::vector<Entry>(raw.begin(), raw.begin() + n));
  GLWeight right(std::vector<Entry>(raw.begin() + n, raw.end()));
  return from_halves(left, right);
}

PureWeight PureWeight::from_halves(const GLWeight& left, const GLWeight& right) {
  require_same_n(left, right);
  if (left.n() == 0) throw Error(Errc::Parse, "empty weight");
  require_dominant(left, "left half");
  require_dominant(right, "right half");
  const std::size_t n = left.n();
  const Entry w = left[0] + right[n - 1];
  for (std::size_t i = 0; i < n; ++i) {
    if (left[i] + right[n - 1 - i] != w)
      throw Error(Errc::NotPure, "cross sums of " + left.to_string() + ";" + right.to_string() +
                                     " disagree");
  }
  return PureWeight(left, right, w);
}

PureWeight PureWeight::from_left(const GLWeight& left, Entry w) {
  std::vector<Entry> right(left.n());
  for (std::size_t i = 0; i < left.n(); ++i) right[i] = w - left[left.n() - 1 - i];
  return from_halves(left, GLWeight(std::move(right)));
}

std::string PureWeight::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < n(); ++i) os << (i ? "," : "") << left_[i];
  os << ';';
  for (std::size_t i = 0; i < n(); ++i) os << (i ? "," : "") << right_[i];
  return os.str();
}

PureWeight validate_pure(std::span<const Entry> raw) { return PureWeight::validate(raw); }

GLWeight dual(const GLWeight& lambda) {
  std::vector<Entry> out(lambda.n());
  for (std::size_t i = 0; i < lambda.n(); ++i) out[i] = -lambda[lambda.n() - 1 - i];
  return GLWeight(std::move(out));
}

GLWeight dominant_rep(const GLWeight& v) {
  std::vector<Entry> out(v.vec());
  std::sort(out.begin(), out.end(), std::greater<>{});
  return GLWeight(std::move(out));
}

HalfInt kappa(Entry w, Entry w_prime) { return HalfInt::from_twice(w + w_prime); }

HalfInt kappa(const PureWeight& mu, const PureWeight& nu) { return kappa(mu.w(), nu.w()); }

Entry k_eta(const PureWeight& mu, const PureWeight& nu) {
  if (mu.n() != nu.n())
    throw Error(Errc::DimensionMismatch, "k_eta needs weights of equal rank");
  return mu.left().sum() + nu.left().sum();
}

std::vector<InfCharParam> inf_char(const PureWeight& mu) {
  const auto n = static_cast<Entry>(mu.n());
  std::vector<InfCharParam> out;
  out.reserve(mu.n());
  for (Entry i = 1; i <= n; ++i) {
    const HalfInt a = HalfInt::from_twice(2 * mu.left()[i - 1] + n + 1 - 2 * i);
    out.push_back({a, HalfInt(mu.w()) - a});
  }
  return out;
}

GLWeight rho2(std::size_t n) {
  std::vector<Entry> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Entry>(n) - 1 - 2 * static_cast<Entry>(i);
  return GLWeight(std::move(out));
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<Entry> parse_entries(std::string_view text) {
  std::vector<Entry> out;
  text = trim(text);
  if (text.empty()) throw Error(Errc::Parse, "empty weight literal");
  while (true) {
    const auto comma = text.find(',');
    std::string_view tok = trim(text.substr(0, comma));
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    Entry value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw Error(Errc::Parse, "bad integer '" + std::string(tok) + "'");
    out.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

GLWeight parse_weight(std::string_view text) {
  if (text.find(';') != std::string_view::npos)
    throw Error(Errc::Parse, "a single weight literal must not contain ';'");
  return GLWeight(parse_entries(text));
}

std::vector<Entry> parse_pair_raw(std::string_view text) {
  const auto semi = text.find(';');
  if (semi == std::string_view::npos || text.find(';', semi + 1) != std::string_view::npos)
    throw Error(Errc::Parse, "a weight pair literal needs exactly one ';'");
  auto left = parse_entries(text.substr(0, semi));
  const auto right = parse_entries(text.substr(semi + 1));
  if (left.size() != right.size())
    throw Error(Errc::Parse, "the two halves of a weight pair differ in length");
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

std::pair<GLWeight, GLWeight> parse_pair(std::string_view text) {
  const auto raw = parse_pair_raw(text);
  const std::size_t n = raw.size() / 2;
  return {GLWeight(std::vector<Entry>(raw.begin(), raw.begin() + n)),
          GLWeight(std::vector<Entry>(raw.begin() + n, raw.end()))};
}

PureWeight parse_pure(std::string_view text) { return validate_pure(parse_pair_raw(text)); }

}  // namespace rankin
