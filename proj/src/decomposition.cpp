#include "rankin/decomposition.hpp"

#include "rankin/error.hpp"

namespace rankin {

Decomposition Decomposition::single(const GLWeight& lambda, Multiplicity mult) {
  Decomposition d(lambda.n());
  d.add(lambda, mult);
  return d;
}

void Decomposition::add(const GLWeight& lambda, Multiplicity mult) {
  if (lambda.n() != n_)
    throw Error(Errc::DimensionMismatch, "term " + lambda.to_string() + " has the wrong rank");
  require_dominant(lambda, "constituent");
  if (mult == 0) return;
  auto it = terms_.find(lambda);
  if (it == terms_.end()) {
    if (mult < 0) throw Error(Errc::MalformedCharacter, "negative multiplicity for " + lambda.to_string());
    terms_.emplace(lambda, mult);
    return;
  }
  it->second += mult;
  if (it->second < 0) throw Error(Errc::MalformedCharacter, "negative multiplicity for " + lambda.to_string());
  if (it->second == 0) terms_.erase(it);
}

void Decomposition::add(const Decomposition& other, Multiplicity scale) {
  if (other.n_ != n_) throw Error(Errc::DimensionMismatch, "decompositions of different rank");
  for (const auto& [lambda, m] : other.terms_) add(lambda, m * scale);
}

Multiplicity Decomposition::multiplicity(const GLWeight& lambda) const {
  const auto it = terms_.find(lambda);
  return it == terms_.end() ? 0 : it->second;
}

Decomposition Decomposition::dualized() const {
  Decomposition out(n_);
  for (const auto& [lambda, m] : terms_) out.add(dual(lambda), m);
  return out;
}

Decomposition Decomposition::shifted(Entry c) const {
  Decomposition out(n_);
  for (const auto& [lambda, m] : terms_) out.add(lambda.shifted(c), m);
  return out;
}

void TripleDecomposition::add(const Key& key, Multiplicity mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms_.try_emplace(key, 0);
  it->second += mult;
  if (it->second == 0) terms_.erase(it);
}

Multiplicity TripleDecomposition::multiplicity(const Key& key) const {
  const auto it = terms_.find(key);
  return it == terms_.end() ? 0 : it->second;
}

}  // namespace rankin
