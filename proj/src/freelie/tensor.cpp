#include "zpalg/freelie/tensor.hpp"

#include "zpalg/errors.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::freelie {

TensorElement::TensorElement(std::int64_t modulus, const Word& w, std::int64_t coeff) : q_(modulus) {
  add(w, coeff);
}

void TensorElement::add(const Word& w, std::int64_t coeff) {
  if (w.empty()) throw InvalidInput("the reduced tensor algebra has no empty word");
  coeff = mod_norm(coeff, q_);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(w, coeff);
  if (!inserted) {
    it->second = (it->second + coeff) % q_;
    if (it->second == 0) terms_.erase(it);
  }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  if (o.q_ != q_) throw InvalidInput("adding tensors over different rings");
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

TensorElement TensorElement::operator+(const TensorElement& o) const {
  TensorElement r = *this;
  r += o;
  return r;
}

TensorElement TensorElement::operator-(const TensorElement& o) const {
  return *this + o.scaled(-1);
}

TensorElement TensorElement::scaled(std::int64_t c) const {
  TensorElement r(q_);
  const std::int64_t cc = mod_norm(c, q_);
  for (const auto& [w, a] : terms_) r.add(w, mul_mod(a, cc, q_));
  return r;
}

TensorElement TensorElement::reduced(std::int64_t modulus) const {
  if (modulus < 1 || q_ % modulus != 0) throw InvalidInput("reduction modulus must divide q");
  TensorElement r(modulus);
  for (const auto& [w, a] : terms_) r.add(w, a);
  return r;
}

std::set<int> TensorElement::weights() const {
  std::set<int> out;
  for (const auto& [w, c] : terms_) out.insert(static_cast<int>(w.size()));
  return out;
}

bool TensorElement::is_homogeneous(const GeneratorSet& v) const {
  if (terms_.empty()) return true;
  const Word& first = terms_.begin()->first;
  const int d = word_degree(first, v);
  for (const auto& [w, c] : terms_)
    if (w.size() != first.size() || word_degree(w, v) != d) return false;
  return true;
}

std::string TensorElement::str(const GeneratorSet& v) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    for (std::size_t i = 0; i < w.size(); ++i) out += (i ? "." : "") + v.name(w[i]);
  }
  return out;
}

int word_degree(const Word& w, const GeneratorSet& v) {
  int d = 0;
  for (int g : w) d += v.degree(g);
  return d;
}

TensorElement multiply(const TensorElement& a, const TensorElement& b) {
  if (a.modulus() != b.modulus()) throw InvalidInput("multiplying tensors over different rings");
  const std::int64_t q = a.modulus();
  TensorElement r(q);
  for (const auto& [u, x] : a.terms())
    for (const auto& [w, y] : b.terms()) {
      Word uw = u;
      uw.insert(uw.end(), w.begin(), w.end());
      r.add(uw, mul_mod(x, y, q));
    }
  return r;
}

TensorElement zeta(const TensorElement& e, int i) {
  TensorElement r(e.modulus());
  for (const auto& [w, c] : e.terms())
    if (static_cast<int>(w.size()) == i) r.add(w, c);
  return r;
}

TensorElement iota(const TensorElement& e, int i) {
  for (const auto& [w, c] : e.terms())
    if (static_cast<int>(w.size()) != i)
      throw InvalidInput("iota_" + std::to_string(i) + ": element has a word of length " +
                         std::to_string(w.size()));
  return e;
}

TensorElement embed_tensor(const BracketTree& t, const GeneratorSet& v, std::int64_t modulus) {
  if (t.is_leaf()) return TensorElement(modulus, Word{t.generator()});
  const TensorElement a = embed_tensor(t.left(), v, modulus);
  const TensorElement b = embed_tensor(t.right(), v, modulus);
  const int sign = (t.left().degree(v) * t.right().degree(v)) % 2 == 0 ? 1 : -1;
  return multiply(a, b) - multiply(b, a).scaled(sign);
}

TensorElement embed_tensor(const FreeNAElement& xi, const GeneratorSet& v) {
  TensorElement r(xi.modulus());
  for (const auto& [t, c] : xi.terms()) r += embed_tensor(t, v, xi.modulus()).scaled(c);
  return r;
}

}  // namespace zpalg::freelie
