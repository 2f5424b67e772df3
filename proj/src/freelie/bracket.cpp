#include "zpalg/freelie/bracket.hpp"

#include "zpalg/errors.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::freelie {

BracketTree BracketTree::leaf(int generator) {
  if (generator < 0) throw InvalidInput("negative generator index");
  auto n = std::make_shared<Node>();
  n->gen = generator;
  return BracketTree(std::move(n));
}

BracketTree BracketTree::node(BracketTree left, BracketTree right) {
  auto n = std::make_shared<Node>();
  n->weight = left.weight() + right.weight();
  n->left = std::make_shared<const BracketTree>(std::move(left));
  n->right = std::make_shared<const BracketTree>(std::move(right));
  return BracketTree(std::move(n));
}

int BracketTree::generator() const {
  if (!is_leaf()) throw InvalidInput("generator() on a bracket node");
  return node_->gen;
}

const BracketTree& BracketTree::left() const {
  if (is_leaf()) throw InvalidInput("left() on a leaf");
  return *node_->left;
}

const BracketTree& BracketTree::right() const {
  if (is_leaf()) throw InvalidInput("right() on a leaf");
  return *node_->right;
}

int BracketTree::degree(const GeneratorSet& v) const {
  if (is_leaf()) return v.degree(node_->gen);
  return left().degree(v) + right().degree(v);
}

int BracketTree::count(int g) const {
  if (is_leaf()) return node_->gen == g ? 1 : 0;
  return left().count(g) + right().count(g);
}

std::string BracketTree::str(const GeneratorSet& v) const {
  if (is_leaf()) return v.name(node_->gen);
  return "[" + left().str(v) + "," + right().str(v) + "]";
}

std::strong_ordering operator<=>(const BracketTree& a, const BracketTree& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (a.is_leaf()) return a.node_->gen <=> b.node_->gen;
  if (auto c = a.left() <=> b.left(); c != 0) return c;
  return a.right() <=> b.right();
}

FreeNAElement::FreeNAElement(std::int64_t modulus, const BracketTree& t, std::int64_t coeff)
    : q_(modulus) {
  add(t, coeff);
}

void FreeNAElement::add(const BracketTree& t, std::int64_t coeff) {
  coeff = mod_norm(coeff, q_);
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(t, coeff);
  if (!inserted) {
    it->second = (it->second + coeff) % q_;
    if (it->second == 0) terms_.erase(it);
  }
}

FreeNAElement& FreeNAElement::operator+=(const FreeNAElement& o) {
  if (o.q_ != q_) throw InvalidInput("adding elements over different rings");
  for (const auto& [t, c] : o.terms_) add(t, c);
  return *this;
}

FreeNAElement FreeNAElement::operator+(const FreeNAElement& o) const {
  FreeNAElement r = *this;
  r += o;
  return r;
}

FreeNAElement FreeNAElement::operator-(const FreeNAElement& o) const {
  return *this + o.scaled(-1);
}

FreeNAElement FreeNAElement::scaled(std::int64_t c) const {
  FreeNAElement r(q_);
  for (const auto& [t, a] : terms_) r.add(t, mul_mod(a, mod_norm(c, q_), q_));
  return r;
}

int FreeNAElement::weight() const {
  if (terms_.empty()) throw InvalidInput("weight of the zero element");
  const int w = terms_.begin()->first.weight();
  for (const auto& [t, c] : terms_)
    if (t.weight() != w) throw InvalidInput("element is not homogeneous in weight");
  return w;
}

int FreeNAElement::degree(const GeneratorSet& v) const {
  if (terms_.empty()) throw InvalidInput("degree of the zero element");
  const int d = terms_.begin()->first.degree(v);
  for (const auto& [t, c] : terms_)
    if (t.degree(v) != d) throw InvalidInput("element is not homogeneous in degree");
  return d;
}

bool FreeNAElement::is_homogeneous(const GeneratorSet& v) const {
  if (terms_.empty()) return true;
  const auto& first = terms_.begin()->first;
  for (const auto& [t, c] : terms_)
    if (t.weight() != first.weight() || t.degree(v) != first.degree(v)) return false;
  return true;
}

std::string FreeNAElement::str(const GeneratorSet& v) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [t, c] : terms_) {
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c) + "*";
    out += t.str(v);
  }
  return out;
}

FreeNAElement bracket(const FreeNAElement& a, const FreeNAElement& b) {
  if (a.modulus() != b.modulus()) throw InvalidInput("bracket of elements over different rings");
  const std::int64_t q = a.modulus();
  FreeNAElement r(q);
  for (const auto& [s, x] : a.terms())
    for (const auto& [t, y] : b.terms()) r.add(BracketTree::node(s, t), mul_mod(x, y, q));
  return r;
}

}  // namespace zpalg::freelie
