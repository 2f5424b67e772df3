#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <string>

#include "zpalg/freelie/generators.hpp"

namespace zpalg::freelie {

/// Immutable binary bracketing of generator symbols.
class BracketTree {
 public:
  static BracketTree leaf(int generator);
  static BracketTree node(BracketTree left, BracketTree right);

  bool is_leaf() const noexcept { return !node_->left; }
  /// Generator index of a leaf.
  int generator() const;
  const BracketTree& left() const;
  const BracketTree& right() const;

  int weight() const noexcept { return node_->weight; }
  int degree(const GeneratorSet& v) const;
  /// How many leaves carry generator g.
  int count(int g) const;

  /// "x", "[x,[x,y]]"
  std::string str(const GeneratorSet& v) const;

  /// Weight first, then leaves by generator index, then left subtree,
  /// then right subtree.
  friend std::strong_ordering operator<=>(const BracketTree& a, const BracketTree& b);
  friend bool operator==(const BracketTree& a, const BracketTree& b) {
    return (a <=> b) == std::strong_ordering::equal;
  }

 private:
  struct Node {
    int gen = -1;
    int weight = 1;
    std::shared_ptr<const BracketTree> left, right;
  };
  explicit BracketTree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Formal Z/q-linear combination of bracket trees (an element of the free
/// nonassociative algebra). Terms are kept in tree order with nonzero
/// coefficients in [1, q).
class FreeNAElement {
 public:
  explicit FreeNAElement(std::int64_t modulus) : q_(modulus) {}
  FreeNAElement(std::int64_t modulus, const BracketTree& t, std::int64_t coeff = 1);

  std::int64_t modulus() const noexcept { return q_; }
  const std::map<BracketTree, std::int64_t>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add(const BracketTree& t, std::int64_t coeff);
  FreeNAElement& operator+=(const FreeNAElement& o);
  FreeNAElement operator+(const FreeNAElement& o) const;
  FreeNAElement operator-(const FreeNAElement& o) const;
  FreeNAElement scaled(std::int64_t c) const;

  /// Common weight; throws InvalidInput when empty or mixed.
  int weight() const;
  /// Common degree; throws InvalidInput when empty or mixed.
  int degree(const GeneratorSet& v) const;
  /// Whether all terms share weight and degree (true for zero).
  bool is_homogeneous(const GeneratorSet& v) const;

  std::string str(const GeneratorSet& v) const;

  friend bool operator==(const FreeNAElement&, const FreeNAElement&) = default;

 private:
  std::int64_t q_;
  std::map<BracketTree, std::int64_t> terms_;
};

/// Bilinear extension of node().
FreeNAElement bracket(const FreeNAElement& a, const FreeNAElement& b);

}  // namespace zpalg::freelie
