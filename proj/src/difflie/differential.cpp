#include "zpalg/difflie/differential.hpp"

#include "zpalg/errors.hpp"
#include "zpalg/numeric.hpp"

namespace zpalg::difflie {

DifferentialSpec::DifferentialSpec(GeneratorSet v, std::vector<FreeNAElement> images)
    : v_(std::move(v)), images_(std::move(images)) {
  if (images_.size() != v_.size())
    throw InvalidInput("differential: need one image per generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const auto& img = images_[i];
    const std::string& name = v_.name(static_cast<int>(i));
    if (img.modulus() != v_.ring().modulus())
      throw InvalidInput("differential: d(" + name + ") has the wrong coefficient ring");
    if (img.is_zero()) continue;
    if (!img.is_homogeneous(v_) || img.weight() != 1)
      throw InvalidInput("differential: d(" + name + ") must be a combination of generators");
    if (img.degree(v_) != v_.degree(static_cast<int>(i)) - 1)
      throw InvalidInput("differential: d(" + name + ") must have degree " +
                         std::to_string(v_.degree(static_cast<int>(i)) - 1));
  }
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (!differentiate(images_[i], *this).is_zero())
      throw InvalidInput("differential: d(d(" + v_.name(static_cast<int>(i)) + ")) != 0");
}

DifferentialSpec DifferentialSpec::standard(freelie::RingSpec ring, int deg_x) {
  GeneratorSet v = freelie::standard_pair(ring, deg_x);
  const std::int64_t q = ring.modulus();
  return DifferentialSpec(v, {FreeNAElement(q, BracketTree::leaf(1)), FreeNAElement(q)});
}

FreeNAElement differentiate(const BracketTree& t, const DifferentialSpec& d) {
  const std::int64_t q = d.modulus();
  if (t.is_leaf()) return d.image(t.generator());
  const FreeNAElement a(q, t.left()), b(q, t.right());
  FreeNAElement out = freelie::bracket(differentiate(t.left(), d), b);
  const int sign = t.left().degree(d.generators()) % 2 == 0 ? 1 : -1;
  out += freelie::bracket(a, differentiate(t.right(), d)).scaled(sign);
  return out;
}

FreeNAElement differentiate(const FreeNAElement& xi, const DifferentialSpec& d) {
  if (xi.modulus() != d.modulus()) throw InvalidInput("differentiate: coefficient ring mismatch");
  FreeNAElement out(xi.modulus());
  for (const auto& [t, c] : xi.terms()) out += differentiate(t, d).scaled(c);
  return out;
}

TensorElement differentiate(const TensorElement& e, const DifferentialSpec& d) {
  const std::int64_t q = e.modulus();
  if (d.modulus() % q != 0) throw InvalidInput("differentiate: coefficient ring mismatch");
  const GeneratorSet& v = d.generators();
  std::vector<TensorElement> gen_images;
  for (int g = 0; g < static_cast<int>(v.size()); ++g)
    gen_images.push_back(freelie::embed_tensor(d.image(g), v).reduced(q));

  TensorElement out(q);
  for (const auto& [w, c] : e.terms()) {
    int prefix_deg = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      const std::int64_t coeff = prefix_deg % 2 == 0 ? c : q - c;
      for (const auto& [dw, a] : gen_images[static_cast<std::size_t>(w[i])].terms()) {
        freelie::Word nw(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
        nw.insert(nw.end(), dw.begin(), dw.end());
        nw.insert(nw.end(), w.begin() + static_cast<std::ptrdiff_t>(i) + 1, w.end());
        out.add(nw, mul_mod(coeff, a, q));
      }
      prefix_deg += v.degree(w[i]);
    }
  }
  return out;
}

}  // namespace zpalg::difflie
