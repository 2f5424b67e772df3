#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "zpalg/zpmod/matrix.hpp"
#include "zpalg/zpmod/ring.hpp"
#include "zpalg/zpmod/snf.hpp"

namespace zpalg::zpmod {

/// Exponents t of cyclic summands Z/p^t, in basis order.
using Exponents = std::vector<int>;

/// Finitely generated graded Z/p^s-module: degree -> multiset of summand
/// exponents, kept sorted descending with empty degrees dropped.
class GradedModule {
 public:
  explicit GradedModule(RingSpec ring) : ring_(ring) {}
  GradedModule(RingSpec ring, std::map<int, Exponents> components);

  static GradedModule concentrated(RingSpec ring, int degree, Exponents exps);

  const RingSpec& ring() const noexcept { return ring_; }
  const std::map<int, Exponents>& components() const noexcept { return components_; }
  /// Exponents in a degree (empty when the degree is zero).
  const Exponents& at(int degree) const;
  bool is_zero() const noexcept { return components_.empty(); }
  bool is_free() const;

  friend bool operator==(const GradedModule&, const GradedModule&) = default;

 private:
  RingSpec ring_;
  std::map<int, Exponents> components_;
};

/// Inclusive degree interval.
struct DegreeRange {
  int lo;
  int hi;
};

/// A homomorphism between direct sums of cyclic modules over one ring.
/// matrix is dst.size() x src.size(); column j is the image of the j-th
/// source generator. Entries are reduced mod p^{dst[i]} row-wise.
class Hom {
 public:
  Hom(RingSpec ring, Exponents src, Exponents dst, Matrix matrix);

  const RingSpec& ring() const noexcept { return ring_; }
  const Exponents& src() const noexcept { return src_; }
  const Exponents& dst() const noexcept { return dst_; }
  const Matrix& matrix() const noexcept { return matrix_; }

 private:
  RingSpec ring_;
  Exponents src_;
  Exponents dst_;
  Matrix matrix_;
};

/// Graded morphism: the block for domain degree k lands in codomain degree
/// k + shift. Blocks exist exactly where both sides are nonzero.
class ModuleMorphism {
 public:
  ModuleMorphism(GradedModule domain, GradedModule codomain, int shift,
                 std::map<int, Matrix> blocks);

  const GradedModule& domain() const noexcept { return domain_; }
  const GradedModule& codomain() const noexcept { return codomain_; }
  int shift() const noexcept { return shift_; }
  const std::map<int, Matrix>& blocks() const noexcept { return blocks_; }
  Hom block(int domain_degree) const;

 private:
  GradedModule domain_;
  GradedModule codomain_;
  int shift_;
  std::map<int, Matrix> blocks_;
};

// -- module-level operations -------------------------------------------------

/// Number of Z/p^t summands across the degree range.
std::int64_t dim_of(const GradedModule& m, int t, DegreeRange range);
/// Same, over all degrees.
std::int64_t dim_of(const GradedModule& m, int t);

/// M (x) Z/p^u: every exponent t becomes min(t, u); the result lives over Z/p^u.
GradedModule tensor_reduce(const GradedModule& m, int u);

/// Exponent of Tor_{Z/p^s}(Z/p^t, Z/p^u); 0 means the zero module.
int tor_exponent(int s, int t, int u);

/// Graded Tor: degree i+j collects Tor(M_i, N_j).
GradedModule tor(const GradedModule& m, const GradedModule& n);

// -- homomorphisms -----------------------------------------------------------

/// Generators (columns) of {x in free cover : phi(x) = 0}, including the
/// relations of the source.
Matrix free_kernel(const Hom& phi);

Exponents image_exponents(const Hom& phi);
Exponents kernel_exponents(const Hom& phi);
Exponents cokernel_exponents(const Hom& phi);

bool is_injective(const Hom& phi);
bool is_surjective(const Hom& phi);

/// A nonzero source element with phi(x) = 0, reduced mod p^{src[j]}.
std::optional<std::vector<std::int64_t>> kernel_witness(const Hom& phi);

/// g . f
Hom compose(const Hom& g, const Hom& f);

/// phi (x) Z/p^u.
Hom tensor_reduce(const Hom& phi, int u);

/// Image of a source element, reduced row-wise.
std::vector<std::int64_t> evaluate(const Hom& phi, std::span<const std::int64_t> x);

/// Summand exponents of Z/B where Z, B are submodules of the module with the
/// given exponents, generated by the columns of z_gens and b_gens (B in Z).
Exponents subquotient_exponents(const RingSpec& ring, const Exponents& ambient,
                                const Matrix& z_gens, const Matrix& b_gens);

/// SNF of a map between free modules; throws Unsupported otherwise.
SNFResult smith_normal_form(const Hom& phi);
std::map<int, SNFResult> smith_normal_form(const ModuleMorphism& phi);

/// Summand decomposition of Im(phi) placed in codomain degrees. The
/// codomain must be free.
GradedModule image_dims(const ModuleMorphism& phi);

/// For an injection out of a free module, a basis change P of the codomain
/// with P e_i = phi(x_i). Throws NotInjective (with a kernel witness) when
/// phi has a kernel, Unsupported when the domain is not free.
BasisChange split_injection_normalize(const Hom& phi);
std::map<int, BasisChange> split_injection_normalize(const ModuleMorphism& phi);

/// For f : X -> A + B and g : A + B -> Y with X free, p^{s-1} B = 0 and g.f
/// injective, reports whether g . i_A . pi_A . f is injective. The middle
/// module is laid out as a_exps followed by b_exps. Precondition failures
/// throw PreconditionViolation with which() in {"domain-not-free",
/// "b-not-annihilated", "composite-not-injective", "shape"}.
bool factor_tensor_check(const Hom& f, const Hom& g, const Exponents& a_exps,
                         const Exponents& b_exps);

}  // namespace zpalg::zpmod
