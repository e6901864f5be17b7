#pragma once

// Constructors for the groups the engine analyses: standard families,
// direct and semidirect products, and generator fixtures exported from an
// external computer algebra system.

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "csgroups/group.hpp"

namespace csg {

  // Leaf kinds only (cyclic, symmetric, alternating, dihedral, quaternion8,
  // extraspecial_p3, frobenius_pq). Throws ParameterError on invalid
  // parameters, e.g. frobenius(p, q) with q not dividing p - 1.
  //
  //   cyclic(n)        n-cycle on n points
  //   symmetric(n)     S_n on n points
  //   alternating(n)   A_n on n points
  //   dihedral(n)      symmetries of the n-gon, order 2n
  //   quaternion8      regular representation, 8 points
  //   extraspecial(p)  Heisenberg group mod p (order p^3, exponent p), odd p,
  //                    regular representation
  //   frobenius(p, q)  affine maps x -> a x + b over Z/p with a of order q
  FiniteGroup make_named(GroupSpec const& spec, std::size_t cap = default_order_cap);

  FiniteGroup cyclic(std::size_t n);
  FiniteGroup symmetric(std::size_t n);
  FiniteGroup alternating(std::size_t n);
  FiniteGroup dihedral(std::size_t n);
  FiniteGroup quaternion8();
  FiniteGroup extraspecial(std::size_t p);
  FiniteGroup frobenius(std::size_t p, std::size_t q);

  // Acts on the disjoint union of the two point sets. Throws OrderCapExceeded
  // if |G||H| > cap.
  FiniteGroup direct_product(FiniteGroup const& g,
                             FiniteGroup const& h,
                             std::size_t        cap = default_order_cap);

  // action[i][j] is the image, as an element index of n, of
  // n.generators()[j] under the automorphism attached to h.generators()[i].
  //
  // The product is (a, x)(b, y) = (a * x(b), x y), realised as the regular
  // representation on |N||H| points. Every claimed automorphism is checked to
  // be a bijective homomorphism, and the induced map H -> Aut(N) is checked to
  // be a homomorphism; failures throw ActionError naming the offending pair.
  FiniteGroup semidirect_product(FiniteGroup const&                    n,
                                 FiniteGroup const&                    h,
                                 std::vector<std::vector<Elem>> const& action,
                                 std::size_t                           cap = default_order_cap);

  // Extends generator images to the full map N -> N. Returns an empty vector
  // unless the images define a bijective endomorphism.
  std::vector<Elem> extend_to_automorphism(FiniteGroup const& n, std::vector<Elem> const& images);

  // Fixture grammar (UTF-8 text, '#' starts a comment, blank lines ignored):
  //   name <label>
  //   degree <n>
  //   one permutation per line in 1-based cycle notation, "()" for identity
  // Throws ParseError with the offending line number, DegreeMismatch, or
  // OrderCapExceeded.
  FiniteGroup parse_fixture(std::istream&      in,
                            std::string const& origin,
                            std::size_t        cap = default_order_cap);
  FiniteGroup load_fixture(std::filesystem::path const& path,
                           std::size_t                  cap = default_order_cap);

  void write_fixture(std::ostream&                   out,
                     std::string const&              name,
                     std::size_t                     degree,
                     std::vector<Permutation> const& generators,
                     std::vector<std::string> const& comments = {});

  // Builtin group expressions:
  //   cyclic(12)  sym(3)  alt(5)  dihedral(4)  quaternion8  extraspecial(3)
  //   frobenius(7,3)  heisext(3)
  // short forms C12 S3 A5 D8 (dihedral of order 8) Q8 E27 F21, and products
  // joined by 'x' or '*', e.g. "q8xF21" or "sym(3) x cyclic(5)".
  // heisext(p) is extraspecial(p) extended by the involution x -> x^-1, y -> y.
  // Throws ParameterError on unknown names or malformed input.
  GroupSpec parse_builtin(std::string_view text);

  // Builds any spec made of leaf kinds and direct products.
  FiniteGroup build(GroupSpec const& spec, std::size_t cap = default_order_cap);

  FiniteGroup heisenberg_inverting_extension(std::size_t p, std::size_t cap = default_order_cap);

}  // namespace csg
