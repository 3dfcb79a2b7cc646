// Explicit permutation representations of the groups the engine uses.
#pragma once

#include <string>
#include <vector>

#include "endocert/permgroup.hpp"

namespace endocert::groups {

PermGroup symmetric(std::size_t n);
PermGroup alternating(std::size_t n);
PermGroup cyclic(std::size_t n);
/// Dihedral group of order 2n on n points.
PermGroup dihedral(std::size_t n);
/// x -> a x + b on F_p with a ranging over the subgroup of order k of F_p^*.
PermGroup affine_line(std::uint32_t p, std::uint32_t k);

/// PSL_2(F_q) on the q+1 points of the projective line; point q is infinity.
/// Generated by x -> x+1 and x -> -1/x, plus x -> c^2 x for a primitive c
/// when q is not prime.
PermGroup psl2(std::uint32_t q);
/// GL_3(F_2) on the seven nonzero vectors of F_2^3 (vector v is point v-1).
PermGroup gl3_2_on_7();
/// PSL_2(F_11) in its doubly transitive action on 11 points.
PermGroup psl2_11_on_11();
/// AGL_3(F_2) on the eight vectors of F_2^3.
PermGroup agl3_2();
/// Mathieu group M_n for n in {11, 12, 22, 23, 24} in its natural action.
PermGroup mathieu(int n);
/// A_7 acting doubly transitively on one orbit of 15 Fano planes on 7 points.
PermGroup a7_on_15();
/// GL_2(F_p) acting on itself by left multiplication (regular action).
PermGroup gl2_regular(std::uint32_t p);

struct NamedGroup {
  std::string name;
  PermGroup group;
};

/// Candidate Galois groups of degree n used by polynomial identification:
/// S_n and A_n, cyclic and dihedral groups, and whichever of the other
/// constructions above live on n points.
std::vector<NamedGroup> candidates_for_degree(std::size_t n);

}  // namespace endocert::groups
