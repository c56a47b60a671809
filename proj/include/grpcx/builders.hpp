#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "grpcx/perm_group.hpp"

namespace grpcx
{

// Disjoint-cycle notation, 1-based: "(1,2)(3,5)", "(1 2)(3 4)", "()" for the
// identity. Points may be separated by commas and/or whitespace.
Permutation parse_cycles(std::string_view text, std::size_t degree);
// Canonical comma form; "()" for the identity.
std::string format_cycles(Permutation const &p);

GroupPtr cyclic(std::size_t n, Limits const &limits = default_limits());
// Symmetries of the n-gon on n points; n = 2 is realized as the Klein group
// on 4 points, since two points carry only one reflection.
GroupPtr dihedral(std::size_t n, Limits const &limits = default_limits());
GroupPtr symmetric(std::size_t n, Limits const &limits = default_limits());
GroupPtr alternating(std::size_t n, Limits const &limits = default_limits());
// (Z_p)^k as a product of k disjoint p-cycles.
GroupPtr elementary_abelian(std::size_t p, std::size_t k,
                            Limits const &limits = default_limits());

/// Half-open point range [first, first + count) carrying one factor.
struct PointRange
{
  Point first = 0;
  std::size_t count = 0;
};

struct DirectProduct
{
  GroupPtr group;
  PointRange left;
  PointRange right;
};

// G acts on the first deg(G) points, H on the next deg(H).
DirectProduct direct_product_parts(GroupPtr const &g, GroupPtr const &h);
GroupPtr direct_product(GroupPtr const &g, GroupPtr const &h);
// Image of the product's element set restricted to one point range.
GroupPtr project(GroupPtr const &product, PointRange range);

struct WreathProduct
{
  GroupPtr group;
  // One copy of N's generators per block.
  std::vector<Permutation> base_generators;
  // Q's generators permuting the blocks.
  std::vector<Permutation> top_generators;
};

// Imprimitive action of N wr Q on deg(N) * deg(Q) points: block b holds
// points b*deg(N) .. (b+1)*deg(N)-1.
WreathProduct wreath_product_parts(GroupPtr const &n, GroupPtr const &q);
GroupPtr wreath_product(GroupPtr const &n, GroupPtr const &q);

/// G/N as the action of G on the right cosets of N by right multiplication.
///
/// Cosets are numbered by their smallest element (in the ambient's sorted
/// element order), so the coset of the identity is point 1.
struct Quotient
{
  GroupPtr group;
  Subgroup kernel;
  // image[i]: quotient element index of ambient element i.
  std::vector<ElementIndex> image;

  Subgroup preimage(Subgroup const &s) const;
  Subgroup image_of(Subgroup const &s) const;
};

Quotient quotient(Subgroup const &n);
GroupPtr quotient_group(Subgroup const &n);

// SL(2, p) acting on the p^2 - 1 nonzero row vectors of F_p^2 (v -> vM).
GroupPtr special_linear_2(std::size_t p,
                          Limits const &limits = default_limits());

// Two copies of the right regular representation side by side, so every
// image is even; padded with fixed points to degree 5 when smaller.
GroupPtr embed_in_alternating(GroupPtr const &g);

} // namespace grpcx
