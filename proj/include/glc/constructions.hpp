#pragma once

#include <string>
#include <vector>

#include "glc/groebner.hpp"

namespace glc {

/// Segre product of standard graded quotients X = S/I and Y = T/J (disjoint
/// variable names): the kernel of u_ij -> x_i y_j modulo I + J, presented on
/// variables named u<i>_<j>.
Ideal segre_product(const Ideal& X, const Ideal& Y);

/// k-th Veronese subring of a standard graded quotient S/I: the kernel of
/// one variable per monomial of degree k, named v<index>.
Ideal veronese(const Ideal& X, int k);

/// Semigroup ring k[t^a : a in gens] inside k[t_1..t_r] with all
/// generators of one total degree; variables named x<index>, standard graded.
Ideal semigroup_ring(const FieldSpec& field, const std::vector<std::vector<int>>& gens);

}  // namespace glc
