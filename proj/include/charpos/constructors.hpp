#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "charpos/perm_group.hpp"

namespace charpos {

/// Cyclic group of order n acting regularly on n points.
PermGroup cyclic(std::size_t n, std::size_t cap = kDefaultElementCap);
/// Dihedral group of the given order (2n) acting on the n-gon; orders 2 and
/// 4 give C2 and the Klein four-group.
PermGroup dihedral(std::size_t order, std::size_t cap = kDefaultElementCap);
/// Generalized quaternion (dicyclic) group of order 4n, n >= 2, in its
/// regular action. Order 8 is Q8.
PermGroup generalized_quaternion(std::size_t order, std::size_t cap = kDefaultElementCap);
PermGroup symmetric(std::size_t n, std::size_t cap = kDefaultElementCap);
PermGroup alternating(std::size_t n, std::size_t cap = kDefaultElementCap);
/// (C_p)^k acting on p*k points.
PermGroup elementary_abelian(std::size_t p, std::size_t k, std::size_t cap = kDefaultElementCap);
/// Direct product acting on the disjoint union of the two point sets.
PermGroup direct_product(const PermGroup& a, const PermGroup& b, std::size_t cap = kDefaultElementCap);
/// SL(2,3) acting on the 8 nonzero vectors of F_3^2.
PermGroup sl23(std::size_t cap = kDefaultElementCap);
/// C7 : C3 acting on 7 points.
PermGroup frobenius21(std::size_t cap = kDefaultElementCap);
/// Extraspecial group 3^(1+2) of exponent 3 in its regular action.
PermGroup extraspecial27(std::size_t cap = kDefaultElementCap);

/// Evaluates a constructor expression such as "direct_product(sl23(),cyclic(2))".
/// Throws PreconditionViolation for unknown constructors or bad parameters.
PermGroup construct(std::string_view expression, std::size_t cap = kDefaultElementCap);

} // namespace charpos
