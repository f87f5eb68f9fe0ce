#pragma once

#include "quandles/perm_group.hpp"

namespace quandles {

/// Natural actions on {0, ..., n-1}.
PermGroup symmetric_group(int n);
PermGroup alternating_group(int n);
PermGroup cyclic_group(int n);

/// Dihedral group of order 2n acting on the n vertices of an n-gon (n >= 3).
PermGroup dihedral_group(int n);

/// Affine group x -> ax + b over Z_p (p prime), degree p, order p(p-1).
PermGroup agl1(int p);

}  // namespace quandles
