#pragma once

#include "stonework/zhomology.hpp"

namespace stonework::zhomology::detail {

/// Smith form with optional transforms; untracked matrices are left empty.
/// With `chain` false the diagonal is not normalized to a divisibility chain.
SmithForm smith(const IntMatrix& m, bool track_u, bool track_v, bool chain = true);

/// Columns rank.. of V: a basis of ker m.
IntMatrix kernel_basis(const SmithForm& s);
/// Rows rank.. of V^-1: coordinates of kernel vectors in that basis.
IntMatrix kernel_coordinates(const SmithForm& s);

}  // namespace stonework::zhomology::detail
