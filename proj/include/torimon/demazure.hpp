// Demazure roots of an affine toric variety: membership, bounded
// enumeration, and the face-extension move cone(gamma, rho).

#pragma once

#include <vector>

#include "torimon/cone.hpp"

namespace torimon {

/// A root e for the ray p_i: <p_i, e> = -1 and <p_j, e> >= 0 for j != i.
struct DemazureRoot {
  DualVector e;
  int ray_index = 0;
};

bool is_root(const RationalCone& cone, int ray_index, const DualVector& e);

/// All roots of the given ray whose coordinates lie in [-bound, bound],
/// in graded-lex order. The root set is infinite in general, hence the
/// explicit box.
std::vector<DemazureRoot> enumerate_roots(const RationalCone& cone, int ray_index, long bound,
                                          const Budget& budget = {});

/// For a root e of ray rho with e in face^perp and rho not a ray of face,
/// returns the face cone(face, rho) of sigma.
const Face& extend_face(const RationalCone& cone, const Face& face, int ray_index,
                        const DualVector& e);

}  // namespace torimon
