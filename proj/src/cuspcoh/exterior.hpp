#pragma once

#include "cuspcoh/multiset.hpp"

namespace cuspcoh {

// Compact-torus character multiset of the q-th exterior power of the
// (n^2 - 1)-dimensional tangent block p^1_c, via the subset parametrization:
// subsets A, B of the positive roots with |A| + |B| <= q contribute the
// character sum(A) - sum(B) with multiplicity C(n-1, q - |A| - |B|).
CharacterMultiset wedge_p_characters(int n, int q);

// Same for the off-diagonal block u_c, which has no torus-fixed directions:
// subsets with |A| + |B| = t exactly.
CharacterMultiset wedge_u_characters(int n, int t);

// Independent oracle: the exact exterior power of the weight multiset
// {0 with multiplicity n-1} ∪ {±alpha : alpha positive}, by direct subset
// enumeration over all n^2 - 1 basis weights. Makes no use of the subset
// parametrization above. Guarded against combinatorial blow-up for n > 5.
CharacterMultiset adjoint_wedge_oracle(int n, int q, bool allow_large = false, int jobs = 1);

}  // namespace cuspcoh
