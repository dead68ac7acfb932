#pragma once

#include "pomlab/directoid.hpp"
#include "pomlab/effect_algebra.hpp"
#include "pomlab/poset.hpp"

namespace pomlab::fixtures {

// Reference structures used by the built-in reproduction suite and tests.
// Element 0 is always the bottom and the last index the top.

/// Eight elements: three atoms a,b,c, three coatoms c',b',a', every atom
/// below every coatom. Indices 0,a=1,b=2,c=3,c'=4,b'=5,a'=6,1=7.
Poset fig1();

/// Six elements, both atoms below both coatoms.
/// Indices 0,a=1,b=2,b'=3,a'=4,1=5.
Poset fig2();

/// Ten elements, four atoms, four coatoms, incidence as drawn.
/// Indices 0,a=1,b=2,c=3,d=4,d'=5,c'=6,b'=7,a'=8,1=9.
Poset fig3();

/// The hexagon B6: two 4-chains 0<a<b<1 and 0<b'<a'<1.
/// Indices 0,a=1,b=2,b'=3,a'=4,1=5.
Poset b6();

/// Two chains of height 4 glued below c and above c'.
/// Indices 0,c'=1,b'=2,a=3,a'=4,b=5,c=6,1=7.
Poset fig5();

/// The directoid on fig5() that maps every incomparable pair to 0 and every
/// comparable pair to its minimum.
Directoid fig5_directoid();

/// Boolean 2x2 diamond: 0, two complementary atoms p,q, 1.
Poset diamond();

/// Chain with n elements, involution reversing the order.
Poset chain(int n);

/// Effect algebra on the diamond with + = join on orthogonal pairs.
EffectAlgebra boolean_ea();

/// Three-element chain 0 < h < 1 with h + h = 1 (h is its own complement).
EffectAlgebra mv3_ea();

/// Poset fixture by reproduction name: fig1..fig5, b6, diamond, chain2.
Poset poset_by_name(const std::string& name);

}  // namespace pomlab::fixtures
