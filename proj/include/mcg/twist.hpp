#pragma once

#include "mcg/automorphism.hpp"
#include "mcg/polygon.hpp"

namespace mcg {

/// Action on pi_1(N_{g,1}, *) of the Dehn twist along a two-sided simple
/// closed curve with the given normal coordinates (cyclically reduced, even
/// length). `arrow` (+1 or -1) fixes the orientation of the annulus on chord 0
/// relative to the disk D; on chord j the annulus orientation is
/// arrow * (-1)^j relative to D, since every arc gluing is twisted. The twist
/// turns left with respect to the annulus orientation.
Automorphism dehn_twist(int genus, const CrossingSequence& curve, int arrow);

/// Image of one generator x_i, with `power` = +1 (twist) or -1 (inverse).
Word dehn_twist_image(int genus, const Realization& curve, int arrow, int i,
                      int power);

}  // namespace mcg
