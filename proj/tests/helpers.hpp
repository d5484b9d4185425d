#pragma once

#include "tap/generators.hpp"
#include "tap/instance.hpp"

namespace tap::testing {

/// Path 0-1-2 plus one link {0,2} of cost 5: the smallest valid instance.
inline TapInstance triangle() {
    TapInstance inst;
    inst.n = 3;
    inst.tree_edges = {{0, 1}, {1, 2}};
    inst.links = {{0, 2, Rat(5), 0}};
    return inst;
}

/// The lambda=4 tight path presented with costs 6, 3, 2, 6 + 1/100:
/// the unscaled family at eps = 1/600, scaled by 6.
inline TapInstance scaled_tight_path() {
    return scale_instance(gen_tight_path(4, make_rat(1, 600)), Rat(6));
}

/// Star with center 0 and a unit cycle on the leaves.
inline TapInstance star5() { return gen_star_cycle(5); }

/// Unit-cost triangle graph (a plain 2EC instance).
inline NcssInstance unit_triangle() {
    NcssInstance g;
    g.n = 3;
    g.edges = {{0, 1, Rat(1)}, {1, 2, Rat(1)}, {0, 2, Rat(1)}};
    return g;
}

}  // namespace tap::testing
