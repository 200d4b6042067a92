#pragma once

#include "../core.hpp"
#include "../eps_jet.hpp"
#include "../slope.hpp"

namespace rhobar::taylor {

/// One parameter cell of the deformation machinery: the weight sits at
/// r = r0 + eps with r0 = s + beta(p-1) and v_p(eps) = t, and the layer
/// under study is indexed by alpha < nu.
struct Cell {
    long p = 0;
    long nu = 0;
    long s = 0;      // remainder window representative in {1,...,p-1}
    long beta = 0;   // annulus index in {0,...,p-2}
    long t = 0;      // v_p(eps) > 0
    long u0 = 1;     // leading unit of eps
    long alpha = 0;  // filtration layer, 0 <= alpha < nu
    SlopeClass slope = SlopeClass::generic(1);

    EpsContext eps_context() const { return EpsContext::canonical(p, t, u0); }

    long r0() const { return s + beta * (p - 1); }

    /// Minimal concrete r = r0 + eps exceeding the filtration bound 2 nu (p+1).
    ZZ concrete_r() const {
        ZZ r = ZZ(r0()) + eps_context().eps;
        ZZ step = ZZ(p - 1) * p_power(p, t + 1);
        while (r <= 2 * nu * (p + 1)) r += step;
        return r;
    }

    /// eps adjusted so that r0 + eps = concrete_r (lifting keeps v_p and unit).
    ZZ concrete_eps() const { return concrete_r() - r0(); }

    long rows() const { return 2 * nu - alpha; }
    long cols() const { return alpha + 1; }

    /// The top boundary term of the restricted sum falls away iff s <= 2 alpha.
    bool subtle_cut() const { return s <= 2 * alpha; }

    /// Entries (w, j) with w - j >= s - alpha carry the extra boundary
    /// corrections when beta = 0.
    bool on_band(long w, long j) const { return beta == 0 && w - j >= s - alpha; }
};

}  // namespace rhobar::taylor
