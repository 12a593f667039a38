#pragma once

// Convention ledger: every sign and normalization choice the library relies on.
// Reports embed snapshot() so a result can be reproduced.

#include <string>
#include <utility>
#include <vector>

#include "superkit/exact.hpp"

namespace superkit::ledger {

// ε_{12} = +1 and ε^{12} = +1 (numerically equal matrices).
inline constexpr int kEpsLower12 = 1;
inline constexpr int kEpsUpper12 = 1;

// d² = κ ε_{ab} d_a d_b and D² = κ ε^{ab} D_a D_b with the same κ.
inline Q d2_norm() { return Q(-1, 4); }

// Θ-side spinor metric: Γ_{ab}(p) = (J B(p) J)_{ab}, J = [[0,1],[-1,0]].
inline constexpr const char* kGammaLowering = "Gamma_ab(p) = (J B(p) J)_ab, J=[[0,1],[-1,0]]";

// Component form of the Wess-Zumino system in these conventions.
// F = kFPhiFactor * m * conj(phi); spinor index raised on the right: v^b = v_c ε^{cb}.
inline constexpr int kFPhiFactor = -2;

using Snapshot = std::vector<std::pair<std::string, std::string>>;
Snapshot snapshot();

}  // namespace superkit::ledger
