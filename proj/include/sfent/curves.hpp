#pragma once

// Figure data. Factors are plotted at their natural normalization,
// F(0) = B(0) = N and F(0,0) = B(0,0) = 1.
//
//   fig1, fig2    hydrogenic F(k), B(s) for Z = 2, 3, 4
//   fig3          hydrogenic S_F, S_B over the hydrogenic series
//   fig4, fig5    helium B(s), F(k) for Z = 2, NI(Z = 2), 3, 4
//   fig6, fig7    helium S_F, S_B and S_F + S_B (interacting and NI)
//   fig8, fig9    helium F(k1, k2), B(s1, s2) at Z = 2 as (x, y, value)
//   fig10, fig11  the same at Z = 4
//   fig12, fig13  helium S_F2, S_B2 and S_F2 + S_B2 (interacting and NI)
//   fig14         helium I_F, I_B

#include "sfent/config.hpp"
#include "sfent/output.hpp"
#include "sfent/variational.hpp"

#include <string>
#include <vector>

namespace sfent {

// Figures in the config's list (all when empty). Entropy figures share one
// computation of each series.
std::vector<CurveSet> build_curves(const RunConfig& config, OptimizerCache& cache);

CurveSet build_curve(const std::string& figure, const RunConfig& config, OptimizerCache& cache);

} // namespace sfent
