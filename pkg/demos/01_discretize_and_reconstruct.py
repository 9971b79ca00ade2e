"""
Adaptive sampling of a 1-D function
===================================

Sample a benchmark function adaptively, then rebuild it on a fine grid
with the graph spline.
"""

import numpy as np

from graphspline import DiscretizationConfig, discretize, get_function, reconstruct
from graphspline.reconstruct import average_l2_error, max_abs_error

# f14 oscillates with a decaying envelope on [0, 4]
f = get_function(14).target()

# 9 uniform points, up to 3 rounds of midpoint checks, absolute tolerance 1e-2
res = discretize(f, DiscretizationConfig(initial_grid_size=9, ref_max=3, tol=1e-2))
print("evaluations:", res.nfev, "rounds:", res.rounds_used)

# failures per round show where the sampler spent its budget
for r, fails in enumerate(res.failure_log):
    print(f"round {r}: {len(fails)} failed checks")

recon = reconstruct(res.positions, res.values, f.domain, 1001)
print(f"rms error {average_l2_error(recon, f):.3e}, max error {max_abs_error(recon, f):.3e}")

# samples cluster where the function bends
gaps = np.diff(res.positions)
print("smallest gap", gaps.min(), "largest gap", gaps.max())
