"""
From reconstruction to a refined minimum
========================================

Count the local minima of the reconstructed curve and polish the lowest
one with Brent's method on the true function.
"""

from graphspline import DiscretizationConfig, discretize, get_function, optimize

f = get_function(10).target()  # -x sin(x) on [0, 10]
res = discretize(f, DiscretizationConfig())

rep = optimize(f, res, grid_size=1001, x_tol=1e-6, max_evals=10)
print("local minima on the reconstruction:")
for x, y in rep.local_minima:
    print(f"  x={x:.4f}  f_hat={y:.4f}")

br = rep.brent_refined
print("candidate", rep.global_candidate[0])
print(f"refined   {br.position:.8f}  f={br.value:.8f}  converged={br.converged}")

# the extra cost on top of discretization is small
print("evaluations: discretize", res.nfev, "+ refinement", rep.extra_evals)
