"""
Plotting the samples and the curve
==================================

Writes two CSV files (samples, fine-grid curve) that any plotting tool
can read. matplotlib is used only if it happens to be installed.
"""

import sys
import tempfile
from pathlib import Path

import numpy as np

from graphspline.cli import main

out = Path(sys.argv[1] if len(sys.argv) > 1 else tempfile.mkdtemp())
main(["plotdata", "--fn", "14", "--out", str(out)])

samples = np.loadtxt(out / "fn14_samples.csv", delimiter=",", skiprows=1)
curve = np.loadtxt(out / "fn14_curve.csv", delimiter=",", skiprows=1)
print(samples.shape[0], "samples,", curve.shape[0], "curve points")

try:
    import matplotlib.pyplot as plt
except ImportError:
    plt = None

if plt is not None:
    plt.plot(curve[:, 0], curve[:, 1], label="reconstruction")
    plt.plot(samples[:, 0], samples[:, 1], "o", ms=3, label="samples")
    plt.legend()
    plt.savefig(out / "fn14.png")
    print("figure saved to", out / "fn14.png")
