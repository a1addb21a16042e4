#!/usr/bin/env python3
"""Generate narrowband Gaussian SPD files standing in for measured laser
spectra (center wavelengths 636 / 512 / 453 nm, sigma 1.5 nm, 1 nm sampling)."""

import math
import os

CENTERS = {"laser_red": 636.0, "laser_green": 512.0, "laser_blue": 453.0}
SIGMA = 1.5
SPAN = 12


def main():
    outdir = os.path.join(os.path.dirname(__file__), "..", "data", "spd")
    os.makedirs(outdir, exist_ok=True)
    for name, c in CENTERS.items():
        path = os.path.join(outdir, name + ".csv")
        with open(path, "w") as f:
            f.write("wavelength_nm,power\n")
            for w in range(int(c) - SPAN, int(c) + SPAN + 1):
                p = math.exp(-0.5 * ((w - c) / SIGMA) ** 2)
                f.write("%d,%.8f\n" % (w, p))
        print("wrote", path)


if __name__ == "__main__":
    main()
