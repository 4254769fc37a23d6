"""Track the pair-density satellites behind a supercritical step.

Prints separation, gap depth and the fitted outward speed of the
principal satellite for a series of times.
"""
import argparse

from zitterlab.constants import ATOMIC
from zitterlab.dynamics import Grid1D
from zitterlab.errors import NoStructure
from zitterlab.pairsim import detect_satellites, pair_mode_series, satellite_speed
from zitterlab.potentials import PotentialSpec


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--V0", type=float, default=2.5, help="step height in mc^2")
    ap.add_argument("--W", type=float, default=0.3, help="step width in hbar/mc")
    ap.add_argument("--n", type=int, default=512)
    ap.add_argument("--length", type=float, default=1.0)
    args = ap.parse_args()

    k = ATOMIC
    c = k.c
    grid = Grid1D.centered(args.n, args.length)
    step = PotentialSpec.tanh_step(args.V0 * c**2, args.W / c, 0.05 * args.length)
    times = [2e-4, 3e-4, 4e-4, 5e-4, 6e-4, 7e-4, 8e-4]
    runs = []
    for d in pair_mode_series(grid, step, times, k=k):
        try:
            rep = detect_satellites(d)
        except NoStructure:
            print(f"t={d.time:.1e}  no structure")
            continue
        print(f"t={d.time:.1e}  separation={rep.separation:.4f}  nearest={rep.nearest_separation:.4f}  "
              f"gap={rep.gap_depth:.3f}")
        if rep.gap_depth < 0.5:
            runs.append(d)
    if len(runs) >= 3:
        v = satellite_speed(runs)
        print(f"satellite speed {v:.2f} a.u. = {v / c:.3f} c")


if __name__ == "__main__":
    main()
