"""Zitterbewegung of a mixed-energy Gaussian packet at rest.

Evolves the packet, fits the trembling in <x>(t) and prints the fitted
frequency and amplitude next to 2mc^2/hbar and hbar/(2mc).
"""
import argparse

from zitterlab.constants import ATOMIC
from zitterlab.dynamics import EvolutionConfig, Grid1D, evolve, init_gaussian, mean_position, zb_fit
from zitterlab.potentials import PotentialSpec


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, default=1024)
    ap.add_argument("--length", type=float, default=2.0)
    ap.add_argument("--sigma", type=float, default=0.1)
    ap.add_argument("--dt", type=float, default=1e-5)
    ap.add_argument("--steps", type=int, default=1000)
    args = ap.parse_args()

    k = ATOMIC
    grid = Grid1D.centered(args.n, args.length)
    psi = init_gaussian(grid, 0.0, 0.0, args.sigma, (2 ** -0.5, 2 ** -0.5), k)
    cfg = EvolutionConfig(args.dt, args.steps, PotentialSpec.zero(), 1)
    _, series = evolve(psi, cfg, k, {"mean_x": mean_position})
    mean_x = series["mean_x"]
    fit = zb_fit(mean_x, k=k)
    print(f"frequency  {fit.frequency:.6e}   expected {k.zb_frequency:.6e}   "
          f"ratio {fit.frequency / k.zb_frequency:.5f}")
    print(f"amplitude  {fit.amplitude:.6e}   free-particle bound {k.hbar / (2 * k.m * k.c):.6e}")


if __name__ == "__main__":
    main()
