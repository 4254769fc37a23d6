"""Static scalar potentials switched on suddenly at t = 0."""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np


class PotentialKind(str, Enum):
    ZERO = "Zero"
    TANH_STEP = "TanhStep"
    TABLE = "Table"


def tanh_potential(x, V0: float, W: float):
    """V0 [tanh(x/W) + 1] / 2."""
    if not W > 0:
        raise ValueError(f"step width W must be positive, got {W!r}")
    return V0 * (np.tanh(np.asarray(x, dtype=float) / W) + 1.0) / 2.0


@dataclass(frozen=True)
class PotentialSpec:
    """Potential energy V(x) in the units of the active system.

    ``closure_width`` only matters for TanhStep on a periodic grid: when set,
    the plateau is brought back down near the right edge by a smooth ramp of
    that width, so the wrap-around does not form a second sharp step.
    """

    kind: PotentialKind = PotentialKind.ZERO
    V0: float = 0.0
    W: float = 1.0
    table: Optional[tuple] = None
    closure_width: Optional[float] = None

    def __post_init__(self):
        object.__setattr__(self, "kind", PotentialKind(self.kind))
        if self.kind is PotentialKind.TANH_STEP and not self.W > 0:
            raise ValueError("TanhStep requires W > 0")
        if self.kind is PotentialKind.TABLE and self.table is None:
            raise ValueError("Table potential needs sampled values")
        if self.table is not None:
            object.__setattr__(self, "table", tuple(float(v) for v in self.table))
        if self.closure_width is not None and not self.closure_width > 0:
            raise ValueError("closure_width must be positive")

    @classmethod
    def zero(cls):
        return cls(PotentialKind.ZERO)

    @classmethod
    def tanh_step(cls, V0, W, closure_width=None):
        return cls(PotentialKind.TANH_STEP, V0=V0, W=W, closure_width=closure_width)

    @classmethod
    def from_table(cls, values):
        return cls(PotentialKind.TABLE, table=tuple(values))

    @property
    def is_zero(self) -> bool:
        if self.kind is PotentialKind.ZERO:
            return True
        if self.kind is PotentialKind.TANH_STEP:
            return self.V0 == 0.0
        return not any(self.table)

    def sample(self, grid) -> np.ndarray:
        x = grid.x
        if self.kind is PotentialKind.ZERO:
            return np.zeros(grid.n)
        if self.kind is PotentialKind.TABLE:
            if len(self.table) != grid.n:
                raise ValueError(
                    f"table has {len(self.table)} samples but the grid has {grid.n}"
                )
            return np.array(self.table, dtype=float)
        V = tanh_potential(x, self.V0, self.W)
        if self.closure_width is not None:
            w = self.closure_width
            centre = grid.x_max - 4.0 * w
            V = V * (1.0 - np.tanh((x - centre) / w)) / 2.0
        return V

    def to_dict(self) -> dict:
        d = {"kind": self.kind.value}
        if self.kind is PotentialKind.TANH_STEP:
            d.update(V0=self.V0, W=self.W, closure_width=self.closure_width)
        elif self.kind is PotentialKind.TABLE:
            d["table"] = list(self.table)
        return d
