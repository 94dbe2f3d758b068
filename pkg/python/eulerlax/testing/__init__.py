# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import inspect
import sys

import pytest

from eulerlax.field import Grid2D, random_bandlimited


# pytest.main() wrapper to allow running single test file
def main():
    test_file = inspect.getsourcefile(sys._getframe(1))
    sys.exit(pytest.main([test_file] + sys.argv[1:]))


def eigenstate(n: int = 64, k: int = 1, l: int = 1, amplitude: float = 1.0):
    """psi = A sin(kx) sin(ly) on an n x n grid, as a FlowState2D."""
    from eulerlax.euler2d import SteadyStateSpec
    return SteadyStateSpec("laplacian-eigenstate", k=k, l=l, amplitude=amplitude).build(Grid2D.square(n))


def random_state(seed: int, n: int = 64, kmax: int = 4, amplitude: float = 1.0):
    from eulerlax.euler2d import FlowState2D
    omega = random_bandlimited(seed, kmax, Grid2D.square(n), amplitude)
    return FlowState2D.from_vorticity(omega)


def random_triple(seed: int, n: int = 64, kmax: int = 4):
    grid = Grid2D.square(n)
    return tuple(random_bandlimited(seed * 3 + i, kmax, grid) for i in range(3))
