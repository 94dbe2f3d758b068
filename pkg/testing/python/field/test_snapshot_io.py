# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import struct

import numpy as np
import pytest

import eulerlax
from eulerlax.errors import SnapshotFormatError
from eulerlax.field import (
    Grid2D,
    Grid3D,
    decode_snapshot,
    encode_snapshot,
    random_bandlimited,
    random_bandlimited_3d,
    read_snapshot,
    write_snapshot,
)
from eulerlax.field.io import MAGIC
from eulerlax.lax3d import VectorField3D


def test_2d_layout():
    grid = Grid2D(nx=8, ny=10)
    f = random_bandlimited(1, 2, grid)
    payload = encode_snapshot(f)
    assert payload[:8] == MAGIC
    assert struct.unpack("<3I", payload[8:20]) == (2, 8, 10)
    assert struct.unpack("<2d", payload[20:36]) == (grid.lx, grid.ly)
    assert len(payload) == 36 + 8 * 80
    # row-major with x innermost
    assert struct.unpack("<d", payload[36 + 8:44 + 8])[0] == f.values[0, 1]


def test_2d_file_round_trip_is_bit_exact(tmp_path):
    f = random_bandlimited(3, 6, Grid2D.square(32))
    path = write_snapshot(str(tmp_path / "omega.eulf"), f)
    again = read_snapshot(path)
    assert again.grid == f.grid
    np.testing.assert_array_equal(again.values, f.values)


def test_3d_scalar_and_vector_snapshots():
    grid = Grid3D.cube(8)
    scalar = random_bandlimited_3d(2, 2, grid)
    again = decode_snapshot(encode_snapshot(scalar))
    np.testing.assert_array_equal(again.values, scalar.values)
    vector = VectorField3D.random(4, 2, grid)
    decoded = decode_snapshot(encode_snapshot(vector))
    assert isinstance(decoded, VectorField3D)
    for a, b in zip(decoded.components, vector.components):
        np.testing.assert_array_equal(a.values, b.values)


@pytest.mark.parametrize("mutate", [
    lambda p: b"EULF0002" + p[8:],
    lambda p: p[:-3],
    lambda p: p + b"\x00" * 8,
    lambda p: p[:8] + struct.pack("<I", 4) + p[12:],
])
def test_malformed_snapshots(mutate):
    payload = encode_snapshot(random_bandlimited(0, 2, Grid2D.square(8)))
    with pytest.raises(SnapshotFormatError):
        decode_snapshot(mutate(payload))


if __name__ == "__main__":
    eulerlax.testing.main()
