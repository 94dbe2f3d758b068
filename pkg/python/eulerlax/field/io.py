# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
"""EULF binary field snapshots.

Layout (all little-endian):
    2D: b"EULF0001", uint32 (ndim=2, nx, ny), float64 (lx, ly), nx*ny float64
    3D: b"EULF0001", uint32 (ndim=3, nx, ny, nz), float64 (lx, ly, lz),
        uint32 ncomp, ncomp*nz*ny*nx float64
Samples are row-major with x innermost.
"""
import os
from typing import Union

import numpy as np

from eulerlax.errors import SnapshotFormatError
from .grid import Grid2D, Grid3D
from .scalar import ScalarField2D, ScalarField3D

MAGIC = b"EULF0001"
_U32 = np.dtype("<u4")
_F64 = np.dtype("<f8")


def _components(field) -> np.ndarray:
    if isinstance(field, ScalarField3D):
        return field.values[np.newaxis]
    # duck-typed vector field: anything exposing `components`
    return np.stack([c.values for c in field.components])


def encode_snapshot(field) -> bytes:
    grid = field.grid
    if isinstance(grid, Grid2D):
        header = np.array([2, grid.nx, grid.ny], dtype=_U32).tobytes()
        header += np.array([grid.lx, grid.ly], dtype=_F64).tobytes()
        return MAGIC + header + np.ascontiguousarray(field.values, dtype=_F64).tobytes()
    data = _components(field)
    header = np.array([3, grid.nx, grid.ny, grid.nz], dtype=_U32).tobytes()
    header += np.array([grid.lx, grid.ly, grid.lz], dtype=_F64).tobytes()
    header += np.array([data.shape[0]], dtype=_U32).tobytes()
    return MAGIC + header + np.ascontiguousarray(data, dtype=_F64).tobytes()


def decode_snapshot(payload: bytes):
    """Inverse of encode_snapshot.

    Returns a ScalarField2D, a ScalarField3D (one component) or a VectorField3D.
    """
    if payload[:len(MAGIC)] != MAGIC:
        raise SnapshotFormatError(f"bad magic {payload[:len(MAGIC)]!r}, expected {MAGIC!r}")
    offset = len(MAGIC)

    def take(dtype, count):
        nonlocal offset
        nbytes = dtype.itemsize * count
        if offset + nbytes > len(payload):
            raise SnapshotFormatError("snapshot is truncated")
        out = np.frombuffer(payload, dtype=dtype, count=count, offset=offset)
        offset += nbytes
        return out

    ndim = int(take(_U32, 1)[0])
    if ndim == 2:
        nx, ny = (int(v) for v in take(_U32, 2))
        lx, ly = (float(v) for v in take(_F64, 2))
        grid = Grid2D(nx=nx, ny=ny, lx=lx, ly=ly)
        values = take(_F64, nx * ny).reshape(grid.shape)
        result = ScalarField2D(grid, values)
    elif ndim == 3:
        nx, ny, nz = (int(v) for v in take(_U32, 3))
        lx, ly, lz = (float(v) for v in take(_F64, 3))
        ncomp = int(take(_U32, 1)[0])
        grid = Grid3D(nx=nx, ny=ny, nz=nz, lx=lx, ly=ly, lz=lz)
        data = take(_F64, ncomp * grid.size).reshape((ncomp,) + grid.shape)
        if ncomp == 1:
            result = ScalarField3D(grid, data[0])
        else:
            from eulerlax.lax3d.vector import VectorField3D
            if ncomp != 3:
                raise SnapshotFormatError(f"3D snapshots hold 1 or 3 components, got {ncomp}")
            result = VectorField3D.from_arrays(grid, data)
    else:
        raise SnapshotFormatError(f"unsupported ndim {ndim}")
    if offset != len(payload):
        raise SnapshotFormatError(f"{len(payload) - offset} trailing bytes after field data")
    return result


def write_snapshot(path: str, field: Union[ScalarField2D, ScalarField3D]) -> str:
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, "wb") as f:
        f.write(encode_snapshot(field))
    return path


def read_snapshot(path: str):
    with open(path, "rb") as f:
        return decode_snapshot(f.read())
