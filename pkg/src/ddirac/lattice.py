"""Finite lattice box and graded cochain storage.

A cochain stores all 16 component fields (one per multi-index slot) as a
single complex array of shape (16, N0, N1, N2, N3), structure-of-arrays over
the lattice.  Components a form does not use are simply zero, so homogeneous
and inhomogeneous forms share one representation.

Out-of-box reads are governed by the box's boundary policy:

* ``INTERIOR`` -- difference operators are only trusted where every forward
  shift stays inside the box; results carry the interior region used.
* ``ZERO_EXTEND`` -- missing components read as zero, which treats the stored
  field as a compactly supported form on the infinite lattice.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .multiindex import (
    ALL_INDEXES,
    EVEN_SLOTS,
    NSLOTS,
    ODD_SLOTS,
    SLOT_OF,
    as_string,
    from_string,
    validate,
)

#: Maximum imaginary part tolerated in a real-kind cochain.
REAL_IMAG_TOL = 1e-14

SCHEMA_VERSION = 1


class BoundaryPolicy(Enum):
    INTERIOR = "interior"
    ZERO_EXTEND = "zeroextend"


@dataclass(frozen=True)
class LatticeBox:
    """Finite extents N0..N3 plus the boundary policy."""

    extents: tuple[int, int, int, int]
    policy: BoundaryPolicy = BoundaryPolicy.INTERIOR

    def __post_init__(self):
        ext = tuple(int(n) for n in self.extents)
        if len(ext) != 4 or any(n < 1 for n in ext):
            raise ValueError(f"extents must be four positive integers, got {self.extents}")
        object.__setattr__(self, "extents", ext)

    @property
    def npoints(self) -> int:
        return int(np.prod(self.extents))

    def interior_extents(self, depth: int = 1) -> tuple[int, ...]:
        """Extents of the region where `depth` nested forward shifts stay inside."""
        return tuple(max(n - depth, 0) for n in self.extents)

    def contains(self, k) -> bool:
        return all(0 <= ki < n for ki, n in zip(k, self.extents))

    def with_policy(self, policy: BoundaryPolicy) -> "LatticeBox":
        return LatticeBox(self.extents, policy)


def interior_slices(depth: int) -> tuple[slice, ...]:
    """Slices selecting the depth-d interior of a (16, N0..N3) data array."""
    return (slice(None),) + tuple(slice(0, -depth) if depth else slice(None) for _ in range(4))


class Cochain:
    """Graded component field over a lattice box (immutable by convention)."""

    __slots__ = ("box", "data", "scalar_kind", "tilde")

    def __init__(self, box: LatticeBox, data=None, scalar_kind: str = "complex",
                 tilde: bool = False):
        if scalar_kind not in ("real", "complex"):
            raise ValueError(f"scalar_kind must be 'real' or 'complex', got {scalar_kind!r}")
        shape = (NSLOTS,) + box.extents
        if data is None:
            data = np.zeros(shape, dtype=np.complex128)
        else:
            data = np.asarray(data, dtype=np.complex128)
            if data.shape != shape:
                raise ValueError(f"data shape {data.shape} != {shape}")
        if scalar_kind == "real":
            scale = max(np.abs(data.real).max(), 1.0)
            if np.abs(data.imag).max() > REAL_IMAG_TOL * scale:
                raise ValueError("real-kind cochain has nonzero imaginary parts")
            data = data.real.astype(np.complex128)
        self.box = box
        self.data = data
        self.scalar_kind = scalar_kind
        self.tilde = bool(tilde)

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zeros(cls, box, scalar_kind="complex", tilde=False) -> "Cochain":
        return cls(box, None, scalar_kind, tilde)

    @classmethod
    def from_components(cls, box, components: dict, scalar_kind="complex",
                        tilde=False) -> "Cochain":
        """Build from a {multi-index: array-or-scalar} mapping."""
        out = np.zeros((NSLOTS,) + box.extents, dtype=np.complex128)
        for mi, values in components.items():
            out[SLOT_OF[validate(mi)]] = values
        return cls(box, out, scalar_kind, tilde)

    def like(self, data, **overrides) -> "Cochain":
        kw = dict(scalar_kind=self.scalar_kind, tilde=self.tilde)
        kw.update(overrides)
        return Cochain(self.box, data, **kw)

    # -- component access ------------------------------------------------------

    def component(self, mi) -> np.ndarray:
        return self.data[SLOT_OF[validate(mi)]]

    def degrees_present(self, tol: float = 0.0) -> set[int]:
        return {
            len(mi)
            for slot, mi in enumerate(ALL_INDEXES)
            if np.abs(self.data[slot]).max() > tol
        }

    def even_part(self) -> "Cochain":
        out = np.zeros_like(self.data)
        out[list(EVEN_SLOTS)] = self.data[list(EVEN_SLOTS)]
        return self.like(out)

    def odd_part(self) -> "Cochain":
        out = np.zeros_like(self.data)
        out[list(ODD_SLOTS)] = self.data[list(ODD_SLOTS)]
        return self.like(out)

    # -- arithmetic ------------------------------------------------------------

    def _check_compatible(self, other: "Cochain"):
        if self.box.extents != other.box.extents:
            raise ValueError("lattice box extents mismatch")
        if self.tilde != other.tilde:
            raise ValueError("tilde flag mismatch")

    def __add__(self, other):
        self._check_compatible(other)
        kind = "real" if self.scalar_kind == other.scalar_kind == "real" else "complex"
        return Cochain(self.box, self.data + other.data, kind, self.tilde)

    def __sub__(self, other):
        self._check_compatible(other)
        kind = "real" if self.scalar_kind == other.scalar_kind == "real" else "complex"
        return Cochain(self.box, self.data - other.data, kind, self.tilde)

    def __neg__(self):
        return self.like(-self.data)

    def __mul__(self, scalar):
        c = complex(scalar)
        kind = "real" if self.scalar_kind == "real" and c.imag == 0 else "complex"
        return Cochain(self.box, self.data * c, kind, self.tilde)

    __rmul__ = __mul__

    # -- norms -----------------------------------------------------------------

    def max_abs(self, depth: int = 0) -> float:
        """Max component magnitude, optionally over the depth-d interior."""
        view = self.data[interior_slices(depth)]
        return float(np.abs(view).max()) if view.size else 0.0

    # -- serialization ---------------------------------------------------------

    def to_json_dict(self) -> dict:
        components: dict[str, dict[str, list[float]]] = {}
        for slot, mi in enumerate(ALL_INDEXES):
            arr = self.data[slot]
            if not np.any(arr):
                continue
            flat = np.empty(arr.size * 2)
            flat[0::2] = arr.real.ravel(order="C")
            flat[1::2] = arr.imag.ravel(order="C")
            components.setdefault(str(len(mi)), {})[as_string(mi)] = flat.tolist()
        return {
            "schema_version": SCHEMA_VERSION,
            "extents": list(self.box.extents),
            "scalar_kind": self.scalar_kind,
            "tilde": self.tilde,
            "components": components,
        }

    @classmethod
    def from_json_dict(cls, doc: dict, policy=BoundaryPolicy.INTERIOR) -> "Cochain":
        box = LatticeBox(tuple(doc["extents"]), policy)
        data = np.zeros((NSLOTS,) + box.extents, dtype=np.complex128)
        for by_mi in doc.get("components", {}).values():
            for mi_string, flat in by_mi.items():
                mi = from_string(mi_string)
                flat = np.asarray(flat, dtype=float)
                if flat.size != 2 * box.npoints:
                    raise ValueError(
                        f"component {mi_string!r}: expected {2 * box.npoints} floats, "
                        f"got {flat.size}")
                data[SLOT_OF[mi]] = (flat[0::2] + 1j * flat[1::2]).reshape(box.extents)
        return cls(box, data, doc.get("scalar_kind", "complex"), doc.get("tilde", False))

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_json_dict(), fh)

    @classmethod
    def load(cls, path, policy=BoundaryPolicy.INTERIOR) -> "Cochain":
        with open(path) as fh:
            return cls.from_json_dict(json.load(fh), policy)


def random_cochain(box, rng, scalar_kind="complex", degrees=None,
                   tilde=False) -> Cochain:
    """Seeded random form with components uniform in [-1, 1] (per part)."""
    data = np.zeros((NSLOTS,) + box.extents, dtype=np.complex128)
    for slot, mi in enumerate(ALL_INDEXES):
        if degrees is not None and len(mi) not in degrees:
            continue
        data[slot] = rng.uniform(-1.0, 1.0, box.extents)
        if scalar_kind == "complex":
            data[slot] += 1j * rng.uniform(-1.0, 1.0, box.extents)
    return Cochain(box, data, scalar_kind, tilde)
