"""Clifford multiplication on lattice forms, signature (+,-,-,-).

The 16x16 basis product table is generated by word reduction: concatenate the
two direction words, bubble-sort into ascending order picking up a sign for
each transposition, and contract adjacent equal directions with the metric.
Products are strictly pointwise in the lattice index: basis elements at
different points multiply to zero, which is what makes the constant form x a
two-sided unit.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

from . import backend
from .lattice import Cochain, LatticeBox
from .multiindex import ALL_INDEXES, NSLOTS, SLOT_OF, validate

METRIC = (1, -1, -1, -1)


def reduce_word(word) -> tuple[int, tuple[int, ...]]:
    """Reduce a direction word to (sign, ascending multi-index)."""
    w = list(word)
    sign = 1
    i = 0
    while i < len(w) - 1:
        if w[i] == w[i + 1]:
            sign *= METRIC[w[i]]
            del w[i:i + 2]
            i = max(i - 1, 0)
        elif w[i] > w[i + 1]:
            w[i], w[i + 1] = w[i + 1], w[i]
            sign = -sign
            i = max(i - 1, 0)
        else:
            i += 1
    return sign, tuple(w)


class CliffordTable:
    """Immutable 16x16 basis product table plus flat arrays for the kernels."""

    def __init__(self):
        self.entries: dict[tuple, tuple[int, tuple[int, ...]]] = {}
        slot_a, slot_b, slot_out, signs = [], [], [], []
        for ia, mi_a in enumerate(ALL_INDEXES):
            for ib, mi_b in enumerate(ALL_INDEXES):
                sign, out = reduce_word(mi_a + mi_b)
                self.entries[(mi_a, mi_b)] = (sign, out)
                slot_a.append(ia)
                slot_b.append(ib)
                slot_out.append(SLOT_OF[out])
                signs.append(float(sign))
        self.slot_a = np.asarray(slot_a, dtype=np.int64)
        self.slot_b = np.asarray(slot_b, dtype=np.int64)
        self.slot_out = np.asarray(slot_out, dtype=np.int64)
        self.signs = np.asarray(signs, dtype=np.float64)

    def product(self, dirs_a, dirs_b) -> tuple[int, tuple[int, ...]]:
        return self.entries[(validate(dirs_a), validate(dirs_b))]


@lru_cache(maxsize=1)
def build_table() -> CliffordTable:
    return CliffordTable()


def clifford_mul(a: Cochain, b: Cochain) -> Cochain:
    """Pointwise Clifford product of two (possibly inhomogeneous) forms."""
    a._check_compatible(b)
    table = build_table()
    flat_a = a.data.reshape(NSLOTS, -1)
    flat_b = b.data.reshape(NSLOTS, -1)
    out = backend.clifford_contract(flat_a, flat_b, table.slot_a, table.slot_b,
                                    table.slot_out, table.signs)
    kind = "real" if a.scalar_kind == b.scalar_kind == "real" else "complex"
    return Cochain(a.box, out.reshape(a.data.shape), kind, a.tilde)


def unit_form(dirs, box: LatticeBox, tilde: bool = False) -> Cochain:
    """Constant form with the given component identically 1 (x, e_mu, ...)."""
    data = np.zeros((NSLOTS,) + box.extents, dtype=np.complex128)
    data[SLOT_OF[validate(dirs)]] = 1.0
    return Cochain(box, data, "real", tilde)


def _shuffle(form: Cochain, dirs, side: str) -> Cochain:
    table = build_table()
    dirs = validate(dirs)
    out = np.zeros_like(form.data)
    for mi in ALL_INDEXES:
        pair = (dirs, mi) if side == "left" else (mi, dirs)
        sign, res = table.entries[pair]
        out[SLOT_OF[res]] += sign * form.data[SLOT_OF[mi]]
    return form.like(out)


def mul_basis_left(dirs, form: Cochain) -> Cochain:
    """Left-multiply by a constant unit basis form (component shuffle)."""
    return _shuffle(form, dirs, "left")


def mul_basis_right(form: Cochain, dirs) -> Cochain:
    """Right-multiply by a constant unit basis form (component shuffle)."""
    return _shuffle(form, dirs, "right")


def dirac_clifford(omega: Cochain) -> Cochain:
    """The Clifford-form first-order operator: sum_mu e_mu * (forward
    difference of omega along mu)."""
    from .calculus import delta_mu  # local import to avoid a cycle

    out = Cochain.zeros(omega.box, omega.scalar_kind, omega.tilde)
    for mu in range(4):
        out = out + mul_basis_left((mu,), delta_mu(omega, mu))
    return out
