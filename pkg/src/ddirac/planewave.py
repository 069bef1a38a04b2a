"""Plane-wave solutions of the lattice Hestenes equation.

The wave factor at lattice point k is the Clifford power product
prod_mu (x +/- p_mu e12)^(k_mu), which lives in the commutative subalgebra
spanned by {x, e12}.  That subalgebra is isomorphic to the complex numbers
(x <-> 1, e12 <-> i, since e12*e12 = -x), giving a fast closed form
psi + i*phi = prod_mu (1 +/- i p_mu)^(k_mu) that doubles as an independent
oracle for the table-driven slow path.

A constant even amplitude A splits into a part commuting with e0 (components
x, e12, e13, e23) and a part anticommuting with it (e01, e02, e03, e0123).
The solvability constraints couple the two parts through the operator
B = p1 e01 + p2 e02 + p3 e03, whose 4x4 coefficient action is derived
mechanically from the Clifford table.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import build_table, clifford_mul
from .lattice import Cochain, LatticeBox
from .multiindex import NSLOTS, SLOT_OF

ONSHELL_TOL = 1e-12

#: Coefficient bases of the two halves of a constant even amplitude.
PLUS_BASIS = ((), (1, 2), (1, 3), (2, 3))         # commutes with e0
MINUS_BASIS = ((0, 1), (0, 2), (0, 3), (0, 1, 2, 3))  # anticommutes with e0

X_SLOT = SLOT_OF[()]
E12_SLOT = SLOT_OF[(1, 2)]


@dataclass(frozen=True)
class Momentum:
    """Mass and four-momentum (p0, p1, p2, p3)."""

    m: float
    p: tuple[float, float, float, float]

    def __post_init__(self):
        if not self.m > 0:
            raise ValueError(f"mass must be positive, got {self.m}")
        object.__setattr__(self, "p", tuple(float(v) for v in self.p))
        if len(self.p) != 4:
            raise ValueError("momentum needs four components")

    def mass_shell_defect(self) -> float:
        p0, p1, p2, p3 = self.p
        return p0 * p0 - p1 * p1 - p2 * p2 - p3 * p3 - self.m * self.m

    def on_shell(self, tol: float = ONSHELL_TOL) -> bool:
        return abs(self.mass_shell_defect()) <= tol

    @classmethod
    def on_shell_from_spatial(cls, m, spatial, sign: int = +1) -> "Momentum":
        p1, p2, p3 = spatial
        p0 = sign * np.sqrt(m * m + p1 * p1 + p2 * p2 + p3 * p3)
        return cls(m, (p0, p1, p2, p3))


def _kind_sign(kind: str) -> int:
    if kind in ("+", "plus"):
        return +1
    if kind in ("-", "minus"):
        return -1
    raise ValueError(f"kind must be 'plus' or 'minus', got {kind!r}")


def psi(kind: str, momentum: Momentum, box: LatticeBox) -> Cochain:
    """The real even wave form: x-component psi_k, e12-component phi_k."""
    sgn = _kind_sign(kind)
    w = np.ones(box.extents, dtype=np.complex128)
    for mu, (n, p) in enumerate(zip(box.extents, momentum.p)):
        factor = (1.0 + sgn * 1j * p) ** np.arange(n)
        shape = [1, 1, 1, 1]
        shape[mu] = n
        w = w * factor.reshape(shape)
    data = np.zeros((NSLOTS,) + box.extents, dtype=np.complex128)
    data[X_SLOT] = w.real
    data[E12_SLOT] = w.imag
    return Cochain(box, data, "real")


def psi_slow(kind: str, momentum: Momentum, box: LatticeBox) -> Cochain:
    """Cross-validation path: the same wave form via repeated Clifford-table
    reduction of the per-axis factor powers."""
    sgn = _kind_sign(kind)
    table = build_table()

    def mul_pair(a, b):
        # a, b: (x-coeff, e12-coeff) constant multivectors in span{x, e12}
        out = {(): 0.0, (1, 2): 0.0}
        for mi_a, ca in zip(((), (1, 2)), a):
            for mi_b, cb in zip(((), (1, 2)), b):
                sign, res = table.product(mi_a, mi_b)
                out[res] += sign * ca * cb
        return (out[()], out[(1, 2)])

    powers = []
    for mu in range(4):
        factor = (1.0, sgn * momentum.p[mu])
        row = [(1.0, 0.0)]
        for _ in range(1, box.extents[mu]):
            row.append(mul_pair(row[-1], factor))
        powers.append(row)

    data = np.zeros((NSLOTS,) + box.extents, dtype=np.complex128)
    for k in np.ndindex(box.extents):
        acc = (1.0, 0.0)
        for mu in range(4):
            acc = mul_pair(acc, powers[mu][k[mu]])
        data[(X_SLOT,) + k] = acc[0]
        data[(E12_SLOT,) + k] = acc[1]
    return Cochain(box, data, "real")


@dataclass(frozen=True)
class EvenAmplitude:
    """The 8 real coefficients of a constant even form."""

    alpha0: float
    alpha01: float
    alpha02: float
    alpha03: float
    alpha12: float
    alpha13: float
    alpha23: float
    alpha4: float

    _FIELD_BY_MI = {
        (): "alpha0", (0, 1): "alpha01", (0, 2): "alpha02", (0, 3): "alpha03",
        (1, 2): "alpha12", (1, 3): "alpha13", (2, 3): "alpha23",
        (0, 1, 2, 3): "alpha4",
    }

    def coefficient(self, mi) -> float:
        return getattr(self, self._FIELD_BY_MI[tuple(mi)])

    def as_vector(self) -> np.ndarray:
        """All 8 coefficients in canonical slot order (x, e01..e23, e0123)."""
        order = ((), (0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (0, 1, 2, 3))
        return np.array([self.coefficient(mi) for mi in order])

    def plus_part(self) -> np.ndarray:
        return np.array([self.coefficient(mi) for mi in PLUS_BASIS])

    def minus_part(self) -> np.ndarray:
        return np.array([self.coefficient(mi) for mi in MINUS_BASIS])

    @classmethod
    def from_parts(cls, plus, minus) -> "EvenAmplitude":
        coeffs = dict(zip(PLUS_BASIS, plus)) | dict(zip(MINUS_BASIS, minus))
        return cls(**{cls._FIELD_BY_MI[mi]: float(c) for mi, c in coeffs.items()})

    def as_cochain(self, box: LatticeBox) -> Cochain:
        data = np.zeros((NSLOTS,) + box.extents, dtype=np.complex128)
        for mi, name in self._FIELD_BY_MI.items():
            data[SLOT_OF[mi]] = getattr(self, name)
        return Cochain(box, data, "real")


def _coupling_matrices(p_spatial) -> tuple[np.ndarray, np.ndarray]:
    """Coefficient action of B = p1 e01 + p2 e02 + p3 e03.

    Returns (M_minus_from_plus, M_plus_from_minus): B maps the commuting half
    into the anticommuting half and vice versa; both 4x4 matrices are read off
    the Clifford table.
    """
    table = build_table()
    m_mfp = np.zeros((4, 4))
    m_pfm = np.zeros((4, 4))
    for i, pi in enumerate(p_spatial, start=1):
        for col, src in enumerate(PLUS_BASIS):
            sign, res = table.product((0, i), src)
            m_mfp[MINUS_BASIS.index(res), col] += pi * sign
        for col, src in enumerate(MINUS_BASIS):
            sign, res = table.product((0, i), src)
            m_pfm[PLUS_BASIS.index(res), col] += pi * sign
    return m_mfp, m_pfm


_DENOM_TOL = 1e-12


def amplitude_from_plus(kind: str, momentum: Momentum, plus) -> EvenAmplitude:
    """Complete an amplitude from its commuting half.

    For the minus wave the anticommuting half is B A_plus / (m - p0); for the
    plus wave it is -B A_plus / (m + p0).
    """
    sgn = _kind_sign(kind)
    p0 = momentum.p[0]
    denom = momentum.m - p0 if sgn < 0 else momentum.m + p0
    if abs(denom) <= _DENOM_TOL:
        raise ValueError(f"coupling denominator {denom} is singular for this branch")
    m_mfp, _ = _coupling_matrices(momentum.p[1:])
    plus = np.asarray(plus, dtype=float)
    minus = (1.0 if sgn < 0 else -1.0) * (m_mfp @ plus) / denom
    return EvenAmplitude.from_parts(plus, minus)


def amplitude_from_minus(kind: str, momentum: Momentum, minus) -> EvenAmplitude:
    """Complete an amplitude from its anticommuting half.

    For the minus wave the commuting half is -B A_minus / (m + p0); for the
    plus wave it is B A_minus / (m - p0).
    """
    sgn = _kind_sign(kind)
    p0 = momentum.p[0]
    denom = momentum.m + p0 if sgn < 0 else momentum.m - p0
    if abs(denom) <= _DENOM_TOL:
        raise ValueError(f"coupling denominator {denom} is singular for this branch")
    _, m_pfm = _coupling_matrices(momentum.p[1:])
    minus = np.asarray(minus, dtype=float)
    plus = (-1.0 if sgn < 0 else 1.0) * (m_pfm @ minus) / denom
    return EvenAmplitude.from_parts(plus, minus)


def solution(kind: str, momentum: Momentum, amplitude: EvenAmplitude,
             box: LatticeBox) -> Cochain:
    """The candidate solution: constant amplitude times the wave form."""
    return clifford_mul(amplitude.as_cochain(box), psi(kind, momentum, box))


def solution_basis(kind: str, momentum: Momentum) -> list[EvenAmplitude]:
    """Four amplitudes spanning the solution space for an on-shell momentum.

    The free half is chosen so the coupling uses the better-conditioned
    denominator (the larger of |m - p0| and |m + p0|); the four canonical
    unit vectors of that half then generate rank-4 coefficient vectors.
    """
    if not momentum.on_shell(tol=1e-9):
        raise ValueError(f"momentum is off shell (defect {momentum.mass_shell_defect()})")
    sgn = _kind_sign(kind)
    p0 = momentum.p[0]
    use_plus_denom = abs(momentum.m + p0) >= abs(momentum.m - p0)
    # denominator m+p0 couples from the free A_plus for the plus wave and
    # from the free A_minus for the minus wave; m-p0 is the mirror case.
    free_is_plus = (sgn > 0) == use_plus_denom
    basis = []
    for unit in np.eye(4):
        if free_is_plus:
            basis.append(amplitude_from_plus(kind, momentum, unit))
        else:
            basis.append(amplitude_from_minus(kind, momentum, unit))
    return basis


def basis_rank(amplitudes, tol: float = 1e-9) -> int:
    stack = np.stack([a.as_vector() for a in amplitudes])
    return int(np.linalg.matrix_rank(stack, tol=tol))


def coupling_system_matrix(momentum: Momentum) -> np.ndarray:
    """The 4x4 linear system (m - p0) A_minus - B A_plus = 0 written on the
    8 coefficients: rows are the anticommuting components, columns are
    (plus-half, minus-half) coefficients.  Derived from the table, not from
    any printed display."""
    m_mfp, _ = _coupling_matrices(momentum.p[1:])
    out = np.zeros((4, 8))
    out[:, :4] = -m_mfp
    out[:, 4:] = (momentum.m - momentum.p[0]) * np.eye(4)
    return out


def commutation_checks(rng=None) -> dict:
    """Structural checks on the two amplitude halves.

    Verifies, for random coefficient vectors: e0 commutes with the plus half
    and anticommutes with the minus half, and multiplication by e0i swaps the
    halves (i = 1, 2, 3).  Returns per-check booleans.
    """
    rng = np.random.default_rng(rng)
    box = LatticeBox((1, 1, 1, 1))
    amp = EvenAmplitude.from_parts(rng.uniform(-1, 1, 4), rng.uniform(-1, 1, 4))
    from .clifford import mul_basis_left, mul_basis_right

    report = {}
    for name in ("plus", "minus"):
        form = EvenAmplitude.from_parts(
            amp.plus_part() if name == "plus" else np.zeros(4),
            amp.minus_part() if name == "minus" else np.zeros(4),
        ).as_cochain(box)
        expect = 1.0 if name == "plus" else -1.0
        left = mul_basis_left((0,), form)
        right = expect * mul_basis_right(form, (0,))
        report[f"e0_{name}_commutation"] = bool(
            np.allclose(left.data, right.data, atol=1e-15))
        for i in (1, 2, 3):
            swapped = mul_basis_left((0, i), form)
            target = MINUS_BASIS if name == "plus" else PLUS_BASIS
            slots = {SLOT_OF[mi] for mi in target}
            others = [s for s in range(NSLOTS) if s not in slots]
            report[f"e0{i}_{name}_swaps_halves"] = bool(
                np.abs(swapped.data[others]).max() == 0.0)
    return report
