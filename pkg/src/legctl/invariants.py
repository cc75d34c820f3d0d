"""Classical invariants of the distinguished knot and d3 of the surgered S^3.

With M the linking matrix, M_0 the extended matrix, ``lk`` and ``rot`` the
vectors of linking and rotation numbers:

    tb(L)  = tb0 + det M_0 / det M
    rot(L) = rot0 - <rot, M^-1 lk>
    d3     = (c^2 - 3 sigma(X) - 2 chi(X)) / 4 + q,   c^2 = x^t rot,  M x = rot

where X is the 2-handlebody of the diagram and q the number of contact
(+1)-surgeries. Deflated input (one row per block of push-offs) uses the
weighted forms of the same formulas; the two routes are computed
independently so they can cross-check each other.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .diagram import DeflatedDiagram, SurgeryDiagram, extended_matrix, linking_matrix
from .errors import NonIntegerResult, NotHomologySphere, SingularMatrix
from .exact_arith import IntMatrix, determinant, dot, signature, solve
from .seifert import TorusKnotSpec, max_tb

Number = Union[int, Fraction]

STANDARD_D3 = Fraction(-1, 2)


def _as_int(x: Fraction, what: str) -> int:
    if x.denominator != 1:
        raise NonIntegerResult(f"{what} = {x} is not an integer; the diagram is malformed")
    return x.numerator


def _reduce(x: Fraction) -> Number:
    return x.numerator if x.denominator == 1 else x


@dataclass(frozen=True)
class InvariantReport:
    tb: int
    rot_plus: Number
    rot_minus: Number
    d3: Optional[Fraction]
    detM: int
    detM0: Optional[int]
    sigma: int
    chi: int
    c_squared: Fraction
    q_plus: int
    is_homology_sphere: bool
    x: tuple[Fraction, ...]

    def triple(self) -> tuple:
        return (self.tb, self.rot_plus, self.d3)

    def as_dict(self) -> dict:
        return {
            "tb": self.tb,
            "rot_plus": self.rot_plus,
            "rot_minus": self.rot_minus,
            "d3": self.d3,
            "detM": self.detM,
            "detM0": self.detM0,
            "sigma": self.sigma,
            "chi": self.chi,
            "c_squared": self.c_squared,
            "q_plus": self.q_plus,
            "is_homology_sphere": self.is_homology_sphere,
            "x": list(self.x),
        }


def _nonsingular(M: IntMatrix) -> int:
    det = determinant(M)
    if det == 0:
        raise SingularMatrix("linking matrix is singular (det M = 0): surgered manifold is not a rational homology sphere")
    return det


def tb_of(d: SurgeryDiagram) -> int:
    detM = _nonsingular(linking_matrix(d))
    return d.L.tb0 + _as_int(Fraction(determinant(extended_matrix(d)), detM), "det M_0 / det M")


def rot_of(d: SurgeryDiagram) -> tuple[Number, Number]:
    M = linking_matrix(d)
    _nonsingular(M)
    y = solve(M, d.L.lk)
    rot = _reduce(d.L.rot0 - dot(d.rot_vector, y))
    return rot, -rot


def d3_from(c_squared: Fraction, sigma: int, chi: int, q: int) -> Fraction:
    return (Fraction(c_squared) - 3 * sigma - 2 * chi) / 4 + q


def d3_of(d: SurgeryDiagram) -> Fraction:
    M = linking_matrix(d)
    detM = _nonsingular(M)
    if abs(detM) != 1:
        raise NotHomologySphere(f"|det M| = {abs(detM)} != 1: d3 is only computed for homology spheres")
    x = solve(M, d.rot_vector)
    return d3_from(dot(x, d.rot_vector), signature(M), 1 + d.n, d.n_plus)


def report(d: SurgeryDiagram, require_homology_sphere: bool = True) -> InvariantReport:
    """All invariants from the full linking matrix.

    Off homology spheres d3 is left as None, or NotHomologySphere is raised
    when `require_homology_sphere` is set.
    """
    M = linking_matrix(d)
    detM = _nonsingular(M)
    detM0 = determinant(extended_matrix(d))
    tb = d.L.tb0 + _as_int(Fraction(detM0, detM), "det M_0 / det M")
    y = solve(M, d.L.lk)
    rot = _reduce(d.L.rot0 - dot(d.rot_vector, y))
    x = solve(M, d.rot_vector)
    c2 = Fraction(dot(x, d.rot_vector))
    sigma = signature(M)
    chi = 1 + d.n
    homology_sphere = abs(detM) == 1
    if not homology_sphere and require_homology_sphere:
        raise NotHomologySphere(f"|det M| = {abs(detM)} != 1: d3 is only computed for homology spheres")
    return InvariantReport(
        tb=tb,
        rot_plus=rot,
        rot_minus=-rot,
        d3=d3_from(c2, sigma, chi, d.n_plus) if homology_sphere else None,
        detM=detM,
        detM0=detM0,
        sigma=sigma,
        chi=chi,
        c_squared=c2,
        q_plus=d.n_plus,
        is_homology_sphere=homology_sphere,
        x=tuple(x),
    )


def report_deflated(dd: DeflatedDiagram) -> InvariantReport:
    """All invariants from deflated data, via the weighted formulas.

    A block of w push-offs with contact coefficient c contributes w - 1
    eigenvalues equal to c beyond the block-constant subspace, on which the
    intersection form is W M'. Hence

        det M   = det M' * prod c^(w-1)    (same for M_0)
        sigma M = sigma(W M') + sum (w-1) c
        tb      = tb0 - y^t W lk,   M' y = lk
    """
    W = dd.weights
    k = len(W)
    Mp = dd.matrix
    extra = 1
    for w, c in zip(W, dd.coeffs):
        extra *= c ** (w - 1)
    detM = determinant(Mp) * extra
    if detM == 0:
        raise SingularMatrix("deflated matrix is singular")
    bordered = IntMatrix([[0, *(w * a for w, a in zip(W, dd.lk))]] + [[dd.lk[i], *Mp.rows[i]] for i in range(k)])
    detM0 = determinant(bordered) * extra
    gram = IntMatrix([[W[i] * Mp[i, j] for j in range(k)] for i in range(k)])
    sigma = signature(gram) + sum((w - 1) * c for w, c in zip(W, dd.coeffs))
    y = solve(Mp, dd.lk)
    wy = [w * v for w, v in zip(W, y)]
    tb = dd.tb0 - _as_int(dot(wy, dd.lk), "y^t W lk")
    rot = _reduce(dd.rot0 - dot(dd.rot, wy))
    x = solve(Mp, dd.rot)
    c2 = Fraction(sum(w * a * b for w, a, b in zip(W, x, dd.rot)))
    chi = 1 + sum(W)
    q = sum(w for w, c in zip(W, dd.coeffs) if c == 1)
    if abs(detM) != 1:
        raise NotHomologySphere(f"|det M| = {abs(detM)} != 1: d3 is only computed for homology spheres")
    return InvariantReport(
        tb=tb,
        rot_plus=rot,
        rot_minus=-rot,
        d3=d3_from(c2, sigma, chi, q),
        detM=detM,
        detM0=detM0,
        sigma=sigma,
        chi=chi,
        c_squared=c2,
        q_plus=q,
        is_homology_sphere=True,
        x=tuple(x),
    )


def d3_to_hopf(d3) -> Fraction:
    """Hopf invariant h with d3 = -h - 1/2."""
    return -Fraction(d3) - Fraction(1, 2)


class Verdict(enum.Enum):
    OVERTWISTED = "Overtwisted"
    INCONCLUSIVE = "Inconclusive"

    def __str__(self) -> str:
        return self.value


def overtwisted_verdict(tb: int, d3, knot: Optional[TorusKnotSpec] = None) -> Verdict:
    if Fraction(d3) != STANDARD_D3:
        return Verdict.OVERTWISTED
    if knot is not None and tb > max_tb(knot):
        return Verdict.OVERTWISTED
    return Verdict.INCONCLUSIVE
