"""Contact (+-1)-surgery diagrams with one distinguished Legendrian knot.

A diagram is an ordered list of surgery components, the pairwise linking
numbers between them, and the distinguished knot ``L`` (which is not
surgered). The linking matrix carries ``tb + coeff`` on its diagonal, the
topological surgery framing of a contact (+-1)-surgery.

JSON file format::

    {
      "components": [{"name": "K", "tb": -2, "rot": 1, "coeff": 1}, ...],
      "linking": [[0, 1, ...], ...],
      "distinguished": {"tb0": -2, "rot0": 1, "lk": [-2, ...]},
      "groups": [[0], [1, 2], ...]
    }

``groups`` is optional. Diagonal entries of ``linking`` are ignored.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Optional, Sequence

from .errors import AsymmetricLinking, InvalidDiagram, InvalidGroup, ParseError
from .exact_arith import IntMatrix


@dataclass(frozen=True)
class SurgeryComponent:
    name: str
    tb: int
    rot: int
    coeff: int

    def __post_init__(self):
        if self.coeff not in (1, -1):
            raise InvalidDiagram(f"component {self.name!r}: contact coefficient must be +1 or -1, got {self.coeff}")
        if (self.tb + self.rot) % 2 == 0:
            raise InvalidDiagram(f"component {self.name!r}: tb + rot must be odd (tb={self.tb}, rot={self.rot})")

    @property
    def framing(self) -> int:
        return self.tb + self.coeff


@dataclass(frozen=True)
class DistinguishedKnot:
    tb0: int
    rot0: int
    lk: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lk", tuple(int(x) for x in self.lk))
        if (self.tb0 + self.rot0) % 2 == 0:
            raise InvalidDiagram(f"distinguished knot: tb0 + rot0 must be odd (tb0={self.tb0}, rot0={self.rot0})")

    def reversed(self) -> "DistinguishedKnot":
        # surgery components keep their orientation; only L flips
        return DistinguishedKnot(self.tb0, -self.rot0, tuple(-x for x in self.lk))


@dataclass(frozen=True)
class SurgeryDiagram:
    components: tuple[SurgeryComponent, ...]
    offdiag: IntMatrix
    L: DistinguishedKnot
    groups: Optional[tuple[tuple[int, ...], ...]] = None

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        if not isinstance(self.offdiag, IntMatrix):
            try:
                object.__setattr__(self, "offdiag", IntMatrix(self.offdiag))
            except ValueError as exc:
                raise InvalidDiagram(f"linking: {exc}") from None
        n = len(self.components)
        if self.offdiag.n != n:
            raise InvalidDiagram(f"linking matrix is {self.offdiag.n}x{self.offdiag.n} but there are {n} components")
        if len(self.L.lk) != n:
            raise InvalidDiagram(f"distinguished lk vector has length {len(self.L.lk)}, expected {n}")
        if not self.offdiag.is_symmetric():
            raise AsymmetricLinking("linking matrix not symmetric")
        # the diagonal is determined by tb and coeff; store it as zero
        if any(self.offdiag[i, i] for i in range(n)):
            rows = self.offdiag.tolist()
            for i in range(n):
                rows[i][i] = 0
            object.__setattr__(self, "offdiag", IntMatrix(rows))
        if self.groups is not None:
            object.__setattr__(self, "groups", tuple(tuple(int(i) for i in g) for g in self.groups))

    @property
    def n(self) -> int:
        return len(self.components)

    @property
    def rot_vector(self) -> tuple[int, ...]:
        return tuple(c.rot for c in self.components)

    @property
    def coeffs(self) -> tuple[int, ...]:
        return tuple(c.coeff for c in self.components)

    @property
    def n_plus(self) -> int:
        return sum(1 for c in self.components if c.coeff == 1)

    def reversed(self) -> "SurgeryDiagram":
        return SurgeryDiagram(self.components, self.offdiag, self.L.reversed(), self.groups)

    def to_dict(self) -> dict:
        d = {
            "components": [{"name": c.name, "tb": c.tb, "rot": c.rot, "coeff": c.coeff} for c in self.components],
            "linking": linking_matrix(self).tolist(),
            "distinguished": {"tb0": self.L.tb0, "rot0": self.L.rot0, "lk": list(self.L.lk)},
        }
        if self.groups is not None:
            d["groups"] = [list(g) for g in self.groups]
        return d

    @classmethod
    def from_dict(cls, data: dict) -> "SurgeryDiagram":
        try:
            comps = [
                SurgeryComponent(str(c.get("name", f"L{i + 1}")), _int(c["tb"]), _int(c["rot"]), _int(c["coeff"]))
                for i, c in enumerate(data["components"])
            ]
            linking = [[_int(x) for x in row] for row in data["linking"]]
            dist = data["distinguished"]
            L = DistinguishedKnot(_int(dist["tb0"]), _int(dist["rot0"]), tuple(_int(x) for x in dist["lk"]))
            groups = data.get("groups")
            if groups is not None:
                groups = [[_int(i) for i in g] for g in groups]
        except (KeyError, TypeError, AttributeError) as exc:
            raise ParseError(f"malformed diagram: {exc!r}") from None
        diagram = cls(tuple(comps), linking, L, groups)
        if diagram.groups is not None:
            check_groups(diagram, diagram.groups)
        return diagram


def _int(x) -> int:
    if isinstance(x, bool) or not isinstance(x, int):
        raise ParseError(f"expected an integer, got {x!r}")
    return x


def load(path) -> SurgeryDiagram:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, UnicodeDecodeError, json.JSONDecodeError) as exc:
        raise ParseError(f"cannot read {path}: {exc}") from None
    if not isinstance(data, dict):
        raise ParseError("diagram file must contain a JSON object")
    return SurgeryDiagram.from_dict(data)


def dump(diagram: SurgeryDiagram, path) -> None:
    Path(path).write_text(json.dumps(diagram.to_dict(), indent=2) + "\n", encoding="utf-8")


def linking_matrix(d: SurgeryDiagram) -> IntMatrix:
    if not d.offdiag.is_symmetric():
        raise AsymmetricLinking("linking matrix not symmetric")
    rows = d.offdiag.tolist()
    for i, c in enumerate(d.components):
        rows[i][i] = c.framing
    return IntMatrix(rows)


def extended_matrix(d: SurgeryDiagram) -> IntMatrix:
    """Linking matrix bordered by L's linking numbers, self-linking slot 0."""
    M = linking_matrix(d)
    lk = d.L.lk
    rows = [[0, *lk]]
    rows += [[lk[i], *M.rows[i]] for i in range(d.n)]
    return IntMatrix(rows)


@dataclass(frozen=True)
class DeflatedDiagram:
    """One row/column per block of Legendrian push-offs.

    ``matrix[i][j]`` sums the representative of group i's linking with all
    members of group j, so it is not symmetric in general; ``weights[i]``
    is the group size.
    """

    matrix: IntMatrix
    weights: tuple[int, ...]
    rot: tuple[int, ...]
    lk: tuple[int, ...]
    coeffs: tuple[int, ...]
    tb0: int
    rot0: int
    groups: tuple[tuple[int, ...], ...] = field(default=())

    def reversed(self) -> "DeflatedDiagram":
        return DeflatedDiagram(
            self.matrix, self.weights, self.rot, tuple(-x for x in self.lk), self.coeffs, self.tb0, -self.rot0, self.groups
        )


def check_groups(d: SurgeryDiagram, groups: Sequence[Sequence[int]]) -> None:
    seen = sorted(i for g in groups for i in g)
    if seen != list(range(d.n)):
        raise InvalidGroup("groups must partition the component indices 0..n-1")
    M = linking_matrix(d)
    owner = {i: gi for gi, g in enumerate(groups) for i in g}
    for g in groups:
        if not g:
            raise InvalidGroup("empty group")
        rep = d.components[g[0]]
        for i in g:
            c = d.components[i]
            if (c.tb, c.rot, c.coeff) != (rep.tb, rep.rot, rep.coeff):
                raise InvalidGroup(f"group {list(g)}: components differ in (tb, rot, coeff)")
            if d.L.lk[i] != d.L.lk[g[0]]:
                raise InvalidGroup(f"group {list(g)}: members link L differently")
            for j in g:
                if i != j and M[i, j] != rep.tb:
                    raise InvalidGroup(f"group {list(g)}: push-offs must link each other tb = {rep.tb} times")
        # a push-off sees the rest of the diagram exactly as its parent does
        for j in range(d.n):
            if owner[j] == owner[g[0]]:
                continue
            if len({M[i, j] for i in g}) != 1:
                raise InvalidGroup(f"group {list(g)}: members link component {j} differently")


def deflate(d: SurgeryDiagram, groups: Optional[Sequence[Sequence[int]]] = None) -> DeflatedDiagram:
    if groups is None:
        groups = d.groups if d.groups is not None else [[i] for i in range(d.n)]
    groups = tuple(tuple(g) for g in groups)
    check_groups(d, groups)
    M = linking_matrix(d)
    reps = [g[0] for g in groups]
    Mp = IntMatrix([[sum(M[r, c] for c in g) for g in groups] for r in reps])
    return DeflatedDiagram(
        matrix=Mp,
        weights=tuple(len(g) for g in groups),
        rot=tuple(d.components[r].rot for r in reps),
        lk=tuple(d.L.lk[r] for r in reps),
        coeffs=tuple(d.components[r].coeff for r in reps),
        tb0=d.L.tb0,
        rot0=d.L.rot0,
        groups=groups,
    )
