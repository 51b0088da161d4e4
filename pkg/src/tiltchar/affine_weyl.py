"""Root data, dominant alcoves and the right action of simple reflections.

Geometry is realized in the rho-shifted weight space at scale 1: alcoves are
cut out by the hyperplanes ``<mu, beta^vee> = m`` for positive coroots
``beta^vee`` and integers ``m``.  Points are written in fundamental-weight
coordinates, i.e. ``mu_i = <mu, alpha_i^vee>``.  The fundamental alcove ``C``
has base point ``rho/h``.

Generator 0 is the affine reflection through ``<mu, theta^vee> = 1`` where
``theta^vee`` is the highest coroot; generators ``1..n`` are the finite simple
reflections in Cartan-matrix row order.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import NamedTuple

from .errors import ConfigError

Matrix = tuple[tuple[int, ...], ...]
Vector = tuple[int, ...]

BUILTIN_CARTAN: dict[str, list[list[int]]] = {
    "A1": [[2]],
    "A2": [[2, -1], [-1, 2]],
    "A3": [[2, -1, 0], [-1, 2, -1], [0, -1, 2]],
    # alpha_1 long, alpha_2 short
    "B2": [[2, -1], [-2, 2]],
    # alpha_1 short, alpha_2 long
    "G2": [[2, -3], [-1, 2]],
}


def _det(rows: list[list[Fraction]]) -> Fraction:
    m = [list(r) for r in rows]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if m[r][c] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                for k in range(c, n):
                    m[r][k] -= f * m[c][k]
    return det


def validate_cartan(cartan) -> Matrix:
    """Check that ``cartan`` is an irreducible finite-type Cartan matrix.

    Convention: ``cartan[i][j] = <alpha_i^vee, alpha_j>``.
    """
    try:
        rows = [[int(a) for a in row] for row in cartan]
    except (TypeError, ValueError) as exc:
        raise ConfigError(f"Cartan matrix entries must be integers: {exc}") from None
    n = len(rows)
    if n == 0:
        raise ConfigError("Cartan matrix is empty")
    if any(len(r) != n for r in rows):
        raise ConfigError("Cartan matrix is not square")
    for i in range(n):
        if rows[i][i] != 2:
            raise ConfigError(f"Cartan matrix diagonal entry ({i},{i}) is not 2")
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise ConfigError(f"Cartan matrix off-diagonal entry ({i},{j}) is positive")
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                raise ConfigError(f"Cartan matrix entries ({i},{j}) and ({j},{i}) are not both zero")

    # symmetrizer d with d_i a_ij = d_j a_ji, found along a spanning tree
    d: list[Fraction | None] = [None] * n
    d[0] = Fraction(1)
    stack = [0]
    while stack:
        i = stack.pop()
        for j in range(n):
            if j != i and rows[i][j] != 0 and d[j] is None:
                d[j] = d[i] * rows[i][j] / rows[j][i]
                stack.append(j)
    if any(x is None for x in d):
        raise ConfigError("Cartan matrix is reducible (Dynkin diagram is not connected)")
    sym = [[d[i] * rows[i][j] for j in range(n)] for i in range(n)]
    for i in range(n):
        for j in range(n):
            if sym[i][j] != sym[j][i]:
                raise ConfigError("Cartan matrix is not symmetrizable")
    for k in range(1, n + 1):
        if _det([r[:k] for r in sym[:k]]) <= 0:
            raise ConfigError("symmetrized Cartan form is not positive definite (not finite type)")
    return tuple(tuple(r) for r in rows)


def parse_cartan_text(text: str) -> Matrix:
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            rows.append([int(tok) for tok in line.replace(",", " ").split()])
        except ValueError:
            raise ConfigError(f"cannot parse Cartan row {line!r}") from None
    return validate_cartan(rows)


class RootDatum:
    """Finite root system data plus the affine reflections acting on alcoves.

    Treated as immutable after construction.  Alcove enumeration state is
    cached on the instance (see :class:`DominantAlcoves`).
    """

    def __init__(self, cartan, label: str = "custom"):
        self.cartan: Matrix = validate_cartan(cartan)
        self.label = label
        self.rank = n = len(self.cartan)
        self.generators = tuple(range(n + 1))
        self.positive_roots, self.positive_coroots = self._positive_pairs()
        self.coxeter_number = 2 * len(self.positive_roots) // n
        self.rho: Vector = (1,) * n

        hi = max(range(len(self.positive_coroots)), key=lambda k: sum(self.positive_coroots[k]))
        self.highest_coroot: Vector = self.positive_coroots[hi]
        theta = self.root_in_weights(self.positive_roots[hi])

        self.reflections: list[tuple[Matrix, Vector]] = []
        eye = [[int(i == k) for k in range(n)] for i in range(n)]
        aff_lin = tuple(
            tuple(eye[i][k] - theta[i] * self.highest_coroot[k] for k in range(n)) for i in range(n)
        )
        self.reflections.append((aff_lin, theta))
        for j in range(n):
            lin = tuple(
                tuple(eye[i][k] - (self.cartan[i][j] if k == j else 0) for k in range(n))
                for i in range(n)
            )
            self.reflections.append((lin, (0,) * n))

        h = self.coxeter_number
        self.base_point = tuple(Fraction(1, h) for _ in range(n))
        self._alcoves: DominantAlcoves | None = None

    @classmethod
    def builtin(cls, label: str) -> "RootDatum":
        try:
            cartan = BUILTIN_CARTAN[label]
        except KeyError:
            raise ConfigError(
                f"unknown root system type {label!r}; choose from {sorted(BUILTIN_CARTAN)}"
            ) from None
        return cls(cartan, label)

    @classmethod
    def from_file(cls, path) -> "RootDatum":
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise ConfigError(f"cannot read Cartan file: {exc}") from None
        return cls(parse_cartan_text(text), "custom")

    def __repr__(self):
        return f"RootDatum({self.label!r}, cartan={self.cartan})"

    def _positive_pairs(self):
        n = len(self.cartan)
        C = self.cartan

        def reflect(pair, j):
            root, coroot = pair
            # <root, alpha_j^vee> and <alpha_j, coroot>
            a = sum(root[k] * C[j][k] for k in range(n))
            b = sum(coroot[k] * C[k][j] for k in range(n))
            r = tuple(root[k] - (a if k == j else 0) for k in range(n))
            c = tuple(coroot[k] - (b if k == j else 0) for k in range(n))
            return r, c

        simple = [tuple(int(i == k) for k in range(n)) for i in range(n)]
        seen = {(s, s) for s in simple}
        frontier = list(seen)
        while frontier:
            nxt = []
            for pair in frontier:
                for j in range(n):
                    new = reflect(pair, j)
                    if all(x >= 0 for x in new[0]) and new not in seen:
                        seen.add(new)
                        nxt.append(new)
            frontier = nxt
        ordered = sorted(seen, key=lambda p: (sum(p[0]), tuple(-x for x in p[0])))
        return tuple(p[0] for p in ordered), tuple(p[1] for p in ordered)

    def root_in_weights(self, root: Vector) -> Vector:
        """Fundamental-weight coordinates of a root given in the simple-root basis."""
        n = self.rank
        return tuple(sum(root[k] * self.cartan[i][k] for k in range(n)) for i in range(n))

    def pair(self, point, coroot: Vector):
        return sum(p * c for p, c in zip(point, coroot))

    def check_generator(self, s: int) -> int:
        if not isinstance(s, int) or isinstance(s, bool) or not 0 <= s <= self.rank:
            raise ConfigError(f"invalid generator index {s!r} for rank {self.rank}")
        return s

    @property
    def alcoves(self) -> "DominantAlcoves":
        if self._alcoves is None:
            self._alcoves = DominantAlcoves(self)
        return self._alcoves


def _apply(affine: tuple[Matrix, Vector], point):
    lin, t = affine
    return tuple(sum(r[k] * point[k] for k in range(len(point))) + t[i] for i, r in enumerate(lin))


def _compose(a: tuple[Matrix, Vector], b: tuple[Matrix, Vector]) -> tuple[Matrix, Vector]:
    """The map ``a o b``."""
    la, ta = a
    lb, tb = b
    n = len(ta)
    lin = tuple(tuple(sum(la[i][k] * lb[k][j] for k in range(n)) for j in range(n)) for i in range(n))
    t = tuple(sum(la[i][k] * tb[k] for k in range(n)) + ta[i] for i in range(n))
    return lin, t


def word_to_str(word: tuple[int, ...]) -> str:
    if not word:
        return "e"
    if all(s < 10 for s in word):
        return "".join(str(s) for s in word)
    return ".".join(str(s) for s in word)


@dataclass(frozen=True, eq=False)
class AlcoveElement:
    """An element of W+ (equivalently, a dominant alcove).

    ``word`` is the ShortLex-minimal reduced word; ``point`` is an exact
    interior point of the alcove.  Equality is equality of points.
    """

    word: tuple[int, ...]
    point: tuple[Fraction, ...]
    length: int
    datum: RootDatum = field(repr=False)
    affine: tuple[Matrix, Vector] = field(repr=False)
    index: int = field(default=-1, repr=False)

    def __eq__(self, other):
        if not isinstance(other, AlcoveElement):
            return NotImplemented
        return self.point == other.point and self.datum is other.datum

    def __hash__(self):
        return hash(self.point)

    def __str__(self):
        return word_to_str(self.word)

    def __repr__(self):
        return f"AlcoveElement({self.datum.label}:{word_to_str(self.word)})"

    @property
    def word_str(self) -> str:
        return word_to_str(self.word)

    def sort_key(self):
        """(length, ShortLex word): the enumeration order."""
        return (self.length, self.word)

    def __lt__(self, other):
        return self.sort_key() < other.sort_key()


class Step(enum.Enum):
    UP = "UpIn"
    DOWN = "DownIn"
    OUT = "Out"


class Move(NamedTuple):
    step: Step
    target: AlcoveElement | None


class DominantAlcoves:
    """Lazily enumerated W+, grown one length level at a time."""

    def __init__(self, datum: RootDatum):
        self.datum = datum
        identity_map = (
            tuple(tuple(int(i == k) for k in range(datum.rank)) for i in range(datum.rank)),
            (0,) * datum.rank,
        )
        e = AlcoveElement((), datum.base_point, 0, datum, identity_map, 0)
        self.levels: list[list[AlcoveElement]] = [[e]]
        self.by_point: dict[tuple[Fraction, ...], AlcoveElement] = {e.point: e}
        self._moves: dict[tuple[int, int], Move] = {}
        self._count = 1

    @property
    def identity(self) -> AlcoveElement:
        return self.levels[0][0]

    def hyperplane_length(self, point) -> int:
        """Number of walls separating ``point`` from the base point."""
        total = 0
        for cv in self.datum.positive_coroots:
            k = self.datum.pair(point, cv)
            total += abs(k.numerator // k.denominator)
        return total

    def is_dominant(self, point) -> bool:
        return all(self.datum.pair(point, cv) > 0 for cv in self.datum.positive_coroots)

    def _neighbor(self, x: AlcoveElement, s: int):
        aff = _compose(x.affine, self.datum.reflections[s])
        point = _apply(aff, self.datum.base_point)
        return aff, point

    def ensure(self, max_len: int) -> None:
        while len(self.levels) <= max_len:
            k = len(self.levels) - 1
            found: dict[tuple[Fraction, ...], AlcoveElement] = {}
            for x in self.levels[k]:
                for s in self.datum.generators:
                    aff, point = self._neighbor(x, s)
                    if point in found or not self.is_dominant(point):
                        continue
                    if self.hyperplane_length(point) != k + 1:
                        continue
                    found[point] = AlcoveElement(x.word + (s,), point, k + 1, self.datum, aff)
            level = []
            for el in sorted(found.values(), key=lambda a: a.word):
                el = AlcoveElement(el.word, el.point, el.length, self.datum, el.affine, self._count)
                self._count += 1
                self.by_point[el.point] = el
                level.append(el)
            self.levels.append(level)

    def elements(self, max_len: int) -> list[AlcoveElement]:
        self.ensure(max_len)
        return [x for lvl in self.levels[: max_len + 1] for x in lvl]

    def right_mult(self, x: AlcoveElement, s: int) -> Move:
        self.datum.check_generator(s)
        key = (x.index, s)
        hit = self._moves.get(key)
        if hit is not None:
            return hit
        if self.by_point.get(x.point) is not x:
            raise ConfigError(f"{x} is not an enumerated element of this datum")
        aff, point = self._neighbor(x, s)
        new_len = self.hyperplane_length(point)
        if not self.is_dominant(point):
            assert new_len == x.length + 1, "left W+ on a length-decreasing step"
            move = Move(Step.OUT, None)
        elif new_len < x.length:
            move = Move(Step.DOWN, self.by_point[point])
        else:
            self.ensure(x.length + 1)
            move = Move(Step.UP, self.by_point[point])
        self._moves[key] = move
        return move

    def parse(self, text: str) -> AlcoveElement:
        """Element for a generator-index string such as ``"010"`` (``""``/``"e"`` for the identity)."""
        text = text.strip()
        if text in ("", "e"):
            return self.identity
        letters = text.split(".") if "." in text else list(text)
        try:
            word = [int(t) for t in letters]
        except ValueError:
            raise ConfigError(f"cannot parse alcove word {text!r}") from None
        x = self.identity
        for s in word:
            if not 0 <= s <= self.datum.rank:
                raise ConfigError(f"invalid generator {s} in word {text!r}")
            move = self.right_mult(x, s)
            if move.step is Step.OUT:
                raise ConfigError(f"word {text!r} leaves the dominant region")
            x = move.target
        return x


def identity(datum: RootDatum) -> AlcoveElement:
    return datum.alcoves.identity


def right_mult(x: AlcoveElement, s: int) -> Move:
    return x.datum.alcoves.right_mult(x, s)


def length(x: AlcoveElement) -> int:
    return x.length


def geometric_length(x: AlcoveElement) -> int:
    return x.datum.alcoves.hyperplane_length(x.point)


def enumerate_wplus(datum: RootDatum, max_len: int) -> list[AlcoveElement]:
    if max_len < 0:
        raise ConfigError("max_len must be non-negative")
    return datum.alcoves.elements(max_len)


def parse_alcove(datum: RootDatum, text: str) -> AlcoveElement:
    return datum.alcoves.parse(text)


def descents(x: AlcoveElement) -> list[tuple[int, AlcoveElement]]:
    """All ``(s, xs)`` with ``xs`` in W+ and shorter than ``x``."""
    out = []
    for s in x.datum.generators:
        move = right_mult(x, s)
        if move.step is Step.DOWN:
            out.append((s, move.target))
    return out


def walls(x: AlcoveElement) -> tuple[int, ...]:
    """Floor of ``<point, beta^vee>`` for each positive coroot."""
    d = x.datum
    return tuple(
        (lambda q: q.numerator // q.denominator)(d.pair(x.point, cv)) for cv in d.positive_coroots
    )


def weight_of(x: AlcoveElement, l: int, datum: RootDatum | None = None) -> Vector:
    """The weight ``x .l 0`` in fundamental-weight coordinates."""
    datum = datum or x.datum
    if l < datum.coxeter_number:
        raise ConfigError(
            f"no regular base weight at this l: need l >= h = {datum.coxeter_number}, got {l}"
        )
    lin, t = x.affine
    n = datum.rank
    return tuple(
        sum(lin[i][k] * datum.rho[k] for k in range(n)) + l * t[i] - datum.rho[i] for i in range(n)
    )
