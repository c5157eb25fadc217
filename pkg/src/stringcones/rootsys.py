"""Root-system data for the classical families in explicit epsilon-coordinates.

Realizations used throughout (epsilon-basis of the dual Cartan):

* ``A_m``   : alpha_i = e_i - e_{i+1} inside an (m+1)-dimensional space
* ``B_n``   : alpha_i = e_i - e_{i+1} (i < n), alpha_n = e_n
* ``C_n``   : alpha_i = e_i - e_{i+1} (i < n), alpha_n = 2 e_n
* ``D_n``   : alpha_i = e_i - e_{i+1} (i < n), alpha_n = e_{n-1} + e_n

Half-integer coordinates (spin weights) are kept exact by storing every
epsilon-vector with all coordinates doubled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

FAMILIES = ("A", "B", "C", "D")

_MIN_RANK = {"A": 1, "B": 2, "C": 2, "D": 3}


@dataclass(frozen=True, order=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        if not isinstance(self.rank, int) or self.rank < _MIN_RANK[self.family]:
            raise ValueError(
                f"family {self.family} requires rank >= {_MIN_RANK[self.family]}, "
                f"got {self.rank}"
            )

    @property
    def eps_dim(self) -> int:
        # A_m is realized inside gl_{m+1}, hence m+1 epsilon-coordinates.
        return self.rank + 1 if self.family == "A" else self.rank

    def __str__(self):
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class EpsVector:
    """Vector in the epsilon-basis; ``doubled[k]`` stores twice coordinate k+1."""

    doubled: tuple

    @classmethod
    def from_ints(cls, coords) -> "EpsVector":
        return cls(tuple(2 * c for c in coords))

    @classmethod
    def zero(cls, dim: int) -> "EpsVector":
        return cls((0,) * dim)

    @property
    def dim(self) -> int:
        return len(self.doubled)

    def coords(self):
        """Exact coordinates as Fractions."""
        return tuple(Fraction(c, 2) for c in self.doubled)

    def __add__(self, other: "EpsVector") -> "EpsVector":
        self._check(other)
        return EpsVector(tuple(a + b for a, b in zip(self.doubled, other.doubled)))

    def __sub__(self, other: "EpsVector") -> "EpsVector":
        self._check(other)
        return EpsVector(tuple(a - b for a, b in zip(self.doubled, other.doubled)))

    def __neg__(self) -> "EpsVector":
        return EpsVector(tuple(-a for a in self.doubled))

    def scale(self, c: int) -> "EpsVector":
        return EpsVector(tuple(c * a for a in self.doubled))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.doubled)

    def dot(self, other: "EpsVector") -> Fraction:
        self._check(other)
        return Fraction(sum(a * b for a, b in zip(self.doubled, other.doubled)), 4)

    def _check(self, other):
        if len(self.doubled) != len(other.doubled):
            raise ValueError(
                f"dimension mismatch: {len(self.doubled)} vs {len(other.doubled)}"
            )

    def __str__(self):
        return "(" + ", ".join(str(c) for c in self.coords()) + ")"


def pairing(w: EpsVector, coroot: EpsVector):
    """<w, coroot> under the standard bilinear form; int when exact."""
    v = w.dot(coroot)
    return int(v) if v.denominator == 1 else v


def _eps(dim: int, entries: dict) -> EpsVector:
    d = [0] * dim
    for k, v in entries.items():
        d[k - 1] = 2 * v
    return EpsVector(tuple(d))


@lru_cache(maxsize=None)
def simple_roots(t: LieType):
    n, dim = t.rank, t.eps_dim
    roots = [_eps(dim, {i: 1, i + 1: -1}) for i in range(1, dim)]
    if t.family == "A":
        return tuple(roots)
    roots = roots[: n - 1]
    if t.family == "B":
        roots.append(_eps(dim, {n: 1}))
    elif t.family == "C":
        roots.append(_eps(dim, {n: 2}))
    else:  # D
        roots.append(_eps(dim, {n - 1: 1, n: 1}))
    return tuple(roots)


@lru_cache(maxsize=None)
def simple_coroots(t: LieType):
    out = []
    for a in simple_roots(t):
        norm = a.dot(a)  # 2 for long, 1 for B-short, 4 for C-long
        c = Fraction(2) / norm
        if c == 1:
            out.append(a)
        elif c.denominator == 1:
            out.append(a.scale(int(c)))
        else:  # c = 1/2 (type C long root): halve the doubled coords
            out.append(EpsVector(tuple(x // 2 for x in a.doubled)))
    return tuple(out)


@lru_cache(maxsize=None)
def cartan_matrix(t: LieType):
    """Entries a[i][j] = <alpha_j, alpha_i^vee>, 0-indexed nested tuples."""
    al = simple_roots(t)
    cor = simple_coroots(t)
    return tuple(
        tuple(int(a.dot(c)) for a in al) for c in cor
    )


@lru_cache(maxsize=None)
def fundamental_weights(t: LieType):
    """omega_i in epsilon-coordinates with <omega_i, alpha_j^vee> = delta_ij."""
    n, dim = t.rank, t.eps_dim
    half = lambda ks: EpsVector(tuple(1 if k + 1 in ks else 0 for k in range(dim)))
    head = lambda i: _eps(dim, {k: 1 for k in range(1, i + 1)})
    if t.family in ("A", "C"):
        ws = [head(i) for i in range(1, n + 1)]
    elif t.family == "B":
        ws = [head(i) for i in range(1, n)] + [half(set(range(1, n + 1)))]
    else:  # D
        ws = [head(i) for i in range(1, n - 1)]
        ws.append(EpsVector(tuple([1] * (n - 1) + [-1])))  # omega_{n-1}, halves
        ws.append(half(set(range(1, n + 1))))  # omega_n
    assert all(
        pairing(w, c) == (1 if i == j else 0)
        for i, w in enumerate(ws)
        for j, c in enumerate(simple_coroots(t))
    )
    return tuple(ws)


@lru_cache(maxsize=None)
def fundamental_coweights(t: LieType):
    """omega_i^vee with <alpha_j, omega_i^vee> = delta_ij (any representative)."""
    n, dim = t.rank, t.eps_dim
    head = lambda i: _eps(dim, {k: 1 for k in range(1, i + 1)})
    if t.family in ("A", "B"):
        cw = [head(i) for i in range(1, n + 1)]
        if t.family == "B":
            cw[n - 1] = head(n)
    elif t.family == "C":
        cw = [head(i) for i in range(1, n)]
        cw.append(EpsVector(tuple([1] * n)))  # (e_1+...+e_n)/2, doubled = 1s
    else:  # D: self-dual
        cw = list(fundamental_weights(t))
    assert all(
        pairing(a, w) == (1 if i == j else 0)
        for i, w in enumerate(cw)
        for j, a in enumerate(simple_roots(t))
    )
    return tuple(cw)


@lru_cache(maxsize=None)
def positive_roots(t: LieType):
    n, dim = t.rank, t.eps_dim
    roots = []
    for i in range(1, dim + 1):
        for j in range(i + 1, dim + 1):
            roots.append(_eps(dim, {i: 1, j: -1}))
    if t.family == "A":
        return tuple(roots)
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            roots.append(_eps(dim, {i: 1, j: 1}))
    if t.family == "B":
        roots.extend(_eps(dim, {i: 1}) for i in range(1, n + 1))
    elif t.family == "C":
        roots.extend(_eps(dim, {i: 2}) for i in range(1, n + 1))
    return tuple(roots)


def coroot(alpha: EpsVector) -> EpsVector:
    """alpha^vee = 2 alpha / (alpha, alpha) for any root alpha."""
    norm = alpha.dot(alpha)
    c = Fraction(2) / norm
    if c.denominator == 1:
        return alpha.scale(int(c))
    # c has denominator 2 and the doubled coords are even (long C roots)
    num, den = c.numerator, c.denominator
    scaled = tuple(x * num for x in alpha.doubled)
    if any(x % den for x in scaled):
        raise ValueError(f"coroot of {alpha} not representable")
    return EpsVector(tuple(x // den for x in scaled))


@lru_cache(maxsize=None)
def rho(t: LieType) -> EpsVector:
    out = EpsVector.zero(t.eps_dim)
    for w in fundamental_weights(t):
        out = out + w
    return out


@dataclass(frozen=True)
class Weight:
    """Integral weight given by fundamental-weight coefficients."""

    type: LieType
    fund_coeffs: tuple

    def __post_init__(self):
        if len(self.fund_coeffs) != self.type.rank:
            raise ValueError(
                f"need {self.type.rank} coefficients, got {len(self.fund_coeffs)}"
            )

    @property
    def eps(self) -> EpsVector:
        out = EpsVector.zero(self.type.eps_dim)
        for c, w in zip(self.fund_coeffs, fundamental_weights(self.type)):
            out = out + w.scale(c)
        return out

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.fund_coeffs)

    @classmethod
    def from_eps(cls, t: LieType, v: EpsVector) -> "Weight":
        coeffs = tuple(pairing(v, c) for c in simple_coroots(t))
        if any(not isinstance(c, int) for c in coeffs):
            raise ValueError(f"{v} is not an integral weight for {t}")
        return cls(t, coeffs)

    def __str__(self):
        return "(" + ",".join(str(c) for c in self.fund_coeffs) + ")"
