"""String cones three ways: explicit inequalities, the min/Delta recursion,
and subword-generated (Berenstein-Zelevinsky style) systems, plus the poset
emitters behind the explicit systems.

Coordinates are addressed by the double index t^{sign}_{i,j}: the minus block
comes from the A_{n-1} prefix of the canonical word (blocks of length 1..n-1),
the plus block from the tilde suffix (blocks up to n-1 for D, up to n for B/C).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from .rootsys import (
    LieType,
    cartan_matrix,
    fundamental_coweights,
    pairing,
    simple_roots,
)
from .weyl import (
    ReducedWord,
    canonical_word,
    identity,
    minimal_coset_rep,
    reduced_subwords,
    simple_reflection,
)

NEG_INF = float("-inf")


@dataclass(frozen=True)
class IndexMap:
    """Bijection between linear positions 1..N and (sign, i, j) double indices."""

    type: LieType
    entries: tuple  # entries[k] = (sign, i, j) for position k+1

    @property
    def N(self) -> int:
        return len(self.entries)

    def position(self, sign: str, i: int, j: int) -> int:
        """1-based linear position of t^sign_{i,j}."""
        try:
            return self.entries.index((sign, i, j)) + 1
        except ValueError:
            raise KeyError(f"no coordinate t{sign}_{{{i},{j}}}") from None

    def double_index(self, pos: int):
        return self.entries[pos - 1]

    def label(self, pos: int) -> str:
        sign, i, j = self.entries[pos - 1]
        return f"t{sign}_{{{i},{j}}}"

    @property
    def n_minus(self) -> int:
        return sum(1 for s, _, _ in self.entries if s == "-")

    def labels(self):
        return tuple(self.label(k + 1) for k in range(self.N))


@lru_cache(maxsize=None)
def index_map(t: LieType) -> IndexMap:
    n = t.rank
    entries = []
    if t.family == "A":
        for j in range(1, n + 1):
            entries.extend(("-", i, j) for i in range(1, j + 1))
        return IndexMap(t, tuple(entries))
    for j in range(1, n):
        entries.extend(("-", i, j) for i in range(1, j + 1))
    plus_top = n - 1 if t.family == "D" else n
    for j in range(1, plus_top + 1):
        entries.extend(("+", i, j) for i in range(1, j + 1))
    assert len(entries) == len(canonical_word(t).letters)
    return IndexMap(t, tuple(entries))


@dataclass(frozen=True)
class LinearForm:
    """coeffs . t + lam_coeffs . lambda >= 0 (lambda in fundamental coords)."""

    coeffs: tuple
    lam_coeffs: tuple = ()
    label: str = ""

    def value(self, point, lam_fund=None):
        v = sum(c * x for c, x in zip(self.coeffs, point))
        if self.lam_coeffs:
            if lam_fund is None:
                raise ValueError(f"form {self.label or self.coeffs} needs lambda")
            v += sum(c * x for c, x in zip(self.lam_coeffs, lam_fund))
        return v

    def key(self):
        return (self.coeffs, self.lam_coeffs)


def dedupe_forms(forms):
    seen, out = set(), []
    for f in forms:
        k = f.key()
        if k not in seen:
            seen.add(k)
            out.append(f)
    return out


@dataclass(frozen=True)
class ConeH:
    type: LieType
    forms: tuple  # LinearForm, constant part zero
    index_map: IndexMap

    @property
    def N(self) -> int:
        return self.index_map.N

    def member(self, point) -> bool:
        if len(point) != self.N:
            raise ValueError(f"point length {len(point)} != {self.N}")
        return all(f.value(point) >= 0 for f in self.forms)

    def difference_forms(self):
        """Forms that are not plain coordinate nonnegativity."""
        return [f for f in self.forms if sum(1 for c in f.coeffs if c != 0) > 1]


def _unit(N, pos, c=1):
    v = [0] * N
    v[pos - 1] = c
    return tuple(v)


def _diff(N, hi_pos, lo_pos, hi_c=1, lo_c=1):
    """hi_c * t_hi - lo_c * t_lo >= 0."""
    v = [0] * N
    v[hi_pos - 1] += hi_c
    v[lo_pos - 1] -= lo_c
    return tuple(v)


def nonneg_forms(im: IndexMap):
    return [
        LinearForm(_unit(im.N, k + 1), label=f"{im.label(k + 1)} >= 0")
        for k in range(im.N)
    ]


def _cover_relations(t: LieType, lemma_level: bool = False):
    """Cover relations ((hc, hi, hj, sign), (lc, li, lj, sign)) meaning
    hc * t_{hi,hj} >= lc * t_{li,lj} within the given sign block."""
    n = t.rank
    rels = []
    # minus block: t-_{i,j} >= t-_{i+1,j}
    for j in range(2, n):
        for i in range(1, j):
            rels.append(((1, i, j, "-"), (1, i + 1, j, "-")))
    plus_top = n - 1 if t.family == "D" else n
    if t.family in ("B", "D"):
        for j in range(2, plus_top + 1):
            for i in range(1, j):
                rels.append(((1, i, j, "+"), (1, i + 1, j, "+")))
        if t.family == "D":
            horiz = (
                [(i, n - 2) for i in range(1, n - 1)]
                if lemma_level
                else [(i, j) for j in range(1, n - 1) for i in range(1, j + 1)]
            )
        else:
            horiz = (
                [(i, i) for i in range(1, n)]
                if lemma_level
                else [(i, j) for j in range(1, n) for i in range(1, j + 1)]
            )
        for i, j in horiz:
            rels.append(((1, i, j, "+"), (1, i, j + 1, "+")))
    else:  # C
        for j in range(2, n + 1):
            for i in range(1, j - 1):
                rels.append(((1, i, j, "+"), (1, i + 1, j, "+")))
        for i in range(1, n):
            rels.append(((1, i, i + 1, "+"), (2, i + 1, i + 1, "+")))
            rels.append(((2, i, i, "+"), (1, i, i + 1, "+")))
        if not lemma_level:
            for j in range(2, n):
                for i in range(1, j):
                    rels.append(((1, i, j, "+"), (1, i, j + 1, "+")))
    return rels


@lru_cache(maxsize=None)
def string_cone_explicit(t: LieType) -> ConeH:
    """The explicit H-representation of the string cone for canonical_word(t)."""
    if t.family == "A":
        raise ValueError("family A handled by a_string_cone")
    im = index_map(t)
    forms = list(nonneg_forms(im))
    for (hc, hi, hj, hs), (lc, li, lj, ls) in _cover_relations(t):
        hp, lp = im.position(hs, hi, hj), im.position(ls, li, lj)
        forms.append(
            LinearForm(
                _diff(im.N, hp, lp, hc, lc),
                label=f"{hc if hc != 1 else ''}{im.label(hp)} >= "
                f"{lc if lc != 1 else ''}{im.label(lp)}".replace("2t", "2 t"),
            )
        )
    return ConeH(t, tuple(dedupe_forms(forms)), im)


@lru_cache(maxsize=None)
def a_string_cone(rank: int) -> ConeH:
    """String cone of the canonical word i^{A_rank}: consecutive differences.

    Verified against the min/Delta recursion on boxes in the test suite.
    """
    t = LieType("A", rank)
    im = index_map(t)
    forms = list(nonneg_forms(im))
    for j in range(2, rank + 1):
        for i in range(1, j):
            hp, lp = im.position("-", i, j), im.position("-", i + 1, j)
            forms.append(
                LinearForm(
                    _diff(im.N, hp, lp),
                    label=f"{im.label(hp)} >= {im.label(lp)}",
                )
            )
    return ConeH(t, tuple(dedupe_forms(forms)), im)


def string_cone(t: LieType) -> ConeH:
    return a_string_cone(t.rank) if t.family == "A" else string_cone_explicit(t)


@dataclass
class DeltaTable:
    """Trace of the min/Delta recursion: m^N = t, m^{j-1}_k = min(m^j_k, Delta^j(k))."""

    m: dict = field(default_factory=dict)  # j -> tuple of length j
    delta: dict = field(default_factory=dict)  # (j, k) -> value


def littelmann_member(w: ReducedWord, t_vec):
    """Membership via the recursion: true iff Delta^j(k) >= 0 for all k < j."""
    letters = w.letters
    N = len(letters)
    if len(t_vec) != N:
        raise ValueError(f"point length {len(t_vec)} != {N}")
    cm = cartan_matrix(w.type)
    table = DeltaTable()
    m = list(t_vec)
    table.m[N] = tuple(m)
    ok = True
    for j in range(N, 1, -1):
        lj = letters[j - 1]
        row = cm[lj - 1]  # row[s] = <alpha_{s+1}, alpha_lj^vee>
        # prefix sums S[k] = sum_{s <= k} m_s * <alpha_{i_s}, alpha_lj^vee>
        S = [0] * j
        acc = 0
        for s in range(j):
            acc += m[s] * row[letters[s] - 1]
            S[s] = acc
        # best[k] = max over l in (k, j], i_l = i_j of (m_l - S_l)  (0-based l-1)
        best = [NEG_INF] * (j + 1)
        for l in range(j, 0, -1):
            best[l - 1] = best[l]
            if letters[l - 1] == lj:
                best[l - 1] = max(best[l - 1], m[l - 1] - S[l - 1])
        new_m = []
        for k in range(1, j):
            if letters[k - 1] == lj:
                delta = S[k - 1] + best[k]
            else:
                delta = m[k - 1]
            table.delta[(j, k)] = delta
            if delta < 0:
                ok = False
            new_m.append(min(m[k - 1], delta))
        m = new_m
        table.m[j - 1] = tuple(m)
    return ok, table


def littelmann_member_batch(w: ReducedWord, points):
    """Vectorized membership for many points at once.

    ``points``: numpy integer array of shape (P, N); returns a boolean array.
    """
    import numpy as np

    letters = w.letters
    N = len(letters)
    pts = np.asarray(points, dtype=np.int64)
    if pts.ndim != 2 or pts.shape[1] != N:
        raise ValueError(f"expected shape (P, {N})")
    cm = cartan_matrix(w.type)
    P = pts.shape[0]
    ok = np.ones(P, dtype=bool)
    m = pts.copy()
    big = np.int64(1) << 60
    for j in range(N, 1, -1):
        lj = letters[j - 1]
        row = np.array([cm[lj - 1][letters[s] - 1] for s in range(j)], dtype=np.int64)
        S = np.cumsum(m[:, :j] * row[None, :], axis=1)
        val = m[:, :j] - S
        mask = np.array([letters[s] == lj for s in range(j)])
        val = np.where(mask[None, :], val, -big)
        # suffix max over l >= k (0-based), then shift to l >= k+1
        suff = np.maximum.accumulate(val[:, ::-1], axis=1)[:, ::-1]
        same = mask[: j - 1]
        delta = np.where(
            same[None, :], S[:, : j - 1] + suff[:, 1:j], m[:, : j - 1]
        )
        ok &= (delta >= 0).all(axis=1)
        m = np.minimum(m[:, : j - 1], delta)
    return ok


def bz_inequalities(w: ReducedWord) -> ConeH:
    """Inequalities generated by reduced subwords for the coset minima z^(i).

    For each i and each subword (positions j_1 < ... < j_r) of w reduced for
    z^(i), with j_0 = 0 and j_{r+1} = N+1, the form

        sum_p sum_{j_p < k < j_{p+1}} (s_{i_{j_1}}...s_{i_{j_p}} alpha_{i_k})(w_i^vee) t_k >= 0.
    """
    t = w.type
    letters = w.letters
    N = len(letters)
    al = simple_roots(t)
    cw = fundamental_coweights(t)
    im = index_map(t)
    forms = []
    for i in range(1, t.rank + 1):
        z = minimal_coset_rep(t, i)
        for positions in reduced_subwords(w, z):
            coeffs = [0] * N
            prefix = identity(t.eps_dim)
            bounds = [-1] + list(positions) + [N]
            for p in range(len(positions) + 1):
                if p > 0:
                    prefix = prefix * simple_reflection(t, letters[positions[p - 1]])
                for k in range(bounds[p] + 1, bounds[p + 1]):
                    c = pairing(prefix.act(al[letters[k] - 1]), cw[i - 1])
                    assert isinstance(c, int)
                    coeffs[k] = c
            forms.append(
                LinearForm(tuple(coeffs), label=f"z^({i}) subword {positions}")
            )
    return ConeH(t, tuple(dedupe_forms(forms)), im)


def cone_poset(t: LieType, lemma_level: bool = False):
    """Cover relations of the explicit system as ((hc,hi,hj,sign),(lc,li,lj,sign)).

    ``lemma_level`` selects the smaller pre-theorem systems behind the figures.
    """
    if t.family == "A":
        raise ValueError("poset emitted for B/C/D only")
    return _cover_relations(t, lemma_level=lemma_level)


def poset_dot(t: LieType, lemma_level: bool = False) -> str:
    """DOT text: nodes "t-_{i,j}" / "t+_{i,j}", one edge per cover relation."""
    rels = cone_poset(t, lemma_level=lemma_level)
    nodes = []
    seen = set()
    for sign, i, j in index_map(t).entries:
        name = f"t{sign}_{{{i},{j}}}"
        if name not in seen:
            seen.add(name)
            nodes.append(name)
    lines = [f"digraph cone_poset_{t} {{"]
    for name in nodes:
        lines.append(f'  "{name}";')
    for (hc, hi, hj, hs), (lc, li, lj, ls) in rels:
        lo = f"t{ls}_{{{li},{lj}}}"
        hi_name = f"t{hs}_{{{hi},{hj}}}"
        attr = ""
        if (hc, lc) != (1, 1):
            attr = f' [label="{hc}:{lc}"]'
        lines.append(f'  "{lo}" -> "{hi_name}"{attr};')
    lines.append("}")
    return "\n".join(lines) + "\n"


def plus_block_cone(t: LieType):
    """Plus-block (tilde) inequalities as forms over the plus coordinates only.

    Returns (forms, plus_index_entries); coordinates are the plus block in the
    shared linearization order.
    """
    if t.family == "A":
        raise ValueError("no plus block for family A")
    im = index_map(t)
    n_minus = im.n_minus
    plus_entries = im.entries[n_minus:]
    Np = len(plus_entries)
    pos = {e: k + 1 for k, e in enumerate(plus_entries)}
    forms = [
        LinearForm(_unit(Np, k + 1), label=f"t+_{{{i},{j}}} >= 0")
        for k, (_, i, j) in enumerate(plus_entries)
    ]
    for (hc, hi, hj, hs), (lc, li, lj, ls) in _cover_relations(t):
        if hs != "+":
            continue
        hp, lp = pos[("+", hi, hj)], pos[("+", li, lj)]
        forms.append(
            LinearForm(
                _diff(Np, hp, lp, hc, lc),
                label=f"{hc}t+_{{{hi},{hj}}} >= {lc}t+_{{{li},{lj}}}",
            )
        )
    return dedupe_forms(forms), plus_entries


def product_split(t: LieType, point):
    """Split a full point into (minus_part, plus_part) at N_minus."""
    im = index_map(t)
    if len(point) != im.N:
        raise ValueError(f"point length {len(point)} != {im.N}")
    nm = im.n_minus
    return tuple(point[:nm]), tuple(point[nm:])


def minus_member(t: LieType, minus_part) -> bool:
    """A_{n-1}-cone membership of the minus part."""
    return a_string_cone(t.rank - 1).member(minus_part)


def plus_member(t: LieType, plus_part) -> bool:
    """Tilde-cone membership of the plus part (plus-block inequalities)."""
    forms, entries = plus_block_cone(t)
    if len(plus_part) != len(entries):
        raise ValueError(f"plus part length {len(plus_part)} != {len(entries)}")
    return all(f.value(plus_part) >= 0 for f in forms)
