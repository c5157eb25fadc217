"""Weyl groups as signed permutations, reduced words, and coset minima.

Composition convention: ``word_to_element((i_1,...,i_m))`` is the map
``s_{i_1} o s_{i_2} o ... o s_{i_m}`` (rightmost factor applied first), so
that the convex-order roots ``beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k})``
read off directly from prefix products.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .rootsys import (
    EpsVector,
    LieType,
    Weight,
    pairing,
    positive_roots,
    simple_coroots,
    simple_roots,
)


@dataclass(frozen=True)
class SignedPermutation:
    """Signed permutation on epsilon-coordinates.

    ``image[k]`` = signed target index of e_{k+1}: e_{k+1} |-> sign * e_|image[k]|.
    """

    image: tuple

    def __post_init__(self):
        n = len(self.image)
        if sorted(abs(v) for v in self.image) != list(range(1, n + 1)):
            raise ValueError(f"not a signed permutation: {self.image}")

    @property
    def dim(self) -> int:
        return len(self.image)

    def act(self, v: EpsVector) -> EpsVector:
        if v.dim != self.dim:
            raise ValueError(f"dimension mismatch: {v.dim} vs {self.dim}")
        out = [0] * self.dim
        for k, target in enumerate(self.image):
            sign = 1 if target > 0 else -1
            out[abs(target) - 1] = sign * v.doubled[k]
        return EpsVector(tuple(out))

    def __mul__(self, other: "SignedPermutation") -> "SignedPermutation":
        """(self * other)(v) = self(other(v))."""
        out = []
        for target in other.image:
            sign = 1 if target > 0 else -1
            t2 = self.image[abs(target) - 1]
            out.append(sign * t2)
        return SignedPermutation(tuple(out))

    def inverse(self) -> "SignedPermutation":
        out = [0] * self.dim
        for k, target in enumerate(self.image):
            sign = 1 if target > 0 else -1
            out[abs(target) - 1] = sign * (k + 1)
        return SignedPermutation(tuple(out))

    def is_identity(self) -> bool:
        return all(v == k + 1 for k, v in enumerate(self.image))


def identity(dim: int) -> SignedPermutation:
    return SignedPermutation(tuple(range(1, dim + 1)))


@lru_cache(maxsize=None)
def simple_reflection(t: LieType, i: int) -> SignedPermutation:
    n, dim = t.rank, t.eps_dim
    if not 1 <= i <= n:
        raise ValueError(f"letter {i} out of range for {t}")
    img = list(range(1, dim + 1))
    if t.family == "A" or i < n:
        img[i - 1], img[i] = img[i], img[i - 1]
    elif t.family in ("B", "C"):
        img[n - 1] = -n
    else:  # D, i = n: e_{n-1} |-> -e_n, e_n |-> -e_{n-1}
        img[n - 2], img[n - 1] = -n, -(n - 1)
    return SignedPermutation(tuple(img))


@dataclass(frozen=True)
class ReducedWord:
    type: LieType
    letters: tuple

    def __post_init__(self):
        n = self.type.rank
        for l in self.letters:
            if not 1 <= l <= n:
                raise ValueError(f"letter {l} out of range for {self.type}")

    def __len__(self):
        return len(self.letters)


def word_to_element(w: ReducedWord) -> SignedPermutation:
    out = identity(w.type.eps_dim)
    for l in w.letters:
        out = out * simple_reflection(w.type, l)
    return out


def _pos_root_set(t: LieType):
    return {r.doubled for r in positive_roots(t)}


def length(t: LieType, w: SignedPermutation) -> int:
    """Coxeter length = number of positive roots sent negative."""
    pos = _pos_root_set(t)
    cnt = 0
    for r in positive_roots(t):
        if w.act(r).doubled not in pos:
            cnt += 1
    return cnt


def is_reduced(w: ReducedWord) -> bool:
    return len(w.letters) == length(w.type, word_to_element(w))


def a_canonical_word(m: int):
    """Letters of i^{A_m} = (m, m-1 m, ..., 1 2 ... m)."""
    out = []
    for j in range(1, m + 1):
        out.extend(range(m - j + 1, m + 1))
    return tuple(out)


@lru_cache(maxsize=None)
def canonical_word(t: LieType) -> ReducedWord:
    """The paper-canonical reduced word for the longest element.

    For B/C/D this is the A_{n-1} prefix followed by the tilde suffix; the
    suffix block j for D ends alternately in n (j odd) and n-1 (j even).
    """
    n = t.rank
    if t.family == "A":
        return ReducedWord(t, a_canonical_word(n))
    letters = list(a_canonical_word(n - 1))
    if t.family in ("B", "C"):
        for j in range(1, n + 1):
            letters.extend(range(n - j + 1, n + 1))
    else:  # D
        for j in range(1, n):
            letters.extend(range(n - j, n - 1))
            letters.append(n if j % 2 == 1 else n - 1)
    return ReducedWord(t, tuple(letters))


def canonical_tilde_word(t: LieType):
    """Tilde suffix of canonical_word (the plus-block letters)."""
    n = t.rank
    full = canonical_word(t).letters
    return full[(n - 1) * n // 2 :]


def positive_root_order(w: ReducedWord):
    """Convex order beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) for w_0 words."""
    t = w.type
    roots = positive_roots(t)
    if len(w.letters) != len(roots):
        raise ValueError(f"word of length {len(w.letters)} is not a word for w_0")
    al = simple_roots(t)
    prefix = identity(t.eps_dim)
    out = []
    for l in w.letters:
        out.append(prefix.act(al[l - 1]))
        prefix = prefix * simple_reflection(t, l)
    pos = _pos_root_set(t)
    seen = {r.doubled for r in out}
    if len(seen) != len(roots) or not seen <= pos:
        raise ValueError("word is not reduced for the longest element")
    return tuple(out)


@lru_cache(maxsize=None)
def longest_element(t: LieType) -> SignedPermutation:
    return word_to_element(canonical_word(t))


@lru_cache(maxsize=None)
def dual_weight(lam: Weight) -> Weight:
    """lam* = -w0(lam), the highest weight of the dual module."""
    t = lam.type
    star = -longest_element(t).act(lam.eps)
    coeffs = tuple(pairing(star, c) for c in simple_coroots(t))
    assert all(isinstance(c, int) and c >= 0 for c in coeffs)
    return Weight(t, coeffs)


@lru_cache(maxsize=None)
def _parabolic(t: LieType, i: int):
    """All elements of the parabolic subgroup generated by {s_j : j != i}."""
    gens = [simple_reflection(t, j) for j in range(1, t.rank + 1) if j != i]
    seen = {identity(t.eps_dim).image}
    frontier = [identity(t.eps_dim)]
    while frontier:
        nxt = []
        for w in frontier:
            for g in gens:
                wg = w * g
                if wg.image not in seen:
                    seen.add(wg.image)
                    nxt.append(wg)
        frontier = nxt
    return tuple(SignedPermutation(img) for img in sorted(seen))


def minimal_coset_rep(t: LieType, i: int) -> SignedPermutation:
    """z^(i): the minimal-length element of W_{i-hat} * s_i * w_0 (brute force)."""
    if not 1 <= i <= t.rank:
        raise ValueError(f"index {i} out of range for {t}")
    base = simple_reflection(t, i) * longest_element(t)
    best, best_len = None, None
    ties = 0
    for w in _parabolic(t, i):
        cand = w * base
        l = length(t, cand)
        if best_len is None or l < best_len:
            best, best_len, ties = cand, l, 1
        elif l == best_len:
            ties += 1
    assert ties == 1, f"minimal coset representative not unique for {t}, i={i}"
    return best


def minimal_coset_rep_closed(t: LieType, i: int):
    """Closed-form z^(i) where available; None outside the stated ranges.

    B/C (1 <= i <= n-1) and D (1 <= i < n-1): the row
    (-i, -(i-1), ..., -2, i+1, -1, i+2, ..., n-1, last) with last = n for
    B/C and +-n for D (sign positive iff i is even).
    """
    n = t.rank
    if t.family == "A":
        return None
    if t.family in ("B", "C"):
        if not 1 <= i <= n - 1:
            return None
        if i == n - 1:
            # the i+1 slot and the trailing n coincide here
            img = [-(i - p) for p in range(i - 1)] + [n, -1]
            return SignedPermutation(tuple(img))
        last = n
    else:
        if not 1 <= i <= n - 2:
            return None
        last = n if i % 2 == 0 else -n
    img = [-(i - p) for p in range(i - 1)]  # positions 1..i-1 -> -i..-2
    img.append(i + 1)
    img.append(-1)
    img.extend(range(i + 2, n))
    img.append(last)
    return SignedPermutation(tuple(img))


def reduced_subwords(w: ReducedWord, z: SignedPermutation):
    """All position-tuples J such that (letters[j] for j in J) is reduced for z.

    DFS with one-step descent pruning: extend a prefix product p by position k
    only when both p*s and (p*s)^{-1} z shrink the remaining length.
    """
    t = w.type
    target_len = length(t, z)
    letters = w.letters
    N = len(letters)
    out = []

    def rest_len(p):
        return length(t, p.inverse() * z)

    def dfs(start, p, done, picked):
        if done == target_len:
            if (p.image == z.image):
                out.append(tuple(picked))
            return
        for k in range(start, N - (target_len - done) + 1):
            s = simple_reflection(t, letters[k])
            ps = p * s
            if length(t, ps) != done + 1:
                continue
            if rest_len(ps) != target_len - done - 1:
                continue
            picked.append(k)
            dfs(k + 1, ps, done + 1, picked)
            picked.pop()

    dfs(0, identity(t.eps_dim), 0, [])
    return out
