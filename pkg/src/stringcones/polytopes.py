"""String and Lusztig polytopes with the phi/psi transfer maps.

The string polytope is cut out of the string cone by the weight-bound chain

    t_k <= <lambda - t_N alpha_{i_N} - ... - t_{k+1} alpha_{i_{k+1}}, alpha_{i_k}^vee>,

which makes a depth-first enumeration from t_N down to t_1 finite.  The
Lusztig polytope is its image under the affine bijection phi; psi is the
inverse.  H-representations keep lambda symbolic (one integer coefficient per
fundamental coordinate), so a single system serves every weight of the rank.
"""

from __future__ import annotations

from functools import lru_cache

from .cones import (
    LinearForm,
    dedupe_forms,
    index_map,
    string_cone,
)
from .rootsys import (
    LieType,
    Weight,
    cartan_matrix,
    coroot,
    fundamental_weights,
    pairing,
    simple_coroots,
    simple_roots,
)
from .weyl import ReducedWord, canonical_word, positive_root_order


def weight_bound(w: ReducedWord, lam: Weight, suffix, k: int) -> int:
    """Exact upper bound for t_k given the suffix (t_{k+1}, ..., t_N)."""
    t = w.type
    al = simple_roots(t)
    cor = simple_coroots(t)
    mu = lam.eps
    for off, val in enumerate(suffix):
        letter = w.letters[k + off]  # position k+1+off, 0-based index k+off
        if val:
            mu = mu - al[letter - 1].scale(val)
    b = pairing(mu, cor[w.letters[k - 1] - 1])
    assert isinstance(b, int)
    return b


def _forms_by_min_support(forms, N):
    """Bucket forms by the smallest coordinate they touch (1-based position)."""
    buckets = [[] for _ in range(N + 1)]
    for f in forms:
        support = [k for k, c in enumerate(f.coeffs) if c]
        pos = min(support) + 1 if support else 1
        buckets[pos].append(f)
    return buckets


def _chain_enumerate(letters, coroots_doubled, roots_doubled, forms, lam):
    """DFS over the chain region, filtering by ``forms`` as coordinates fill in.

    ``coroots_doubled[k]`` / ``roots_doubled[k]`` belong to position k+1's
    letter.  Forms are linear in the point with symbolic lambda part.
    """
    N = len(letters)
    lam_fund = lam.fund_coeffs
    buckets = _forms_by_min_support(forms, N)
    mu = list(lam.eps.doubled)
    point = [0] * N
    out = []

    def ok_at(k):
        for f in buckets[k]:
            if f.value(point, lam_fund) < 0:
                return False
        return True

    def dfs(k):
        if k == 0:
            out.append(tuple(point))
            return
        cor = coroots_doubled[k - 1]
        root = roots_doubled[k - 1]
        dot = sum(a * b for a, b in zip(mu, cor))
        assert dot % 4 == 0
        bound = dot // 4
        for v in range(0, bound + 1):
            point[k - 1] = v
            if v:
                for idx in range(len(mu)):
                    mu[idx] -= root[idx]
            if ok_at(k):
                dfs(k - 1)
        # undo all subtractions for this level
        for idx in range(len(mu)):
            mu[idx] += bound * root[idx] if bound > 0 else 0
        point[k - 1] = 0

    dfs(N)
    return out


def _word_vectors(t: LieType, letters):
    al = simple_roots(t)
    cor = simple_coroots(t)
    return (
        [cor[l - 1].doubled for l in letters],
        [al[l - 1].doubled for l in letters],
    )


def string_polytope_points(t: LieType, lam: Weight, recheck_littelmann=False):
    """All lattice points of the string polytope for canonical_word(t)."""
    if not lam.is_dominant:
        raise ValueError(f"lambda {lam} is not dominant")
    w = canonical_word(t)
    cones_forms = string_cone(t).forms
    cors, roots = _word_vectors(t, w.letters)
    pts = _chain_enumerate(w.letters, cors, roots, cones_forms, lam)
    if recheck_littelmann:
        from .cones import littelmann_member

        for p in pts:
            assert littelmann_member(w, p)[0], f"cone/recursion disagreement at {p}"
    return sorted(pts)


def string_to_lusztig(t: LieType, lam: Weight, pt):
    """phi(t)_k = lambda_{i_k} - t_k - sum_{j>k} a_{i_k i_j} t_j."""
    letters = canonical_word(t).letters
    N = len(letters)
    if len(pt) != N:
        raise ValueError(f"point length {len(pt)} != {N}")
    cm = cartan_matrix(t)
    lam_f = lam.fund_coeffs
    out = []
    for k in range(N):
        row = cm[letters[k] - 1]
        v = lam_f[letters[k] - 1] - pt[k]
        for j in range(k + 1, N):
            v -= row[letters[j] - 1] * pt[j]
        out.append(v)
    return tuple(out)


@lru_cache(maxsize=None)
def _psi_data(t: LieType):
    """Symbolic psi: psi(u)_k = sum_i L[k][i] lam_i - u_k - sum_{j>k} D[k][j] u_j.

    L[k][i] = <omega_i, beta_k^vee>, D[k][j] = <beta_j, beta_k^vee> from the
    convex order of canonical_word(t).
    """
    w = canonical_word(t)
    betas = positive_root_order(w)
    bcor = [coroot(b) for b in betas]
    fw = fundamental_weights(t)
    L = tuple(tuple(int(b.dot(wt) / 1) if (b.dot(wt)).denominator == 1 else _err()
                    for wt in fw) for b in bcor)
    D = tuple(
        tuple(int(pairing(bj, bk)) for bj in betas) for bk in bcor
    )
    return L, D


def _err():
    raise AssertionError("non-integer pairing in psi data")


def lusztig_to_string(t: LieType, lam: Weight, u):
    letters = canonical_word(t).letters
    N = len(letters)
    if len(u) != N:
        raise ValueError(f"point length {len(u)} != {N}")
    L, D = _psi_data(t)
    lam_f = lam.fund_coeffs
    out = []
    for k in range(N):
        v = sum(L[k][i] * lam_f[i] for i in range(len(lam_f))) - u[k]
        for j in range(k + 1, N):
            v -= D[k][j] * u[j]
        out.append(v)
    return tuple(out)


def _compose_with_psi(string_forms, L, D, N, n):
    """Push t-space forms through psi: f(psi(u)) as a form in u with lambda part."""
    out = []
    for f in string_forms:
        c = f.coeffs
        lam_c = [0] * n
        u_c = [0] * N
        for k in range(N):
            if not c[k]:
                continue
            for i in range(n):
                lam_c[i] += c[k] * L[k][i]
            u_c[k] -= c[k]
            for j in range(k + 1, N):
                u_c[j] -= c[k] * D[k][j]
        out.append(LinearForm(tuple(u_c), tuple(lam_c), label=f"psi*({f.label})"))
    return out


def lusztig_polytope_h_rep(t: LieType, lam: Weight | None = None):
    """Inequality system of the Lusztig polytope, lambda symbolic.

    Built by pushing the string system (cone inequalities and coordinate
    nonnegativity) through psi exactly; the chain bounds become u >= 0.
    """
    if t.family == "A":
        raise ValueError("H-representation emitted for B/C/D only")
    im = index_map(t)
    N, n = im.N, t.rank
    L, D = _psi_data(t)
    forms = _compose_with_psi(string_cone(t).forms, L, D, N, n)
    forms += [
        LinearForm(
            tuple(1 if j == k else 0 for j in range(N)),
            (0,) * n,
            label=f"u{im.label(k + 1)[1:]} >= 0",
        )
        for k in range(N)
    ]
    forms = dedupe_forms(forms)
    if lam is not None:
        _check_lambda(t, lam)
    return forms


def _check_lambda(t, lam):
    if lam.type != t:
        raise ValueError(f"weight type {lam.type} != {t}")
    if not lam.is_dominant:
        raise ValueError(f"lambda {lam} is not dominant")


def _plus_positions(t: LieType):
    im = index_map(t)
    entries = im.entries[im.n_minus :]
    pos = {(i, j): k + 1 for k, (_, i, j) in enumerate(entries)}
    return entries, pos


def lusztig_branching_h_rep(t: LieType, lam: Weight | None = None):
    """The Lusztig branching polytope system over the plus coordinates.

    Transcribed from the explicit per-family inequality lists; lambda symbolic.
    """
    if t.family == "A":
        raise ValueError("H-representation emitted for B/C/D only")
    n = t.rank
    entries, pos = _plus_positions(t)
    Np = len(entries)

    def form(lam_unit, plus_terms, label):
        # lam_{lam_unit} + sum of (sign, i, j) terms >= 0
        lam_c = [0] * n
        lam_c[lam_unit - 1] = 1
        u_c = [0] * Np
        for sign, i, j in plus_terms:
            u_c[pos[(i, j)] - 1] += sign
        return LinearForm(tuple(u_c), tuple(lam_c), label=label)

    forms = []
    top = n - 1 if t.family == "D" else n
    if t.family == "D":
        for i in range(1, n - 1):
            for j in range(i + 1, n):
                terms = [(1, i + 1, k) for k in range(j + 1, n)]
                terms += [(-1, i, k) for k in range(j, n)]
                forms.append(form(i, terms, f"row {i} vs {i + 1} at {j}"))
        for j in range(1, n - 1):
            for i in range(1, j + 1):
                terms = [(1, k, j + 1) for k in range(i + 1, j + 1)]
                terms += [(1, j + 2, k) for k in range(j + 2, n)]
                terms += [(-1, k, j) for k in range(i, j + 1)]
                terms += [(-1, j + 1, k) for k in range(j + 2, n)]
                forms.append(form(j + 1, terms, f"col {j} vs {j + 1} from {i}"))
        forms.append(form(n, [(-1, n - 1, n - 1)], f"u+_{{{n-1},{n-1}}} <= lam_{n}"))
    elif t.family == "B":
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                terms = [(1, i + 1, k) for k in range(j + 1, n + 1)]
                terms += [(-1, i, k) for k in range(j, n + 1)]
                forms.append(form(i, terms, f"row {i} vs {i + 1} at {j}"))
        for j in range(1, n):
            for i in range(1, j + 1):
                terms = [(1, k, j + 1) for k in range(i + 1, j + 2)]
                terms += [(1, j + 1, k) for k in range(j + 2, n + 1)]
                terms += [(-1, k, j) for k in range(i, j + 1)]
                terms += [(-1, j, k) for k in range(j + 1, n + 1)]
                forms.append(form(j, terms, f"col {j} vs {j + 1} from {i}"))
        forms.append(form(n, [(-1, n, n)], f"u+_{{{n},{n}}} <= lam_{n}"))
    else:  # C
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                terms = [(1, i + 1, k) for k in range(j + 1, n + 1)]
                terms += [(-1, i, k) for k in range(j, n + 1)]
                forms.append(form(i, terms, f"row {i} vs {i + 1} at {j}"))
        for j in range(1, n):
            for i in range(1, j + 1):
                terms = [(1, k, j + 1) for k in range(i + 1, j + 2)]
                terms += [(1, j + 1, k) for k in range(j + 1, n + 1)]
                terms += [(-1, k, j) for k in range(i, j + 1)]
                terms += [(-1, j, k) for k in range(j, n + 1)]
                forms.append(form(j, terms, f"col {j} vs {j + 1} from {i}"))
        forms.append(form(n, [(-1, n, n)], f"u+_{{{n},{n}}} <= lam_{n}"))
    forms += [
        LinearForm(
            tuple(1 if l == k else 0 for l in range(Np)),
            (0,) * n,
            label=f"u+_{{{i},{j}}} >= 0",
        )
        for k, (_, i, j) in enumerate(entries)
    ]
    if lam is not None:
        _check_lambda(t, lam)
    return dedupe_forms(forms)


def _psi_chain_enumerate(L, D, forms, lam_fund, positions):
    """Enumerate {u >= 0 : psi(u) >= 0} (restricted to ``positions``, 0-based,
    a suffix of the word) and filter by ``forms``.

    The bound psi(u)_k >= 0 reads u_k <= l_k - sum_{j>k} D[k][j] u_j, which is
    finite given the suffix, exactly like the string chain.
    """
    Np = len(positions)
    buckets = _forms_by_min_support(forms, Np)
    point = [0] * Np
    out = []
    l_const = [
        sum(L[p][i] * lam_fund[i] for i in range(len(lam_fund))) for p in positions
    ]

    def dfs(k):
        if k == 0:
            out.append(tuple(point))
            return
        p = positions[k - 1]
        bound = l_const[k - 1]
        for j in range(k, Np):
            bound -= D[p][positions[j]] * point[j]
        for v in range(0, max(bound, -1) + 1):
            point[k - 1] = v
            ok = True
            for f in buckets[k]:
                if f.value(point, lam_fund) < 0:
                    ok = False
                    break
            if ok:
                dfs(k - 1)
        point[k - 1] = 0

    dfs(Np)
    return out


def lusztig_polytope_points(t: LieType, lam: Weight):
    _check_lambda(t, lam)
    L, D = _psi_data(t)
    forms = lusztig_polytope_h_rep(t)
    N = index_map(t).N
    return sorted(_psi_chain_enumerate(L, D, forms, lam.fund_coeffs, list(range(N))))


def lusztig_branching_points(t: LieType, lam: Weight):
    _check_lambda(t, lam)
    L, D = _psi_data(t)
    forms = lusztig_branching_h_rep(t)
    im = index_map(t)
    positions = list(range(im.n_minus, im.N))
    return sorted(_psi_chain_enumerate(L, D, forms, lam.fund_coeffs, positions))


def plus_string_to_lusztig(t: LieType, lam: Weight, plus_pt):
    """phi restricted to the plus block (self-contained: the plus block is a
    suffix of the word, and phi(t)_k only involves positions >= k)."""
    im = index_map(t)
    nm = im.n_minus
    full = (0,) * nm + tuple(plus_pt)
    return string_to_lusztig(t, lam, full)[nm:]
