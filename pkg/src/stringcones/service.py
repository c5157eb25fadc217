"""HTTP service exposing cones, polytopes, branching, posets, and the
verification sweeps.  The CLI talks to this app (in-process by default), so
every response is a plain JSON-serializable model with deterministic order."""

from __future__ import annotations

from typing import Literal, Optional

from fastapi import FastAPI, HTTPException
from pydantic import BaseModel, Field

from . import branching as br
from . import verify as verify_mod
from .cones import bz_inequalities, cone_poset, index_map, poset_dot, string_cone
from .polytopes import (
    lusztig_branching_h_rep,
    lusztig_branching_points,
    lusztig_polytope_h_rep,
    lusztig_polytope_points,
    string_polytope_points,
)
from .rootsys import LieType, Weight
from .weyl import canonical_word

app = FastAPI(title="stringcones", version="0.1.0")


class TypedRequest(BaseModel):
    family: Literal["A", "B", "C", "D"]
    rank: int = Field(ge=1, le=12)

    def lie_type(self) -> LieType:
        try:
            return LieType(self.family, self.rank)
        except ValueError as e:
            raise HTTPException(status_code=422, detail=str(e))


class WeightedRequest(TypedRequest):
    lam: list[int]

    def weight(self) -> Weight:
        t = self.lie_type()
        if len(self.lam) != t.rank:
            raise HTTPException(
                status_code=422,
                detail=f"lambda needs {t.rank} fundamental coefficients",
            )
        w = Weight(t, tuple(self.lam))
        if not w.is_dominant:
            raise HTTPException(status_code=422, detail="lambda must be dominant")
        return w


class FormModel(BaseModel):
    coeffs: list[int]
    lam_coeffs: list[int] = []
    label: str = ""


def _form_model(f) -> FormModel:
    return FormModel(
        coeffs=list(f.coeffs), lam_coeffs=list(f.lam_coeffs), label=f.label
    )


class ConeRequest(TypedRequest):
    system: Literal["explicit", "generated"] = "explicit"
    lemma_level: bool = False


class ConeResponse(BaseModel):
    family: str
    rank: int
    system: str
    word: list[int]
    labels: list[str]
    forms: list[FormModel]


@app.get("/health")
def health():
    return {"status": "ok"}


@app.post("/cone", response_model=ConeResponse)
def cone(req: ConeRequest) -> ConeResponse:
    t = req.lie_type()
    w = canonical_word(t)
    if req.system == "generated":
        h = bz_inequalities(w)
    else:
        h = string_cone(t)
    return ConeResponse(
        family=t.family,
        rank=t.rank,
        system=req.system,
        word=list(w.letters),
        labels=list(h.index_map.labels()),
        forms=[_form_model(f) for f in h.forms],
    )


class PolytopeRequest(WeightedRequest):
    kind: Literal["string", "lusztig"] = "string"
    output: Literal["points", "h-rep"] = "points"


class PolytopeResponse(BaseModel):
    family: str
    rank: int
    lam: list[int]
    kind: str
    labels: list[str]
    points: Optional[list[list[int]]] = None
    forms: Optional[list[FormModel]] = None
    count: Optional[int] = None


@app.post("/polytope", response_model=PolytopeResponse)
def polytope(req: PolytopeRequest) -> PolytopeResponse:
    lam = req.weight()
    t = lam.type
    labels = [f"{'u' if req.kind == 'lusztig' else 't'}_{k + 1}"
              for k in range(len(canonical_word(t).letters))]
    out = PolytopeResponse(
        family=t.family, rank=t.rank, lam=list(lam.fund_coeffs),
        kind=req.kind, labels=labels,
    )
    if req.output == "h-rep":
        if req.kind != "lusztig":
            raise HTTPException(
                status_code=422,
                detail="h-rep output available for kind=lusztig only",
            )
        if t.family == "A":
            raise HTTPException(
                status_code=422, detail="Lusztig h-rep emitted for B/C/D only"
            )
        out.forms = [_form_model(f) for f in lusztig_polytope_h_rep(t)]
        return out
    if req.kind == "lusztig":
        if t.family == "A":
            raise HTTPException(
                status_code=422, detail="Lusztig polytope emitted for B/C/D only"
            )
        pts = lusztig_polytope_points(t, lam)
    else:
        pts = string_polytope_points(t, lam)
    out.points = [list(p) for p in pts]
    out.count = len(pts)
    return out


class BranchRequest(WeightedRequest):
    kind: Literal["string", "lusztig"] = "string"
    fibers: bool = False


class BranchRow(BaseModel):
    mu: list[int]
    multiplicity: int
    witnesses: list[list[int]]


class FiberRow(BaseModel):
    plus_point: list[int]
    mu: list[int]
    fiber_size: int


class BranchResponse(BaseModel):
    family: str
    rank: int
    lam: list[int]
    rows: list[BranchRow] = []
    fibers: Optional[list[FiberRow]] = None
    points: Optional[list[list[int]]] = None
    forms: Optional[list[FormModel]] = None


@app.post("/branch", response_model=BranchResponse)
def branch(req: BranchRequest) -> BranchResponse:
    lam = req.weight()
    t = lam.type
    if t.family == "A":
        raise HTTPException(status_code=422, detail="branching defined for B/C/D only")
    out = BranchResponse(family=t.family, rank=t.rank, lam=list(lam.fund_coeffs))
    if req.kind == "lusztig":
        out.points = [list(p) for p in lusztig_branching_points(t, lam)]
        out.forms = [_form_model(f) for f in lusztig_branching_h_rep(t)]
        return out
    res = br.branch_multiplicities(t, lam)
    out.rows = [
        BranchRow(mu=list(mu), multiplicity=m, witnesses=[list(w) for w in ws])
        for mu, (m, ws) in sorted(res.entries.items())
    ]
    if req.fibers:
        out.fibers = [
            FiberRow(plus_point=list(pt), mu=list(mu), fiber_size=len(fiber))
            for pt, mu, fiber in br.decomposition_report(t, lam)
        ]
    return out


class PosetRequest(TypedRequest):
    lemma_level: bool = False


class PosetResponse(BaseModel):
    family: str
    rank: int
    nodes: list[str]
    edges: list[list[str]]
    dot: str


@app.post("/poset", response_model=PosetResponse)
def poset(req: PosetRequest) -> PosetResponse:
    t = req.lie_type()
    if t.family == "A":
        raise HTTPException(status_code=422, detail="poset emitted for B/C/D only")
    rels = cone_poset(t, lemma_level=req.lemma_level)
    nodes = list(index_map(t).labels())
    edges = [
        [f"t{ls}_{{{li},{lj}}}", f"t{hs}_{{{hi},{hj}}}"]
        for (hc, hi, hj, hs), (lc, li, lj, ls) in rels
    ]
    return PosetResponse(
        family=t.family,
        rank=t.rank,
        nodes=nodes,
        edges=edges,
        dot=poset_dot(t, lemma_level=req.lemma_level),
    )


class VerifyRequest(BaseModel):
    criteria: Optional[list[str]] = None
    cap: Optional[int] = Field(default=None, ge=1)


class VerifyRow(BaseModel):
    name: str
    theorem: str
    passed: bool
    detail: str


class VerifyResponse(BaseModel):
    passed: bool
    results: list[VerifyRow]


@app.post("/verify", response_model=VerifyResponse)
def run_verify(req: VerifyRequest) -> VerifyResponse:
    from . import oracle

    cap = req.cap if req.cap is not None else oracle.DEFAULT_DIM_CAP
    try:
        results = verify_mod.run(req.criteria, cap=cap)
    except ValueError as e:
        raise HTTPException(status_code=422, detail=str(e))
    rows = [
        VerifyRow(name=r.name, theorem=r.theorem, passed=r.passed, detail=r.detail)
        for r in results
    ]
    return VerifyResponse(passed=all(r.passed for r in rows), results=rows)
