import pytest
from fastapi.testclient import TestClient

from stringcones.service import app


@pytest.fixture(scope="module")
def client():
    with TestClient(app) as c:
        yield c


def test_health(client):
    resp = client.get("/health")
    assert resp.status_code == 200
    assert resp.json() == {"status": "ok"}


def test_cone_c2_explicit(client):
    resp = client.post("/cone", json={"family": "C", "rank": 2})
    assert resp.status_code == 200
    data = resp.json()
    assert data["word"] == [1, 2, 1, 2]
    assert data["labels"] == ["t-_{1,1}", "t+_{1,1}", "t+_{1,2}", "t+_{2,2}"]
    assert len(data["forms"]) == 6
    coeff_rows = sorted(tuple(f["coeffs"]) for f in data["forms"])
    assert (0, 0, 1, -2) in coeff_rows and (0, 2, -1, 0) in coeff_rows


def test_cone_generated_system(client):
    resp = client.post("/cone", json={"family": "A", "rank": 2,
                                      "system": "generated"})
    assert resp.status_code == 200
    assert sorted(tuple(f["coeffs"]) for f in resp.json()["forms"]) == [
        (0, 0, 1), (0, 1, -1), (1, 0, 0)
    ]


def test_cone_bad_rank(client):
    resp = client.post("/cone", json={"family": "D", "rank": 2})
    assert resp.status_code == 422
    resp = client.post("/cone", json={"family": "E", "rank": 6})
    assert resp.status_code == 422


def test_polytope_string_points(client):
    resp = client.post("/polytope", json={"family": "B", "rank": 2,
                                          "lam": [0, 1]})
    assert resp.status_code == 200
    data = resp.json()
    assert data["count"] == 4
    assert data["points"] == [[0, 0, 0, 0], [0, 1, 0, 0], [0, 1, 1, 1],
                              [1, 1, 0, 0]]


def test_polytope_lusztig_h_rep(client):
    resp = client.post("/polytope", json={"family": "D", "rank": 3,
                                          "lam": [0, 0, 0], "kind": "lusztig",
                                          "output": "h-rep"})
    assert resp.status_code == 200
    forms = resp.json()["forms"]
    assert all(len(f["coeffs"]) == 6 for f in forms)
    assert any(f["lam_coeffs"] != [0, 0, 0] for f in forms)


def test_polytope_errors(client):
    # string h-rep not offered
    resp = client.post("/polytope", json={"family": "B", "rank": 2,
                                          "lam": [1, 0], "output": "h-rep"})
    assert resp.status_code == 422
    # Lusztig polytope for family A not offered
    resp = client.post("/polytope", json={"family": "A", "rank": 2,
                                          "lam": [1, 0], "kind": "lusztig"})
    assert resp.status_code == 422
    # non-dominant weight
    resp = client.post("/polytope", json={"family": "B", "rank": 2,
                                          "lam": [-1, 0]})
    assert resp.status_code == 422
    # wrong lambda length
    resp = client.post("/polytope", json={"family": "B", "rank": 2,
                                          "lam": [1]})
    assert resp.status_code == 422


def test_branch_d3(client):
    resp = client.post("/branch", json={"family": "D", "rank": 3,
                                        "lam": [1, 0, 0], "fibers": True})
    assert resp.status_code == 200
    data = resp.json()
    rows = {tuple(r["mu"]): r["multiplicity"] for r in data["rows"]}
    assert rows == {(1, 0): 1, (0, 1): 1}
    assert sum(f["fiber_size"] for f in data["fibers"]) == 6


def test_branch_family_a_rejected(client):
    resp = client.post("/branch", json={"family": "A", "rank": 2,
                                        "lam": [1, 0]})
    assert resp.status_code == 422


def test_poset_d3(client):
    resp = client.post("/poset", json={"family": "D", "rank": 3})
    assert resp.status_code == 200
    data = resp.json()
    assert len(data["nodes"]) == 6
    assert len(data["edges"]) == 3
    assert ["t+_{2,2}", "t+_{1,2}"] in data["edges"]
    assert data["dot"].startswith("digraph")


def test_verify_single_criterion(client):
    resp = client.post("/verify", json={"criteria": ["poset_fidelity"]})
    assert resp.status_code == 200
    data = resp.json()
    assert data["passed"] is True
    assert data["results"][0]["name"] == "poset_fidelity"
    assert data["results"][0]["theorem"]


def test_verify_unknown_criterion(client):
    resp = client.post("/verify", json={"criteria": ["nope"]})
    assert resp.status_code == 422
