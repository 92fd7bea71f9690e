import pytest
from fastapi.testclient import TestClient
from httpx import ASGITransport, AsyncClient

from app.main import app


def test_classify_endpoint(test_client: TestClient):
    """Test that the classify endpoint returns the class and canonical form."""
    response = test_client.post("/api/v1/classify", json={"matrix": ["3", "4", "2", "3"]})

    assert response.status_code == 200
    report = response.json()
    assert report["command"] == "classify"
    assert report["results"]["class"] == "pos-hyp-2"
    assert report["inputs"] == {"matrix": ["3", "4", "2", "3"], "half": False}
    assert "seconds" in report["timing"]


def test_classify_half_period(test_client: TestClient):
    response = test_client.post("/api/v1/classify", json={"matrix": ["1", "-1", "-1", "2"], "half": True})

    assert response.status_code == 200
    assert response.json()["results"]["class"] == "pos-hyp-1"


def test_domain_errors_are_422(test_client: TestClient):
    """Test that domain errors carry their type and message."""
    response = test_client.post("/api/v1/classify", json={"matrix": ["1", "0", "0", "1"]})

    assert response.status_code == 422
    detail = response.json()["detail"]
    assert detail["type"] == "DegenerateOrbit"
    assert detail["message"]


def test_iterate_endpoint(test_client: TestClient):
    response = test_client.get("/api/v1/iterate", params={"class": "neg-hyp-1", "mu1": "1/2", "k": "1..4"})

    assert response.status_code == 200
    rows = response.json()["results"]
    assert [row["mu1"] for row in rows] == ["1/2", "3/2", "3/2", "5/2"]
    assert [row["mu_cz"] for row in rows] == [1, 2, 3, 4]


def test_iterate_degenerate_row(test_client: TestClient):
    response = test_client.get("/api/v1/iterate", params={"class": "elliptic", "theta": "5/17", "k": "16,17"})

    assert response.status_code == 200
    assert [row["degenerate"] for row in response.json()["results"]] == [False, True]


@pytest.mark.parametrize(
    "params",
    [
        {"class": "neg-hyp-1", "mu1": "1/2", "k": "abc"},
        {"class": "neg-hyp-1", "mu1": "1/2", "k": "0..3"},
        {"class": "neg-hyp-1", "mu1": "1/2", "k": "61"},
        {"class": "neg-hyp-1", "mu1": "1/3"},
        {"class": "neg-hyp-1", "mu1": "x"},
        {"class": "elliptic", "mu1": "1/2"},
    ],
)
def test_iterate_bad_parameters(test_client: TestClient, params):
    """Test that malformed parameters are rejected with 400."""
    response = test_client.get("/api/v1/iterate", params=params)

    assert response.status_code == 400


def test_iterate_parity_error(test_client: TestClient):
    response = test_client.get("/api/v1/iterate", params={"class": "neg-hyp-1", "mu1": "1"})

    assert response.status_code == 422
    assert response.json()["detail"]["type"] == "ParityError"


def test_iterate_unknown_class(test_client: TestClient):
    response = test_client.get("/api/v1/iterate", params={"class": "hyperbolic", "mu1": "1/2"})

    assert response.status_code == 422


@pytest.mark.parametrize(
    "params, expected",
    [
        ({"class": "neg-hyp-1", "mu1": "1/2", "n": 6}, [5, 1]),
        ({"class": "neg-hyp-2", "mu1": "1/2", "n": 5}, [2, 2, 1]),
        ({"class": "pos-hyp-1", "mu1": "1/2", "n": 4, "end": "pos"}, [1, 1, 1, 1]),
        ({"class": "elliptic", "theta": "1/100", "n": 3}, [3]),
    ],
)
def test_partition_endpoint(test_client: TestClient, params, expected):
    response = test_client.get("/api/v1/partition", params=params)

    assert response.status_code == 200
    report = response.json()
    assert report["results"]["partition"] == expected
    assert report["counterexamples"] == []


def test_partition_limits(test_client: TestClient):
    response = test_client.get("/api/v1/partition", params={"class": "neg-hyp-1", "mu1": "1/2", "n": 21})
    assert response.status_code == 400

    response = test_client.get("/api/v1/partition", params={"class": "elliptic", "theta": "2", "n": 3})
    assert response.status_code == 422
    assert response.json()["detail"]["type"] == "DegenerateOrbit"


def test_index_endpoint(test_client: TestClient):
    plane = {"sym_pos": [{"orbit": {"class": "neg-hyp-1", "mu1": "3/2"}, "mult": 1}]}
    response = test_client.post("/api/v1/index", json=plane)

    assert response.status_code == 200
    results = response.json()["results"]
    assert results["ind_real"] == 1
    assert results["ind_doubled"] is None


def test_index_of_pairs_reports_the_doubled_index(test_client: TestClient):
    orbit = {"class": "neg-hyp-1", "mu1": "3/2"}
    response = test_client.post("/api/v1/index", json={"pair_pos": [{"orbit": orbit, "mult": 1}]})

    assert response.status_code == 200
    results = response.json()["results"]
    assert results["ind_doubled"] == 2 * results["ind_real"]


def test_index_errors(test_client: TestClient):
    unbalanced = {"base": {"class": "neg-hyp-1", "mu1": "1/2"}, "a": [1], "b": [1, 1, 1]}
    response = test_client.post("/api/v1/index", json=unbalanced)
    assert response.status_code == 422
    assert response.json()["detail"]["type"] == "BalanceViolation"

    zero_mult = {"sym_pos": [{"orbit": {"class": "neg-hyp-1", "mu1": "3/2"}, "mult": 0}]}
    response = test_client.post("/api/v1/index", json=zero_mult)
    assert response.status_code == 400


@pytest.mark.parametrize(
    "suite, params",
    [
        ("iteration", {"max_k": 8, "theta_den": 5}),
        ("bad-breaking", {"max_d": 3, "cover_theta_den": 3}),
        ("classification", {"samples": 20, "seed": 3}),
    ],
)
def test_verify_endpoint(test_client: TestClient, suite, params):
    response = test_client.get(f"/api/v1/verify/{suite}", params=params)

    assert response.status_code == 200
    report = response.json()
    assert report["results"]["suite"] == suite
    assert report["counterexamples"] == []


def test_verify_rejects_bad_bounds(test_client: TestClient):
    assert test_client.get("/api/v1/verify/no-such-suite").status_code == 422
    assert test_client.get("/api/v1/verify/iteration", params={"max_k": 0}).status_code == 422


def test_verify_refuses_bounds_above_the_http_limits(test_client: TestClient):
    """test that the default ech-lemma bounds are too large to be served."""
    response = test_client.get("/api/v1/verify/ech-lemma")
    assert response.status_code == 400
    assert "max_total_multiplicity" in response.json()["detail"]

    response = test_client.get("/api/v1/verify/classification", params={"samples": 5001})
    assert response.status_code == 400


def test_verify_small_ech_lemma(test_client: TestClient):
    response = test_client.get("/api/v1/verify/ech-lemma", params={"max_mult": 3, "max_genus": 0, "cover_theta_den": 4})

    assert response.status_code == 200
    results = response.json()["results"]
    assert results["checked"] > 0
    assert results["counterexamples"] == []


def test_openapi_lists_every_route(test_client: TestClient):
    paths = test_client.get("/api/v1/openapi.json").json()["paths"]

    for path in ("/api/v1/classify", "/api/v1/iterate", "/api/v1/partition", "/api/v1/index", "/api/v1/verify/{suite}"):
        assert path in paths


@pytest.mark.asyncio
async def test_iterate_async_client():
    """Test the app through an async client, as a deployed consumer would call it."""
    transport = ASGITransport(app=app)
    async with AsyncClient(transport=transport, base_url="http://test") as client:
        response = await client.get("/api/v1/iterate", params={"class": "pos-hyp-1", "mu1": "1/2", "k": "1..5"})

    assert response.status_code == 200
    assert {row["mu1"] for row in response.json()["results"]} == {"1/2"}
