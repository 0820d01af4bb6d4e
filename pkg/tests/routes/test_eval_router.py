"""
Тесты HTTP-маршрутов вычисления и таблицы соотношений
"""
import sys
import os

import pytest
from fastapi.testclient import TestClient

# Добавляем путь к src в PYTHONPATH
sys.path.insert(0, os.path.join(os.path.dirname(__file__), '..', '..', 'src'))

from main import app


@pytest.fixture
def client():
    return TestClient(app)


class TestEvalRoute:
    """POST /api/eval"""

    def test_worked_example(self, client):
        response = client.post("/api/eval", json={
            "rep": "skein", "kappa": 2, "word": "s1*y1", "element": "(a1^2*a2^-1,[2 1])",
        })
        assert response.status_code == 200
        body = response.json()
        assert body["result"] == "c^4*(a1^-1*a2^2,[1 2])"
        assert body["terms"] == 1

    def test_polynomial_with_substitution(self, client):
        response = client.post("/api/eval", json={
            "rep": "poly", "kappa": 2, "word": "s1", "element": "d*X1", "d_eq_s": True,
        })
        assert response.status_code == 200
        assert response.json()["result"] == "X2"

    def test_parse_error_is_bad_request(self, client):
        response = client.post("/api/eval", json={"rep": "poly", "kappa": 2, "word": "s1 *", "element": "X1"})
        assert response.status_code == 400
        assert "position" in response.json()["detail"]

    def test_index_error_is_bad_request(self, client):
        response = client.post("/api/eval", json={"rep": "poly", "kappa": 2, "word": "x3", "element": "X1"})
        assert response.status_code == 400

    def test_validation(self, client):
        response = client.post("/api/eval", json={"rep": "matrix", "kappa": 2, "element": "X1"})
        assert response.status_code == 422
        response = client.post("/api/eval", json={"rep": "poly", "kappa": 0, "element": "X1"})
        assert response.status_code == 422

    def test_unexpected_error(self, client, mocker):
        mocker.patch("routes.eval_router.representation", side_effect=RuntimeError("boom"))
        response = client.post("/api/eval", json={"rep": "poly", "kappa": 2, "element": "X1"})
        assert response.status_code == 500


class TestRelationsRoute:
    """GET /api/relations/{kappa}"""

    def test_rank_two(self, client):
        response = client.get("/api/relations/2")
        assert response.status_code == 200
        relations = response.json()["relations"]
        assert [r["label"] for r in relations] == [5, 6, 7, 8, 9]
        assert relations[-1] == {"label": 9, "lhs": "x1^-1 * y1 * x1 * y1^-1", "rhs": "c^2*s1^2"}

    def test_invalid_kappa(self, client):
        assert client.get("/api/relations/0").status_code == 400


class TestCors:
    """CORS для браузерных клиентов"""

    def test_simple_request(self, client):
        response = client.get("/api/relations/2", headers={"Origin": "http://localhost:5173"})
        assert response.status_code == 200
        assert response.headers["access-control-allow-origin"] == "*"

    def test_preflight_for_post(self, client):
        response = client.options("/api/eval", headers={
            "Origin": "http://localhost:5173",
            "Access-Control-Request-Method": "POST",
            "Access-Control-Request-Headers": "Content-Type",
        })
        assert response.status_code == 200
        assert "POST" in response.headers["access-control-allow-methods"]

    def test_preflight_rejects_other_methods(self, client):
        response = client.options("/api/eval", headers={
            "Origin": "http://localhost:5173",
            "Access-Control-Request-Method": "DELETE",
        })
        assert response.status_code == 400
