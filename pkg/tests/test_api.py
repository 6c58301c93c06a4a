from fastapi.testclient import TestClient

from zmtool.main import app

client = TestClient(app)


def test_healthcheck():
    response = client.get("/healthcheck")
    assert response.status_code == 200
    assert response.json() == {"status": "ok"}


def test_group_info():
    response = client.get("/groups/3/4/2")
    assert response.status_code == 200
    body = response.json()
    assert body["status"] == "success"
    assert body["data"]["k"] == 6
    assert body["data"]["k_prime"] == 5
    assert body["data"]["classes"] is None


def test_group_classes():
    response = client.get("/groups/3/4/2/classes")
    assert response.status_code == 200
    data = response.json()["data"]
    assert [c["class_size"] for c in data] == [1, 1, 2, 2, 3, 3]


def test_group_subgroups():
    data = client.get("/groups/3/4/2/subgroups").json()["data"]
    assert len(data) == 8
    assert data[2] == {"m1": 1, "n1": 4, "s": 0, "order": 3, "normal": True, "cyclic": True}


def test_group_verify():
    body = client.get("/groups/3/4/2/verify").json()
    assert body["status"] == "success"
    assert body["data"]["passed"] is True


def test_table():
    data = client.get("/table", params={"m_max": 3, "n_max": 4}).json()["data"]
    assert [(row["m"], row["n"], row["r"]) for row in data][-1] == (3, 4, 2)
    assert len(data) == 6


def test_invalid_triple():
    response = client.get("/groups/4/2/3")
    assert response.status_code == 422
    body = response.json()
    assert body["status"] == "error"
    assert "gcd(m,n)" in body["message"]


def test_budget_exceeded():
    response = client.get("/groups/3/4/2/verify", params={"budget": 5})
    assert response.status_code == 413
    assert response.json()["status"] == "error"


def test_classes_above_element_budget(zm_env):
    zm_env("ZMTOOL_ELEMENT_BUDGET", 10)
    response = client.get("/groups/3/4/2/classes")
    assert response.status_code == 413
    body = response.json()
    assert body["status"] == "error"
    assert "element budget" in body["message"]


def test_table_above_element_budget(zm_env):
    zm_env("ZMTOOL_ELEMENT_BUDGET", 10)
    response = client.get("/table", params={"m_max": 3, "n_max": 4})
    assert response.status_code == 413
    assert response.json()["status"] == "error"
