"""Drive the identification HTTP API in-process.

The same app can be served standalone with `knotmosaics serve`; here we
mount it on a test client so the demo has no network dependencies.
"""

import json

from fastapi.testclient import TestClient

from knotmosaics.catalog import default_catalog_path
from knotmosaics.service import create_app

app = create_app(catalog_path=default_catalog_path())
client = TestClient(app)

trefoil = {
    "n": 4,
    "cells": [[0, 2, 1, 0], [2, 10, 9, 1], [3, 9, 8, 4], [0, 3, 4, 0]],
}
print("POST /api/identify (trefoil):")
print(json.dumps(client.post("/api/identify", json=trefoil).json(), indent=2))

print("\nPOST /api/identify (two-component link):")
link = {"cells": [[2, 1, 0, 0], [3, 4, 0, 0], [0, 0, 2, 1], [0, 0, 3, 4]]}
print(json.dumps(client.post("/api/identify", json=link).json(), indent=2))

print("\nGET /api/tiles (first three tiles):")
print(json.dumps(client.get("/api/tiles").json()[:3], indent=2))
