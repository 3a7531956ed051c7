import json
import os
import pathlib

import pytest
from jsonschema import Draft202012Validator

SOURCE_DIR = pathlib.Path(os.environ.get("QLAX_SOURCE_DIR", pathlib.Path(__file__).resolve().parents[2]))


@pytest.fixture(scope="session")
def source_dir():
    return SOURCE_DIR


@pytest.fixture(scope="session")
def problems():
    return SOURCE_DIR / "problems"


@pytest.fixture(scope="session")
def validate():
    cache = {}

    def check(doc, name):
        if name not in cache:
            schema = json.loads((SOURCE_DIR / "schemas" / f"{name}.schema.json").read_text())
            Draft202012Validator.check_schema(schema)
            cache[name] = Draft202012Validator(schema)
        cache[name].validate(doc)

    return check
