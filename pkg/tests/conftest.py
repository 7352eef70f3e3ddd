from pathlib import Path

import pytest

from fincat import serialize

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"


def load_category(name, **kw):
    return serialize.category_from_json(serialize.load_json(FIXTURES / f"{name}.json"), **kw)


def load_functor(name, **kw):
    return serialize.functor_from_json(serialize.load_json(FIXTURES / f"{name}.json"), **kw)


def load_transformation_parts(name, **kw):
    return serialize.transformation_parts(serialize.load_json(FIXTURES / f"{name}.json"), **kw)


@pytest.fixture
def fixtures_dir():
    return FIXTURES
