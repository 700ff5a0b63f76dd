import os
import pathlib

import pytest

CORPUS = pathlib.Path(os.environ.get("TWISTLINK_CORPUS", pathlib.Path(__file__).resolve().parents[2] / "corpus"))


@pytest.fixture
def corpus():
    return CORPUS
