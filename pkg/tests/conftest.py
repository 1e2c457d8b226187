import pathlib

import pytest

from curvkit import CurvatureBundle, parse_metric_file
from curvkit.parsing import parse_expression

CATALOG = pathlib.Path(__file__).resolve().parent.parent / "catalog"


def load_bundle(name: str) -> CurvatureBundle:
    text = (CATALOG / f"{name}.metric").read_text()
    return CurvatureBundle(parse_metric_file(text))


@pytest.fixture(scope="session")
def vaidya():
    return load_bundle("vaidya")


@pytest.fixture(scope="session")
def schwarzschild():
    return load_bundle("schwarzschild")


@pytest.fixture(scope="session")
def ludwig_edgar():
    return load_bundle("ludwig-edgar")


@pytest.fixture(scope="session")
def minkowski():
    return load_bundle("minkowski")


@pytest.fixture(scope="session")
def sphere2():
    return load_bundle("sphere2")


def expr(text: str, bundle: CurvatureBundle):
    """Parse an expression string in the bundle's chart."""
    return parse_expression(text, bundle.chart)


def expect_components(bundle, tensor, table: dict):
    """Assert the tensor's canonical nonzero set matches the table exactly."""
    got = {("".join(str(i + 1) for i in idx)): v
           for idx, v in tensor.iter_nonzero()}
    assert sorted(got) == sorted(table), (
        f"nonzero component sets differ: extra {sorted(set(got) - set(table))},"
        f" missing {sorted(set(table) - set(got))}")
    for key, text in table.items():
        want = expr(text, bundle)
        assert got[key] == want, (
            f"component {key}: got {got[key]}, want {want}")
