from pathlib import Path

import pytest

from arrowquiver.arrowweight import WeightTensor
from arrowquiver.biquandle import load as load_biquandle
from arrowquiver.knotdata import bundled_path, bundled_table

TESTS = Path(__file__).parent


def _load_endos(name: str) -> list[tuple[int, ...]]:
    out = []
    for line in Path(bundled_path(name)).read_text(encoding="utf-8").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            out.append(tuple(int(tok) for tok in line.split()))
    return out


@pytest.fixture(scope="session")
def flip2():
    return load_biquandle(bundled_path("biquandle_flip2.txt"))


@pytest.fixture(scope="session")
def cyc3():
    return load_biquandle(bundled_path("biquandle_cyc3.txt"))


@pytest.fixture(scope="session")
def quad4():
    return load_biquandle(bundled_path("biquandle_quad4.txt"))


@pytest.fixture(scope="session")
def shift4():
    return load_biquandle(bundled_path("biquandle_shift4.txt"))


@pytest.fixture(scope="session")
def w16():
    return WeightTensor.load(bundled_path("weight_flip2_z16.txt"))


@pytest.fixture(scope="session")
def w8():
    return WeightTensor.load(bundled_path("weight_cyc3_z8.txt"))


@pytest.fixture(scope="session")
def w3():
    return WeightTensor.load(bundled_path("weight_cyc3_z3.txt"))


@pytest.fixture(scope="session")
def w6():
    return WeightTensor.load(bundled_path("weight_quad4_z6.txt"))


@pytest.fixture(scope="session")
def w4():
    return WeightTensor.load(bundled_path("weight_shift4_z4.txt"))


@pytest.fixture(scope="session")
def endos_cyc3():
    return _load_endos("endos_cyc3.txt")


@pytest.fixture(scope="session")
def endos_quad4():
    return _load_endos("endos_quad4.txt")


@pytest.fixture(scope="session")
def endos_shift4():
    return _load_endos("endos_shift4.txt")


@pytest.fixture(scope="session")
def table():
    return bundled_table()


def read_rows(name: str) -> dict[str, str]:
    rows = {}
    for line in (TESTS / "data" / name).read_text(encoding="utf-8").splitlines():
        knot, render = line.split("\t")
        rows[knot] = render
    return rows
