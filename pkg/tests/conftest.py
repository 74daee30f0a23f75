"""Session-scoped fixtures; the relation builds are the expensive parts."""

import pytest

from superjordan.formats import parse_catalog, parse_certificates, parse_witnesses
from superjordan.report import build_report
from superjordan.variety import relation_build

from util import data_text


@pytest.fixture(scope="session")
def catalog13():
    return parse_catalog(data_text("catalog13.jsv"))


@pytest.fixture(scope="session")
def catalog31():
    return parse_catalog(data_text("catalog31.jsv"))


@pytest.fixture(scope="session")
def witnesses13():
    return parse_witnesses(data_text("witnesses13.jsw"))


@pytest.fixture(scope="session")
def witnesses31():
    return parse_witnesses(data_text("witnesses31.jsw"))


@pytest.fixture(scope="session")
def certs13():
    return parse_certificates(data_text("certs13.jsc"))


@pytest.fixture(scope="session")
def certs31():
    return parse_certificates(data_text("certs31.jsc"))


@pytest.fixture(scope="session")
def build13(catalog13, witnesses13, certs13):
    return relation_build(catalog13, witnesses13, certs13)


@pytest.fixture(scope="session")
def build31(catalog31, witnesses31, certs31):
    return relation_build(catalog31, witnesses31, certs31)


@pytest.fixture(scope="session")
def relation13(build13):
    return build13.relation


@pytest.fixture(scope="session")
def relation31(build31):
    return build31.relation


@pytest.fixture(scope="session")
def report13(catalog13, witnesses13, certs13):
    return build_report(catalog13, witnesses13, certs13)


@pytest.fixture(scope="session")
def report31(catalog31, witnesses31, certs31):
    return build_report(catalog31, witnesses31, certs31)
