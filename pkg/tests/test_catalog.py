"""Catalog text format, constructors and the domain cap."""

import pytest

from qdist import boolfn as bf
from qdist.catalog import Catalog, content_hash, default_catalog
from qdist.errors import ArityOverflow, UnknownFunction


def test_default_entries():
    cat = default_catalog()
    assert cat.get("OR4") == bf.OR(4)
    assert cat.get("UOR4") == bf.promise_or(4)
    assert cat.get("SABAND2") == bf.sabotage(bf.AND(2))
    assert cat.get("AND2oAND2") == bf.compose_full(bf.AND(2), bf.AND(2))


def test_unknown_function():
    with pytest.raises(UnknownFunction):
        default_catalog().get("NOPE")


def test_table_line():
    cat = Catalog()
    e = cat.add_line("MYF 2 2 table 00:0 01:1 10:1  # partial XOR")
    assert e.function.domain == ((0, 0), (0, 1), (1, 0))
    assert cat.get("MYF")("01") == 1


def test_sabotage_letters_in_table():
    cat = Catalog()
    cat.add_line("S 2 4 table 1*:0 1†:1")
    assert cat.get("S").table == {(1, 2): 0, (1, 3): 1}


def test_header_mismatch():
    with pytest.raises(ValueError):
        Catalog().add_line("X 3 2 builtin OR 2")


def test_round_trip():
    cat = default_catalog()
    cat.compose("IND 1 ID1")
    cat.add("T", bf.sabotage(bf.OR(2)))
    back = Catalog.loads(cat.dumps())
    assert back.names() == cat.names()
    for name in cat.names():
        assert content_hash(back.get(name)) == content_hash(cat.get(name))


def test_compose_names_and_sizes():
    cat = default_catalog()
    e = cat.compose("IND 1 ID1")
    assert e.name == "IND1oID1" and e.function.n == 3
    e = cat.compose("SAB AND2")
    assert (e.function.n, e.function.q, len(e.function)) == (2, 4, 6)
    e = cat.compose("UIND 1 ID1")
    assert e.function.n == 5
    e = cat.compose("COMP OR2 AND2")
    assert e.name == "OR2oAND2" and e.function.n == 4


def test_cap_checked_before_enumeration():
    with pytest.raises(ArityOverflow):
        default_catalog().compose("IND 5 OR4")


def test_small_cap():
    with pytest.raises(ArityOverflow):
        default_catalog(cap=8).compose("SAB AND2")


def test_hash_covers_values_and_alphabet():
    f = bf.OR(2)
    assert content_hash(f) != content_hash(bf.negate(f))
    assert content_hash(f) != content_hash(bf.PartialFunction(2, 3, f.table))
    assert content_hash(f) == content_hash(bf.PartialFunction(2, 2, dict(f.table), name="other"))
