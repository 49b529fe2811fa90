import pytest

from handlehom.catalog import catalog, get, names
from handlehom.core import Ring, build_complex, euler_characteristic, validate
from handlehom.homology import AbelianGroup, Orientability, classify_orientability, homology

from oracles import cellular_homology

ENTRIES = catalog()


def test_required_entries_present():
    required = {"S1", "S2", "S3", "S4", "S5", "T2", "Sigma2", "Sigma3", "RP2", "Klein", "RP3", "L(3,1)", "L(5,1)"}
    assert required <= set(names())


def test_unknown_name():
    with pytest.raises(KeyError):
        get("RP7")


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_entry_reproduces_expected(entry):
    d = entry.decomposition
    assert validate(d).ok
    cz = build_complex(d)
    assert homology(cz) == entry.expected
    assert homology(build_complex(d, ring=Ring.MOD2)) == entry.expected_mod2
    assert entry.expected.euler_characteristic == euler_characteristic(d)
    oracle = cellular_homology(cz.ranks, [b.to_lists() for b in cz.boundaries])
    assert [(g.free_rank, g.torsion) for g in entry.expected.groups] == oracle


@pytest.mark.parametrize("entry", ENTRIES, ids=lambda e: e.name)
def test_classifier_matches_flag(entry):
    want = Orientability.ORIENTABLE if entry.orientable else Orientability.NON_ORIENTABLE
    assert classify_orientability(entry.decomposition).verdict is want


def test_named_profiles():
    Z, O = AbelianGroup(1), AbelianGroup()
    assert get("RP2").expected.groups == (Z, AbelianGroup(0, (2,)), O)
    assert not get("RP2").orientable
    assert get("S3").expected.groups == (Z, O, O, Z)
    assert get("L(5,1)").expected.groups == (Z, AbelianGroup(0, (5,)), O, Z)
    assert get("Sigma3").expected.groups[1] == AbelianGroup(6)
    assert get("Klein").expected.groups[1] == AbelianGroup(1, (2,))
    assert get("Klein").expected_mod2.betti == (1, 2, 1)
    assert get("RP3").expected_mod2.betti == (1, 1, 1, 1)
    assert get("L(3,1)").expected_mod2.betti == (1, 0, 0, 1)


def test_catalog_is_fresh_each_call():
    assert catalog() == catalog()
    assert catalog() is not catalog()
