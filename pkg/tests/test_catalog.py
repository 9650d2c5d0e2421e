import pytest

from elliptri import catalog
from elliptri.analysis import classify
from elliptri.core import ClosedTriangulation, Patch
from elliptri.errors import UnknownEntry

import oracle


def test_lookup_by_signature_and_id():
    e = catalog.get("(1,1,1,2)_4")
    assert e.id == "2.2/(1,1,1,2)_4"
    assert catalog.get(e.id) is e
    assert catalog.find("(9,9,9,9)") is None
    with pytest.raises(UnknownEntry):
        catalog.get("nope")


def test_filters():
    assert all(e.type == (2, 3, 0) for e in catalog.all_entries(type=(2, 3, 0)))
    assert all(e.b == 6 for e in catalog.all_entries(b=6))
    patches = catalog.all_entries(kind="patch")
    closed = catalog.all_entries(kind="closed")
    assert patches and closed and all(e.is_patch for e in patches)


def test_quarantine_is_opt_in():
    ids = {e.id for e in catalog.all_entries()}
    all_ids = {e.id for e in catalog.all_entries(include_quarantined=True)}
    assert all_ids - ids == {"3.7/(0,6,0,4)"}


@pytest.mark.parametrize("entry", catalog.all_entries(), ids=lambda e: e.id)
def test_entry_matches_oracle(entry):
    obj = entry.build()
    if isinstance(obj, ClosedTriangulation):
        assert oracle.sphere_signature(obj.triangles) == entry.signature
    else:
        assert isinstance(obj, Patch)
        a3, a4, a5, a6, b = oracle.patch_signature(obj.triangles)
        assert ((a3, a4, a5, a6), b) == (entry.signature, entry.b)
    assert classify(obj).tuple == entry.signature
