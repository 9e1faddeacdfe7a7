import numpy as np
import pytest

from ascheme.catalog import catalog_ids, catalog_scheme
from ascheme.spectra import character_table


@pytest.fixture(scope="session")
def catalog():
    """All bundled schemes, built once."""
    return {eid: catalog_scheme(eid) for eid in catalog_ids()}


@pytest.fixture(scope="session")
def tables(catalog):
    """Character tables for every commutative catalog scheme."""
    return {eid: character_table(s) for eid, s in catalog.items() if s.is_commutative}


def brute_intersection_numbers(e, d):
    """Reference triple loop, independent of the production kernels."""
    n = e.shape[0]
    p = np.zeros((d + 1, d + 1, d + 1), dtype=np.int64)
    cnt = {}
    for x in range(n):
        for y in range(n):
            l = int(e[x, y])
            c = np.zeros((d + 1, d + 1), dtype=np.int64)
            for z in range(n):
                c[int(e[x, z]), int(e[z, y])] += 1
            if l in cnt:
                assert (cnt[l] == c).all()
            else:
                cnt[l] = c
    for l, c in cnt.items():
        p[:, :, l] = c
    return p
