"""Published comparison values for the Cornell spectrum (dimensionless units).

Keys are ``(k, l, n)``.  ``e_vfm`` are literature energies from a
different variational method; they are carried only for side-by-side
reports and nothing in this package recomputes them.
"""

from types import MappingProxyType

_COLUMNS = ("e_num", "e_vfm", "e1", "e2", "d", "v2_num", "v2")


def _rows(raw):
    return MappingProxyType({key: MappingProxyType(dict(zip(_COLUMNS, vals))) for key, vals in raw.items()})


# linear potential, k = 0
TABLE_1 = _rows({
    (0.0, 0, 0): (2.3381, None, 2.3383, 2.3387, 2.9465e-4, 0.7794, 0.7794),
    (0.0, 0, 1): (4.0879, None, 4.0881, 4.0890, 4.4511e-4, 1.3626, 1.3627),
    (0.0, 1, 0): (3.3613, None, 3.3614, 3.3615, 5.5573e-5, 0.4921, 0.4923),
    (0.0, 1, 1): (4.8845, None, 4.8846, 4.8849, 1.5180e-4, 1.1151, 1.1057),
    (0.0, 2, 0): (4.2482, None, 4.2483, 4.2483, 1.8679e-5, 0.4089, 0.4090),
    (0.0, 2, 1): (5.6297, None, 5.6298, 5.6300, 6.9838e-5, 1.0097, 0.9997),
})

# Coulomb plus linear
TABLE_2 = _rows({
    (0.2, 0, 0): (2.1673, 2.1409, 2.1673, 2.1676, 2.4358e-4, 0.8389, 0.8389),
    (0.2, 0, 1): (3.9702, 3.9643, 3.9704, 3.9708, 1.6310e-4, 1.4028, 1.4032),
    (0.2, 1, 0): (3.2582, 3.1565, 3.2580, 3.2580, 2.7539e-5, 0.5028, 0.5031),
    (0.2, 1, 1): (4.8019, 4.7414, 4.8019, 4.8021, 9.5487e-5, 1.1284, 1.1212),
    (0.2, 2, 0): (4.1703, 4.0037, 4.1703, 4.1703, 1.3279e-5, 0.4136, 0.4137),
    (0.2, 2, 1): (5.5634, 5.4491, 5.5634, 5.5636, 5.4213e-5, 1.0172, 1.0086),
    (1.0, 0, 0): (1.3979, 1.3460, 1.4009, 1.4173, 2.3504e-2, 1.1716, 1.1801),
    (1.0, 0, 1): (3.4751, 3.4765, 3.4742, 3.4841, 5.7230e-3, 1.5870, 1.5809),
    (1.0, 1, 0): (2.8255, 2.7185, 2.8257, 2.8258, 5.5640e-5, 0.5524, 0.5520),
    (1.0, 1, 1): (4.4619, 4.3940, 4.4619, 4.4620, 2.7702e-5, 1.1864, 1.1868),
    (1.0, 2, 0): (3.8506, 3.6835, 3.8506, 3.8506, 1.5440e-6, 0.4340, 0.4341),
    (1.0, 2, 1): (5.2930, 5.1730, 5.2930, 5.2930, 1.1421e-5, 1.0492, 1.0456),
})

TABLES = MappingProxyType({1: TABLE_1, 2: TABLE_2})

# k = 1, l = 1, n = 1 under the two selection criteria
CRITERION_COMPARISON = MappingProxyType({
    "discrepancy": MappingProxyType({"a": 0.5439, "b": 1.6769, "e1": 4.4619, "e2": 4.4620, "v2": 1.1868}),
    "energy": MappingProxyType({"a": 1.3352, "b": 0.9999, "e1": 4.4583, "e2": 5.0658, "v2": 0.9905}),
})
COMPARISON_STATE = (1.0, 1, 1)
COMPARISON_REFERENCE = MappingProxyType({"e_num": 4.4619, "v2_num": 1.1864})


def lookup(k, l, n):
    """Published row for ``(k, l, n)`` or ``None``."""
    key = (float(k), int(l), int(n))
    for table in TABLES.values():
        if key in table:
            return table[key]
    return None
