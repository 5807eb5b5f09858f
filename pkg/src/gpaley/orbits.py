"""The index set X_k, the order-24 transformation group, and Burnside counts.

Maps on (Z_k)^5 are canonicalized by their full action table (k^5 entries,
held as numpy arrays so composition is fancy indexing), which makes closure
under composition and equality of maps unambiguous even when two affine
forms collide as functions for small k.  Orbit representatives are
lexicographic minima, keeping every table output deterministic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np


@lru_cache(maxsize=None)
def _domain_vectors(k: int) -> np.ndarray:
    """All of (Z_k)^5, row i = the digits of i written base k."""
    grid = np.indices((k,) * 5).reshape(5, -1).T
    return np.ascontiguousarray(grid.astype(np.int64))


def _encode_rows(rows: np.ndarray, k: int) -> np.ndarray:
    weights = np.array([k ** 4, k ** 3, k ** 2, k, 1], dtype=np.int64)
    return rows @ weights


def _encode(t, k: int) -> int:
    return ((((t[0] * k + t[1]) * k + t[2]) * k + t[3]) * k + t[4])


def _decode(i: int, k: int) -> tuple[int, ...]:
    out = []
    for _ in range(5):
        out.append(i % k)
        i //= k
    return tuple(reversed(out))


# column recipes for the seven generators; c[i] is the i-th input column
_GEN_COLUMNS = {
    "T1": lambda c: (c[1] - c[3], c[0] - c[3], c[2] - c[3], -c[3], c[4] - c[3]),
    "T2": lambda c: (c[0], c[0] - c[3], c[0] - c[4], c[0] - c[1], c[0] - c[2]),
    "T3": lambda c: (c[1] - c[3], c[1], c[1] - c[4], c[1] - c[0], c[1] - c[2]),
    "T4": lambda c: (c[0], c[1], c[4] - c[2], c[0] + c[1] - c[3], c[4]),
    "T5": lambda c: (c[0], c[3] - c[1], c[2], c[3], c[0] + c[2] - c[4]),
    "T6": lambda c: (c[3] - c[0], c[1], c[2], c[3], c[1] + c[2] - c[4]),
    "T7": lambda c: (c[3] - c[0], c[3] - c[1], c[2], c[3],
                     c[3] + c[4] - c[0] - c[1]),
}


@dataclass(frozen=True, eq=False)
class AffineMap:
    """A map on (Z_k)^5 canonicalized by its full action table."""
    k: int
    name: str
    table: np.ndarray = field(repr=False)

    def apply(self, t) -> tuple[int, ...]:
        return _decode(int(self.table[_encode(t, self.k)]), self.k)

    def compose(self, other: AffineMap) -> AffineMap:
        """self after other (standard composition order)."""
        assert self.k == other.k
        return AffineMap(self.k, f"{self.name}*{other.name}",
                         self.table[other.table])

    def key(self) -> bytes:
        return self.table.tobytes()

    def __eq__(self, other):
        return (isinstance(other, AffineMap) and self.k == other.k
                and np.array_equal(self.table, other.table))

    def __hash__(self):
        return hash((self.k, self.key()))


@lru_cache(maxsize=None)
def generators(k: int) -> dict:
    """T1..T7 as action tables."""
    cols = [_domain_vectors(k)[:, i] for i in range(5)]
    out = {}
    for name, recipe in _GEN_COLUMNS.items():
        new = np.stack([c % k for c in recipe(cols)], axis=1)
        out[name] = AffineMap(k, name, _encode_rows(new, k))
    return out


def identity_map(k: int) -> AffineMap:
    return AffineMap(k, "T0", np.arange(k ** 5, dtype=np.int64))


@lru_cache(maxsize=None)
def generate_group(k: int) -> tuple[AffineMap, ...]:
    """Closure of the generators under composition; the order is computed,
    never assumed (it does come out 24 for every k including 2)."""
    gens = list(generators(k).values())
    ident = identity_map(k)
    seen = {ident.key(): ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in gens:
            for h in frontier:
                c = g.compose(h)
                if c.key() not in seen:
                    seen[c.key()] = c
                    nxt.append(c)
        frontier = nxt
    return tuple(sorted(seen.values(), key=lambda m: m.key()))


@lru_cache(maxsize=None)
def named_composites(k: int) -> dict:
    """The 24 named elements of the group list: the identity, the seven
    generators, T_j*T_l for j in 1..3 and l in 4..7, plus T4*T1, T6*T2,
    T5*T3 and T1*T4*T1 (right factor applied first)."""
    g = generators(k)
    named = {"T0": identity_map(k)}
    named.update(g)
    for j in (1, 2, 3):
        for ell in (4, 5, 6, 7):
            named[f"T{j}*T{ell}"] = g[f"T{j}"].compose(g[f"T{ell}"])
    named["T4*T1"] = g["T4"].compose(g["T1"])
    named["T6*T2"] = g["T6"].compose(g["T2"])
    named["T5*T3"] = g["T5"].compose(g["T3"])
    named["T1*T4*T1"] = g["T1"].compose(g["T4"]).compose(g["T1"])
    return named


# ---------------------------------------------------------------------------
# the index set X_k and its orbit decomposition
# ---------------------------------------------------------------------------

def xk_closed_form(k: int) -> int:
    return (k - 1) * (k ** 4 - 9 * k ** 3 + 36 * k ** 2 - 69 * k + 51)


@lru_cache(maxsize=None)
def build_Xk(k: int) -> tuple[tuple[int, ...], ...]:
    """Index vectors with t1, t2, t3 distinct from 0, t4, t5 and
    t1+t2+t3 != t4+t5 (mod k), in lexicographic order."""
    out = []
    for t in itertools.product(range(k), repeat=5):
        if any(x in (0, t[3], t[4]) for x in t[:3]):
            continue
        if (t[0] + t[1] + t[2]) % k == (t[3] + t[4]) % k:
            continue
        out.append(t)
    assert len(out) == xk_closed_form(k)
    return tuple(out)


@lru_cache(maxsize=None)
def _xk_encoded(k: int) -> np.ndarray:
    return np.array([_encode(t, k) for t in build_Xk(k)], dtype=np.int64)


@dataclass(frozen=True)
class OrbitDecomposition:
    k: int
    group_order: int
    orbits: tuple[tuple[tuple[int, ...], ...], ...]   # each orbit sorted, rep first

    @property
    def n_orbits(self) -> int:
        return len(self.orbits)

    @property
    def representatives(self):
        return [orbit[0] for orbit in self.orbits]

    def rep_sizes(self):
        return [(orbit[0], len(orbit)) for orbit in self.orbits]


@lru_cache(maxsize=None)
def orbit_decompose(k: int) -> OrbitDecomposition:
    group = generate_group(k)
    enc = _xk_encoded(k)
    images = np.stack([g.table[enc] for g in group], axis=0)   # group x |X_k|
    in_x = np.zeros(k ** 5, dtype=bool)
    in_x[enc] = True
    assert in_x[images].all(), "group does not preserve X_k"
    seen = np.zeros(k ** 5, dtype=bool)
    orbits = []
    for i, code in enumerate(enc):
        if seen[code]:
            continue
        orbit_codes = sorted(set(images[:, i].tolist()))
        seen[orbit_codes] = True
        orbits.append(tuple(_decode(c, k) for c in orbit_codes))
    return OrbitDecomposition(k=k, group_order=len(group), orbits=tuple(orbits))


def fixed_point_count(m: AffineMap, k: int) -> int:
    enc = _xk_encoded(k)
    return int((m.table[enc] == enc).sum())


def burnside_Nk(k: int) -> int:
    """Closed-form orbit count with the six-way residue correction mod 12."""
    base = k ** 5 - 10 * k ** 4 + 54 * k ** 3 - 162 * k ** 2 + 245 * k - 128
    res = k % 12
    if res in (1, 5, 7, 11):
        corr = 0
    elif res in (3, 9):
        corr = 16 * k - 64
    elif res in (2, 10):
        corr = 45 * k - 84
    elif res in (4, 8):
        corr = 45 * k - 96
    elif res == 6:
        corr = 61 * k - 148
    else:  # res == 0
        corr = 61 * k - 160
    total = base + corr
    assert total % 24 == 0
    return total // 24


def fixed_point_closed_forms(k: int) -> dict[str, int]:
    """Predicted |X_T| for every named element, from the five closed-form
    families (split on parity, mod 4, and divisibility by 3)."""
    odd = k % 2 == 1
    fam1 = k ** 3 - 5 * k ** 2 + 9 * k - 5 if odd else k ** 3 - 5 * k ** 2 + 10 * k - 7
    fam2 = (k - 1) * (k - 3) ** 2 + (0 if odd else 6 * (k - 2))
    if odd:
        fam3 = 0
    elif k % 4 == 2:
        fam3 = k - 1
    else:
        fam3 = k - 3
    fam4 = 3 * (k - 3) if k % 3 == 0 else k - 1
    forms = {"T0": xk_closed_form(k)}
    for name in ("T1", "T7", "T1*T7"):
        forms[name] = fam1
    for name in ("T2", "T3", "T4", "T5", "T6", "T1*T4*T1"):
        forms[name] = fam2
    for name in ("T1*T4", "T1*T5", "T1*T6", "T2*T7", "T3*T7", "T4*T1"):
        forms[name] = fam3
    for name in ("T2*T4", "T2*T5", "T2*T6", "T3*T4", "T3*T5", "T3*T6",
                 "T6*T2", "T5*T3"):
        forms[name] = fam4
    return forms


def tables_json(k: int) -> dict:
    dec = orbit_decompose(k)
    return {
        "k": k,
        "Xk_size": len(build_Xk(k)),
        "group_order": dec.group_order,
        "N_k": dec.n_orbits,
        "N_k_closed_form": burnside_Nk(k),
        "orbit_reps_with_sizes": [
            {"rep": list(rep), "size": size} for rep, size in dec.rep_sizes()
        ],
    }
