"""Cyclic codes of length n over GF(q): construction, matrices, dual, hull,
LCD status and exact minimum distance."""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass
from functools import reduce
from math import gcd
from operator import mul

import numpy as np

from .cosets import coset_map, leader_of, negate_set
from .factor import factor_xn_minus_1
from .gf import PrimeField
from .linalg import row_space_intersection_dim
from .poly import Polynomial

DEFAULT_BUDGET = 2**24


class BudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class DefiningSet:
    """A union of q-cyclotomic cosets mod n, stored by leaders."""

    n: int
    q: int
    leaders: tuple
    residues: tuple

    @classmethod
    def from_leaders(cls, leaders, n: int, q: int) -> "DefiningSet":
        cmap = coset_map(n, q)
        leaders = sorted(set(int(a) for a in leaders))
        res = []
        for a in leaders:
            if a not in cmap:
                raise ValueError(f"{a} is not a {q}-cyclotomic coset leader mod {n}")
            res.extend(cmap[a].elements)
        return cls(n, q, tuple(leaders), tuple(sorted(res)))

    @classmethod
    def from_residues(cls, residues, n: int, q: int) -> "DefiningSet":
        """Accepts any residue set that is a union of cosets."""
        residues = {int(x) % n for x in residues}
        lead = leader_of(n, q)
        ds = cls.from_leaders({lead[x] for x in residues}, n, q)
        if set(ds.residues) != residues:
            raise ValueError("residue set is not closed under multiplication by q")
        return ds

    def __len__(self):
        return len(self.residues)

    def __iter__(self):
        return iter(self.residues)

    def negate(self) -> "DefiningSet":
        return DefiningSet.from_residues(negate_set(self.residues, self.n), self.n, self.q)

    def complement(self) -> "DefiningSet":
        return DefiningSet.from_residues(set(range(self.n)) - set(self.residues), self.n, self.q)

    def union(self, other: "DefiningSet") -> "DefiningSet":
        return DefiningSet.from_leaders(set(self.leaders) | set(other.leaders), self.n, self.q)


@dataclass(frozen=True)
class CyclicCode:
    n: int
    q: int
    defining_set: DefiningSet
    generator: Polynomial

    @property
    def field(self) -> PrimeField:
        return self.generator.field

    @property
    def dimension(self) -> int:
        return self.n - len(self.defining_set)

    k = dimension

    @property
    def check_polynomial(self) -> Polynomial:
        h, r = Polynomial.x_n_minus_1(self.field, self.n).divrem(self.generator)
        if not r.is_zero():
            raise AssertionError("generator does not divide x^n - 1")
        return h

    def generator_matrix(self) -> np.ndarray:
        """k x n matrix whose row i holds the coefficients of x^i g(x)."""
        k, n = self.dimension, self.n
        G = np.zeros((k, n), dtype=np.int64)
        g = self.generator.coeffs
        for i in range(k):
            G[i, i:i + len(g)] = g
        return G

    def parity_check_matrix(self) -> np.ndarray:
        """(n-k) x n matrix built from shifts of the reciprocal of h(x)."""
        k, n = self.dimension, self.n
        if not 0 < k < n:
            raise ValueError(f"parity-check matrix needs 0 < k < n, got k = {k}")
        hr = self.check_polynomial.reciprocal().coeffs
        H = np.zeros((n - k, n), dtype=np.int64)
        for i in range(n - k):
            H[i, i:i + len(hr)] = hr
        return H

    def contains(self, word) -> bool:
        """Membership test: remainder of the word polynomial mod g is zero."""
        return (Polynomial(self.field, [int(c) for c in word]) % self.generator).is_zero()

    def dual(self) -> "CyclicCode":
        S_dual = DefiningSet.from_residues(
            set(range(self.n)) - set(negate_set(self.defining_set.residues, self.n)), self.n, self.q
        )
        code = from_defining_set(S_dual.leaders, self.n, self.q)
        if self.dimension > 0:
            expected = self.check_polynomial.reciprocal()
            if expected != code.generator:
                raise AssertionError("dual generator differs from the reciprocal of h(x)")
        return code

    @property
    def hull_dimension(self) -> int:
        return hull_dimension(self.defining_set.residues, self.n)

    def is_lcd(self) -> bool:
        return self.hull_dimension == 0

    def min_distance(self, method: str = "auto", budget: int = DEFAULT_BUDGET):
        if method == "bruteforce":
            return min_distance_bruteforce(self, budget)
        if method == "support":
            return min_distance_support(self)
        if method != "auto":
            raise ValueError(f"unknown distance method {method!r}")
        k = self.dimension
        if k == 0 or k == self.n:
            return min_distance_bruteforce(self, budget)
        if self.q**k <= min(budget, 2**16):
            return min_distance_bruteforce(self, budget)
        return min_distance_support(self)

    def parameters(self, d=None) -> str:
        return f"[{self.n},{self.dimension},{'?' if d is None else d}]"

    def to_record(self, min_distance=None) -> dict:
        return {
            "n": self.n,
            "q": self.q,
            "generator": self.generator.to_json(),
            "defining_set_leaders": list(self.defining_set.leaders),
            "dimension": self.dimension,
            "min_distance": min_distance,
            "hull_dim": self.hull_dimension,
            "lcd": self.is_lcd(),
        }


def from_defining_set(leaders, n: int, q: int) -> CyclicCode:
    S = DefiningSet.from_leaders(leaders, n, q)
    fac = factor_xn_minus_1(n, q)
    g = reduce(mul, (fac.factors[a] for a in S.leaders), Polynomial.one(PrimeField(q)))
    return CyclicCode(n, q, S, g)


def from_generator(g: Polynomial, n: int, q: int) -> CyclicCode:
    if not g.is_monic():
        raise ValueError("generator must be monic")
    F = PrimeField(q)
    if g.field != F:
        raise ValueError(f"generator lives over {g.field}, expected {F}")
    if not g.divides(Polynomial.x_n_minus_1(F, n)):
        raise ValueError("not a cyclic-code generator: g does not divide x^n - 1")
    fac = factor_xn_minus_1(n, q)
    leaders = [a for a, m in fac.factors.items() if m.divides(g)]
    code = from_defining_set(leaders, n, q)
    if code.generator != g:
        raise AssertionError("recovered defining set does not reproduce g")
    return code


def generator_matrix(code: CyclicCode) -> np.ndarray:
    return code.generator_matrix()


def parity_check_matrix(code: CyclicCode) -> np.ndarray:
    return code.parity_check_matrix()


def dual_code(code: CyclicCode) -> CyclicCode:
    return code.dual()


def hull_defining_set(S: DefiningSet) -> DefiningSet:
    """``S ∪ (Z_n \\ -S)``, the defining set of C ∩ C^⊥."""
    n = S.n
    res = set(S.residues) | (set(range(n)) - set(negate_set(S.residues, n)))
    return DefiningSet.from_residues(res, n, S.q)


def hull_dimension(S, n: int) -> int:
    """``|S \\ -S|`` for a residue-form defining set S."""
    S = set(S)
    return len(S - negate_set(S, n))


def hull_dimension_matrix_oracle(code: CyclicCode) -> int:
    """dim(C ∩ C^⊥) from row-space ranks of the two generator matrices."""
    return row_space_intersection_dim(code.generator_matrix(), code.dual().generator_matrix(), code.q)


def is_lcd(code: CyclicCode) -> bool:
    return code.is_lcd()


def one_dimensional_hull_point(S: DefiningSet):
    """If ``S \\ -S`` is a single residue of the form ``i*n/g`` (g = gcd(n, q-1)),
    return ``i``; otherwise ``None``."""
    diff = set(S.residues) - negate_set(S.residues, S.n)
    if len(diff) != 1:
        return None
    (x,) = diff
    step = S.n // gcd(S.n, S.q - 1)
    return x // step if x % step == 0 else None


# --- minimum distance -----------------------------------------------------

def min_distance_bruteforce(code: CyclicCode, cap: int = DEFAULT_BUDGET, chunk: int = 1 << 15):
    """Minimum weight over all nonzero codewords m(x) g(x); ``None`` for the zero code."""
    k, n, q = code.dimension, code.n, code.q
    if k == 0:
        return None
    if k == n:
        return 1
    total = q**k
    if total > cap:
        raise BudgetExceeded(
            f"q^k = {q}^{k} codewords exceed the budget {cap}; use min_distance_support"
        )
    G = code.generator_matrix()
    powers = q ** np.arange(k, dtype=np.int64)
    best = n
    for start in range(1, total, chunk):
        idx = np.arange(start, min(total, start + chunk), dtype=np.int64)
        msgs = (idx[:, None] // powers) % q
        words = msgs @ G % q
        w = int(np.count_nonzero(words, axis=1).min())
        if w < best:
            best = w
    return best


def _eliminate(R: np.ndarray, j: int, p: int) -> np.ndarray:
    """Project the column space of R away from column j and drop the pivot row."""
    nz = np.flatnonzero(R[:, j])
    if nz.size == 0:
        raise AssertionError("pivot column already dependent")
    r = nz[0]
    col = R[:, j] * pow(int(R[r, j]), -1, p) % p
    out = (R - np.outer(col, R[r])) % p
    return np.delete(out, r, axis=0)


def _has_parallel_pair(R: np.ndarray, chosen, p: int) -> bool:
    """True if two unchosen columns of R are nonzero multiples of each other
    (or an unchosen column vanishes)."""
    seen = set()
    n = R.shape[1]
    for j in range(n):
        if j in chosen:
            continue
        col = R[:, j]
        nz = np.flatnonzero(col)
        if nz.size == 0:
            return True
        key = (col * pow(int(col[nz[0]]), -1, p) % p).tobytes()
        if key in seen:
            return True
        seen.add(key)
    return False


def _dependent_set_exists(R, chosen, remaining, p, n) -> bool:
    if remaining == 0:
        return _has_parallel_pair(R, chosen, p)
    # cyclic shifts let every minimum-weight support contain position 0
    candidates = range(chosen[-1] + 1, n) if chosen else (0,)
    for j in candidates:
        if n - j < remaining + 2:
            break
        if _dependent_set_exists(_eliminate(R, j, p), chosen + (j,), remaining - 1, p, n):
            return True
    return False


def min_distance_support(code: CyclicCode) -> int:
    """Smallest w such that some w columns of H are linearly dependent.

    Sizes w = 2, 3, ... are tried in turn.  For a given w, every increasing
    chain of w - 2 columns starting at column 0 is eliminated from H; a
    dependence of size w exists iff two remaining columns become parallel.
    """
    k, n, p = code.dimension, code.n, code.q
    if not 0 < k < n:
        raise ValueError(f"support search needs 0 < k < n, got k = {k}")
    H = code.parity_check_matrix() % p
    if not H.any(axis=0).all():
        return 1
    for w in range(2, n - k + 2):
        if _dependent_set_exists(H, (), w - 2, p, n):
            return w
    raise AssertionError("no dependent column set up to the Singleton bound")


def compute_distances(codes, method: str = "auto", budget: int = DEFAULT_BUDGET, threads: int = 1):
    """Distances for many codes; ``threads > 1`` fans out over processes."""
    codes = list(codes)
    if threads <= 1 or len(codes) < 2:
        return [c.min_distance(method, budget) for c in codes]
    from concurrent.futures import ProcessPoolExecutor

    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(_distance_job, [(c, method, budget) for c in codes]))


def _distance_job(args):
    code, method, budget = args
    return code.min_distance(method, budget)


# --- record export --------------------------------------------------------

RECORD_SCHEMA = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "title": "cyclic code record",
    "type": "object",
    "properties": {
        "n": {"type": "integer", "minimum": 1},
        "q": {"type": "integer", "minimum": 3},
        "generator": {"type": "array", "items": {"type": "integer", "minimum": 0}, "minItems": 1},
        "defining_set_leaders": {"type": "array", "items": {"type": "integer", "minimum": 0}},
        "dimension": {"type": "integer", "minimum": 0},
        "min_distance": {"type": ["integer", "null"], "minimum": 1},
        "hull_dim": {"type": "integer", "minimum": 0},
        "lcd": {"type": "boolean"},
    },
    "required": ["n", "q", "generator", "defining_set_leaders", "dimension", "min_distance", "hull_dim", "lcd"],
    "additionalProperties": False,
}

CSV_COLUMNS = ("n", "q", "generator", "dimension", "min_distance", "hull_dim", "lcd")


def records_to_json(records) -> str:
    return json.dumps(list(records), indent=2, sort_keys=False)


def records_to_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for rec in records:
        g = Polynomial(PrimeField(rec["q"]), rec["generator"])
        d = "" if rec["min_distance"] is None else rec["min_distance"]
        writer.writerow([rec["n"], rec["q"], str(g), rec["dimension"], d, rec["hull_dim"], str(rec["lcd"]).lower()])
    return buf.getvalue()
