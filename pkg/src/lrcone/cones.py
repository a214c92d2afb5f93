"""Exact inequality descriptions of the five cones and membership oracles.

A cone point is a tuple of s blocks, each a tuple of r numbers (int or
Fraction); the first s-1 blocks are the lambda^j, the last is nu. All
arithmetic here is exact -- no floating point, no tolerances.
"""

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .partitions import (
    coef_of_subsets,
    d_subsets,
    is_partition,
    multi_expand,
    pad,
    subpartitions,
    tau,
    tau_inverse,
    trim,
    weight,
)

KINDS = ("C", "EqC", "LR", "EqLR", "CSL")


def normalize_kind(kind):
    for k in KINDS:
        if kind.lower() == k.lower():
            return k
    raise ValueError(f"unknown cone kind {kind!r}; expected one of {KINDS}")


# ---------------------------------------------------------------------------
# points

def check_point(x, r=None, s=None):
    blocks = tuple(tuple(b) for b in x)
    if r is None:
        r = len(blocks[0]) if blocks else 0
    if s is None:
        s = len(blocks)
    if len(blocks) != s or any(len(b) != r for b in blocks):
        raise ValueError(f"expected {s} blocks of length {r}, got {x}")
    return blocks


def flatten(x):
    return tuple(v for block in x for v in block)


def zero_point(r, s):
    return ((0,) * r,) * s


def point_add(x, y):
    return tuple(tuple(a + b for a, b in zip(bx, by)) for bx, by in zip(x, y))


def point_sub(x, y):
    return tuple(tuple(a - b for a, b in zip(bx, by)) for bx, by in zip(x, y))


def point_scale(c, x):
    return tuple(tuple(c * a for a in b) for b in x)


def is_lattice_point(x):
    return all(isinstance(v, int) or (isinstance(v, Fraction) and v.denominator == 1)
               for v in flatten(x))


def as_int_point(x):
    return tuple(tuple(int(v) for v in b) for b in x)


def parse_block(text):
    out = []
    for piece in text.split(","):
        piece = piece.strip()
        out.append(Fraction(piece) if "/" in piece else int(piece))
    return tuple(out)


def parse_point(text):
    """Parse the text form `1,1,0;1,0,0;1,1,1` into a block tuple."""
    return tuple(parse_block(b) for b in text.split(";"))


def format_point(x):
    return ";".join(",".join(str(v) for v in block) for block in x)


def point_to_json(x):
    blocks = check_point(x)
    return {"r": len(blocks[0]), "s": len(blocks), "blocks": [list(b) for b in blocks]}


def point_from_json(obj):
    x = check_point(obj["blocks"], obj["r"], obj["s"])
    return tuple(tuple(int(v) if isinstance(v, int) else Fraction(v) for v in b) for b in x)


def parse_subset(text):
    """Parse the text form `{2,4}` into a subset tuple."""
    text = text.strip()
    if text.startswith("{") and text.endswith("}"):
        text = text[1:-1]
    return tuple(sorted(int(p) for p in text.split(",") if p.strip()))


def format_subset(subset):
    return "{" + ",".join(str(i) for i in subset) + "}"


# ---------------------------------------------------------------------------
# Horn data

@dataclass(frozen=True, order=True)
class HornDatum:
    """Indexes a Horn facet: d-element subsets I_1,...,I_{s-1}, K of [r]
    whose structure coefficient equals 1."""
    r: int
    s: int
    d: int
    I: tuple
    K: tuple

    def __str__(self):
        return ";".join(format_subset(i) for i in self.I) + ";" + format_subset(self.K)

    def check(self):
        if not 1 <= self.d < self.r:
            raise ValueError(f"need 1 <= d < r, got d={self.d}, r={self.r}")
        for sub in self.I + (self.K,):
            if len(sub) != self.d or any(not 1 <= a <= self.r for a in sub):
                raise ValueError(f"bad subset {sub} for r={self.r}, d={self.d}")
        if coef_of_subsets(self.I, self.K) != 1:
            raise ValueError(f"structure coefficient of {self} is not 1")
        return self


@lru_cache(maxsize=None)
def enumerate_horn(r, s, d):
    """All Horn data at (r, s) for a fixed 1 <= d < r, lexicographic.

    Instead of testing every K, we expand the product of the tau classes of
    (I_1,...,I_{s-1}) inside the d x (r-d) box and read off the targets with
    coefficient exactly 1.
    """
    if s < 3:
        raise ValueError(f"need s >= 3, got {s}")
    if not 1 <= d < r:
        raise ValueError(f"need 1 <= d < r, got d={d}, r={r}")
    box = (r - d,) * d
    out = []
    for Is in product(d_subsets(r, d), repeat=s - 1):
        dist = multi_expand([tau(I) for I in Is], box)
        for nu, c in dist.items():
            if c == 1:
                out.append(HornDatum(r, s, d, Is, tau_inverse(pad(nu, d), r)))
    out.sort(key=lambda h: (h.I, h.K))
    return tuple(out)


@lru_cache(maxsize=None)
def all_horn_data(r, s):
    out = []
    for d in range(1, r):
        out.extend(enumerate_horn(r, s, d))
    return tuple(out)


# ---------------------------------------------------------------------------
# inequality systems

@dataclass(frozen=True)
class LinearForm:
    coeffs: tuple          # length r*s
    rel: str               # ">=" or "=="
    label: str             # chamber | nonneg | trace | containment | horn
    datum: HornDatum = None

    def dot(self, flat):
        return sum(c * v for c, v in zip(self.coeffs, flat) if c)


@dataclass(frozen=True)
class InequalitySystem:
    r: int
    s: int
    kind: str
    forms: tuple

    @property
    def dim(self):
        return self.r * self.s

    def is_member(self, x):
        flat = flatten(check_point(x, self.r, self.s))
        for f in self.forms:
            v = f.dot(flat)
            if f.rel == "==" and v != 0:
                return False
            if f.rel == ">=" and v < 0:
                return False
        return True

    def tight_normals(self, x):
        """Coefficient vectors of all forms active at x (equalities always)."""
        flat = flatten(check_point(x, self.r, self.s))
        return [f.coeffs for f in self.forms if f.rel == "==" or f.dot(flat) == 0]

    def matrix(self):
        """Form coefficients as a numpy int array (rows = forms), plus the
        parallel list of relations; for batch filtering of lattice points."""
        import numpy as np

        return (np.array([f.coeffs for f in self.forms], dtype=np.int64),
                [f.rel for f in self.forms])


def _unit(idx, n):
    v = [0] * n
    v[idx] = 1
    return v


def horn_form(h):
    """Coefficient vector of the Horn inequality for datum h."""
    n = h.r * h.s
    v = [0] * n
    for j, subset in enumerate(h.I):
        for a in subset:
            v[j * h.r + (a - 1)] += 1
    for k in h.K:
        v[(h.s - 1) * h.r + (k - 1)] -= 1
    return tuple(v)


@lru_cache(maxsize=None)
def inequality_system(r, s, kind):
    """Exact linear description of one of the five cones at rank (r, s)."""
    kind = normalize_kind(kind)
    if r < 1 or s < 3:
        raise ValueError(f"need r >= 1 and s >= 3, got r={r}, s={s}")
    n = r * s
    forms = []
    # (i) chamber: each block weakly decreasing
    for k in range(s):
        for i in range(r - 1):
            v = [0] * n
            v[k * r + i] = 1
            v[k * r + i + 1] = -1
            forms.append(LinearForm(tuple(v), ">=", "chamber"))
    # (ii)/(ii') trace
    v = [1] * (n - r) + [-1] * r
    trace_rel = ">=" if kind in ("EqC", "EqLR") else "=="
    forms.append(LinearForm(tuple(v), trace_rel, "trace"))
    # (iii) Horn inequalities, all 1 <= d < r
    for h in all_horn_data(r, s):
        forms.append(LinearForm(horn_form(h), ">=", "horn", h))
    # last-part sign conditions
    if kind in ("LR", "EqLR", "CSL"):
        rel = "==" if kind == "CSL" else ">="
        for k in range(s - 1):
            forms.append(LinearForm(tuple(_unit(k * r + r - 1, n)), rel, "nonneg"))
    if kind == "EqLR":
        forms.append(LinearForm(tuple(_unit(n - 1, n)), ">=", "nonneg"))
        # (iv) containment nu >= lambda^j
        for k in range(s - 1):
            for i in range(r):
                v = [0] * n
                v[(s - 1) * r + i] = 1
                v[k * r + i] = -1
                forms.append(LinearForm(tuple(v), ">=", "containment"))
    return InequalitySystem(r, s, kind, tuple(forms))


def member(x, kind):
    """Exact membership of a cone point in the named cone."""
    x = check_point(x)
    return inequality_system(len(x[0]), len(x), normalize_kind(kind)).is_member(x)


def horn_slack(x, h):
    """LHS - RHS of the Horn inequality indexed by h; 0 means x is on the facet."""
    x = check_point(x, h.r, h.s)
    lhs = sum(x[j][a - 1] for j, subset in enumerate(h.I) for a in subset)
    return lhs - sum(x[-1][k - 1] for k in h.K)


def nonvanishing(lams, nu, equivariant):
    """Whether the (equivariant) structure coefficient of the given integer
    partitions is nonzero, via the polyhedral description."""
    lams = [trim(l) for l in lams]
    nu = trim(nu)
    r = max([len(nu)] + [len(l) for l in lams] + [1])
    point = tuple(l + (0,) * (r - len(l)) for l in lams) + (nu + (0,) * (r - len(nu)),)
    return member(point, "EqLR" if equivariant else "LR")


def shadow(x, j):
    """Shrink block j of an EqLR lattice point so the trace form vanishes,
    keeping EqLR membership (hence landing in LR). 1 <= j <= s-1."""
    x = check_point(x)
    r, s = len(x[0]), len(x)
    if not 1 <= j <= s - 1:
        raise ValueError(f"block index {j} out of range [1, {s - 1}]")
    if not is_lattice_point(x):
        raise ValueError("shadow requires an integer point")
    x = as_int_point(x)
    if not member(x, "EqLR"):
        raise ValueError("shadow requires a point of EqLR")
    block = x[j - 1]
    target = weight(x[-1]) - sum(weight(x[k]) for k in range(s - 1) if k != j - 1)
    if target == weight(block):
        return x
    # largest-first search order: greedy shrink tends to succeed immediately
    candidates = sorted((mu for mu in subpartitions(block) if weight(mu) == target),
                        reverse=True)
    for mu in candidates:
        y = x[:j - 1] + (mu,) + x[j:]
        if member(y, "EqLR"):
            return y
    raise RuntimeError(f"no shadow found for {x} at block {j}; "
                       "this contradicts a guaranteed existence result")
