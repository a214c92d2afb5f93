"""Recursive extremal-ray enumeration for the Littlewood-Richardson cones.

On each Horn facet, type I rays come from a direct swap construction on the
indexing subsets, and type II rays are images of rays of a product of two
smaller cones under the induction map. The union over all facets, together
with two explicitly known special families, is filtered through an exact
extremality certificate (tight-constraint rank = r*s - 1).
"""

import json
import math
import os
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .partitions import coef_of_subsets, omega, weight
from .cones import (
    HornDatum,
    all_horn_data,
    check_point,
    flatten,
    format_point,
    horn_slack,
    inequality_system,
    member,
    normalize_kind,
    parse_point,
    point_scale,
    point_sub,
    zero_point,
)

DEFAULT_RANK_CEILING = 7


# ---------------------------------------------------------------------------
# exact linear algebra

def exact_rank(rows):
    """Rank of a list of integer/Fraction vectors, by exact elimination."""
    mat = [list(map(Fraction, row)) for row in rows if any(row)]
    if not mat:
        return 0
    ncols = len(mat[0])
    rank = 0
    col = 0
    while col < ncols and rank < len(mat):
        piv = next((i for i in range(rank, len(mat)) if mat[i][col]), None)
        if piv is None:
            col += 1
            continue
        mat[rank], mat[piv] = mat[piv], mat[rank]
        prow = mat[rank]
        pval = prow[col]
        for i in range(rank + 1, len(mat)):
            f = mat[i][col]
            if f:
                ratio = f / pval
                row_i = mat[i]
                for c in range(col, ncols):
                    row_i[c] -= ratio * prow[c]
        rank += 1
        col += 1
    return rank


def primitive(x):
    """Scale a nonzero rational point to integer entries with gcd 1."""
    flat = flatten(x)
    denoms = [Fraction(v).denominator for v in flat]
    scale = math.lcm(*denoms) if denoms else 1
    ints = [int(v * scale) for v in flat]
    g = math.gcd(*ints)
    if g == 0:
        raise ValueError("cannot normalize the zero point")
    return tuple(tuple(int(v * scale) // g for v in block) for block in x)


# ---------------------------------------------------------------------------
# extremality

@dataclass(frozen=True)
class Ray:
    point: tuple
    primitive: bool
    tight_rank: int

    @property
    def extremal(self):
        r, s = len(self.point[0]), len(self.point)
        return self.tight_rank == r * s - 1


def certify(x, kind):
    """Extremality certificate for a nonzero member of the cone."""
    x = check_point(x)
    r, s = len(x[0]), len(x)
    kind = normalize_kind(kind)
    if not any(flatten(x)):
        raise ValueError("the zero point spans no ray")
    if not member(x, kind):
        raise ValueError(f"{format_point(x)} is not in {kind}")
    sys = inequality_system(r, s, kind)
    rank = exact_rank(sys.tight_normals(x))
    p = primitive(x)
    return Ray(p, p == x, rank)


def is_extremal(x, kind):
    return certify(x, kind).extremal


# ---------------------------------------------------------------------------
# type I rays

def type1_data(h):
    """All type I ray data (j, a) on the facet of h, ordered by (j, a).

    For j <= s-1: a in I_j with a+1 not in I_j and a < r.
    For j = s:    a in K  with a-1 not in K  and a > 1.
    """
    out = []
    for j, subset in enumerate(h.I, start=1):
        for a in subset:
            if a < h.r and a + 1 not in subset:
                out.append((j, a))
    for a in h.K:
        if a > 1 and a - 1 not in h.K:
            out.append((h.s, a))
    return out


def swap_datum(h, t):
    """The primed collection (I', K') obtained by the swap at datum t."""
    j, a = t
    if (j, a) not in type1_data(h):
        raise ValueError(f"{t} is not a valid type I datum for {h}")
    if j < h.s:
        Ij = tuple(sorted(set(h.I[j - 1]) - {a} | {a + 1}))
        I = h.I[:j - 1] + (Ij,) + h.I[j:]
        return I, h.K
    K = tuple(sorted(set(h.K) - {a} | {a - 1}))
    return h.I, K


def _swap_in(subset, old, new):
    return tuple(sorted(set(subset) - {old} | {new}))


def type1_ray(h, t):
    """Assemble the type I ray r(j,a) from consecutive differences.

    The last entry nu_r is computed by both the trace rule and the
    alternative rule (coefficient in a bigger Grassmannian); they must
    agree, else the LR engine itself is broken.
    """
    r, s = h.r, h.s
    I, K = swap_datum(h, t)
    lams = []
    for k in range(s - 1):
        diffs = [0] * (r + 1)  # diffs[b] = lam_{b-1} - lam_b for b in 2..r
        for b in range(2, r + 1):
            if b in I[k] and b - 1 not in I[k]:
                Ik2 = _swap_in(I[k], b, b - 1)
                subs = I[:k] + (Ik2,) + I[k + 1:]
                diffs[b] = coef_of_subsets(subs, K)
        lam = [0] * r
        for b in range(r, 1, -1):
            lam[b - 2] = lam[b - 1] + diffs[b]
        lams.append(tuple(lam))
    nu_diffs = [0] * r  # nu_diffs[c] = nu_c - nu_{c+1} for c in 1..r-1
    for c in range(1, r):
        if c in K and c + 1 not in K:
            K2 = _swap_in(K, c, c + 1)
            nu_diffs[c] = coef_of_subsets(I, K2)
    suffix = [0] * (r + 1)  # suffix[c] = nu_c - nu_r
    for c in range(r - 1, 0, -1):
        suffix[c] = suffix[c + 1] + nu_diffs[c]
    total_lam = sum(weight(l) for l in lams)
    rem = total_lam - sum(suffix[1:r])
    if rem % r:
        raise ArithmeticError(f"trace rule gives non-integer nu_r on {h} at {t}")
    nu_r_trace = rem // r
    if r not in K:
        nu_r_alt = 0
    else:
        K2 = _swap_in(K, r, r + 1)
        nu_r_alt = coef_of_subsets(I, K2)
    if nu_r_trace != nu_r_alt:
        raise ArithmeticError(
            f"trace rule ({nu_r_trace}) and alternative rule ({nu_r_alt}) "
            f"disagree on {h} at datum {t}; the LR engine is inconsistent")
    nu = tuple(nu_r_trace + suffix[c] for c in range(1, r + 1))
    return tuple(lams) + (nu,)


# ---------------------------------------------------------------------------
# the coordinate split and the induction map

def _complement(subset, r):
    return tuple(a for a in range(1, r + 1) if a not in subset)


def pi(x, h):
    """Split x by restriction to the subsets of h and their complements."""
    x = check_point(x, h.r, h.s)
    subs = h.I + (h.K,)
    first = tuple(tuple(block[a - 1] for a in sub) for block, sub in zip(x, subs))
    second = tuple(tuple(block[a - 1] for a in _complement(sub, h.r))
                   for block, sub in zip(x, subs))
    return first, second


def pi_inverse(xd, y, h):
    """Reassemble a rank-r point from a rank-d and a rank-(r-d) point."""
    xd = check_point(xd, h.d, h.s)
    y = check_point(y, h.r - h.d, h.s)
    subs = h.I + (h.K,)
    blocks = []
    for bd, by, sub in zip(xd, y, subs):
        comp = _complement(sub, h.r)
        block = [0] * h.r
        for v, a in zip(bd, sub):
            block[a - 1] = v
        for v, a in zip(by, comp):
            block[a - 1] = v
        blocks.append(tuple(block))
    return tuple(blocks)


@lru_cache(maxsize=None)
def _type1_rays(h):
    return tuple((t, type1_ray(h, t)) for t in type1_data(h))


def p2_hat(x, h):
    """Project a point on the span of the facet onto the complementary
    subcone by stripping off the type I components."""
    x = check_point(x, h.r, h.s)
    if horn_slack(x, h) != 0:
        raise ValueError(f"{format_point(x)} is not on the facet hyperplane of {h}")
    z = x
    for (j, a), ray in _type1_rays(h):
        if j < h.s:
            c = x[j - 1][a - 1] - x[j - 1][a]
        else:
            c = x[h.s - 1][a - 2] - x[h.s - 1][a - 1]
        if c:
            z = point_sub(z, point_scale(c, ray))
    return z


def ind_hat(xd, y, h):
    """The induction map: reassemble, then project off the type I part."""
    return p2_hat(pi_inverse(xd, y, h), h)


# ---------------------------------------------------------------------------
# special families

def x_ray(j, r, s):
    """x_j: omega_r in block j (1-based), zeros elsewhere, omega_r in nu."""
    blocks = [(0,) * r] * (s - 1)
    blocks[j - 1] = omega(r, r)
    return tuple(blocks) + (omega(r, r),)


def special_rays(r, s):
    """The omega-tuple rays: (omega_{k_1},...,omega_{k_{s-1}},omega_l) with
    every k_i <= l and sum k_i >= l. Includes each x_j (k_j = l = r)."""
    out = []
    for l in range(1, r + 1):
        for ks in product(range(l + 1), repeat=s - 1):
            if sum(ks) >= l:
                out.append(tuple(omega(k, r) for k in ks) + (omega(l, r),))
    return out


def diagonal_no_facet_check(r, s, l):
    """Whether the all-omega_l diagonal point avoids every Horn facet."""
    if not 1 <= l <= r:
        raise ValueError(f"need 1 <= l <= r, got l={l}")
    x = (omega(l, r),) * s
    return all(horn_slack(x, h) > 0 for h in all_horn_data(r, s))


# ---------------------------------------------------------------------------
# facet-level and cone-level enumeration

@dataclass(frozen=True)
class FacetDecomposition:
    """Audit record of the ray algorithm on one Horn facet."""
    datum: HornDatum
    kind: str
    type1: tuple                 # ((j, a), point) pairs
    type2_extremal: tuple        # primitive extremal induction images, deduped
    type2_zero: int              # number of product rays mapping to 0
    type2_nonextremal: tuple     # nonzero, non-extremal images

    def ray_points(self):
        seen = []
        for _, p in self.type1:
            if p not in seen:
                seen.append(p)
        for p in self.type2_extremal:
            if p not in seen:
                seen.append(p)
        return tuple(seen)


def facet_rays(h, kind):
    """Run the facet algorithm: type I rays plus extremality-filtered
    induction images of the product of the two smaller cones."""
    kind = normalize_kind(kind)
    if kind not in ("LR", "EqLR"):
        raise ValueError("facet decomposition applies to LR and EqLR only")
    d = h.d
    sub_a = enumerate_rays(d, h.s, "LR")
    sub_b = enumerate_rays(h.r - d, h.s, kind)
    pairs = ([(a, zero_point(h.r - d, h.s)) for a in sub_a]
             + [(zero_point(d, h.s), b) for b in sub_b])
    extremal, nonextremal = [], []
    zeros = 0
    for xd, y in pairs:
        z = ind_hat(xd, y, h)
        if not any(flatten(z)):
            zeros += 1
            continue
        p = primitive(z)
        if is_extremal(p, kind):
            if p not in extremal:
                extremal.append(p)
        else:
            nonextremal.append(p)
    return FacetDecomposition(h, kind, _type1_rays(h), tuple(extremal),
                              zeros, tuple(nonextremal))


_RAY_MEMO = {}
CACHE_ENV = "LRCONE_CACHE_DIR"


def _cache_path(r, s, kind):
    root = os.environ.get(CACHE_ENV)
    if not root:
        return None
    return os.path.join(root, f"rays-r{r}-s{s}-{kind.lower()}.json")


def _base_candidates(r, s, kind):
    if kind == "LR":
        return [x_ray(j, r, s) for j in range(1, s)]
    if kind == "EqLR":
        out = []
        for mask in product((0, 1), repeat=s - 1):
            if any(mask):
                out.append(tuple((m,) * r for m in mask) + ((1,) * r,))
        return out
    return []  # CSL_1 is the origin


def enumerate_rays(r, s, kind, ceiling=DEFAULT_RANK_CEILING):
    """All extremal rays of the cone, as primitive integer points in
    canonical (lexicographic) order.

    Candidates are over-generated -- every Horn facet's type I and type II
    rays, the omega-tuple family, and (for EqLR) the rays of the LR face --
    then every candidate is re-certified by the exact extremality test.
    """
    kind = normalize_kind(kind)
    if kind not in ("CSL", "LR", "EqLR"):
        raise ValueError(f"{kind} is not pointed; its extremal rays are not well-defined")
    if r < 1 or s < 3:
        raise ValueError(f"need r >= 1 and s >= 3, got r={r}, s={s}")
    if r > ceiling:
        raise ValueError(
            f"r={r} exceeds the configured ceiling {ceiling}; ray enumeration "
            "grows quickly -- raise `ceiling` explicitly to proceed")
    key = (r, s, kind)
    if key in _RAY_MEMO:
        return _RAY_MEMO[key]
    path = _cache_path(r, s, kind)
    if path and os.path.exists(path):
        with open(path) as fh:
            data = json.load(fh)
        rays = tuple(tuple(tuple(b) for b in p) for p in data["rays"])
        _RAY_MEMO[key] = rays
        return rays

    if kind == "CSL":
        rays = tuple(x for x in enumerate_rays(r, s, "LR", ceiling)
                     if member(x, "CSL"))
    else:
        candidates = []
        if r == 1:
            candidates.extend(_base_candidates(r, s, kind))
        else:
            for h in all_horn_data(r, s):
                candidates.extend(facet_rays(h, kind).ray_points())
            candidates.extend(special_rays(r, s))
            if kind == "EqLR":
                candidates.extend(enumerate_rays(r, s, "LR", ceiling))
        rays = set()
        for x in candidates:
            if not any(flatten(x)):
                continue
            p = primitive(x)
            if p in rays:
                continue
            if member(p, kind) and is_extremal(p, kind):
                rays.add(p)
        rays = tuple(sorted(rays, key=flatten))
    _RAY_MEMO[key] = rays
    if path:
        os.makedirs(os.path.dirname(path) or ".", exist_ok=True)
        with open(path, "w") as fh:
            json.dump({"r": r, "s": s, "kind": kind, "count": len(rays),
                       "rays": [[list(b) for b in p] for p in rays]}, fh)
    return rays


def rayset_lines(rays):
    """Text serialization: one sorted ray per line."""
    return [format_point(p) for p in rays]


def rayset_json(r, s, kind, rays):
    return {"r": r, "s": s, "kind": normalize_kind(kind), "count": len(rays),
            "rays": [[list(b) for b in p] for p in rays]}
