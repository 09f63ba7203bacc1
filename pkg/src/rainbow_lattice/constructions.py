"""Generators for the explicit lattice colorings, each with an exact class-size
account and the forbidden family it is valid against.

Every generator returns a ConstructionReport; when the dimension is within
the enumeration cap the coloring is materialized so the detector can
re-verify the claim independently.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .bounds import equipartition_a, m_of_l
from .coloring import Coloring, PosetFamily
from .lattice import (check_dimension, full_set, is_proper_subset, is_subset,
                      subset_of)
from .posets import (Poset, antichain, chain, diamond, is_vee_shape, is_wedge_shape,
                     vee, wedge)


@dataclass(frozen=True)
class ChainFamily:
    """k-1 chains from the empty set to the ground set, l+1 sets each."""

    n: int
    k: int
    l: int
    chains: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        check_dimension(self.n, analytic=True)
        if self.k < 2 or self.l < 2:
            raise ValueError("need k >= 2 and l >= 2")
        if len(self.chains) != self.k - 1:
            raise ValueError(f"expected {self.k - 1} chains, got {len(self.chains)}")
        top = full_set(self.n)
        for ch in self.chains:
            if len(ch) != self.l + 1 or ch[0] != 0 or ch[-1] != top:
                raise ValueError("each chain must run from the empty set to the ground set")
            for a, b in zip(ch, ch[1:]):
                if not is_proper_subset(a, b):
                    raise ValueError("chain is not strictly nested")

    def to_json_dict(self) -> dict:
        return {"n": self.n, "k": self.k, "l": self.l,
                "chains": [list(ch) for ch in self.chains]}

    @classmethod
    def from_json_dict(cls, data: dict) -> "ChainFamily":
        return cls(int(data["n"]), int(data["k"]), int(data["l"]),
                   tuple(tuple(int(x) for x in ch) for ch in data["chains"]))


@dataclass
class ConstructionReport:
    name: str
    n: int
    l: int
    forbidden: PosetFamily
    certificate: str                 # "structural" or "detector"
    claimed_min: int
    class_sizes: tuple[int, ...]
    uncolored: int
    coloring: Coloring | None = None
    formula_min: int | None = None   # closed-form value, when one is claimed
    params: dict = field(default_factory=dict)
    notes: str = ""

    @property
    def min_size(self) -> int:
        return min(self.class_sizes)

    def to_json_dict(self) -> dict:
        return {
            "name": self.name, "n": self.n, "l": self.l,
            "forbidden": self.forbidden.spec_string(), "mode": self.forbidden.mode,
            "certificate": self.certificate, "claimed_min": self.claimed_min,
            "formula_min": self.formula_min, "class_sizes": list(self.class_sizes),
            "uncolored": self.uncolored, "params": self.params, "notes": self.notes,
            "coloring": self.coloring.to_json_dict() if self.coloring else None,
        }


def trial_seed(seed: int, index: int) -> int:
    """Per-trial seed; trials can run in any order or in parallel."""
    return seed * 1_000_003 + index


# ---------------------------------------------------------------------------
# fixed-trace construction


def _trace_certifiable_partial(p: Poset, l: int) -> bool:
    # rainbow tuples here are always antichains, so only antichain members
    # that fit in l colors could ever appear
    return p.size > l or not p.is_antichain()


def _trace_certifiable_total(p: Poset, l: int) -> bool:
    if p.size > l:
        return True
    big = [c for c in p.components() if len(c) >= 2]
    if len(big) >= 2:
        return True
    if not big:
        return False  # antichains are realizable
    sub = Poset(len(big[0]), _restrict(p, sorted(big[0])))
    return not (is_vee_shape(sub) or is_wedge_shape(sub))


def _restrict(p: Poset, elems: list[int]) -> list[tuple[int, int]]:
    pos = {e: i for i, e in enumerate(elems)}
    return [(pos[i], pos[j]) for i, j in p.less if i in pos and j in pos]


def incomparable_traces(n: int, l: int, total: bool = False,
                        forbidden: PosetFamily | None = None) -> ConstructionReport:
    """Color sets by their trace on a short prefix of the ground line.

    Partial mode fixes l half-size subsets S_i of [m(l)] and colors F with i
    when F cap [m(l)] = S_i; the classes are pairwise cross-incomparable, so
    rainbow tuples are forced to be antichains.  Total mode uses l-1 trace
    classes over [m(l-1)] plus one class for everything else.

    A supplied forbidden family is certified structurally; families the
    trace argument cannot certify are refused.
    """
    if l < 2:
        raise ValueError("need l >= 2")
    if total and l < 3:
        raise ValueError("total trace coloring needs l >= 3 (the l=2 case "
                         "degenerates to an empty remainder class)")
    m = m_of_l(l - 1) if total else m_of_l(l)
    if m > n:
        raise ValueError(f"prefix length m={m} exceeds n={n}")
    check_dimension(n)

    if forbidden is None:
        forbidden = (PosetFamily((chain(3),), "induced") if total
                     else PosetFamily((chain(2),), "weak"))
    check = _trace_certifiable_total if total else _trace_certifiable_partial
    for p in forbidden.members:
        if not check(p, l):
            raise ValueError(f"trace construction cannot certify validity against {p!r}")

    classes = l - 1 if total else l
    traces = [subset_of(c) for c in combinations(range(1, m + 1), m // 2)][:classes]
    trace_color = {t: i + 1 for i, t in enumerate(traces)}
    prefix = full_set(m)
    assign = [0] * (1 << n)
    for h in range(1 << n):
        color = trace_color.get(h & prefix, l if total else 0)
        assign[h] = color
    col = Coloring(n, l, assign)
    per = [0] * l
    for v in assign:
        if v:
            per[v - 1] += 1
    claimed = 2 ** (n - m)
    return ConstructionReport(
        name="traces", n=n, l=l, forbidden=forbidden, certificate="structural",
        claimed_min=claimed, class_sizes=tuple(per), uncolored=assign.count(0),
        coloring=col, formula_min=claimed,
        params={"total": total, "m": m, "traces": traces},
    )


# ---------------------------------------------------------------------------
# single-chain interval construction


def chain_interval_coloring(n: int, l: int) -> ConstructionReport:
    """Partition-by-chain coloring: class i is the open interval between
    consecutive chain sets, and the l+1 chain sets are spread round-robin
    over the classes whose interval has the small dimension floor(n/l).

    Any two sets colored differently are nested, so no rainbow incomparable
    pair exists.  Requires l*log2(l) <= n.
    """
    if l < 1 or n < 1:
        raise ValueError("need positive n and l")
    if l ** l > 2 ** n:
        raise ValueError(f"requires l*log2(l) <= n; fails for (n={n}, l={l})")
    check_dimension(n)
    a = equipartition_a(n, l)
    sets = [0]
    nxt = 1
    for i in range(1, l + 1):
        block = (n + i - 1) // l
        cur = sets[-1]
        for _ in range(block):
            cur |= 1 << (nxt - 1)
            nxt += 1
        sets.append(cur)
    chain_color = {}
    for t, cs in enumerate(sets):
        chain_color[cs] = (t % a) + 1
    assign = [0] * (1 << n)
    for h in range(1 << n):
        if h in chain_color:
            assign[h] = chain_color[h]
            continue
        for i in range(1, l + 1):
            if is_subset(h, sets[i]):
                if is_subset(sets[i - 1], h):
                    assign[h] = i
                break
    col = Coloring(n, l, assign)
    dims = [(sets[i] & ~sets[i - 1]).bit_count() for i in range(1, l + 1)]
    shares = [sum(1 for t in range(l + 1) if t % a == i) for i in range(l)]
    sizes = tuple((2 ** dims[i] - 2) + shares[i] for i in range(l))
    formula = 2 ** (n // l) - 2 + (l + 1) // a
    return ConstructionReport(
        name="chain", n=n, l=l,
        forbidden=PosetFamily((antichain(2),), "induced"), certificate="structural",
        claimed_min=min(sizes), class_sizes=sizes, uncolored=assign.count(0),
        coloring=col, formula_min=formula,
        params={"a": a, "chain": sets, "dims": dims},
        notes="" if min(sizes) == formula else
        "closed form exceeds this construction's minimum at this (n, l)",
    )


# ---------------------------------------------------------------------------
# random multi-chain construction


def random_chain_family(n: int, k: int, l: int, seed: int) -> ChainFamily:
    """Grow each of the k-1 chains by promoting every missing element with
    probability 1/(l-i+1) at stage i; the expected stage growth is n/l.

    A chain is redrawn until strictly nested (relevant only at small n).
    Deterministic for a fixed seed.
    """
    if k < 2 or l < 2 or n < l:
        raise ValueError("need k >= 2, l >= 2 and n >= l")
    check_dimension(n, analytic=True)
    rng = random.Random(seed)
    top = full_set(n)
    chains = []
    for _ in range(k - 1):
        while True:
            cur = 0
            ch = [0]
            for i in range(1, l):
                p = 1.0 / (l - i + 1)
                grown = cur
                for x in range(n):
                    bit = 1 << x
                    if not cur & bit and rng.random() < p:
                        grown |= bit
                cur = grown
                ch.append(cur)
            ch.append(top)
            if all(is_proper_subset(a, b) for a, b in zip(ch, ch[1:])):
                chains.append(tuple(ch))
                break
    return ChainFamily(n, k, l, tuple(chains))


def _halfopen_remainder_size(base_lo: int, base_hi: int, excluded) -> int:
    """|(base_lo, base_hi] minus the union of half-open intervals| by exact
    inclusion-exclusion over the excluded list."""
    total = 0
    r = len(excluded)
    for mask in range(1 << r):
        lo = base_lo
        hi = base_hi
        lowers = [base_lo]
        for t in range(r):
            if mask >> t & 1:
                elo, ehi = excluded[t]
                lo |= elo
                hi &= ehi
                lowers.append(elo)
        if not is_subset(lo, hi):
            continue
        cnt = 1 << (hi & ~lo).bit_count()
        if lo in lowers:
            cnt -= 1
        total += -cnt if mask.bit_count() & 1 else cnt
    return total


def chain_family_coloring(cf: ChainFamily, materialize: bool = True) -> ConstructionReport:
    """The l(k-1)-color partial coloring read off a chain family: color
    (j, i) is the half-open interval between consecutive sets of chain j,
    minus every interval of an earlier chain.

    Structural validity: among any k colored sets, two are colored through
    the same chain; if their colors differ they are nested, so no rainbow
    antichain of size k exists.  Class sizes are exact (inclusion-exclusion)
    in both modes; materialization additionally writes out the coloring.
    """
    n, k, l = cf.n, cf.k, cf.l
    colors = l * (k - 1)
    if materialize:
        check_dimension(n)
    sizes = []
    for j in range(k - 1):
        earlier = [(cf.chains[jp][i - 1], cf.chains[jp][i])
                   for jp in range(j) for i in range(1, l + 1)]
        for i in range(1, l + 1):
            sizes.append(_halfopen_remainder_size(
                cf.chains[j][i - 1], cf.chains[j][i], earlier))
    sizes = tuple(sizes)
    col = None
    if materialize:
        assign = [0] * (1 << n)
        for h in range(1, 1 << n):
            for j in range(k - 1):
                ch = cf.chains[j]
                i = next(i for i in range(1, l + 1) if is_subset(h, ch[i]))
                if is_subset(ch[i - 1], h):
                    assign[h] = j * l + i
                    break
        col = Coloring(n, colors, assign)
    return ConstructionReport(
        name="congen", n=n, l=colors,
        forbidden=PosetFamily((antichain(k),), "induced"), certificate="structural",
        claimed_min=min(sizes), class_sizes=sizes,
        uncolored=(1 << n) - sum(sizes), coloring=col,
        params={"k": k, "stage_colors": l},
    )


def chain_overlap_check(cf: ChainFamily) -> dict:
    """Evaluate the stage-i chain-overlap inequality
    |C^j_i cap C^j'_i| <= (i-1)(n/l) + (2/3)(n/l) for every stage and chain
    pair, exactly in rationals.  Vacuously passes when there is one chain."""
    n, l = cf.n, cf.l
    checks = []
    for i in range(1, l):
        bound = Fraction(n * (3 * (i - 1) + 2), 3 * l)
        for j in range(cf.k - 1):
            for j2 in range(j + 1, cf.k - 1):
                inter = (cf.chains[j][i] & cf.chains[j2][i]).bit_count()
                checks.append({"i": i, "j": j + 1, "j2": j2 + 1,
                               "intersection": inter, "bound": str(bound),
                               "ok": inter <= bound})
    return {"checks": checks, "pass": all(c["ok"] for c in checks)}


# ---------------------------------------------------------------------------
# colorings lifted from a fixed 3-cube table


# the 8 residues of the 3-cube, paired so that {i} and {i, i+1 mod 3} share
# color i, with the empty set and the full 3-cube in a fourth class
_CUBE3 = {1: 1, 3: 1, 2: 2, 6: 2, 4: 3, 5: 3, 0: 4, 7: 4}


def lift3_coloring(n: int, variant: str = "three_color") -> ConstructionReport:
    """Color F by the 3-cube table applied to F cap {1,2,3}.

    three_color: classes 1..3 (table class 4 stays uncolored), valid against
    induced chains of 3, forks and joins simultaneously.  four_color: the
    total 4-coloring, valid against the induced diamond.  Every class has
    exactly 2^(n-2) sets.
    """
    if n < 3:
        raise ValueError("need n >= 3")
    check_dimension(n)
    if variant not in ("three_color", "four_color"):
        raise ValueError(f"unknown variant {variant!r}")
    four = variant == "four_color"
    l = 4 if four else 3
    assign = [0] * (1 << n)
    for h in range(1 << n):
        c = _CUBE3[h & 7]
        assign[h] = c if (four or c < 4) else 0
    col = Coloring(n, l, assign)
    if four:
        forb = PosetFamily((diamond(),), "induced")
    else:
        forb = PosetFamily((chain(3), vee(2), wedge(2)), "induced")
    claimed = 2 ** (n - 2)
    return ConstructionReport(
        name="lift3", n=n, l=l, forbidden=forb, certificate="detector",
        claimed_min=claimed, class_sizes=tuple([claimed] * l),
        uncolored=0 if four else claimed, coloring=col, formula_min=claimed,
        params={"variant": variant},
    )


def p3_total_coloring(n: int) -> ConstructionReport:
    """Total 3-coloring with no rainbow chain of 3: color 1 holds the sets
    containing element 1 but not 2, color 2 the mirror image, color 3 the
    rest.  Classes 1 and 2 are cross-incomparable, so a chain meets at most
    one of them."""
    if n < 2:
        raise ValueError("need n >= 2")
    check_dimension(n)
    assign = [0] * (1 << n)
    for h in range(1 << n):
        one, two = h & 1, h & 2
        assign[h] = 1 if one and not two else 2 if two and not one else 3
    col = Coloring(n, 3, assign)
    quarter = 2 ** (n - 2)
    return ConstructionReport(
        name="p3", n=n, l=3,
        forbidden=PosetFamily((chain(3),), "induced"), certificate="structural",
        claimed_min=quarter, class_sizes=(quarter, quarter, 2 ** (n - 1)),
        uncolored=0, coloring=col, formula_min=quarter,
    )


def pk_coloring(n: int, k: int) -> ConstructionReport:
    """k classes of exactly floor(2^n / k) sets with no rainbow chain of k:
    class 1 sits inside {F: 1 in F, 2 not in F}, class 2 inside the mirror,
    so a chain using every color would need both, which are incomparable.
    The 2^n mod k leftover sets stay uncolored."""
    if k < 4:
        raise ValueError("need k >= 4")
    if n < 2:
        raise ValueError("need n >= 2")
    check_dimension(n)
    quota = (1 << n) // k
    if 2 ** (n - 2) < quota:
        raise ValueError("side families too small for the quota")
    assign = [0] * (1 << n)
    pool1 = [h for h in range(1 << n) if h & 1 and not h & 2][:quota]
    pool2 = [h for h in range(1 << n) if h & 2 and not h & 1][:quota]
    for h in pool1:
        assign[h] = 1
    for h in pool2:
        assign[h] = 2
    rest = [h for h in range(1 << n) if not assign[h]]
    for c in range(3, k + 1):
        chunk, rest = rest[:quota], rest[quota:]
        for h in chunk:
            assign[h] = c
    col = Coloring(n, k, assign)
    return ConstructionReport(
        name="pk", n=n, l=k,
        forbidden=PosetFamily((chain(k),), "induced"), certificate="structural",
        claimed_min=quota, class_sizes=tuple([quota] * k),
        uncolored=(1 << n) - quota * k, coloring=col, formula_min=quota,
        params={"k": k},
    )
