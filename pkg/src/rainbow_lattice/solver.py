"""Exact max-min color-class search plus the chain-decomposition,
cross-incomparability and greedy-cover diagnostics.

The solver decides, for each candidate m, whether a valid (partial or
total) l-coloring with every class of size >= m exists, by depth-first
assignment over subset ids with incremental rainbow checking, a counting
prune, first-use color symmetry breaking and optional exact orbit pruning.
Feasibility is monotone in m, so the optimum is found by binary search
seeded from the library's constructions.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .coloring import Coloring, PosetFamily, class_stats, has_rainbow, validate
from .constructions import (chain_interval_coloring, incomparable_traces,
                            lift3_coloring, p3_total_coloring, pk_coloring)
from .lattice import (CANONICAL_CAP, all_subset_permutation_tables, check_dimension,
                      comparable, full_set, is_subset, submasks_ascending)
from .posets import Poset, antichain, chain, diamond, embed_poset, vee, wedge


class BudgetExceeded(Exception):
    pass


@dataclass
class SolveResult:
    value: int
    witness: Coloring | None
    status: str                  # "optimal" | "lower_bound_only"
    nodes_explored: int
    cap: int
    seed_source: str = "none"

    def to_json_dict(self) -> dict:
        return {"value": self.value, "status": self.status,
                "nodes_explored": self.nodes_explored, "cap": self.cap,
                "seed_source": self.seed_source,
                "witness": self.witness.to_json_dict() if self.witness else None}


class _FeasibilitySearch:
    """One reusable depth-first engine; run(m) returns the lexicographically
    least valid assignment with all classes >= m, or None."""

    def __init__(self, n, l, members, mode, partial, budget, sym_depth):
        self.n = n
        self.size = 1 << n
        self.l = l
        self.mode = mode
        self.partial = partial
        self.budget = budget
        self.nodes = 0
        self.sym_depth = sym_depth
        self.sym_invs = []
        if sym_depth > 0:
            for table in all_subset_permutation_tables(n)[1:]:
                inv = [0] * self.size
                for s, img in enumerate(table):
                    inv[img] = s
                self.sym_invs.append(inv)
        # induced antichain members get a bitmask path; everything else goes
        # through the generic embedding engine
        if mode == "induced":
            self.antichain_sizes = sorted({p.size for p in members if p.is_antichain()})
            self.members = [p for p in members if not p.is_antichain()]
        else:
            self.antichain_sizes = []
            self.members = list(members)
        self.incomp = None
        if self.antichain_sizes:
            self.incomp = []
            for s in range(self.size):
                mask = 0
                for t in range(self.size):
                    st = s & t
                    if st != s and st != t:
                        mask |= 1 << t
                self.incomp.append(mask)
        self.assign: list[int] = []
        self.counts: list[int] = []
        self.colored: list[int] = []
        self.color_mask = [0] * (l + 1)

    def run(self, m: int):
        self.assign = [0] * self.size
        self.counts = [0] * (self.l + 1)
        self.colored = []
        self.color_mask = [0] * (self.l + 1)
        if self._dfs(0, 0, m):
            return list(self.assign)
        return None

    def _canonical_prefix(self, pos: int) -> bool:
        # Prune when some element permutation maps the assigned prefix to a
        # lexicographically smaller, fully determined one; any completion of
        # the current prefix then has a smaller equivalent elsewhere.
        assign = self.assign
        for inv in self.sym_invs:
            for t in range(pos):
                q = inv[t]
                if q >= pos:
                    break
                b, a = assign[q], assign[t]
                if b < a:
                    return False
                if b > a:
                    break
        return True

    def _rainbow_antichain_with(self, pos: int, k: int) -> bool:
        """A rainbow antichain of size k through pos, via incomparability
        bitmasks over the colored positions."""
        if k == 1:
            return True
        inc = self.incomp[pos]
        base = self.assign[pos]
        colors = [c for c in range(1, self.l + 1)
                  if c != base and self.color_mask[c] & inc]
        need = k - 1

        def rec(i: int, mask: int, left: int) -> bool:
            if left == 0:
                return True
            if len(colors) - i < left:
                return False
            avail = self.color_mask[colors[i]] & mask
            while avail:
                bit = avail & -avail
                if rec(i + 1, mask & self.incomp[bit.bit_length() - 1], left - 1):
                    return True
                avail &= avail - 1
            return rec(i + 1, mask, left)

        return rec(0, inc, need)

    def _rainbow_through(self, pos: int) -> bool:
        for k in self.antichain_sizes:
            if self._rainbow_antichain_with(pos, k):
                return True
        for p in self.members:
            if embed_poset(p, self.mode, self.colored, labels=self.assign,
                           required=(pos,), n=self.n) is not None:
                return True
        return False

    def _dfs(self, pos: int, used: int, m: int) -> bool:
        if pos == self.size:
            return all(self.counts[i] >= m for i in range(1, self.l + 1))
        self.nodes += 1
        if self.nodes > self.budget:
            raise BudgetExceeded(self.nodes)
        deficit = 0
        for i in range(1, self.l + 1):
            d = m - self.counts[i]
            if d > 0:
                deficit += d
        if deficit > self.size - pos:
            return False
        if self.sym_invs and 0 < pos <= self.sym_depth and not self._canonical_prefix(pos):
            return False
        if self.partial:
            if self._dfs(pos + 1, used, m):
                return True
        top = used + 1 if used < self.l else self.l
        bit = 1 << pos
        for c in range(1, top + 1):
            self.assign[pos] = c
            self.counts[c] += 1
            self.colored.append(pos)
            self.color_mask[c] |= bit
            if not self._rainbow_through(pos):
                if self._dfs(pos + 1, used if c <= used else c, m):
                    return True
            self.counts[c] -= 1
            self.colored.pop()
            self.color_mask[c] &= ~bit
        self.assign[pos] = 0
        return False


def _equal_split_coloring(n: int, l: int, kind: str) -> Coloring:
    size = 1 << n
    cap = size // l
    assign = [0] * size
    if kind == "total":
        for h in range(size):
            assign[h] = h % l + 1
    else:
        for h in range(cap * l):
            assign[h] = h % l + 1
    return Coloring(n, l, assign)


def _iso(p: Poset, q: Poset) -> bool:
    return p.size == q.size and p.size <= 8 and p.is_isomorphic_to(q)


def _construction_seed(n: int, l: int, forbidden: PosetFamily, kind: str):
    """Best valid lower-bound witness any generator provides, or None."""
    mems = forbidden.members
    induced = forbidden.mode == "induced"
    candidates = []

    def attempt(fn, *args, **kwargs):
        try:
            candidates.append(fn(*args, **kwargs))
        except ValueError:
            pass

    if induced and kind == "partial" and all(p.is_antichain() and p.size >= 2 for p in mems):
        attempt(chain_interval_coloring, n, l)
    if induced and len(mems) == 1:
        p = mems[0]
        if l == 4 and _iso(p, diamond()):
            attempt(lift3_coloring, n, "four_color")
        if l == 3 and _iso(p, chain(3)):
            attempt(p3_total_coloring, n)
        if l == p.size and l >= 4 and _iso(p, chain(p.size)):
            attempt(pk_coloring, n, l)
    if induced and l == 3 and kind == "partial" and len(mems) == 3:
        shapes = {chain(3).canonical_form(), vee(2).canonical_form(),
                  wedge(2).canonical_form()}
        if all(p.size <= 8 for p in mems) and {p.canonical_form() for p in mems} == shapes:
            attempt(lift3_coloring, n, "three_color")
    attempt(incomparable_traces, n, l, False, forbidden)
    if kind == "total":
        attempt(incomparable_traces, n, l, True, forbidden)

    best = None
    for report in candidates:
        col = report.coloring
        if col is None or col.l != l:
            continue
        if kind == "total" and not col.is_total():
            continue
        if has_rainbow(col, forbidden):
            continue
        value = class_stats(col).min_size
        if best is None or value > best[0]:
            best = (value, col, f"construction:{report.name}")
    return best


def solve_min_class(n: int, l: int, forbidden: PosetFamily, kind: str = "partial",
                    budget: int = 10 ** 9, use_construction_seed: bool = True,
                    sym_prune: bool | None = None) -> SolveResult:
    """Largest m such that some valid coloring keeps every class at size >= m.

    kind "partial" admits uncolored sets, "total" does not.  The answer never
    exceeds floor(2^n / l).  Exceeding the node budget downgrades the status
    to lower_bound_only; it never yields a wrong "optimal".  Witnesses found
    by search are the lexicographically least valid assignment; a witness
    taken straight from a construction is reported via seed_source.
    """
    check_dimension(n)
    if l < 1:
        raise ValueError("need at least one color")
    if kind not in ("partial", "total"):
        raise ValueError(f"unknown kind {kind!r}")
    size = 1 << n
    cap = size // l
    members = [p for p in forbidden.members if p.size <= l]
    if len(members) < len(forbidden.members):
        warnings.warn("forbidden members larger than the color count are "
                      "vacuously avoided", stacklevel=2)
    if not members:
        return SolveResult(cap, _equal_split_coloring(n, l, kind), "optimal",
                           0, cap, "trivial-cap")

    lo, witness, source = 0, None, "none"
    if use_construction_seed:
        seeded = _construction_seed(n, l, forbidden, kind)
        if seeded:
            lo, witness, source = seeded
    if witness is None and kind == "partial":
        witness, source = Coloring.empty(n, l), "empty"
    if witness is not None and lo >= cap:
        return SolveResult(cap, witness, "optimal", 0, cap, source)

    if sym_prune is None:
        sym_prune = n <= CANONICAL_CAP
    search = _FeasibilitySearch(n, l, members, forbidden.mode, kind == "partial",
                                budget, n if sym_prune else 0)
    status = "optimal"
    if witness is None:
        # total colorings may be infeasible outright (1-element members)
        try:
            res = search.run(0)
        except BudgetExceeded:
            return SolveResult(-1, None, "lower_bound_only", search.nodes, cap, source)
        if res is None:
            return SolveResult(-1, None, "optimal", search.nodes, cap, "infeasible")
        witness, source = Coloring(n, l, res), "search"

    hi = cap
    while lo < hi:
        mid = (lo + hi + 1) // 2
        try:
            res = search.run(mid)
        except BudgetExceeded:
            status = "lower_bound_only"
            break
        if res is not None:
            lo = mid
            witness, source = Coloring(n, l, res), "search"
        else:
            hi = mid - 1

    stats = class_stats(witness)
    if stats.min_size < lo or has_rainbow(witness, forbidden):
        raise AssertionError("internal error: unsound witness")
    if kind == "total" and not witness.is_total():
        raise AssertionError("internal error: partial witness for a total solve")
    return SolveResult(lo, witness, status, search.nodes, cap, source)


# ---------------------------------------------------------------------------
# chain decomposition of pairwise cross-comparable families


@dataclass(frozen=True)
class ChainDecomposition:
    chain: tuple[int, ...]               # prefix unions, empty set to ground set
    parts: tuple[frozenset[int], ...]    # partition of 1..t, one block per family


def ordered_set_partitions(n: int):
    """All chains from the empty set to the ground set, one per ordered set
    partition of [n]; deterministic order."""
    def rec(remaining):
        if not remaining:
            yield []
            return
        for b in submasks_ascending(remaining):
            if b == 0:
                continue
            for rest in rec(remaining & ~b):
                yield [b] + rest

    for blocks in rec(full_set(n)):
        out = [0]
        for b in blocks:
            out.append(out[-1] | b)
        yield tuple(out)


def az_decompose(n: int, families) -> ChainDecomposition | None:
    """Chain plus interval assignment housing pairwise cross-comparable
    families (Ahlswede-Zhang style): family i lives on the chain itself plus
    the open intervals indexed by its part.

    The hypothesis (every cross pair of sets from two distinct families is
    comparable) is checked first; a violation is an error naming the pair.
    When the hypothesis holds a decomposition always exists.
    """
    check_dimension(n)
    families = [sorted(set(f)) for f in families]
    if not families:
        raise ValueError("need at least one family")
    for i in range(len(families)):
        for j in range(i + 1, len(families)):
            for fi in families[i]:
                for fj in families[j]:
                    if not comparable(fi, fj):
                        raise ValueError(
                            f"hypothesis violated: families {i + 1} and {j + 1} "
                            f"contain the incomparable pair ({fi}, {fj})")
    m = len(families)
    for ch in ordered_set_partitions(n):
        chainset = set(ch)
        t = len(ch) - 1
        needed = [set() for _ in range(m)]
        ok = True
        for fi, fam in enumerate(families):
            for f in fam:
                if f in chainset:
                    continue
                h = next((h for h in range(1, t + 1) if is_subset(f, ch[h])), None)
                if h is None or not is_subset(ch[h - 1], f):
                    ok = False
                    break
                needed[fi].add(h)
            if not ok:
                break
        if not ok:
            continue
        if sum(len(s) for s in needed) != len(set().union(*needed)):
            continue
        leftovers = set(range(1, t + 1)) - set().union(*needed)
        if leftovers:
            target = next((i for i, s in enumerate(needed) if not s), 0)
            needed[target] |= leftovers
        return ChainDecomposition(ch, tuple(frozenset(s) for s in needed))
    return None


# ---------------------------------------------------------------------------
# cross-incomparable pair product bound


@dataclass(frozen=True)
class CrossSpernerResult:
    is_cross_sperner: bool
    product: int
    bound_ok: bool
    violating_pair: tuple[int, int] | None = None


def cross_sperner_check(n: int, f1, f2) -> CrossSpernerResult:
    """Whether every cross pair is incomparable, and whether the family-size
    product respects 2^(2n-4) (compared integer-exactly)."""
    f1, f2 = sorted(set(f1)), sorted(set(f2))
    violating = None
    for a in f1:
        for b in f2:
            if comparable(a, b):
                violating = (a, b)
                break
        if violating:
            break
    product = len(f1) * len(f2)
    return CrossSpernerResult(violating is None, product,
                              16 * product <= 1 << (2 * n), violating)


# ---------------------------------------------------------------------------
# greedy tuple extraction and the incidence-cone cover diagnostic


@dataclass(frozen=True)
class TupleSequence:
    tuples: tuple[tuple[int, ...], ...]
    used_per_color: tuple[tuple[int, ...], ...]   # coordinate-disjointness ledger


@dataclass(frozen=True)
class GreedyCoverReport:
    tuples: TupleSequence
    leftover_clean: bool
    cover_ok: bool
    uncovered: tuple = ()


def _least_antichain_tuple(avail):
    k = len(avail)
    chosen: list[int] = []

    def rec(i: int) -> bool:
        if i == k:
            return True
        for x in avail[i]:
            if all(not comparable(x, y) for y in chosen):
                chosen.append(x)
                if rec(i + 1):
                    return True
                chosen.pop()
        return False

    return tuple(chosen) if rec(0) else None


def greedy_tuples_and_cover(c: Coloring, k: int) -> GreedyCoverReport:
    """Extract a maximal sequence of pairwise-incomparable k-tuples, one set
    per color 1..k with no set reused in its coordinate, then test that
    every class-(k+1) set is comparable to some member of every tuple.

    Each extracted tuple is the lexicographically least available one.
    Requires l >= k+1 and a coloring with no rainbow antichain of size k+1.
    """
    if k < 1:
        raise ValueError("need k >= 1")
    if c.l < k + 1:
        raise ValueError(f"coloring has l={c.l} < k+1={k + 1} colors")
    w = validate(c, PosetFamily((antichain(k + 1),), "induced"))
    if w is not None:
        raise ValueError(f"coloring admits a rainbow antichain of size {k + 1}: {w.sets}")
    avail = [c.class_ids(i) for i in range(1, k + 1)]
    tuples = []
    while True:
        t = _least_antichain_tuple(avail)
        if t is None:
            break
        tuples.append(t)
        for i, x in enumerate(t):
            avail[i].remove(x)
    leftover_clean = _least_antichain_tuple(avail) is None
    uncovered = []
    for f in c.class_ids(k + 1):
        for t in tuples:
            if not any(comparable(f, x) for x in t):
                uncovered.append((f, t))
    seq = TupleSequence(tuple(tuples),
                        tuple(tuple(t[i] for t in tuples) for i in range(k)))
    return GreedyCoverReport(seq, leftover_clean, not uncovered, tuple(uncovered))
