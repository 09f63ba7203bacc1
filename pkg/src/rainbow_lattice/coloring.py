"""Partial colorings of B_n, class statistics, and rainbow-copy validation.

A rainbow copy of a forbidden poset is a copy all of whose sets are colored
with pairwise distinct colors; uncolored sets never participate.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from . import lattice
from .posets import Poset, build_poset, embed_poset

UNCOLORED = 0


@dataclass
class Coloring:
    """Assignment of each subset id to a color in 1..l, or 0 for uncolored."""

    n: int
    l: int
    assign: list[int]

    def __post_init__(self):
        lattice.check_dimension(self.n)
        if self.l < 1:
            raise ValueError(f"need at least one color, got l={self.l}")
        if len(self.assign) != 1 << self.n:
            raise ValueError(f"assignment length {len(self.assign)} != 2^{self.n}")
        bad = [v for v in self.assign if not 0 <= v <= self.l]
        if bad:
            raise ValueError(f"color {bad[0]} outside 0..{self.l}")

    @classmethod
    def empty(cls, n: int, l: int) -> "Coloring":
        return cls(n, l, [UNCOLORED] * (1 << n))

    def color_of(self, bits: int) -> int:
        return self.assign[bits]

    def is_total(self) -> bool:
        return UNCOLORED not in self.assign

    def colored_ids(self) -> list[int]:
        return [s for s, v in enumerate(self.assign) if v]

    def class_ids(self, color: int) -> list[int]:
        return [s for s, v in enumerate(self.assign) if v == color]

    def copy(self) -> "Coloring":
        return Coloring(self.n, self.l, list(self.assign))

    def relabeled(self, color_map) -> "Coloring":
        """Apply a permutation of the colors 1..l (dict or sequence of images)."""
        out = [color_map[v] if v else 0 for v in self.assign]
        return Coloring(self.n, self.l, out)

    def permuted(self, perm) -> "Coloring":
        """Apply a permutation of ground elements (image form over range(n))."""
        table = lattice.subset_permutation_table(self.n, perm)
        out = [0] * len(self.assign)
        for s, v in enumerate(self.assign):
            out[table[s]] = v
        return Coloring(self.n, self.l, out)

    def to_json_dict(self) -> dict:
        return {"n": self.n, "l": self.l, "colors": list(self.assign)}

    @classmethod
    def from_json_dict(cls, data: dict) -> "Coloring":
        return cls(int(data["n"]), int(data["l"]), [int(v) for v in data["colors"]])


@dataclass(frozen=True)
class ClassStats:
    sizes: tuple[int, ...]
    uncolored: int
    min_size: int


def class_stats(c: Coloring) -> ClassStats:
    """Exact per-class counts; an empty class makes min_size zero."""
    sizes = [0] * (c.l + 1)
    for v in c.assign:
        sizes[v] += 1
    per_class = tuple(sizes[1:])
    return ClassStats(per_class, sizes[0], min(per_class))


@dataclass(frozen=True)
class PosetFamily:
    """A nonempty family of forbidden posets plus the copy mode."""

    members: tuple[Poset, ...]
    mode: str = "induced"

    def __post_init__(self):
        if not self.members:
            raise ValueError("forbidden family must be nonempty")
        if self.mode not in ("induced", "weak"):
            raise ValueError(f"unknown mode {self.mode!r}")

    @classmethod
    def from_spec(cls, spec: str, mode: str = "induced") -> "PosetFamily":
        members = tuple(build_poset(tok) for tok in spec.split(",") if tok.strip())
        return cls(members, mode)

    def spec_string(self) -> str:
        return ",".join(p.name or f"{{size:{p.size}}}" for p in self.members)


@dataclass(frozen=True)
class RainbowWitness:
    member_index: int
    poset: Poset
    sets: tuple[int, ...]            # ascending subset ids
    embedding: dict = field(compare=False)
    colors: tuple[int, ...] = ()


def _applicable_members(c: Coloring, forbidden: PosetFamily, warn: bool = True):
    out = []
    for idx, p in enumerate(forbidden.members):
        if p.size > c.l:
            if warn:
                warnings.warn(
                    f"forbidden poset {p!r} has more elements than colors "
                    f"(l={c.l}); vacuously avoided", stacklevel=3)
            continue
        if warn and forbidden.mode == "weak" and p.is_antichain() and p.size >= 2:
            warnings.warn(
                f"weak antichain {p!r} is degenerate: any {p.size} distinctly "
                "colored sets form a copy", stacklevel=3)
        out.append((idx, p))
    return out


def has_rainbow(c: Coloring, forbidden: PosetFamily, containing: int | None = None) -> bool:
    """Fast existence check; no witness minimization, no warnings."""
    universe = c.colored_ids()
    required = (containing,) if containing is not None else ()
    for _, p in _applicable_members(c, forbidden, warn=False):
        if embed_poset(p, forbidden.mode, universe, labels=c.assign,
                       required=required, n=c.n) is not None:
            return True
    return False


def _lexmin_sets(c: Coloring, poset: Poset, mode: str, must: int | None):
    """Witness set-tuple that is lexicographically least when sorted ascending."""
    universe = c.colored_ids()
    base_req = () if must is None else (must,)
    if embed_poset(poset, mode, universe, labels=c.assign,
                   required=base_req, n=c.n) is None:
        return None
    chosen: list[int] = []
    while len(chosen) < poset.size:
        floor = chosen[-1] if chosen else -1
        for x in universe:
            if x <= floor:
                continue
            pool = chosen + [y for y in universe if y >= x]
            req = set(chosen) | {x} | set(base_req)
            if not req <= set(pool):
                continue
            if embed_poset(poset, mode, pool, labels=c.assign,
                           required=req, n=c.n) is not None:
                chosen.append(x)
                break
        else:
            raise AssertionError("witness disappeared during minimization")
    emb = embed_poset(poset, mode, chosen, labels=c.assign,
                      required=chosen, n=c.n)
    return tuple(chosen), emb


def _best_witness(c: Coloring, forbidden: PosetFamily, must: int | None) -> RainbowWitness | None:
    best = None
    for idx, p in _applicable_members(c, forbidden):
        found = _lexmin_sets(c, p, forbidden.mode, must)
        if found is None:
            continue
        sets, emb = found
        if best is None or sets < best.sets:
            best = RainbowWitness(idx, p, sets, emb,
                                  tuple(c.assign[s] for s in sets))
    return best


def validate(c: Coloring, forbidden: PosetFamily) -> RainbowWitness | None:
    """None when no rainbow copy of any member exists; otherwise the witness
    whose ascending set tuple is lexicographically least."""
    return _best_witness(c, forbidden, None)


def validate_incremental(c: Coloring, just_colored: int,
                         forbidden: PosetFamily) -> RainbowWitness | None:
    """Same verdict as validate() when the coloring was valid before
    just_colored received its color: only witnesses through it are searched."""
    if c.assign[just_colored] == UNCOLORED:
        raise ValueError(f"set {just_colored} is uncolored")
    return _best_witness(c, forbidden, just_colored)


def canonicalize(c: Coloring) -> Coloring:
    """Lexicographically least coloring in the S_n orbit of c (ground-element
    relabelings only; colors are untouched).  Exact, capped at small n."""
    return Coloring(c.n, c.l, list(lattice.canonical_assignment(c.n, c.assign)))
