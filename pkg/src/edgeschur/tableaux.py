"""Semistandard and edge labeled tableaux.

An edge labeled tableau stores its box entries plus finite label sets on
horizontal edges.  Edge position (i, j) names the horizontal edge that is
the UPPER edge of cell (i, j); its weight diagonal is j - i, the content of
the cell below the edge.  Labels on edge (i, j) are strictly greater than
the entry in cell (i-1, j) and strictly smaller than the entry in cell
(i, j), whenever those cells carry entries.

Besides the positional form there is an equivalent chain form: a chain of
horizontal strips mu = nu^0 <= ... <= nu^n = lambda (recording which boxes
hold each value) together with, for each value v, the subset of deformed
diagonals of step v that carry a label v.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator, Optional

from .poly import MultiPoly, av, monomial_mul, xv
from .shapes import (Partition, SkewShape, deformed_diagonals,
                     is_horizontal_strip, strip_chains)


class ValidationError(ValueError):
    pass


class ChainInvariantViolation(AssertionError):
    pass


Cell = tuple[int, int]


@dataclass(frozen=True)
class SemistandardTableau:
    shape: SkewShape
    entries: tuple[tuple[Cell, int], ...]

    @staticmethod
    def of(shape: SkewShape, entry_map: dict[Cell, int]) -> "SemistandardTableau":
        t = SemistandardTableau(shape, tuple(sorted(entry_map.items())))
        t.validate()
        return t

    def entry_map(self) -> dict[Cell, int]:
        return dict(self.entries)

    def entry(self, i: int, j: int) -> Optional[int]:
        return self.entry_map().get((i, j))

    def validate(self) -> None:
        em = self.entry_map()
        cells = set(self.shape.cells())
        if set(em) != cells:
            raise ValidationError("entries do not cover the shape")
        for (i, j), v in em.items():
            if v < 1:
                raise ValidationError(f"entry {v} at {(i, j)} below 1")
            if (i, j + 1) in em and em[(i, j + 1)] < v:
                raise ValidationError(f"row violation at {(i, j)}")
            if (i + 1, j) in em and em[(i + 1, j)] <= v:
                raise ValidationError(f"column violation at {(i, j)}")

    def x_weight(self) -> MultiPoly:
        m: tuple = ()
        for _, v in self.entries:
            m = monomial_mul(m, ((xv(v), 1),))
        return MultiPoly.monomial(m)

    def content_vector(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for _, v in self.entries:
            counts[v - 1] += 1
        return tuple(counts)


def enumerate_ssyt(shape: SkewShape, n: int) -> list[SemistandardTableau]:
    """All semistandard fillings of the shape with entries in [n]."""
    out = []
    for chain in strip_chains(shape, n):
        em: dict[Cell, int] = {}
        for v in range(1, n + 1):
            lo, hi = chain[v - 1], chain[v]
            for i in range(1, hi.extent + 1):
                for j in range(lo.part(i) + 1, hi.part(i) + 1):
                    em[(i, j)] = v
        out.append(SemistandardTableau(shape, tuple(sorted(em.items()))))
    return out


def ssyt_from_chain(shape: SkewShape, chain) -> SemistandardTableau:
    em: dict[Cell, int] = {}
    for v in range(1, len(chain)):
        lo, hi = chain[v - 1], chain[v]
        for i in range(1, hi.extent + 1):
            for j in range(lo.part(i) + 1, hi.part(i) + 1):
                em[(i, j)] = v
    return SemistandardTableau(shape, tuple(sorted(em.items())))


@dataclass(frozen=True)
class EdgeLabeledTableau:
    shape: SkewShape
    extent: int                     # declared number of rows
    window: tuple[int, int]         # diagonal window [m, M]
    entries: tuple[tuple[Cell, int], ...]
    edge_sets: tuple[tuple[Cell, tuple[int, ...]], ...]

    @staticmethod
    def of(shape: SkewShape, extent: int, window: tuple[int, int],
           entry_map: dict[Cell, int],
           edges: dict[Cell, tuple[int, ...]]) -> "EdgeLabeledTableau":
        t = EdgeLabeledTableau(
            shape, extent, window, tuple(sorted(entry_map.items())),
            tuple(sorted((pos, tuple(sorted(set(vals))))
                         for pos, vals in edges.items() if vals)))
        t.validate()
        return t

    def entry_map(self) -> dict[Cell, int]:
        return dict(self.entries)

    def edge_map(self) -> dict[Cell, tuple[int, ...]]:
        return dict(self.edge_sets)

    def entry(self, i: int, j: int) -> Optional[int]:
        return self.entry_map().get((i, j))

    # -- validity ------------------------------------------------------

    def legal_edge_position(self, i: int, j: int) -> bool:
        """Edges adjacent to the filled region, the lower staircase of the
        inner shape, or the zeroth row right of the outer shape."""
        if j < 1 or i < 1 or i > self.extent + 1:
            return False
        m, M = self.window
        if not (m <= j - i <= M):
            return False
        sh = self.shape
        if sh.has_cell(i, j) or sh.has_cell(i - 1, j):
            return True
        inner = sh.inner
        if i >= 2 and inner.part(i - 1) >= j and sh.outer.part(i) < j:
            return True  # lower boundary of the inner shape
        if i == 1 and sh.outer.part(1) < j:
            return True  # zeroth row, right of the outer shape
        return False

    def validate(self) -> None:
        SemistandardTableau(self.shape, self.entries).validate()
        if self.extent < self.shape.extent:
            raise ValidationError("declared extent smaller than the shape")
        em = self.entry_map()
        for (i, j), vals in self.edge_sets:
            if not vals:
                raise ValidationError(f"empty edge set at {(i, j)}")
            if list(vals) != sorted(set(vals)):
                raise ValidationError(f"edge set at {(i, j)} not strictly sorted")
            if not self.legal_edge_position(i, j):
                raise ValidationError(f"illegal edge position {(i, j)}")
            above = em.get((i - 1, j))
            below = em.get((i, j))
            if above is not None and vals[0] <= above:
                raise ValidationError(
                    f"label {vals[0]} at edge {(i, j)} not above entry {above}")
            if below is not None and vals[-1] >= below:
                raise ValidationError(
                    f"label {vals[-1]} at edge {(i, j)} not below entry {below}")

    # -- weights ---------------------------------------------------------

    def weight(self) -> MultiPoly:
        """Single monomial: x per entry, x_v * a_{j-i} per label v at (i, j)."""
        m: tuple = ()
        for _, v in self.entries:
            m = monomial_mul(m, ((xv(v), 1),))
        for (i, j), vals in self.edge_sets:
            for v in vals:
                m = monomial_mul(m, ((xv(v), 1),))
            d = j - i
            if len(vals) == 1:
                m = monomial_mul(m, ((av(d), 1),))
            else:
                m = monomial_mul(m, ((av(d), len(vals)),))
        return MultiPoly.monomial(m)

    def content_vector(self, n: int) -> tuple[int, ...]:
        counts = [0] * n
        for _, v in self.entries:
            counts[v - 1] += 1
        for _, vals in self.edge_sets:
            for v in vals:
                counts[v - 1] += 1
        return tuple(counts)

    # -- serialization ---------------------------------------------------

    def to_json(self) -> dict:
        return {
            "shape": self.shape.to_json(),
            "extent": self.extent,
            "window": list(self.window),
            "entries": [[i, j, v] for (i, j), v in self.entries],
            "edges": [[i, j, list(vals)] for (i, j), vals in self.edge_sets],
        }

    @staticmethod
    def from_json(d: dict) -> "EdgeLabeledTableau":
        return EdgeLabeledTableau.of(
            SkewShape.from_json(d["shape"]), d["extent"],
            tuple(d["window"]),
            {(i, j): v for i, j, v in d["entries"]},
            {(i, j): tuple(vals) for i, j, vals in d["edges"]})

    def key(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)

    def render(self) -> str:
        """Plain-text grid; edge sets print inside braces above their cell."""
        em = self.edge_map()
        width = max([j for (_, j), _ in self.entries] +
                    [j for (_, j), _ in self.edge_sets] + [1])
        lines = []
        for i in range(1, self.extent + 2):
            sets_row = []
            cells_row = []
            for j in range(1, width + 1):
                s = em.get((i, j))
                sets_row.append("{" + ",".join(map(str, s)) + "}" if s else "")
                v = self.entry(i, j)
                if v is not None:
                    cells_row.append(str(v))
                elif self.shape.inner.part(i) >= j:
                    cells_row.append(".")
                else:
                    cells_row.append("")
            if any(sets_row):
                lines.append(" ".join(f"{s:>6}" for s in sets_row))
            if i <= self.extent:
                lines.append(" ".join(f"{c:>6}" for c in cells_row))
        return "\n".join(lines)


def weight_elt(t: EdgeLabeledTableau) -> MultiPoly:
    t.validate()
    return t.weight()


# -- reading words -----------------------------------------------------

BoxLocator = tuple[str, int, int]          # ("box", i, j)
EdgeLocator = tuple[str, int, int, int]    # ("edge", i, j, value)


def reading_word(t) -> list[tuple[int, tuple]]:
    """Diagonal reading word with locators.

    Diagonals are scanned in increasing content; within a diagonal the
    attachment cells run bottom-to-top (row 0 virtual cells last).  Each
    attachment cell (r, c) first emits the labels of the edge below it
    (edge position (r+1, c)) in decreasing order, then its entry.
    """
    if isinstance(t, SemistandardTableau):
        em = t.entry_map()
        edges: dict[Cell, tuple[int, ...]] = {}
    else:
        em = t.entry_map()
        edges = t.edge_map()
    attach: dict[Cell, tuple[Optional[int], tuple[int, ...]]] = {}
    for (i, j), v in em.items():
        attach[(i, j)] = (v, ())
    for (i, j), vals in edges.items():
        cell = (i - 1, j)
        ent = attach.get(cell, (None, ()))[0]
        attach[cell] = (ent, vals)
    by_diag: dict[int, list[Cell]] = {}
    for (r, c) in attach:
        by_diag.setdefault(c - r, []).append((r, c))
    word: list[tuple[int, tuple]] = []
    for d in sorted(by_diag):
        for (r, c) in sorted(by_diag[d], key=lambda rc: -rc[0]):
            ent, vals = attach[(r, c)]
            for v in reversed(vals):
                word.append((v, ("edge", r + 1, c, v)))
            if ent is not None:
                word.append((ent, ("box", r, c)))
    return word


# -- chain form --------------------------------------------------------


@dataclass(frozen=True)
class ChainForm:
    shape: SkewShape
    window: tuple[int, int]
    chain: tuple[Partition, ...]                 # mu = nu^0 <= ... <= nu^n
    labels: tuple[tuple[int, ...], ...]          # labels[v-1] = sorted diagonals

    def validate(self) -> None:
        for v in range(1, len(self.chain)):
            lo, hi = self.chain[v - 1], self.chain[v]
            if not is_horizontal_strip(hi, lo):
                raise ValidationError(f"step {v} is not a horizontal strip")
            allowed = deformed_diagonals(hi, lo, self.window)
            if not set(self.labels[v - 1]) <= allowed:
                raise ValidationError(
                    f"labels {self.labels[v - 1]} not deformed at step {v}")


def chain_to_positional(c: ChainForm) -> EdgeLabeledTableau:
    """Place each chain label at the unique admissible edge position."""
    c.validate()
    n = len(c.chain) - 1
    extent = c.shape.extent
    sh = c.shape
    em: dict[Cell, int] = {}
    for v in range(1, n + 1):
        lo, hi = c.chain[v - 1], c.chain[v]
        for i in range(1, hi.extent + 1):
            for j in range(lo.part(i) + 1, hi.part(i) + 1):
                em[(i, j)] = v
    scratch = EdgeLabeledTableau(sh, extent, c.window,
                                 tuple(sorted(em.items())), ())
    edges: dict[Cell, list[int]] = {}
    for v in range(1, n + 1):
        for d in c.labels[v - 1]:
            spots = []
            for i in range(1, extent + 2):
                j = d + i
                if not scratch.legal_edge_position(i, j):
                    continue
                above = em.get((i - 1, j))
                below = em.get((i, j))
                if above is not None and v <= above:
                    continue
                if below is not None and v >= below:
                    continue
                spots.append((i, j))
            if len(spots) != 1:
                raise ChainInvariantViolation(
                    f"label {v} on diagonal {d} admits positions {spots}")
            edges.setdefault(spots[0], []).append(v)
    return EdgeLabeledTableau.of(sh, extent, c.window, em,
                                 {pos: tuple(sorted(vs)) for pos, vs in edges.items()})


def positional_to_chain(t: EdgeLabeledTableau, n: int) -> ChainForm:
    lam = t.shape.outer.with_extent(t.extent)
    mu = t.shape.inner.with_extent(t.extent)
    em = t.entry_map()
    chain = [mu]
    for v in range(1, n + 1):
        parts = [mu.part(i) for i in range(1, t.extent + 1)]
        for (i, j), val in em.items():
            if val <= v:
                parts[i - 1] = max(parts[i - 1], j)
        chain.append(Partition(tuple(parts)))
    labels: list[list[int]] = [[] for _ in range(n)]
    for (i, j), vals in t.edge_sets:
        for v in vals:
            labels[v - 1].append(j - i)
    cf = ChainForm(SkewShape(lam, mu), t.window, tuple(chain),
                   tuple(tuple(sorted(ls)) for ls in labels))
    cf.validate()
    return cf


def enumerate_elt(shape: SkewShape, n: int, window: tuple[int, int],
                  extent: int) -> Iterator[EdgeLabeledTableau]:
    """All edge labeled tableaux with entries and labels in [n]."""
    lam = shape.outer.with_extent(extent)
    mu = shape.inner.with_extent(extent)
    sh = SkewShape(lam, mu)
    for chain in strip_chains(sh, n):
        deformed = [sorted(deformed_diagonals(chain[v], chain[v - 1], window))
                    for v in range(1, n + 1)]

        def go(v: int, chosen: list[tuple[int, ...]]):
            if v > n:
                yield chain_to_positional(
                    ChainForm(sh, window, chain, tuple(chosen)))
                return
            opts = deformed[v - 1]
            for mask in range(1 << len(opts)):
                subset = tuple(opts[b] for b in range(len(opts))
                               if mask >> b & 1)
                yield from go(v + 1, chosen + [subset])

        yield from go(1, [])
