"""RSK row insertion and the uncrowding bijection on edge labeled tableaux.

Uncrowding proceeds along diagonals from the lower left, RSK-inserting each
diagonal's reading word (which is strictly decreasing, so every insertion
path adds one cell per row, strictly descending).  The recording filling Q
tracks where the insertion shape outgrows the column-justified part of the
original shape: old entries keep their column and sink to the lowest skew
cells, new cells take the current diagonal index.

The inverse recovers one diagonal at a time by reverse bumping, bottom row
first, then redistributes the extracted strictly-decreasing word into box
entries and edge sets.  The redistribution may be locally ambiguous, so it
is resolved by a small backtracking search; exactly one global solution
exists on the image of the forward map.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .shapes import Partition, SkewShape
from .tableaux import EdgeLabeledTableau, SemistandardTableau, reading_word


class MalformedPair(ValueError):
    pass


Rows = tuple[tuple[int, ...], ...]


def rsk_insert(rows: Rows, word) -> Rows:
    """Standard row insertion of the word, left to right."""
    out = [list(r) for r in rows]
    for x in word:
        cur = x
        r = 0
        while True:
            if r == len(out):
                out.append([cur])
                break
            row = out[r]
            pos = None
            for k, v in enumerate(row):
                if v > cur:
                    pos = k
                    break
            if pos is None:
                row.append(cur)
                break
            row[pos], cur = cur, row[pos]
            r += 1
    return tuple(tuple(r) for r in out)


def rsk_remove(rows: Rows, cell: tuple[int, int]) -> tuple[Rows, int]:
    """Reverse-bump the outer corner cell (1-indexed); returns the letter."""
    r, c = cell
    out = [list(x) for x in rows]
    if len(out[r - 1]) != c:
        raise MalformedPair(f"cell {cell} is not an outer corner")
    cur = out[r - 1].pop()
    if not out[r - 1]:
        out.pop()
    for rr in range(r - 2, -1, -1):
        row = out[rr]
        pos = None
        for k in range(len(row) - 1, -1, -1):
            if row[k] < cur:
                pos = k
                break
        if pos is None:
            raise MalformedPair("reverse bump found no smaller entry")
        row[pos], cur = cur, row[pos]
    return tuple(tuple(x) for x in out), cur


def rows_shape(rows: Rows) -> Partition:
    return Partition(tuple(len(r) for r in rows))


def rows_to_ssyt(rows: Rows) -> SemistandardTableau:
    shape = SkewShape.of([len(r) for r in rows])
    return SemistandardTableau.of(
        shape, {(i + 1, j + 1): v for i, r in enumerate(rows)
                for j, v in enumerate(r)})


def _column_counts(p: Partition, width: int) -> list[int]:
    return [len([q for q in p.parts if q >= j]) for j in range(1, width + 1)]


def _slid_prefix(lam: Partition, c: int) -> Partition:
    """Columns of lam restricted to contents <= c, top-justified."""
    width = lam.first()
    cols = []
    for j in range(1, width + 1):
        height = len([1 for r in range(1, lam.extent + 1)
                      if lam.part(r) >= j and j - r <= c])
        cols.append(height)
    parts = tuple(len([h for h in cols if h >= r])
                  for r in range(1, max(cols, default=0) + 1))
    return Partition(parts)


def _diagonal_words(t: EdgeLabeledTableau) -> dict[int, list]:
    by_c: dict[int, list] = {}
    for v, loc in reading_word(t):
        if loc[0] == "box":
            c = loc[2] - loc[1]
        else:
            c = loc[2] - (loc[1] - 1)  # attachment cell sits above the edge
        by_c.setdefault(c, []).append((v, loc))
    return by_c


@dataclass(frozen=True)
class RSKPair:
    P: Rows
    Q: tuple[tuple[tuple[int, int], int], ...]   # ((row, col), diagonal index)

    def q_map(self) -> dict[tuple[int, int], int]:
        return dict(self.Q)


def _migrate_q(q_old: dict, mu_new: Partition, nu_new: Partition,
               diag_index: int, width: int) -> dict:
    mu_cols = _column_counts(mu_new, width)
    nu_cols = _column_counts(nu_new, width)
    out: dict[tuple[int, int], int] = {}
    by_col: dict[int, list] = {}
    for (r, c), v in sorted(q_old.items()):
        by_col.setdefault(c, []).append((r, v))
    for j in range(1, width + 1):
        olds = [v for _, v in sorted(by_col.get(j, []))]
        lo, hi = nu_cols[j - 1], mu_cols[j - 1]
        if hi - lo < len(olds):
            raise AssertionError("recording column shrank below its entries")
        base = hi - len(olds)
        for k, v in enumerate(olds):
            out[(base + k + 1, j)] = v
        for r in range(lo + 1, base + 1):
            out[(r, j)] = diag_index
    return out


def uncrowd(t: EdgeLabeledTableau, with_trace: bool = False):
    """Insertion tableau and recording filling of an edge labeled tableau."""
    lam = t.shape.outer
    if t.shape.inner.size() > 0:
        raise MalformedPair("uncrowding is defined for straight shapes")
    words = _diagonal_words(t)
    c_min = 1 - lam.length()
    c_max = max(list(words) + [lam.first() - 1]) if (words or lam.parts) else 0
    rows: Rows = ()
    q: dict[tuple[int, int], int] = {}
    width_bound = lam.first() + sum(len(vs) for _, vs in t.edge_sets) + 1
    trace = []
    for i, c in enumerate(range(c_min, c_max + 1), start=1):
        word = [v for v, _ in words.get(c, [])]
        if any(word[k] <= word[k + 1] for k in range(len(word) - 1)):
            raise AssertionError(f"diagonal word {word} is not decreasing")
        rows = rsk_insert(rows, word)
        mu_i = rows_shape(rows)
        nu_i = _slid_prefix(lam, c)
        q = _migrate_q(q, mu_i, nu_i, i, width_bound)
        if with_trace:
            trace.append((rows, dict(q)))
    pair = RSKPair(rows, tuple(sorted(q.items())))
    if with_trace:
        return pair, trace
    return pair


def _blocks(word: list[int], k: int):
    """All splits of the word into k nonempty consecutive blocks."""
    if k == 0:
        if not word:
            yield []
        return
    if len(word) < k:
        return
    if k == 1:
        yield [word]
        return
    for first_len in range(1, len(word) - k + 2):
        for rest in _blocks(word[first_len:], k - 1):
            yield [word[:first_len]] + rest


def crowd(pair: RSKPair, lam: Partition, window: tuple[int, int],
          extent: Optional[int] = None) -> EdgeLabeledTableau:
    """Inverse of uncrowd; unique on its image, error off it."""
    extent = extent if extent is not None else lam.extent
    q = pair.q_map()
    c_min = 1 - lam.length()
    i_max = max([lam.first() - 1 - c_min + 1]
                + [v for v in q.values()]) if (lam.parts or q) else 0
    width_bound = lam.first() + len(q) + 1

    # reconstruct the per-diagonal words by reverse bumping, top diagonal first
    rows = pair.P
    words: dict[int, list[int]] = {}
    for i in range(i_max, 0, -1):
        c = c_min + i - 1
        nu_prev = _slid_prefix(lam, c - 1)
        nu_cols_prev = _column_counts(nu_prev, width_bound)
        olds_by_col: dict[int, list[int]] = {}
        for (r, cc), v in sorted(q.items()):
            if v != i:
                olds_by_col.setdefault(cc, []).append(v)
        mu_prev_cols = [nu_cols_prev[j - 1] + len(olds_by_col.get(j, []))
                        for j in range(1, width_bound + 1)]
        mu_prev = Partition(tuple(
            len([h for h in mu_prev_cols if h >= r])
            for r in range(1, max(mu_prev_cols, default=0) + 1)))
        cur_shape = rows_shape(rows)
        if not cur_shape.contains(mu_prev):
            raise MalformedPair("recording data inconsistent with P")
        cells = [(r, c2) for r in range(1, cur_shape.extent + 1)
                 for c2 in range(mu_prev.part(r) + 1, cur_shape.part(r) + 1)]
        by_row: dict[int, list[int]] = {}
        for r, c2 in cells:
            by_row.setdefault(r, []).append(c2)
        if any(len(cs) > 1 for cs in by_row.values()):
            raise MalformedPair("diagonal strip removes two cells in a row")
        letters = []
        for r in sorted(by_row, reverse=True):
            rows, letter = rsk_remove(rows, (r, by_row[r][0]))
            letters.append(letter)
        words[i] = letters[::-1]
        # rebuild the previous recording filling
        q_new: dict[tuple[int, int], int] = {}
        for j in range(1, width_bound + 1):
            olds = olds_by_col.get(j, [])
            base = mu_prev_cols[j - 1] - len(olds)
            for k, v in enumerate(olds):
                q_new[(base + k + 1, j)] = v
        q = q_new
    if rows_shape(rows).size() != 0 or q:
        raise MalformedPair("leftover cells after unwinding all diagonals")

    # redistribute each diagonal word over boxes and edges, with backtracking
    diag_cells: dict[int, list[tuple[int, int]]] = {}
    for (r, c) in SkewShape.of(lam.parts, (), extent=extent).cells():
        diag_cells.setdefault(c - r, []).append((r, c))
    for c in diag_cells:
        diag_cells[c].sort(key=lambda rc: -rc[0])  # bottom to top

    em: dict[tuple[int, int], int] = {}
    edges: dict[tuple[int, int], tuple[int, ...]] = {}
    solutions = []

    def place(i: int, em, edges):
        if i == 0:
            solutions.append((dict(em), dict(edges)))
            return len(solutions) > 1
        c = c_min + i - 1
        word = words.get(i, [])
        cells = diag_cells.get(c, [])
        # the diagonal may end with labels on the row-0 edge (1, c): above the
        # top cell when c <= lam_1, or on the free zeroth row beyond it
        trailing_ok = c >= 1 and window[0] <= c - 1 <= window[1]
        max_trail = len(word) - len(cells) if trailing_ok else 0
        for s in range(max_trail + 1):
            body = word[:len(word) - s] if s else word
            trail = word[len(word) - s:] if s else []
            for split in _blocks(body, len(cells)):
                new_em = dict(em)
                new_edges = dict(edges)
                ok = True
                for (r, cc), block in zip(cells, split):
                    entry = block[-1]
                    labels = block[:-1]
                    up = new_em.get((r - 1, cc))
                    right = new_em.get((r, cc + 1))
                    above_set = new_edges.get((r, cc), ())
                    if up is not None and entry <= up:
                        ok = False
                        break
                    if right is not None and entry > right:
                        ok = False
                        break
                    if above_set and entry <= max(above_set):
                        ok = False
                        break
                    new_em[(r, cc)] = entry
                    if labels:
                        d = cc - r - 1
                        if not window[0] <= d <= window[1]:
                            ok = False
                            break
                        new_edges[(r + 1, cc)] = tuple(sorted(labels))
                if ok and trail:
                    new_edges[(1, c)] = tuple(sorted(trail))
                if ok:
                    if place(i - 1, new_em, new_edges):
                        return True
        return False

    place(i_max, em, edges)
    if len(solutions) != 1:
        raise MalformedPair(
            f"{len(solutions)} reconstructions; pair is not in the image")
    em, edges = solutions[0]
    return EdgeLabeledTableau.of(SkewShape.of(lam.parts, (), extent=extent),
                                 extent, window, em, edges)


def check_crystal_commute(lam: Partition, window: tuple[int, int],
                          extent: int, n: int) -> bool:
    """Uncrowding intertwines f_i and leaves the recording data fixed."""
    from .crystal import f_elt, f_ssyt
    from .tableaux import enumerate_elt
    shape = SkewShape.of(lam.parts, (), extent=extent)
    for t in enumerate_elt(shape, n, window, extent):
        pair = uncrowd(t)
        p_t = rows_to_ssyt(pair.P)
        for i in range(1, n):
            ft = f_elt(t, i)
            fp = f_ssyt(p_t, i)
            if (ft is None) != (fp is None):
                return False
            if ft is None:
                continue
            fpair = uncrowd(ft)
            if fpair.P != tuple(tuple(r) for r in _ssyt_rows(fp)):
                return False
            if fpair.Q != pair.Q:
                return False
    return True


def _ssyt_rows(t: SemistandardTableau) -> Rows:
    em = t.entry_map()
    nrows = max((i for i, _ in em), default=0)
    return tuple(tuple(em[(i, j)] for j in range(1, 1 + len([1 for (a, b) in em if a == i])))
                 for i in range(1, nrows + 1))


def hook_tableau_census(lam: Partition, window: tuple[int, int],
                        extent: int, n: int):
    """EXPERIMENTAL: group recording fillings by insertion weight.

    Returns {nu: {Q-key: count}} where nu is the content of the insertion
    tableau of a highest weight element; makes no assertion about hooks.
    """
    from .crystal import is_highest_weight
    from .tableaux import enumerate_elt
    shape = SkewShape.of(lam.parts, (), extent=extent)
    census: dict[Partition, dict] = {}
    for t in enumerate_elt(shape, n, window, extent):
        if not is_highest_weight(t, n):
            continue
        pair = uncrowd(t)
        counts = [0] * n
        for row in pair.P:
            for v in row:
                counts[v - 1] += 1
        nu = Partition(tuple(counts))
        census.setdefault(nu, {})
        key = pair.Q
        census[nu][key] = census[nu].get(key, 0) + 1
    return census
