"""Exact sparse multivariate polynomials and truncated power series over Z.

Variables come in four families: x1, x2, ... and y1, y2, ... (indexed from 1),
a single symbol alpha, and a two-sided family a_d indexed by any integer d
(the deformation parameters attached to diagonals; negative indices are
routine).  A monomial is a sorted tuple of ((family_rank, index), exponent)
pairs; a polynomial maps monomials to nonzero Python ints, so all arithmetic
is exact at arbitrary precision.

A polynomial may carry an optional total-degree truncation T.  Truncated
arithmetic drops every monomial of total degree > T, which is how the
completed ring (power series in the a-parameters) is modelled.  Operations
on two truncated operands keep the tighter bound.
"""

from __future__ import annotations

import re
from typing import Callable, Optional

# Family ranks fix the global variable order x1 < x2 < ... < y1 < ... < alpha < a_d < ...
_RANK_X = 0
_RANK_Y = 1
_RANK_ALPHA = 2
_RANK_A = 3

_RANK_NAMES = {_RANK_X: "x", _RANK_Y: "y", _RANK_ALPHA: "alpha", _RANK_A: "a"}

VarKey = tuple[int, int]
Monomial = tuple[tuple[VarKey, int], ...]

UNIT_MONOMIAL: Monomial = ()


class NotInvertible(ValueError):
    """Constant term is not a unit, so no series inverse exists."""


class DivergenceRisk(ValueError):
    """Substitution of a series with nonzero constant term needs a truncation."""


class ParseError(ValueError):
    pass


def xv(i: int) -> VarKey:
    if i < 1:
        raise ValueError(f"x-index must be >= 1, got {i}")
    return (_RANK_X, i)


def yv(j: int) -> VarKey:
    if j < 1:
        raise ValueError(f"y-index must be >= 1, got {j}")
    return (_RANK_Y, j)


def av(d: int) -> VarKey:
    return (_RANK_A, d)


ALPHA: VarKey = (_RANK_ALPHA, 0)


def var_name(v: VarKey) -> str:
    rank, idx = v
    if rank == _RANK_ALPHA:
        return "alpha"
    if rank == _RANK_A and idx < 0:
        return f"a({idx})"
    return f"{_RANK_NAMES[rank]}{idx}"


def _merge_trunc(t1: Optional[int], t2: Optional[int]) -> Optional[int]:
    if t1 is None:
        return t2
    if t2 is None:
        return t1
    return min(t1, t2)


def monomial_degree(m: Monomial) -> int:
    return sum(e for _, e in m)


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    d = dict(m1)
    for v, e in m2:
        d[v] = d.get(v, 0) + e
    return tuple(sorted(d.items()))


class MultiPoly:
    """Immutable-by-convention sparse polynomial with optional truncation."""

    __slots__ = ("terms", "trunc")

    def __init__(self, terms: Optional[dict[Monomial, int]] = None,
                 trunc: Optional[int] = None):
        self.terms: dict[Monomial, int] = terms if terms is not None else {}
        self.trunc = trunc

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(trunc: Optional[int] = None) -> "MultiPoly":
        return MultiPoly({}, trunc)

    @staticmethod
    def const(c: int, trunc: Optional[int] = None) -> "MultiPoly":
        if c == 0:
            return MultiPoly({}, trunc)
        return MultiPoly({UNIT_MONOMIAL: c}, trunc)

    @staticmethod
    def one(trunc: Optional[int] = None) -> "MultiPoly":
        return MultiPoly.const(1, trunc)

    @staticmethod
    def var(v: VarKey, trunc: Optional[int] = None) -> "MultiPoly":
        return MultiPoly({((v, 1),): 1}, trunc)

    @staticmethod
    def monomial(m: Monomial, coeff: int = 1,
                 trunc: Optional[int] = None) -> "MultiPoly":
        if coeff == 0:
            return MultiPoly({}, trunc)
        return MultiPoly({m: coeff}, trunc)

    # -- basic queries -------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def constant_term(self) -> int:
        return self.terms.get(UNIT_MONOMIAL, 0)

    def total_degree(self) -> int:
        """Max total degree of a stored monomial; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(monomial_degree(m) for m in self.terms)

    def coeff(self, m: Monomial) -> int:
        return self.terms.get(m, 0)

    def variables(self) -> set[VarKey]:
        vs: set[VarKey] = set()
        for m in self.terms:
            vs.update(v for v, _ in m)
        return vs

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.terms == other.terms

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    def __repr__(self) -> str:
        s = canonical_string(self)
        if self.trunc is not None:
            return f"MultiPoly({s!r}, trunc={self.trunc})"
        return f"MultiPoly({s!r})"

    def __bool__(self) -> bool:
        return bool(self.terms)

    # -- arithmetic ----------------------------------------------------

    def _truncated(self, terms: dict[Monomial, int],
                   trunc: Optional[int]) -> "MultiPoly":
        if trunc is not None:
            terms = {m: c for m, c in terms.items()
                     if monomial_degree(m) <= trunc}
        return MultiPoly(terms, trunc)

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        trunc = _merge_trunc(self.trunc, other.trunc)
        out = dict(self.terms)
        for m, c in other.terms.items():
            nc = out.get(m, 0) + c
            if nc:
                out[m] = nc
            else:
                out.pop(m, None)
        return self._truncated(out, trunc)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly({m: -c for m, c in self.terms.items()}, self.trunc)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other) -> "MultiPoly":
        if isinstance(other, int):
            if other == 0:
                return MultiPoly({}, self.trunc)
            return MultiPoly({m: c * other for m, c in self.terms.items()},
                             self.trunc)
        trunc = _merge_trunc(self.trunc, other.trunc)
        out: dict[Monomial, int] = {}
        for m1, c1 in self.terms.items():
            d1 = monomial_degree(m1)
            for m2, c2 in other.terms.items():
                if trunc is not None and d1 + monomial_degree(m2) > trunc:
                    continue
                m = monomial_mul(m1, m2)
                nc = out.get(m, 0) + c1 * c2
                if nc:
                    out[m] = nc
                else:
                    del out[m]
        return MultiPoly(out, trunc)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "MultiPoly":
        if e < 0:
            raise ValueError("negative powers need series_inverse")
        result = MultiPoly.one(self.trunc)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base if e > 1 else base
            e >>= 1
        return result

    def truncate(self, T: Optional[int]) -> "MultiPoly":
        if T is None:
            return MultiPoly(dict(self.terms), None)
        return MultiPoly({m: c for m, c in self.terms.items()
                          if monomial_degree(m) <= T}, T)

    def with_trunc(self, T: Optional[int]) -> "MultiPoly":
        """Same terms, declared truncation T (drops higher terms if needed)."""
        return self.truncate(T)


def add(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p + q


def mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    return p * q


def series_inverse(p: MultiPoly, T: int) -> MultiPoly:
    """q with p*q = 1 modulo total degree T+1.  Needs constant term +-1."""
    c0 = p.constant_term()
    if c0 not in (1, -1):
        raise NotInvertible(f"constant term {c0} is not a unit in Z")
    # p = c0*(1 - r) with r of positive valuation, so 1/p = c0 * sum r^k.
    r = (MultiPoly.one(T) - (p.truncate(T) * c0)).truncate(T)
    acc = MultiPoly.one(T)
    pw = MultiPoly.one(T)
    for _ in range(T):
        pw = pw * r
        if pw.is_zero():
            break
        acc = acc + pw
    return acc * c0


def substitute(p: MultiPoly, v: VarKey, expr: MultiPoly,
               T: Optional[int] = None) -> MultiPoly:
    """Replace every occurrence of v in p by expr, truncating at T."""
    if expr.constant_term() != 0 and T is None and p.trunc is None:
        # Unbounded powers of a unit-term series never settle.
        for m in p.terms:
            if any(w == v for w, _ in m):
                raise DivergenceRisk(
                    "substituting a series with nonzero constant term "
                    "requires a truncation")
    trunc = T if T is not None else p.trunc
    powers: dict[int, MultiPoly] = {0: MultiPoly.one(trunc)}

    def power(e: int) -> MultiPoly:
        if e not in powers:
            powers[e] = power(e - 1) * expr.truncate(trunc)
        return powers[e]

    out = MultiPoly.zero(trunc)
    for m, c in p.terms.items():
        rest = tuple((w, e) for w, e in m if w != v)
        ev = dict(m).get(v, 0)
        term = MultiPoly.monomial(rest, c, trunc)
        out = out + (term * power(ev) if ev else term)
    return out


def map_vars(p: MultiPoly, fn: Callable[[VarKey], MultiPoly],
             T: Optional[int] = None) -> MultiPoly:
    """Apply the substitution v -> fn(v) to every variable simultaneously."""
    trunc = T if T is not None else p.trunc
    cache: dict[tuple[VarKey, int], MultiPoly] = {}

    def power(v: VarKey, e: int) -> MultiPoly:
        key = (v, e)
        if key not in cache:
            if e == 1:
                cache[key] = fn(v).truncate(trunc)
            else:
                cache[key] = power(v, e - 1) * power(v, 1)
        return cache[key]

    out = MultiPoly.zero(trunc)
    for m, c in p.terms.items():
        term = MultiPoly.const(c, trunc)
        for v, e in m:
            term = term * power(v, e)
        out = out + term
    return out


# -- canonical printing and parsing ------------------------------------


def _sort_key(m: Monomial, varlist: list[VarKey]):
    exps = dict(m)
    return (monomial_degree(m),
            tuple(-exps.get(v, 0) for v in varlist))


def sorted_terms(p: MultiPoly) -> list[tuple[Monomial, int]]:
    """Terms by total degree, then descending-lex on the exponent vector."""
    varlist = sorted(p.variables())
    return sorted(p.terms.items(), key=lambda mc: _sort_key(mc[0], varlist))


# Print order inside one monomial: a-parameters first, then alpha, x, y.
_PRINT_RANK = {_RANK_A: 0, _RANK_ALPHA: 1, _RANK_X: 2, _RANK_Y: 3}


def _monomial_string(m: Monomial) -> str:
    factors = []
    for v, e in sorted(m, key=lambda ve: (_PRINT_RANK[ve[0][0]], ve[0][1])):
        factors.append(var_name(v) if e == 1 else f"{var_name(v)}^{e}")
    return "*".join(factors)


def canonical_string(p: MultiPoly) -> str:
    if p.is_zero():
        return "0"
    parts: list[str] = []
    for m, c in sorted_terms(p):
        mono = _monomial_string(m)
        if not mono:
            body = str(abs(c))
        elif abs(c) == 1:
            body = mono
        else:
            body = f"{abs(c)}*{mono}"
        if not parts:
            parts.append(body if c > 0 else f"-{body}")
        else:
            parts.append(f"{' + ' if c > 0 else ' - '}{body}")
    return "".join(parts)


_TOKEN_RE = re.compile(
    r"\s*(?:(?P<var>a\(-?\d+\)|a-\d+|a\d+|alpha|x\d+|y\d+)"
    r"|(?P<int>\d+)"
    r"|(?P<op>[-+*^]))")


def _tokenize(s: str) -> list[tuple[str, str]]:
    tokens = []
    pos = 0
    while pos < len(s):
        m = _TOKEN_RE.match(s, pos)
        if m is None:
            if s[pos:].strip() == "":
                break
            raise ParseError(f"cannot tokenize {s[pos:]!r}")
        pos = m.end()
        for kind in ("var", "int", "op"):
            if m.group(kind) is not None:
                tokens.append((kind, m.group(kind)))
                break
    return tokens


def _var_from_token(tok: str) -> VarKey:
    if tok == "alpha":
        return ALPHA
    if tok.startswith("a("):
        return av(int(tok[2:-1]))
    if tok.startswith("a"):
        return av(int(tok[1:]))
    if tok.startswith("x"):
        return xv(int(tok[1:]))
    return yv(int(tok[1:]))


def parse(s: str, trunc: Optional[int] = None) -> MultiPoly:
    """Parse the output grammar of canonical_string (sums of integer terms)."""
    tokens = _tokenize(s)
    if not tokens:
        raise ParseError("empty input")
    out = MultiPoly.zero(trunc)
    i = 0
    n = len(tokens)
    while i < n:
        sign = 1
        while i < n and tokens[i] == ("op", "+") or i < n and tokens[i] == ("op", "-"):
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        coeff = None
        mono: dict[VarKey, int] = {}
        expect_factor = True
        while i < n:
            kind, tok = tokens[i]
            if kind == "op" and tok in "+-" and not expect_factor:
                break
            if kind == "op" and tok == "*":
                i += 1
                expect_factor = True
                continue
            if kind == "int":
                coeff = (coeff if coeff is not None else 1) * int(tok)
                i += 1
                expect_factor = False
                continue
            if kind == "var":
                v = _var_from_token(tok)
                e = 1
                if i + 1 < n and tokens[i + 1] == ("op", "^"):
                    if i + 2 >= n or tokens[i + 2][0] != "int":
                        raise ParseError("expected integer exponent after ^")
                    e = int(tokens[i + 2][1])
                    i += 2
                mono[v] = mono.get(v, 0) + e
                i += 1
                expect_factor = False
                continue
            raise ParseError(f"unexpected token {tok!r}")
        if expect_factor:
            raise ParseError("dangling operator")
        c = sign * (coeff if coeff is not None else 1)
        m = tuple(sorted((v, e) for v, e in mono.items() if e))
        out = out + MultiPoly.monomial(m, c, trunc)
    return out


# -- convenience views used by the symmetric-function layer ------------


def split_x_part(m: Monomial) -> tuple[Monomial, Monomial]:
    """Split a monomial into its x-variable part and everything else."""
    xs = tuple((v, e) for v, e in m if v[0] == _RANK_X)
    rest = tuple((v, e) for v, e in m if v[0] != _RANK_X)
    return xs, rest


def group_by_x(p: MultiPoly) -> dict[Monomial, MultiPoly]:
    """Collect p as a map {x-monomial: coefficient polynomial in the rest}."""
    out: dict[Monomial, dict[Monomial, int]] = {}
    for m, c in p.terms.items():
        xs, rest = split_x_part(m)
        out.setdefault(xs, {})[rest] = c
    return {xs: MultiPoly(d) for xs, d in out.items()}


def x_exponent_vector(m: Monomial, n: int) -> tuple[int, ...]:
    exps = [0] * n
    for (rank, idx), e in m:
        if rank == _RANK_X:
            if idx > n:
                raise ValueError(f"x{idx} outside declared range n={n}")
            exps[idx - 1] = e
    return tuple(exps)


def swap_x_vars(p: MultiPoly, i: int, j: int) -> MultiPoly:
    """Transpose x_i and x_j."""
    def fn(v: VarKey) -> MultiPoly:
        if v == xv(i):
            return MultiPoly.var(xv(j))
        if v == xv(j):
            return MultiPoly.var(xv(i))
        return MultiPoly.var(v)
    return map_vars(p, fn)
