"""Exact Laurent polynomial arithmetic and dense matrices over it.

Polynomials live in Z[v1^{+-1}, ..., vk^{+-1}] with integer (or rational)
coefficients, stored as a map from integer exponent vectors to nonzero
coefficients.  Everything is immutable and all operations return new values.

The canonical printed form for a single variable lists terms in increasing
exponent, e.g. ``s^-2 - 1 + s^2``; this string format is part of the CLI
contract and round-trips through :func:`LaurentPoly.parse`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping


class ExactDivisionError(ArithmeticError):
    """Raised when an exact polynomial division leaves a remainder."""


def _norm_coeff(c):
    """Collapse integral Fractions to plain ints."""
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class LaurentPoly:
    """A Laurent polynomial over an ordered tuple of variable names.

    ``terms`` maps exponent tuples (one entry per variable, possibly
    negative) to nonzero int/Fraction coefficients.  The constructor
    normalizes away zero coefficients, so equality of term dicts is
    equality of polynomials once variable lists are unified.
    """

    __slots__ = ("vars", "terms")

    def __init__(self, variables: Iterable[str] = (), terms: Mapping | None = None):
        object.__setattr__(self, "vars", tuple(variables))
        acc = {}
        if terms:
            nv = len(self.vars)
            for exps, c in terms.items():
                if len(exps) != nv:
                    raise ValueError(f"exponent vector {exps} does not match variables {self.vars}")
                e = tuple(int(x) for x in exps)
                acc[e] = acc.get(e, 0) + c
        clean = {e: _norm_coeff(c) for e, c in acc.items() if c}
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, *a):
        raise AttributeError("LaurentPoly is immutable")

    # -- constructors ------------------------------------------------------

    @staticmethod
    def constant(c, variables: Iterable[str] = ()) -> "LaurentPoly":
        variables = tuple(variables)
        c = _norm_coeff(c)
        if not c:
            return LaurentPoly(variables, {})
        return LaurentPoly(variables, {(0,) * len(variables): c})

    @staticmethod
    def var(name: str) -> "LaurentPoly":
        return LaurentPoly((name,), {(1,): 1})

    @staticmethod
    def monomial(c, variables: Iterable[str], exponents: Iterable[int]) -> "LaurentPoly":
        variables = tuple(variables)
        return LaurentPoly(variables, {tuple(exponents): c})

    # -- canonical shape ---------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_one(self) -> bool:
        return len(self.terms) == 1 and self.terms.get((0,) * len(self.vars)) == 1

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def constant_value(self):
        """The coefficient of the zero monomial, for constant polynomials."""
        for e, c in self.terms.items():
            if any(e):
                raise ValueError(f"{self} is not constant")
        return self.terms.get((0,) * len(self.vars), 0)

    def _trimmed(self):
        """Drop unused variables and sort the rest; for equality and hashing."""
        used = [i for i in range(len(self.vars)) if any(e[i] for e in self.terms)]
        names = tuple(sorted(self.vars[i] for i in used))
        order = sorted(used, key=lambda i: self.vars[i])
        terms = {tuple(e[i] for i in order): c for e, c in self.terms.items()}
        return names, terms

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        a_names, a_terms = self._trimmed()
        b_names, b_terms = other._trimmed()
        return a_names == b_names and a_terms == b_terms

    def __hash__(self):
        names, terms = self._trimmed()
        return hash((names, frozenset(terms.items())))

    # -- arithmetic --------------------------------------------------------

    def _unified(self, other: "LaurentPoly"):
        """Remap both polynomials onto the sorted union of their variables."""
        if self.vars == other.vars:
            return self.vars, self.terms, other.terms
        union = tuple(sorted(set(self.vars) | set(other.vars)))

        def remap(p):
            idx = [p.vars.index(v) if v in p.vars else None for v in union]
            out = {}
            for e, c in p.terms.items():
                key = tuple(0 if i is None else e[i] for i in idx)
                out[key] = out.get(key, 0) + c
            return out

        return union, remap(self), remap(other)

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.vars)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        variables, a, b = self._unified(other)
        out = dict(a)
        for e, c in b.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return LaurentPoly(variables, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = LaurentPoly.constant(other, self.vars)
        return self.__add__(-other)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                return LaurentPoly(self.vars, {})
            return LaurentPoly(self.vars, {e: c * other for e, c in self.terms.items()})
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        variables, a, b = self._unified(other)
        if len(a) > len(b):
            a, b = b, a
        out = {}
        for ea, ca in a.items():
            for eb, cb in b.items():
                key = tuple(x + y for x, y in zip(ea, eb))
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPoly(variables, out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.unit_inverse() ** (-k)
        result = LaurentPoly.constant(1, self.vars)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def unit_inverse(self) -> "LaurentPoly":
        """Inverse of a single-term polynomial (the units of the Laurent ring)."""
        if len(self.terms) != 1:
            raise ExactDivisionError(f"{self} is not a unit monomial")
        ((e, c),) = self.terms.items()
        return LaurentPoly(self.vars, {tuple(-x for x in e): _norm_coeff(Fraction(1, 1) / c)})

    # -- display and parsing -----------------------------------------------

    def _sorted_terms(self):
        return sorted(self.terms.items(), key=lambda item: item[0])

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for e, c in self._sorted_terms():
            mono = "*".join(
                name if k == 1 else f"{name}^{k}"
                for name, k in zip(self.vars, e)
                if k != 0
            )
            ac = -c if (c < 0) else c
            if mono and ac == 1:
                body = mono
            elif mono:
                body = f"{ac}*{mono}"
            else:
                body = str(ac)
            pieces.append(("-" if c < 0 else "+", body))
        sign, body = pieces[0]
        out = ("-" if sign == "-" else "") + body
        for sign, body in pieces[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self):
        return f"LaurentPoly({str(self)!r})"

    _TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\^)|(\*)|(/)|(\+)|(-))")

    @staticmethod
    def parse(text: str, variables: Iterable[str] = ()) -> "LaurentPoly":
        """Parse the canonical string form back into a polynomial.

        ``variables`` seeds the variable list; names encountered in the text
        are added on the fly.
        """
        tokens = []
        pos = 0
        while pos < len(text):
            m = LaurentPoly._TOKEN.match(text, pos)
            if not m or m.end() == pos:
                if text[pos:].strip():
                    raise ValueError(f"bad polynomial syntax near {text[pos:]!r}")
                break
            tokens.append(m.group().strip())
            pos = m.end()

        names = list(variables)
        result = LaurentPoly(tuple(names), {})
        i = 0

        def parse_int(j):
            neg = False
            while j < len(tokens) and tokens[j] in "+-":
                if tokens[j] == "-":
                    neg = not neg
                j += 1
            if j >= len(tokens) or not tokens[j].isdigit():
                raise ValueError("expected integer")
            return (-int(tokens[j]) if neg else int(tokens[j])), j + 1

        while i < len(tokens):
            sign = 1
            while i < len(tokens) and tokens[i] in "+-":
                if tokens[i] == "-":
                    sign = -sign
                i += 1
            if i >= len(tokens):
                raise ValueError("dangling sign")
            coeff = Fraction(sign)
            mono: dict[str, int] = {}
            expect_factor = True
            while i < len(tokens) and expect_factor:
                tok = tokens[i]
                if tok.isdigit():
                    num = int(tok)
                    i += 1
                    if i < len(tokens) and tokens[i] == "/":
                        den, i = parse_int(i + 1)
                        coeff *= Fraction(num, den)
                    else:
                        coeff *= num
                elif re.match(r"[A-Za-z_]", tok):
                    exp = 1
                    i += 1
                    if i < len(tokens) and tokens[i] == "^":
                        exp, i = parse_int(i + 1)
                    mono[tok] = mono.get(tok, 0) + exp
                    if tok not in names:
                        names.append(tok)
                else:
                    raise ValueError(f"unexpected token {tok!r}")
                if i < len(tokens) and tokens[i] == "*":
                    i += 1
                else:
                    expect_factor = False
            term_vars = tuple(names)
            exps = tuple(mono.get(v, 0) for v in term_vars)
            result = result + LaurentPoly(term_vars, {exps: _norm_coeff(coeff)})
        return result

    # -- substitution ------------------------------------------------------

    def substitute_hom(self, name: str, image: "LaurentPoly") -> "LaurentPoly":
        """Ring homomorphism sending ``name`` to a unit monomial ``image``.

        The image must be a single-term unit so the map extends to negative
        exponents (e.g. t -> s^2 maps t^-1 to s^-2).
        """
        if len(image.terms) != 1:
            raise ValueError(f"substitution image {image} is not a unit monomial")
        if name not in self.vars:
            return self
        axis = self.vars.index(name)
        rest = tuple(v for v in self.vars if v != name)
        out = LaurentPoly(rest, {})
        inv = image.unit_inverse()
        for e, c in self.terms.items():
            k = e[axis]
            base = LaurentPoly(rest, {tuple(x for i, x in enumerate(e) if i != axis): c})
            out = out + base * (image if k >= 0 else inv) ** abs(k)
        return out


def exact_div(a: LaurentPoly, b: LaurentPoly) -> LaurentPoly:
    """Return q with q*b = a exactly, or raise :class:`ExactDivisionError`.

    Division by a unit monomial is termwise.  Otherwise the polynomials are
    shifted to clear negative exponents in a main variable and divided by
    recursive long division; leading coefficients of exact quotients always
    divide, so any failure certifies non-divisibility.
    """
    if b.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if a.is_zero():
        return LaurentPoly(a.vars, {})
    variables, at, bt = a._unified(b)
    a = LaurentPoly(variables, at)
    b = LaurentPoly(variables, bt)

    if len(b.terms) == 1:
        ((be, bc),) = b.terms.items()
        inv = Fraction(1) / bc
        return LaurentPoly(
            variables,
            {tuple(x - y for x, y in zip(e, be)): _norm_coeff(c * inv) for e, c in a.terms.items()},
        )

    # main variable: one along which the divisor actually spreads
    spread = [
        (max(e[i] for e in b.terms) - min(e[i] for e in b.terms), i)
        for i in range(len(variables))
    ]
    width, axis = max(spread)
    assert width > 0  # b has >= 2 terms, so some axis spreads

    rest = tuple(v for i, v in enumerate(variables) if i != axis)

    def split(p: LaurentPoly) -> dict[int, LaurentPoly]:
        slices: dict[int, dict] = {}
        for e, c in p.terms.items():
            key = tuple(x for i, x in enumerate(e) if i != axis)
            slices.setdefault(e[axis], {})[key] = c
        return {k: LaurentPoly(rest, t) for k, t in slices.items()}

    da = split(a)
    db = split(b)
    amin, bmin = min(da), min(db)
    bdeg = max(db)
    blead = db[bdeg]

    quotient: dict[int, LaurentPoly] = {}
    rem = {k - amin: v for k, v in da.items()}
    db0 = {k - bmin: v for k, v in db.items()}
    bdeg -= bmin
    while rem:
        adeg = max(rem)
        if adeg < bdeg:
            raise ExactDivisionError(f"{a} is not divisible by {b}")
        q = exact_div(rem[adeg], blead)
        quotient[adeg - bdeg] = q
        for k, coef in db0.items():
            tgt = adeg - bdeg + k
            new = rem.get(tgt, LaurentPoly(rest, {})) - q * coef
            if new.is_zero():
                rem.pop(tgt, None)
            else:
                rem[tgt] = new

    shift = amin - bmin
    out: dict[tuple, object] = {}
    for k, coefpoly in quotient.items():
        for e, c in coefpoly.terms.items():
            full = list(e)
            full.insert(axis, k + shift)
            out[tuple(full)] = c
    return LaurentPoly(variables, out)


def substitute_hom(p: LaurentPoly, name: str, image: LaurentPoly) -> LaurentPoly:
    return p.substitute_hom(name, image)


@dataclass(frozen=True)
class RingMatrix:
    """Dense matrix over LaurentPoly with exact arithmetic."""

    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        if self.rows <= 0 or self.cols <= 0:
            raise ValueError("matrix dimensions must be positive")
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entry grid does not match dimensions")

    @staticmethod
    def from_rows(rows) -> "RingMatrix":
        grid = tuple(
            tuple(x if isinstance(x, LaurentPoly) else LaurentPoly.constant(x) for x in row)
            for row in rows
        )
        return RingMatrix(len(grid), len(grid[0]), grid)

    @staticmethod
    def identity(k: int) -> "RingMatrix":
        one, zero = LaurentPoly.constant(1), LaurentPoly.constant(0)
        return RingMatrix(k, k, tuple(tuple(one if i == j else zero for j in range(k)) for i in range(k)))

    @staticmethod
    def zero(rows: int, cols: int) -> "RingMatrix":
        z = LaurentPoly.constant(0)
        return RingMatrix(rows, cols, tuple(tuple(z for _ in range(cols)) for _ in range(rows)))

    def __getitem__(self, idx):
        i, j = idx
        return self.entries[i][j]

    def __matmul__(self, other: "RingMatrix") -> "RingMatrix":
        if self.cols != other.rows:
            raise ValueError(f"dimension mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        bt = list(zip(*other.entries))
        grid = []
        for row in self.entries:
            nz = [(k, p) for k, p in enumerate(row) if p.terms]
            out_row = []
            for col in bt:
                acc = LaurentPoly.constant(0)
                for k, p in nz:
                    q = col[k]
                    if q.terms:
                        acc = acc + p * q
                out_row.append(acc)
            grid.append(tuple(out_row))
        return RingMatrix(self.rows, other.cols, tuple(grid))

    def __add__(self, other: "RingMatrix") -> "RingMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("dimension mismatch in addition")
        return RingMatrix(
            self.rows,
            self.cols,
            tuple(tuple(a + b for a, b in zip(ra, rb)) for ra, rb in zip(self.entries, other.entries)),
        )

    def __sub__(self, other: "RingMatrix") -> "RingMatrix":
        return self + other.scale(-1)

    def scale(self, c) -> "RingMatrix":
        return RingMatrix(
            self.rows, self.cols, tuple(tuple(e * c for e in row) for row in self.entries)
        )

    def transpose(self) -> "RingMatrix":
        return RingMatrix(self.cols, self.rows, tuple(zip(*self.entries)))

    def is_zero(self) -> bool:
        return all(e.is_zero() for row in self.entries for e in row)

    def is_identity(self) -> bool:
        return self.rows == self.cols and all(
            (self.entries[i][j].is_one() if i == j else self.entries[i][j].is_zero())
            for i in range(self.rows)
            for j in range(self.cols)
        )

    # -- determinant -------------------------------------------------------

    def det(self) -> LaurentPoly:
        """Exact determinant: memoized cofactor expansion below 6x6,
        fraction-free (Bareiss) elimination with exact divisions above."""
        if self.rows != self.cols:
            raise ValueError("determinant of a non-square matrix")
        if self.rows < 6:
            return self._det_cofactor()
        return self._det_bareiss()

    def _det_cofactor(self) -> LaurentPoly:
        n = self.rows
        entries = self.entries
        memo: dict[tuple, LaurentPoly] = {}

        def minor(row: int, cols: tuple) -> LaurentPoly:
            if len(cols) == 1:
                return entries[row][cols[0]]
            key = (row, cols)
            got = memo.get(key)
            if got is not None:
                return got
            acc = LaurentPoly.constant(0)
            for pos, c in enumerate(cols):
                e = entries[row][c]
                if not e.terms:
                    continue
                sub = minor(row + 1, cols[:pos] + cols[pos + 1 :])
                term = e * sub
                acc = acc + (term if pos % 2 == 0 else -term)
            memo[key] = acc
            return acc

        return minor(0, tuple(range(n)))

    def _det_bareiss(self) -> LaurentPoly:
        n = self.rows
        m = [list(row) for row in self.entries]
        sign = 1
        prev = LaurentPoly.constant(1)
        for k in range(n - 1):
            if m[k][k].is_zero():
                pivot = next((r for r in range(k + 1, n) if not m[r][k].is_zero()), None)
                if pivot is None:
                    return LaurentPoly.constant(0)
                m[k], m[pivot] = m[pivot], m[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev)
                m[i][k] = LaurentPoly.constant(0)
            prev = m[k][k]
        out = m[n - 1][n - 1]
        return -out if sign < 0 else out

    def adjugate(self) -> "RingMatrix":
        n = self.rows
        if n != self.cols:
            raise ValueError("adjugate of a non-square matrix")
        if n == 1:
            return RingMatrix.identity(1)
        cof = [[None] * n for _ in range(n)]
        for i in range(n):
            for j in range(n):
                sub = RingMatrix(
                    n - 1,
                    n - 1,
                    tuple(
                        tuple(self.entries[r][c] for c in range(n) if c != j)
                        for r in range(n)
                        if r != i
                    ),
                )
                d = sub.det()
                cof[i][j] = d if (i + j) % 2 == 0 else -d
        return RingMatrix(n, n, tuple(zip(*cof)))  # adj = cofactor transpose

    def inverse_unit_det(self) -> "RingMatrix":
        """Inverse via adjugate/det; requires the determinant to be a unit."""
        d = self.det()
        inv = d.unit_inverse()
        return self.adjugate().scale(inv)

    # -- serialization -----------------------------------------------------

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(e) for e in row] for row in self.entries],
        }

    @staticmethod
    def from_json(data: dict, variables: Iterable[str] = ()) -> "RingMatrix":
        grid = tuple(
            tuple(LaurentPoly.parse(s, variables) for s in row) for row in data["entries"]
        )
        m = RingMatrix(data["rows"], data["cols"], grid)
        return m
