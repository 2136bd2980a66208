"""Cantor normal form ordinals below epsilon_0.

An ordinal is a finite sum ``w^a1*c1 + ... + w^ak*ck`` with ordinal exponents
``a1 > ... > ak`` and integer coefficients ``ci >= 1``; the empty sum is 0.
This representation is unique, so equality of terms is equality of ordinals.

Provided operations: comparison, the (non-commutative) ordinal sum and
product, ``w^a``, and the standard assignment of fundamental sequences to
limit ordinals.  The convention ``w[n] = n`` is fixed project-wide; it feeds
the shape of canonical barriers.

Text form, used by the CLI and JSON codecs: ``w^w + w^2*3 + 5``.

Grammar (whitespace around tokens is optional)::

    ordinal := "0" | term ("+" term)*
    term    := nat | pow ("*" nat)?
    pow     := "w" | "w^" exp
    exp     := nat | "w" | "(" ordinal ")"

Exponents other than a natural number or plain ``w`` are parenthesized when
rendering, e.g. ``w^(w + 1)`` or ``w^(w^2)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import total_ordering

__all__ = [
    "Ordinal",
    "ZERO",
    "ONE",
    "OMEGA",
    "compare",
    "add",
    "mul",
    "omega_pow",
    "fund_seq",
    "pred",
    "parse_ordinal",
    "OrdinalParseError",
]


class OrdinalParseError(ValueError):
    pass


@total_ordering
@dataclass(frozen=True)
class Ordinal:
    """An ordinal below epsilon_0 in Cantor normal form.

    ``terms`` is a tuple of (exponent, coefficient) pairs with exponents in
    strictly decreasing order and coefficients >= 1.  The empty tuple is 0.
    """

    terms: tuple[tuple["Ordinal", int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for exp, coeff in self.terms:
            if not isinstance(exp, Ordinal):
                raise TypeError(f"exponent must be an Ordinal, got {exp!r}")
            if not isinstance(coeff, int) or coeff < 1:
                raise ValueError(f"coefficient must be a positive int, got {coeff!r}")
            if prev is not None and compare(prev, exp) <= 0:
                raise ValueError("exponents must be strictly decreasing")
            prev = exp

    @classmethod
    def from_int(cls, n: int) -> "Ordinal":
        if n < 0:
            raise ValueError("ordinals are non-negative")
        if n == 0:
            return ZERO
        return cls(((ZERO, n),))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    @property
    def is_finite(self) -> bool:
        return not self.terms or self.terms[0][0].is_zero

    @property
    def is_successor(self) -> bool:
        return bool(self.terms) and self.terms[-1][0].is_zero

    @property
    def is_limit(self) -> bool:
        return bool(self.terms) and not self.terms[-1][0].is_zero

    def as_int(self) -> int:
        if not self.is_finite:
            raise ValueError(f"{self} is not a natural number")
        return self.terms[0][1] if self.terms else 0

    def __lt__(self, other: "Ordinal") -> bool:
        if not isinstance(other, Ordinal):
            return NotImplemented
        return compare(self, other) < 0

    def __add__(self, other: "Ordinal") -> "Ordinal":
        return add(self, other)

    def __mul__(self, other: "Ordinal") -> "Ordinal":
        return mul(self, other)

    def __str__(self) -> str:
        return _render(self)

    def __repr__(self) -> str:
        return f"Ordinal({_render(self)!r})"


ZERO = Ordinal()
ONE = Ordinal(((ZERO, 1),))
OMEGA = Ordinal(((ONE, 1),))


def compare(a: Ordinal, b: Ordinal) -> int:
    """Total order on canonical forms: -1, 0 or 1."""
    for (ea, ca), (eb, cb) in zip(a.terms, b.terms):
        c = compare(ea, eb)
        if c != 0:
            return c
        if ca != cb:
            return -1 if ca < cb else 1
    if len(a.terms) != len(b.terms):
        return -1 if len(a.terms) < len(b.terms) else 1
    return 0


def add(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal sum a + b (absorbs low terms of ``a``)."""
    if b.is_zero:
        return a
    if a.is_zero:
        return b
    eb = b.terms[0][0]
    kept = []
    for exp, coeff in a.terms:
        c = compare(exp, eb)
        if c > 0:
            kept.append((exp, coeff))
        elif c == 0:
            return Ordinal(tuple(kept) + ((eb, coeff + b.terms[0][1]),) + b.terms[1:])
        else:
            break
    return Ordinal(tuple(kept) + b.terms)


def mul(a: Ordinal, b: Ordinal) -> Ordinal:
    """Ordinal product a * b, distributed over the terms of ``b``."""
    if a.is_zero or b.is_zero:
        return ZERO
    lead_exp, lead_coeff = a.terms[0]
    out = ZERO
    for exp, coeff in b.terms:
        if exp.is_zero:
            part = Ordinal(((lead_exp, lead_coeff * coeff),) + a.terms[1:])
        else:
            part = Ordinal(((add(lead_exp, exp), coeff),))
        out = add(out, part)
    return out


def omega_pow(a: Ordinal) -> Ordinal:
    """The ordinal w^a."""
    return Ordinal(((a, 1),))


def pred(a: Ordinal) -> Ordinal:
    """Predecessor of a successor ordinal."""
    if not a.is_successor:
        raise ValueError(f"{a} is not a successor")
    exp, coeff = a.terms[-1]
    if coeff == 1:
        return Ordinal(a.terms[:-1])
    return Ordinal(a.terms[:-1] + ((exp, coeff - 1),))


def fund_seq(l: Ordinal, n: int) -> Ordinal:
    """n-th member of the standard fundamental sequence of a limit ordinal.

    Rules, for l = head + w^e * c with e > 0:
      c > 1          ->  head + w^e*(c-1) + (w^e)[n]
      e = e' + 1     ->  head + w^e' * n
      e a limit      ->  head + w^(e[n])
    In particular w[n] = n.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    if not l.is_limit:
        raise ValueError(f"{l} is not a limit ordinal")
    exp, coeff = l.terms[-1]
    head = Ordinal(l.terms[:-1] + (((exp, coeff - 1),) if coeff > 1 else ()))
    if exp.is_successor:
        step = mul(omega_pow(pred(exp)), Ordinal.from_int(n))
    else:
        step = omega_pow(fund_seq(exp, n))
    return add(head, step)


# --- text form ---------------------------------------------------------


def _render_exp(e: Ordinal) -> str:
    if e.is_finite:
        return str(e.as_int())
    if e == OMEGA:
        return "w"
    return f"({_render(e)})"


def _render(o: Ordinal) -> str:
    if o.is_zero:
        return "0"
    parts = []
    for exp, coeff in o.terms:
        if exp.is_zero:
            parts.append(str(coeff))
            continue
        base = "w" if exp == ONE else f"w^{_render_exp(exp)}"
        parts.append(base if coeff == 1 else f"{base}*{coeff}")
    return " + ".join(parts)


_TOKEN = re.compile(r"\s*(\d+|[w^*+()])")


def _tokenize(text: str) -> list[str]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            if text[pos:].strip():
                raise OrdinalParseError(f"bad character at {text[pos:]!r}")
            break
        tokens.append(m.group(1))
        pos = m.end()
    return tokens


class _Parser:
    def __init__(self, tokens: list[str]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> str | None:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected: str | None = None) -> str:
        tok = self.peek()
        if tok is None or (expected is not None and tok != expected):
            raise OrdinalParseError(f"expected {expected or 'a token'}, got {tok!r}")
        self.pos += 1
        return tok

    def ordinal(self) -> Ordinal:
        out = self.term()
        while self.peek() == "+":
            self.take("+")
            out = add(out, self.term())
        return out

    def term(self) -> Ordinal:
        tok = self.peek()
        if tok is None:
            raise OrdinalParseError("unexpected end of input")
        if tok.isdigit():
            self.take()
            return Ordinal.from_int(int(tok))
        if tok != "w":
            raise OrdinalParseError(f"unexpected token {tok!r}")
        self.take("w")
        exp = ONE
        if self.peek() == "^":
            self.take("^")
            exp = self.exponent()
        out = omega_pow(exp)
        if self.peek() == "*":
            self.take("*")
            coeff = self.take()
            if not coeff.isdigit() or int(coeff) < 1:
                raise OrdinalParseError(f"coefficient must be a positive int, got {coeff!r}")
            out = mul(out, Ordinal.from_int(int(coeff)))
        return out

    def exponent(self) -> Ordinal:
        tok = self.peek()
        if tok is None:
            raise OrdinalParseError("missing exponent")
        if tok.isdigit():
            self.take()
            return Ordinal.from_int(int(tok))
        if tok == "w":
            self.take("w")
            return OMEGA
        if tok == "(":
            self.take("(")
            out = self.ordinal()
            self.take(")")
            return out
        raise OrdinalParseError(f"bad exponent start {tok!r}")


def parse_ordinal(text: str) -> Ordinal:
    """Parse the text form; canonical renderings round-trip exactly.

    Non-canonical sums like ``1 + w`` are folded with ordinal addition, so
    they parse to the value of the expression (here ``w``).
    """
    if text.strip() == "0":
        return ZERO
    parser = _Parser(_tokenize(text))
    out = parser.ordinal()
    if parser.peek() is not None:
        raise OrdinalParseError(f"trailing tokens at {parser.tokens[parser.pos:]}")
    return out
