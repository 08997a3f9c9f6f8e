"""Terms of the free ai-semiring, evaluation, and identity checking.

A term is a finite nonempty set of nonempty words over variables ``x1, x2,
...``; sum is union and product is setwise concatenation.  A word is a tuple
of positive variable indices.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Optional, Union

from .algebra import FiniteGroup, FiniteSemiring
from .errors import PreconditionError

Word = tuple[int, ...]
Algebra = Union[FiniteSemiring, FiniteGroup]


@dataclass(frozen=True)
class SemiringTerm:
    words: tuple[Word, ...]

    def __post_init__(self):
        words = tuple(sorted({tuple(w) for w in self.words}))
        if not words:
            raise ValueError("a term needs at least one word")
        if any(len(w) == 0 for w in words):
            raise ValueError("words must be nonempty")
        if any(v < 1 for w in words for v in w):
            raise ValueError("variable indices start at 1")
        object.__setattr__(self, "words", words)

    @classmethod
    def var(cls, i: int) -> "SemiringTerm":
        return cls(((i,),))

    @classmethod
    def word(cls, *letters: int) -> "SemiringTerm":
        return cls((tuple(letters),))

    def variables(self) -> tuple[int, ...]:
        return tuple(sorted({v for w in self.words for v in w}))

    def __add__(self, other):
        return term_sum(self, other)

    def __mul__(self, other):
        return term_product(self, other)

    def __pow__(self, m):
        if m < 1:
            raise ValueError("term powers start at 1")
        out = self
        for _ in range(m - 1):
            out = term_product(out, self)
        return out

    def __str__(self):
        return " + ".join(format_word(w) for w in self.words)


def term_sum(t1: SemiringTerm, t2: SemiringTerm) -> SemiringTerm:
    return SemiringTerm(t1.words + t2.words)


def term_product(t1: SemiringTerm, t2: SemiringTerm) -> SemiringTerm:
    return SemiringTerm(tuple(u + v for u in t1.words for v in t2.words))


def format_word(w: Word) -> str:
    parts = []
    i = 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        parts.append(f"x{w[i]}" + (f"^{j - i}" if j - i > 1 else ""))
        i = j
    return "*".join(parts)


@dataclass(frozen=True)
class Identity:
    lhs: SemiringTerm
    rhs: SemiringTerm
    name: str = ""

    def variables(self) -> tuple[int, ...]:
        return tuple(sorted(set(self.lhs.variables()) | set(self.rhs.variables())))

    def __str__(self):
        return f"{self.lhs} ≈ {self.rhs}"


# -- parsing -----------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(x[1-9])|([xyz])(?![0-9])|(\d+)|(≈|=|\+|\*|\^|\(|\)))")
_LETTERS = {"x": 1, "y": 2, "z": 3}


def _tokenize(text):
    pos, out = 0, []
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"unexpected character at {pos}: {text[pos:]!r}")
        var, letter, num, sym = m.groups()
        if var:
            out.append(("var", int(var[1:])))
        elif letter:
            out.append(("var", _LETTERS[letter]))
        elif num:
            out.append(("num", int(num)))
        else:
            out.append((sym, sym))
        pos = m.end()
    return out


class _Parser:
    def __init__(self, text):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i][0] if self.i < len(self.toks) else None

    def take(self, kind):
        if self.peek() != kind:
            got = self.toks[self.i][1] if self.i < len(self.toks) else "end of input"
            raise ValueError(f"expected {kind!r}, got {got!r}")
        tok = self.toks[self.i]
        self.i += 1
        return tok[1]

    def expr(self):
        t = self.prod()
        while self.peek() == "+":
            self.take("+")
            t = t + self.prod()
        return t

    def prod(self):
        t = self.power()
        while self.peek() in ("*", "var", "("):
            if self.peek() == "*":
                self.take("*")
            t = t * self.power()
        return t

    def power(self):
        t = self.atom()
        if self.peek() == "^":
            self.take("^")
            t = t ** self.take("num")
        return t

    def atom(self):
        if self.peek() == "(":
            self.take("(")
            t = self.expr()
            self.take(")")
            return t
        return SemiringTerm.var(self.take("var"))

    def done(self):
        if self.i != len(self.toks):
            raise ValueError(f"trailing input at token {self.toks[self.i][1]!r}")


def parse_term(text: str) -> SemiringTerm:
    p = _Parser(text)
    t = p.expr()
    p.done()
    return t


def parse_identity(text: str, name: str = "") -> Identity:
    """Parse ``x1*x2^2 + x1 ≈ x2*x1`` (``=`` also separates the sides)."""
    p = _Parser(text)
    lhs = p.expr()
    if p.peek() == "≈":
        p.take("≈")
    else:
        p.take("=")
    rhs = p.expr()
    p.done()
    return Identity(lhs, rhs, name)


# -- evaluation --------------------------------------------------------------


def eval_word(w: Word, mul, assignment: Mapping[int, int]) -> int:
    try:
        r = assignment[w[0]]
        for v in w[1:]:
            r = mul[r][assignment[v]]
    except KeyError as exc:
        raise KeyError(f"variable x{exc.args[0]} is unassigned") from None
    return r


def eval_term(t: SemiringTerm, A: Algebra, assignment: Mapping[int, int]) -> int:
    """Evaluate ``t`` under ``assignment`` (variable index -> element).

    Words are multiplied left to right and their values added in ascending
    word order.  A group can only evaluate single-word terms.
    """
    values = [eval_word(w, A.mul, assignment) for w in t.words]
    if len(values) == 1:
        return values[0]
    if not isinstance(A, FiniteSemiring):
        raise PreconditionError("sums of words need an additive operation")
    r = values[0]
    for x in values[1:]:
        r = A.add[r][x]
    return r


def assignments(variables: Iterable[int], k: int):
    """All assignments in lexicographic order of the value tuple."""
    variables = tuple(variables)
    for values in product(range(k), repeat=len(variables)):
        yield dict(zip(variables, values))


def find_counterexample(A: Algebra, identity: Identity) -> Optional[dict[int, int]]:
    """First assignment (lexicographic) where the two sides differ, or ``None``."""
    for asg in assignments(identity.variables(), A.order):
        if eval_term(identity.lhs, A, asg) != eval_term(identity.rhs, A, asg):
            return asg
    return None


def satisfies(A: Algebra, identity: Identity) -> bool:
    return find_counterexample(A, identity) is None


# -- varieties ---------------------------------------------------------------


@dataclass(frozen=True)
class VarietySpec:
    """A named variety: exponent ``n`` plus defining identities.

    ``kind`` is ``"semiring"`` for Sr/M presets and ``"semigroup"`` or
    ``"group"`` for presets that only look at multiplication.
    """

    name: str
    exponent: int
    identities: tuple[Identity, ...]
    kind: str = "semiring"

    def __post_init__(self):
        if self.exponent < 2:
            raise ValueError("exponent must be at least 2")
        if not self.identities:
            raise ValueError("a variety needs at least one identity")


def _w(*parts):
    """Word from ``(variable, power)`` pairs."""
    return tuple(v for v, m in parts for _ in range(m))


def _t(*words):
    return SemiringTerm(tuple(words))


def burnside_identity(n: int) -> Identity:
    return Identity(_t(_w((1, n))), _t(_w((1, 1))), "burnside")


def defining_identity(n: int) -> Identity:
    """``x^{n-1} + y^{n-1} ≈ x^{n-1} y^{n-1}``, the identity cutting M_n out of Sr(n,1)."""
    m = n - 1
    return Identity(_t(_w((1, m)), _w((2, m))), _t(_w((1, m), (2, m))), "defining")


def builtin_identities(n: int) -> list[Identity]:
    """Identities valid throughout M_n, instantiated at exponent ``n``.

    Order: the Burnside law, the M_n defining identity, then the five derived
    laws (idempotents commute, idempotents are central, sum splitting, power
    sum, power of a product).
    """
    if n < 2:
        raise ValueError("exponent must be at least 2")
    m = n - 1
    x, y = 1, 2
    return [
        burnside_identity(n),
        defining_identity(n),
        Identity(_t(_w((x, m), (y, m))), _t(_w((y, m), (x, m))), "idempotents-commute"),
        Identity(_t(_w((x, 1), (y, m))), _t(_w((y, m), (x, 1))), "idempotents-central"),
        Identity(_t(_w((x, 1)), _w((y, 1))), _t(_w((x, 1), (y, m)), _w((x, m), (y, 1))), "sum-split"),
        Identity(_t(_w((x, 1)), _w((x, m))), _t(*(_w((x, i)) for i in range(1, n))), "power-sum"),
        Identity(_t(_w((x, 1), (y, 1)) * m), _t(_w((x, m), (y, m))), "power-of-product"),
    ]


DERIVED_NAMES = ("idempotents-commute", "idempotents-central", "sum-split", "power-sum", "power-of-product")


def derived_identities(n: int) -> list[Identity]:
    return [i for i in builtin_identities(n) if i.name in DERIVED_NAMES]


def sr(n: int) -> VarietySpec:
    return VarietySpec(f"Sr({n},1)", n, (burnside_identity(n),))


def m_variety(n: int) -> VarietySpec:
    return VarietySpec(f"M_{n}", n, (burnside_identity(n), defining_identity(n)))


def sg(n: int) -> VarietySpec:
    return VarietySpec(f"Sg({n},1)", n, (burnside_identity(n),), kind="semigroup")


def g(n: int) -> VarietySpec:
    return VarietySpec(f"G({n},1)", n, (burnside_identity(n),), kind="group")


_PRESETS = {"sr": sr, "m": m_variety, "sg": sg, "g": g}


def preset(key: str) -> VarietySpec:
    """Look up ``m3``, ``sr4``, ``sg2``, ``g5`` and so on."""
    m = re.fullmatch(r"(sr|sg|m|g)(\d+)", key.strip().lower())
    if not m:
        raise ValueError(f"unknown variety {key!r}; expected e.g. m3, sr4, sg2, g5")
    return _PRESETS[m.group(1)](int(m.group(2)))


def preset_key(V: VarietySpec) -> str:
    prefix = {"semiring": "m" if V.name.startswith("M_") else "sr", "semigroup": "sg", "group": "g"}[V.kind]
    return f"{prefix}{V.exponent}"


def member_of(A: Algebra, V: VarietySpec) -> bool:
    if V.kind == "group" and not isinstance(A, FiniteGroup):
        raise PreconditionError(f"{V.name} is a group variety")
    if V.kind == "semiring" and not isinstance(A, FiniteSemiring):
        raise PreconditionError(f"{V.name} is a semiring variety")
    return all(satisfies(A, i) for i in V.identities)
