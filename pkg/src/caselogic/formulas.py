"""Formula syntax for the classifier logic, plus terms over input atoms.

Core constructors: input atoms, outcome atoms t(x), negation, conjunction,
and the selectis-paribus modality [W].  Derived connectives (or, ->, <->,
diamond, top/bottom) expand into the core at construction time.

Concrete grammar (whitespace-insensitive):

    formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" or)* ;
    or := and ("|" and)* ; and := unary ("&" unary)* ;
    unary := "~" unary | "[" atoms "]" unary | "<" atoms ">" unary | prim ;
    prim := IDENT | "t(1)" | "t(0)" | "t(?)" | "(" formula ")" ;
    atoms := [ IDENT ("," IDENT)* ]

Unicode pi/delta glyphs are accepted as identifier aliases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import reduce
from typing import Iterable

from caselogic.errors import ParseError
from caselogic.signature import VALUES, Signature, Val


class Formula:
    """Base class for the core constructors."""

    __slots__ = ()


@dataclass(frozen=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True)
class OutcomeAtom(Formula):
    value: Val

    def __post_init__(self):
        if self.value not in VALUES:
            raise ValueError(f"outcome atom value must be 1, 0 or '?', got {self.value!r}")


@dataclass(frozen=True)
class Not(Formula):
    sub: Formula


@dataclass(frozen=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True)
class Box(Formula):
    atoms: frozenset
    sub: Formula

    def __post_init__(self):
        object.__setattr__(self, "atoms", frozenset(self.atoms))


def Or(a: Formula, b: Formula) -> Formula:
    return Not(And(Not(a), Not(b)))


def Implies(a: Formula, b: Formula) -> Formula:
    return Not(And(a, Not(b)))


def Iff(a: Formula, b: Formula) -> Formula:
    return And(Implies(a, b), Implies(b, a))


def Diamond(atoms: Iterable[str], f: Formula) -> Formula:
    return Not(Box(frozenset(atoms), Not(f)))


def top() -> Formula:
    return Or(OutcomeAtom(1), Not(OutcomeAtom(1)))


def bottom() -> Formula:
    return Not(top())


def big_and(parts: Iterable[Formula]) -> Formula:
    """Left-folded conjunction; the empty conjunction is top."""
    parts = list(parts)
    if not parts:
        return top()
    return reduce(And, parts)


def big_or(parts: Iterable[Formula]) -> Formula:
    """Right-folded disjunction, so the first disjunct is tried first
    during evaluation; the empty disjunction is bottom."""
    parts = list(parts)
    if not parts:
        return bottom()
    out = parts[-1]
    for p in reversed(parts[:-1]):
        out = Or(p, out)
    return out


def conj_formula(sig: Signature, x_set: Iterable[str], y_set: Iterable[str]) -> Formula:
    """The valuation description over y_set: atoms in x_set positively,
    the rest of y_set negatively, in canonical order."""
    x_set = frozenset(x_set)
    y_set = frozenset(y_set)
    if not x_set <= y_set:
        raise ValueError("x_set must be a subset of y_set")
    pos = [Atom(a) for a in sig.atoms if a in x_set]
    neg = [Not(Atom(a)) for a in sig.atoms if a in y_set - x_set]
    return big_and(pos + neg)


# ---------------------------------------------------------------------------
# Terms


@dataclass(frozen=True)
class Term:
    """A consistent conjunction of input-atom literals; the empty term is
    top."""

    positive: frozenset
    negative: frozenset

    def __post_init__(self):
        object.__setattr__(self, "positive", frozenset(self.positive))
        object.__setattr__(self, "negative", frozenset(self.negative))
        overlap = self.positive & self.negative
        if overlap:
            raise ValueError(f"contradictory literals on atoms {sorted(overlap)}")

    @property
    def atoms(self) -> frozenset:
        return self.positive | self.negative

    @property
    def is_top(self) -> bool:
        return not self.positive and not self.negative

    def holds(self, s: Iterable[str]) -> bool:
        s = frozenset(s)
        return self.positive <= s and not (self.negative & s)

    def part_of(self, other: "Term") -> bool:
        return self.positive <= other.positive and self.negative <= other.negative

    def drop(self, atom: str) -> "Term":
        return Term(self.positive - {atom}, self.negative - {atom})

    def to_formula(self, sig: Signature) -> Formula:
        return conj_formula(sig, self.positive, self.atoms)

    def sort_key(self, sig: Signature) -> tuple:
        return tuple(
            sorted((sig.index(a), a in self.negative) for a in self.atoms)
        )

    def render(self, sig: Signature) -> str:
        if self.is_top:
            return "true"
        lits = sorted(
            [(sig.index(a), a, False) for a in self.positive]
            + [(sig.index(a), a, True) for a in self.negative]
        )
        return " & ".join(("~" + a) if neg else a for _, a, neg in lits)


def mk_conj(x_set: Iterable[str], y_set: Iterable[str]) -> Term:
    """The term form of the valuation description over y_set."""
    x_set = frozenset(x_set)
    y_set = frozenset(y_set)
    if not x_set <= y_set:
        raise ValueError("x_set must be a subset of y_set")
    return Term(x_set, y_set - x_set)


def state_term(sig: Signature, state_mask: int, atom_set_mask: int) -> Term:
    """The literals of the state restricted to an atom-set mask."""
    return Term(
        sig.name_set(state_mask & atom_set_mask),
        sig.name_set(atom_set_mask & ~state_mask),
    )


# ---------------------------------------------------------------------------
# Printer

def print_formula(f: Formula) -> str:
    """Fully parenthesized canonical concrete syntax for core formulas.

    And always prints its own parentheses, so "~" and modal prefixes can
    attach directly to any printed subformula.
    """
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, OutcomeAtom):
        return f"t({f.value})"
    if isinstance(f, Not):
        return "~" + print_formula(f.sub)
    if isinstance(f, And):
        return f"({print_formula(f.left)} & {print_formula(f.right)})"
    if isinstance(f, Box):
        return "[" + ",".join(sorted(f.atoms)) + "]" + print_formula(f.sub)
    raise TypeError(f"not a formula: {f!r}")


# ---------------------------------------------------------------------------
# Parser

_TOKEN_RE = re.compile(
    r"""
    (?P<ws>\s+)
  | (?P<outcome>t\(\s*[10?]\s*\))
  | (?P<iff><->)
  | (?P<imp>->)
  | (?P<ident>[A-Za-z_α-ω][A-Za-z0-9_α-ω]*)
  | (?P<op>[~&|\[\]<>(),])
    """,
    re.VERBOSE,
)

_GREEK = {"π": "pi", "δ": "delta"}


def _normalize_ident(text: str) -> str:
    return "".join(_GREEK.get(ch, ch) for ch in text)


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(f"unexpected character {text[pos]!r}", pos)
        kind = m.lastgroup
        value = m.group()
        if kind != "ws":
            if kind == "ident":
                value = _normalize_ident(value)
            elif kind == "outcome":
                value = "t(" + value[2:-1].strip() + ")"
            tokens.append((kind if kind not in ("op",) else value, value, pos))
        pos = m.end()
    tokens.append(("eof", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, sig: Signature):
        self.tokens = _tokenize(text)
        self.sig = sig
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, kind: str):
        tok = self.next()
        if tok[0] != kind:
            raise ParseError(f"expected {kind!r}, found {tok[1]!r}", tok[2])
        return tok

    def atom(self, name: str, pos: int) -> Atom:
        if name not in self.sig._index:
            raise ParseError(f"unknown atom {name!r}", pos)
        return Atom(name)

    def parse(self) -> Formula:
        f = self.iff()
        tok = self.peek()
        if tok[0] != "eof":
            raise ParseError(f"unexpected trailing input {tok[1]!r}", tok[2])
        return f

    def iff(self) -> Formula:
        f = self.imp()
        while self.peek()[0] == "iff":
            self.next()
            f = Iff(f, self.imp())
        return f

    def imp(self) -> Formula:
        parts = [self.disj()]
        while self.peek()[0] == "imp":
            self.next()
            parts.append(self.disj())
        f = parts[-1]
        for p in reversed(parts[:-1]):
            f = Implies(p, f)
        return f

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek()[0] == "|":
            self.next()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek()[0] == "&":
            self.next()
            f = And(f, self.unary())
        return f

    def atom_list(self, closing: str) -> frozenset:
        names = []
        if self.peek()[0] == "ident":
            kind, value, pos = self.next()
            names.append(self.atom(value, pos).name)
            while self.peek()[0] == ",":
                self.next()
                kind, value, pos = self.expect("ident")
                names.append(self.atom(value, pos).name)
        self.expect(closing)
        return frozenset(names)

    def unary(self) -> Formula:
        kind, value, pos = self.peek()
        if kind == "~":
            self.next()
            return Not(self.unary())
        if kind == "[":
            self.next()
            atoms = self.atom_list("]")
            return Box(atoms, self.unary())
        if kind == "<":
            self.next()
            atoms = self.atom_list(">")
            return Diamond(atoms, self.unary())
        return self.prim()

    def prim(self) -> Formula:
        kind, value, pos = self.next()
        if kind == "ident":
            return self.atom(value, pos)
        if kind == "outcome":
            raw = value[2:-1]
            return OutcomeAtom(int(raw) if raw in ("0", "1") else raw)
        if kind == "(":
            f = self.iff()
            self.expect(")")
            return f
        raise ParseError(f"expected a formula, found {value!r}", pos)


def parse_formula(text: str, sig: Signature) -> Formula:
    """Parse concrete syntax against a signature.

    Raises ParseError with the offending position on lexical or syntax
    errors and on atom names outside the signature.
    """
    return _Parser(text, sig).parse()
