"""Terms over ``{^, v, ', ~, 0, 1}`` and brute-force identity checking.

Concrete syntax::

    id     := term "=" term
    term   := term "v" factor | factor
    factor := factor "^" atom | atom
    atom   := VAR | "0" | "1" | "(" term ")" | atom "'" | atom "~"

``VAR`` is a letter followed by letters and digits. The join symbol is the
word ``v``, so ``xvy`` is a single variable; write ``x v y``.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass
from typing import Mapping, Sequence, Union

import numpy as np

from .algebra import FiniteAlgebra
from .errors import (GuardExceeded, MissingOperation, MissingParam, ParamOutOfRange,
                     TermSyntaxError, UnknownName)
from .guards import guard


# -- syntax tree ----------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    value: int  # 0 or 1


@dataclass(frozen=True)
class Meet:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Join:
    left: "Term"
    right: "Term"


@dataclass(frozen=True)
class Kleene:
    arg: "Term"


@dataclass(frozen=True)
class Brouwer:
    arg: "Term"


Term = Union[Var, Const, Meet, Join, Kleene, Brouwer]


def variables(t: Term) -> list[str]:
    """Variable names in order of first appearance."""
    out: list[str] = []

    def walk(s):
        if isinstance(s, Var):
            if s.name not in out:
                out.append(s.name)
        elif isinstance(s, (Meet, Join)):
            walk(s.left)
            walk(s.right)
        elif isinstance(s, (Kleene, Brouwer)):
            walk(s.arg)

    walk(t)
    return out


def operations(t: Term) -> set[str]:
    """Unary symbols used in ``t`` (a subset of ``{"'", "~"}``)."""
    if isinstance(t, Kleene):
        return {"'"} | operations(t.arg)
    if isinstance(t, Brouwer):
        return {"~"} | operations(t.arg)
    if isinstance(t, (Meet, Join)):
        return operations(t.left) | operations(t.right)
    return set()


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    @property
    def variables(self) -> list[str]:
        out = variables(self.lhs)
        out += [v for v in variables(self.rhs) if v not in out]
        return out

    def __str__(self):
        return f"{to_text(self.lhs)} = {to_text(self.rhs)}"


# -- printing -------------------------------------------------------------------

def _prec(t: Term) -> int:
    if isinstance(t, Join):
        return 1
    if isinstance(t, Meet):
        return 2
    return 3


def to_text(t: Term | Identity) -> str:
    """Render with the fewest parentheses that still parse back to ``t``."""
    if isinstance(t, Identity):
        return str(t)
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Const):
        return str(t.value)
    if isinstance(t, (Kleene, Brouwer)):
        inner = to_text(t.arg)
        if _prec(t.arg) < 3:
            inner = f"({inner})"
        return inner + ("'" if isinstance(t, Kleene) else "~")
    p = _prec(t)
    left, right = to_text(t.left), to_text(t.right)
    if _prec(t.left) < p:
        left = f"({left})"
    if _prec(t.right) <= p:
        right = f"({right})"
    return f"{left} {'v' if p == 1 else '^'} {right}"


# -- parsing --------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:([A-Za-z][A-Za-z0-9]*)|(.))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None:
            break
        start = m.start(1) if m.group(1) is not None else m.start(2)
        if m.group(1) is not None:
            word = m.group(1)
            toks.append(("v" if word == "v" else "VAR", word, start))
        else:
            ch = m.group(2)
            if ch not in "()^'~=01":
                raise TermSyntaxError(f"unexpected character {ch!r}", start)
            toks.append((ch, ch, start))
        pos = m.end()
    toks.append(("END", "", len(text)))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> str:
        return self.toks[self.i][0]

    def take(self, kind: str):
        tok = self.toks[self.i]
        if tok[0] != kind:
            shown = "end of input" if tok[0] == "END" else repr(tok[1])
            raise TermSyntaxError(f"expected {kind!r}, found {shown}", tok[2])
        self.i += 1
        return tok

    def term(self) -> Term:
        t = self.factor()
        while self.peek() == "v":
            self.i += 1
            t = Join(t, self.factor())
        return t

    def factor(self) -> Term:
        t = self.atom()
        while self.peek() == "^":
            self.i += 1
            t = Meet(t, self.atom())
        return t

    def atom(self) -> Term:
        kind, text, pos = self.toks[self.i]
        if kind == "VAR":
            self.i += 1
            t: Term = Var(text)
        elif kind in ("0", "1"):
            self.i += 1
            t = Const(int(kind))
        elif kind == "(":
            self.i += 1
            t = self.term()
            self.take(")")
        else:
            shown = "end of input" if kind == "END" else repr(text)
            raise TermSyntaxError(f"expected a term, found {shown}", pos)
        while self.peek() in ("'", "~"):
            t = Kleene(t) if self.peek() == "'" else Brouwer(t)
            self.i += 1
        return t


def parse(text: str) -> Term | Identity:
    """Parse a term, or an identity ``t = u``."""
    p = _Parser(text)
    t = p.term()
    if p.peek() == "=":
        p.i += 1
        t = Identity(t, p.term())
    p.take("END")
    return t


def parse_identity(text: str) -> Identity:
    res = parse(text)
    if not isinstance(res, Identity):
        raise TermSyntaxError("expected an identity 't = u'", len(text))
    return res


# -- evaluation -----------------------------------------------------------------

def _require(A: FiniteAlgebra, ops: set[str]) -> None:
    if "'" in ops and A.kleene is None:
        raise MissingOperation("the term uses ' but the algebra has no Kleene complement")
    if "~" in ops and A.brouwer is None:
        raise MissingOperation("the term uses ~ but the algebra has no Brouwer complement")


def evaluate(A: FiniteAlgebra, t: Term, env: Mapping[str, object]) -> np.ndarray:
    """Evaluate ``t`` with variables bound to (broadcastable) index arrays."""
    if isinstance(t, Var):
        if t.name not in env:
            raise KeyError(f"no value for variable {t.name}")
        return np.asarray(env[t.name], dtype=np.int64)
    if isinstance(t, Const):
        return np.asarray(A.top if t.value else A.bottom, dtype=np.int64)
    if isinstance(t, Meet):
        return A.meet[evaluate(A, t.left, env), evaluate(A, t.right, env)]
    if isinstance(t, Join):
        return A.join[evaluate(A, t.left, env), evaluate(A, t.right, env)]
    if isinstance(t, Kleene):
        if A.kleene is None:
            raise MissingOperation("no Kleene complement")
        return A.kleene[evaluate(A, t.arg, env)]
    if isinstance(t, Brouwer):
        if A.brouwer is None:
            raise MissingOperation("no Brouwer complement")
        return A.brouwer[evaluate(A, t.arg, env)]
    raise TypeError(f"not a term: {t!r}")


@dataclass(frozen=True)
class SatResult:
    holds: bool
    witness: dict[str, int] | None
    variables: tuple[str, ...]

    def witness_labels(self, A: FiniteAlgebra) -> dict[str, str] | None:
        if self.witness is None:
            return None
        return {v: A.label(x) for v, x in self.witness.items()}

    def __bool__(self):
        return self.holds


_CHUNK = 1 << 20


def _sweep(A: FiniteAlgebra, ident: Identity, ranges: Sequence[np.ndarray],
           limit: int | None) -> SatResult:
    _require(A, operations(ident.lhs) | operations(ident.rhs))
    names = ident.variables
    sizes = [len(r) for r in ranges]
    total = int(np.prod(sizes, dtype=object)) if sizes else 1
    g = guard("sat", limit)
    if total > g:
        raise GuardExceeded(f"{total} valuations exceed the guard of {g}")
    if total == 0:
        return SatResult(True, None, tuple(names))
    # vectorize over a suffix of the variables, loop over the prefix
    split = len(names)
    inner = 1
    while split > 0 and inner * sizes[split - 1] <= _CHUNK:
        split -= 1
        inner *= sizes[split]
    for outer in itertools.product(*ranges[:split]):
        env: dict[str, object] = {v: x for v, x in zip(names, outer)}
        k = len(names) - split
        for i, name in enumerate(names[split:]):
            shape = [1] * k
            shape[i] = sizes[split + i]
            env[name] = ranges[split + i].reshape(shape)
        diff = np.broadcast_to(evaluate(A, ident.lhs, env) != evaluate(A, ident.rhs, env),
                               tuple(sizes[split:]))
        if diff.any():
            pos = np.unravel_index(int(np.flatnonzero(diff.ravel())[0]), diff.shape)
            vals = list(outer) + [int(ranges[split + i][p]) for i, p in enumerate(pos)]
            return SatResult(False, {v: int(x) for v, x in zip(names, vals)}, tuple(names))
    return SatResult(True, None, tuple(names))


def satisfies(A: FiniteAlgebra, ident: Identity | str, guard_limit: int | None = None
              ) -> SatResult:
    """Check ``ident`` on every valuation; the witness is the first failure
    in lexicographic order of the variables' order of appearance."""
    if isinstance(ident, str):
        ident = parse_identity(ident)
    full = np.arange(A.n)
    return _sweep(A, ident, [full] * len(ident.variables), guard_limit)


def satisfies_restricted(A: FiniteAlgebra, ident: Identity | str,
                         ranges: Mapping[str, Sequence[int]] | Sequence[Sequence[int]],
                         guard_limit: int | None = None) -> SatResult:
    """Like :func:`satisfies` with each variable drawn from its own subset."""
    if isinstance(ident, str):
        ident = parse_identity(ident)
    names = ident.variables
    if isinstance(ranges, Mapping):
        missing = [v for v in names if v not in ranges]
        if missing:
            raise ValueError(f"no range given for {', '.join(missing)}")
        seq = [ranges[v] for v in names]
    else:
        seq = list(ranges)
        if len(seq) != len(names):
            raise ValueError(f"expected {len(names)} ranges, got {len(seq)}")
    arrs = [np.array(sorted(set(int(x) for x in r)), dtype=np.int64) for r in seq]
    return _sweep(A, ident, arrs, guard_limit)


# -- the m(t, u) transform --------------------------------------------------------

def join_all(terms: Sequence[Term]) -> Term:
    out = terms[0]
    for t in terms[1:]:
        out = Join(out, t)
    return out


def meet_all(terms: Sequence[Term]) -> Term:
    out = terms[0]
    for t in terms[1:]:
        out = Meet(out, t)
    return out


def join_operands(t: Term) -> list[Term]:
    """Flatten nested joins, left to right."""
    if isinstance(t, Join):
        return join_operands(t.left) + join_operands(t.right)
    return [t]


@dataclass(frozen=True)
class MTransform:
    m_tu: Term
    m_ut: Term
    x_vars: tuple[str, ...]
    y_vars: tuple[str, ...]
    z_vars: tuple[str, ...]

    def identity(self) -> Identity:
        return Identity(self.m_tu, self.m_ut)


def m_transform(t: Term, u: Term) -> MTransform:
    """``m(t,u)`` joins ``(v ^ v')~`` over the x-, y- and z-variables, then ``t``.

    x-variables occur only in ``t``, y-variables only in ``u`` and
    z-variables in both, each list in order of appearance in ``t = u``.
    """
    vt, vu = variables(t), variables(u)
    xs = tuple(v for v in vt if v not in vu)
    ys = tuple(v for v in vu if v not in vt)
    zs = tuple(v for v in vt if v in vu)
    guards = [Brouwer(Meet(Var(v), Kleene(Var(v)))) for v in xs + ys + zs]

    def m(tail: Term) -> Term:
        return join_all(guards + [tail]) if guards else tail

    return MTransform(m(t), m(u), xs, ys, zs)


# -- named identities ---------------------------------------------------------------

_NAMED = {
    "STAR": "(x ^ x')~ = x~ v x'~",
    "SDM": "(x ^ y)~ = x~ v y~",
    # x ^ y~~ <= x'~ v y, written as a ^ b = a
    "SK": "x ^ y~~ = (x ^ y~~) ^ (x'~ v y)",
    "J0": "(x ^ y~) v (x ^ y~~) = x",
    "DIST": "x ^ (y v z) = (x ^ y) v (x ^ z)",
    "MOD": "x v (y ^ (x v z)) = (x v y) ^ (x v z)",
    "R": "(x ^ x')~ v (y ^ y')~ v (x ^ x') = (x ^ x')~ v (y ^ y')~ v (y ^ y')",
    "RV": "(x ^ x')~ v (y ^ y')~ v x v x' = (x ^ x')~ v (y ^ y')~ v y v y'",
    "O": "(x ^ x')~ v (y ^ y')~ v x v (x' ^ (x v y)) = (x ^ x')~ v (y ^ y')~ v x v y",
}

NAMES = tuple(_NAMED) + ("C", "D", "DALT")


def _pairwise_guard(xs: Sequence[Term]) -> Term:
    return meet_all([Brouwer(Meet(xs[i], xs[j]))
                     for i in range(len(xs)) for j in range(i + 1, len(xs))])


def c_identity(n: int) -> Identity:
    xs = [Var(f"x{i}") for i in range(1, n + 1)]
    tildes = [Brouwer(x) for x in xs]
    pair = _pairwise_guard(xs)
    lhs = join_all(tildes + [Meet(pair, join_all(xs))])
    rhs = join_all(tildes + [meet_all([pair] + [Kleene(x) for x in xs])])
    return Identity(lhs, rhs)


def d_identity(n: int) -> Identity:
    x = Var("x")
    xs = [Var(f"x{i}") for i in range(1, n + 1)]
    body = meet_all([Join(x, Brouwer(x)), _pairwise_guard(xs),
                     join_all(xs + [Brouwer(v) for v in xs])])
    return Identity(Brouwer(body), Const(0))


def dalt_identity(n: int) -> Identity:
    """A repaired ``D(n)``.

    As printed, ``D(n)`` fails in every BZ-lattice with more than one element
    (put ``x1 = x2 = 1``: the pairwise factor ``(x1 ^ x2)~`` is 0). Here the
    pairwise factor is moved into the join as ``(xi ^ xj)~~``, which is 1
    exactly when ``xi ^ xj != 0`` in an antiortholattice.
    """
    x = Var("x")
    xs = [Var(f"x{i}") for i in range(1, n + 1)]
    overlap = [Brouwer(Brouwer(Meet(xs[i], xs[j])))
               for i in range(n) for j in range(i + 1, n)]
    body = Meet(Join(x, Brouwer(x)), join_all(overlap + xs + [Brouwer(v) for v in xs]))
    return Identity(Brouwer(body), Const(0))


_PARAMETRIC = {"C": c_identity, "D": d_identity, "DALT": dalt_identity}


def named_identity(name: str, n: int | None = None) -> Identity:
    """The identity called ``name``; ``C``, ``D`` and ``DALT`` take ``n >= 2``."""
    key = name.strip().upper()
    if key in ("*", "(*)"):
        key = "STAR"
    if key in _PARAMETRIC:
        if n is None:
            raise MissingParam(f"{key} needs a parameter n >= 2")
        if n < 2:
            raise ParamOutOfRange(f"{key}(n) needs n >= 2, got {n}")
        return _PARAMETRIC[key](n)
    if key not in _NAMED:
        raise UnknownName(f"unknown identity {name!r}; known: {', '.join(NAMES)}")
    return parse_identity(_NAMED[key])


def resolve_identity(spec: str) -> Identity:
    """``NAME``, ``NAME:n`` or a literal identity."""
    head, _, param = spec.partition(":")
    if head.strip().upper() in NAMES or head.strip() in ("*", "(*)"):
        return named_identity(head, int(param) if param.strip() else None)
    return parse_identity(spec)
