# Copyright 2024 Lauricella Matrix Functions.
# License LGPL-3 or later (http://www.gnu.org/licenses/lgpl).

"""Notation in which catalog identities are written.

One right-hand-side term is a whitespace separated token list that reads
like the printed formula::

    - each[j] sum[n1=0..n-1] x_j B_j F[A-n1,B_j+1,C_j+1] C_j^-1
    + sum[n_j<=n] multinom (B_j)_n_j x_j^n_j F[A+N,B_j+n_j,C_j+n_j] (C_j)^-1_n_j

Tokens:

``each[j]``
    the term is repeated for ``j = 1..k``
``sum[n1=lo..hi]`` / ``sum[n1,n2<=n]`` / ``sum[n_j<=n]``
    a single index range, or all multi-indices with ``N <= n``
``binom`` / ``multinom``
    binomial or multinomial weight of the enclosing sum
``x_1`` ``x_1^n1`` ``(-x_2)^n2``
    coordinate powers
``B_1`` ``C^-1`` ``(B_1)_n1`` ``(C_2)^-1_n1`` ``(C-n1+1)^-1``
    plain, inverse, Pochhammer, inverse Pochhammer and shifted factors
``F`` / ``F[A+n1,B_1+1]``
    the series, unshifted or with shifted parameters; factors before it
    multiply from the left, factors after it from the right

``_i`` names the entry's index. ``_j`` inside an ``each[j]`` term names
the running index; anywhere else it stands for the product over all
``j = 1..k`` (or for every shift, inside ``F[...]``). Shift and order
expressions are integer sums of ``n``, ``n1``, ``n2``, ``n3``, ``N``
(sum of the multi-index) and ``N_2`` (its first two entries).
"""

import logging
import math
import re
from dataclasses import dataclass
from functools import lru_cache
from itertools import product

from ..exceptions import CatalogError

_logger = logging.getLogger(__name__)

PARAM_NAME = r"[ABC](?:_(?:\d+|[ij]))?"
PARAM_RE = re.compile(r"(?<![\w])(%s)(?![\w])" % PARAM_NAME)

_EXPR_TOKEN = re.compile(r"\s*([+-])?\s*(\d+|[A-Za-z][A-Za-z0-9_]*)")
_SUM_RANGE = re.compile(r"^sum\[(\w+)=(.+)\.\.(.+)\]$")
_SUM_MULTI = re.compile(r"^sum\[([\w,]+)<=(.+)\]$")
_EACH = re.compile(r"^each\[(\w)\]$")
_POWER = re.compile(r"^(?:\((-)x_(\d+)\)|x_(\d+))(?:\^(.+))?$")
_POCH = re.compile(r"^\((%s)\)(\^-1)?_(.+)$" % PARAM_NAME)
_SHIFTED = re.compile(r"^\((%s)([+-].+)\)(\^-1)?$" % PARAM_NAME)
_PLAIN = re.compile(r"^(%s)(\^-1)?$" % PARAM_NAME)
_CALL = re.compile(r"^F(?:\[(.*)\])?$")
_SHIFT = re.compile(r"^(%s)([+-].+)$" % PARAM_NAME)


@dataclass(frozen=True)
class LinearExpr:
    """Integer linear form ``const + sum(coeff * symbol)``."""

    const: int = 0
    terms: tuple = ()

    def evaluate(self, env):
        total = self.const
        for symbol, coeff in self.terms:
            total += coeff * _lookup(symbol, env)
        return total

    def __str__(self):
        parts = []
        for symbol, coeff in self.terms:
            parts.append(("+" if coeff > 0 else "-") + symbol)
        if self.const or not parts:
            parts.append("%+d" % self.const)
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def _lookup(symbol, env):
    if symbol == "N":
        return sum(env[v] for v in env["__multi__"])
    if symbol.startswith("N_"):
        count = int(symbol[2:])
        return sum(env[v] for v in env["__multi__"][:count])
    try:
        return env[symbol]
    except KeyError:
        raise CatalogError(
            "Unbound symbol %r in identity expression" % symbol
        ) from None


@lru_cache(maxsize=4096)
def parse_expr(text):
    text = text.strip()
    pos = 0
    const = 0
    coeffs = {}
    first = True
    while pos < len(text):
        match = _EXPR_TOKEN.match(text, pos)
        if not match or (not first and not match.group(1)):
            raise CatalogError("Cannot read expression %r" % text)
        sign = -1 if match.group(1) == "-" else 1
        atom = match.group(2)
        if atom.isdigit():
            const += sign * int(atom)
        else:
            coeffs[atom] = coeffs.get(atom, 0) + sign
        pos = match.end()
        first = False
    if first:
        raise CatalogError("Empty expression")
    return LinearExpr(const, tuple((s, c) for s, c in coeffs.items() if c))


@dataclass(frozen=True)
class Summation:
    style: str = "none"
    variables: tuple = ()
    low: LinearExpr = None
    high: LinearExpr = None

    def points(self, env):
        if self.style == "none":
            yield {}
        elif self.style == "range":
            (var,) = self.variables
            for value in range(self.low.evaluate(env), self.high.evaluate(env) + 1):
                yield {var: value}
        else:
            bound = self.high.evaluate(env)
            for values in product(range(bound + 1), repeat=len(self.variables)):
                if sum(values) <= bound:
                    yield dict(zip(self.variables, values))


@dataclass(frozen=True)
class Coordinate:
    axis: int
    exponent: LinearExpr
    negated: bool = False

    def value(self, coords, env):
        base = -coords[self.axis - 1] if self.negated else coords[self.axis - 1]
        return base ** self.exponent.evaluate(env)


@dataclass(frozen=True)
class Weight:
    style: str

    def value(self, summation, env):
        top = summation.high.evaluate(env)
        picks = [env[v] for v in summation.variables]
        if self.style == "binom":
            return math.comb(top, picks[0])
        weight = 1
        remaining = top
        for pick in picks:
            weight *= math.comb(remaining, pick)
            remaining -= pick
        return weight


@dataclass(frozen=True)
class MatrixFactor:
    """``P``, ``P^-1``, ``(P+e)``, ``(P+e)^-1``, ``(P)_e`` or ``(P)^-1_e``."""

    parameter: str
    shift: LinearExpr = LinearExpr()
    order: LinearExpr = None
    inverse: bool = False


@dataclass(frozen=True)
class SeriesCall:
    shifts: tuple = ()

    def resolve(self, env):
        return tuple(
            sorted((name, expr.evaluate(env)) for name, expr in self.shifts)
        )


@dataclass(frozen=True)
class RhsTerm:
    """One summand of a right-hand side, after template expansion."""

    sign: int
    summation: Summation
    scalar_part: tuple
    left_factors: tuple
    series_call: SeriesCall
    right_factors: tuple
    text: str = ""


def _parse_matrix_token(token):
    match = _POCH.match(token)
    if match:
        return MatrixFactor(
            match.group(1),
            order=parse_expr(match.group(3)),
            inverse=bool(match.group(2)),
        )
    match = _SHIFTED.match(token)
    if match:
        return MatrixFactor(
            match.group(1),
            shift=parse_expr(match.group(2)),
            inverse=bool(match.group(3)),
        )
    match = _PLAIN.match(token)
    if match:
        return MatrixFactor(match.group(1), inverse=bool(match.group(2)))
    return None


def _parse_call(body):
    shifts = []
    seen = set()
    for part in filter(None, (p.strip() for p in (body or "").split(","))):
        match = _SHIFT.match(part)
        if not match:
            raise CatalogError("Cannot read series shift %r" % part)
        name = match.group(1)
        if name in seen:
            raise CatalogError("Parameter %s is shifted twice in F[%s]" % (name, body))
        seen.add(name)
        shifts.append((name, parse_expr(match.group(2))))
    return SeriesCall(tuple(shifts))


def parse_term(text):
    """Parse one fully expanded term (no ``each`` and no ``_j`` left)."""
    tokens = text.split()
    sign = 1
    if tokens and tokens[0] in "+-":
        sign = -1 if tokens.pop(0) == "-" else 1
    summation = Summation()
    scalars, left, right = [], [], []
    call = None
    for token in tokens:
        match = _SUM_RANGE.match(token)
        if match:
            summation = Summation(
                "range",
                (match.group(1),),
                parse_expr(match.group(2)),
                parse_expr(match.group(3)),
            )
            continue
        match = _SUM_MULTI.match(token)
        if match:
            summation = Summation(
                "multi",
                tuple(match.group(1).split(",")),
                None,
                parse_expr(match.group(2)),
            )
            continue
        if token in ("binom", "multinom"):
            scalars.append(Weight(token))
            continue
        match = _POWER.match(token)
        if match:
            negated = bool(match.group(1))
            axis = int(match.group(2) or match.group(3))
            exponent = parse_expr(match.group(4)) if match.group(4) else LinearExpr(1)
            scalars.append(Coordinate(axis, exponent, negated))
            continue
        match = _CALL.match(token)
        if match:
            if call is not None:
                raise CatalogError("Term %r calls the series twice" % text)
            call = _parse_call(match.group(1))
            continue
        factor = _parse_matrix_token(token)
        if factor is None:
            raise CatalogError("Cannot read token %r in term %r" % (token, text))
        (left if call is None else right).append(factor)
    if call is None:
        raise CatalogError("Term %r has no series call" % text)
    for weight in (s for s in scalars if isinstance(s, Weight)):
        expected = "range" if weight.style == "binom" else "multi"
        if summation.style != expected:
            raise CatalogError(
                "%s weight outside a matching sum in %r" % (weight.style, text)
            )
    return RhsTerm(
        sign, summation, tuple(scalars), tuple(left), call, tuple(right), text
    )


def _bind(token, j):
    token = re.sub(r"n_j\b", "n%d" % j, token)
    return re.sub(r"_j\b", "_%d" % j, token)


def _expand_products(text, k):
    """Replace unbound ``_j`` tokens by their product over ``j = 1..k``."""
    out = []
    for token in text.split():
        if "_j" not in token:
            out.append(token)
            continue
        if token.startswith("sum["):
            names = ",".join("n%d" % j for j in range(1, k + 1))
            out.append(token.replace("n_j", names))
            continue
        match = _CALL.match(token)
        if match:
            parts = []
            for part in (p.strip() for p in match.group(1).split(",")):
                if "_j" in part:
                    parts.extend(_bind(part, j) for j in range(1, k + 1))
                else:
                    parts.append(part)
            out.append("F[%s]" % ",".join(parts))
            continue
        out.extend(_bind(token, j) for j in range(1, k + 1))
    return " ".join(out)


@lru_cache(maxsize=8192)
def expand_term(text, k, index):
    """Expand templates of one written term into parsed terms for arity ``k``."""
    text = re.sub(r"_i\b", "_%d" % index, text)
    tokens = text.split()
    each = [t for t in tokens if _EACH.match(t)]
    if not each:
        return (parse_term(_expand_products(text, k)),)
    rest = " ".join(t for t in tokens if not _EACH.match(t))
    return tuple(parse_term(_bind(rest, j)) for j in range(1, k + 1))


def expand_name(name, k, index):
    """Resolve ``_i`` in a parameter name; ``_*`` expands over ``1..k``."""
    name = re.sub(r"_i\b", "_%d" % index, name)
    if name.endswith("_*"):
        return [name[:-1] + str(j) for j in range(1, k + 1)]
    return [name]


def relabel(text, mapping):
    """Swap parameter names according to ``mapping`` in a written fragment."""
    return PARAM_RE.sub(lambda m: mapping.get(m.group(1), m.group(1)), text)


def term_parameters(term):
    names = [f.parameter for f in term.left_factors + term.right_factors]
    names.extend(name for name, _expr in term.series_call.shifts)
    return names
