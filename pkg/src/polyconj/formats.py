"""Line-oriented text format for instances, certificates, and solutions.

Layout: whitespace-separated decimal integers (arbitrary precision), one
logical row per line, the kind tag on line 1 and the size n on line 2.
Full-line '#' comments and blank lines are ignored; serialization is
canonical so parse(serialize(x)) == x.

    ssp / sspp / tssp:   kind, n, n coefficients, target
    conj:                "conj", n, 2n+1 exponents of u, 2n+1 exponents of v
    cert:                "cert", n, 2n+1 exponents of the conjugator
    sol:                 "sol",  n, n values in {-1, 0, 1}
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .conjugacy import Certificate
from .errors import InstanceParseError
from .group import GroupContext, make_context
from .reductions import ConjugacyInstance, SspInstance, SspPrimeInstance
from .tssp import TsspInstance

KINDS = ("ssp", "sspp", "tssp", "conj", "cert", "sol")

_TOKEN = re.compile(r"\S+")
_INT = re.compile(r"[+-]?\d+\Z")


@dataclass(frozen=True)
class CertificateFile:
    """A conjugator witness together with the context it lives in."""

    ctx: GroupContext
    certificate: Certificate


@dataclass(frozen=True)
class SolutionFile:
    """A witness vector for ssp (bits), sspp (signs), or tssp (bits)."""

    values: tuple[int, ...]


ParsedFile = (
    SspInstance
    | SspPrimeInstance
    | TsspInstance
    | ConjugacyInstance
    | CertificateFile
    | SolutionFile
)


class _Cursor:
    def __init__(self, text: str):
        self.rows: list[list[tuple[int, int, str]]] = []
        for lineno, raw in enumerate(text.splitlines(), start=1):
            stripped = raw.lstrip()
            if not stripped or stripped.startswith("#"):
                continue
            row = [(lineno, m.start() + 1, m.group()) for m in _TOKEN.finditer(raw)]
            self.rows.append(row)
        self.pos = 0
        self.last_line = self.rows[-1][0][0] if self.rows else 1

    def take_row(self, arity: int, what: str) -> list[tuple[int, int, str]]:
        if self.pos >= len(self.rows):
            raise InstanceParseError(f"missing {what}", self.last_line + 1, 1)
        row = self.rows[self.pos]
        self.pos += 1
        if len(row) < arity:
            line, col, tok = row[-1]
            raise InstanceParseError(
                f"{what}: expected {arity} values, found {len(row)}",
                line,
                col + len(tok),
            )
        if len(row) > arity:
            line, col, _ = row[arity]
            raise InstanceParseError(
                f"{what}: expected {arity} values, found {len(row)}", line, col
            )
        return row

    def finish(self) -> None:
        if self.pos < len(self.rows):
            line, col, _ = self.rows[self.pos][0]
            raise InstanceParseError("unexpected extra content", line, col)


def _to_int(token: tuple[int, int, str]) -> int:
    line, col, text = token
    if not _INT.match(text):
        raise InstanceParseError(f"expected an integer, found {text!r}", line, col)
    return int(text)


def _int_row(cursor: _Cursor, arity: int, what: str) -> tuple[int, ...]:
    return tuple(_to_int(tok) for tok in cursor.take_row(arity, what))


def parse_instance(text: str) -> ParsedFile:
    """Parse one instance/certificate/solution document."""
    cursor = _Cursor(text)
    line, col, kind = cursor.take_row(1, "kind tag")[0]
    if kind not in KINDS:
        raise InstanceParseError(
            f"unknown kind {kind!r}, expected one of {', '.join(KINDS)}", line, col
        )
    ntok = cursor.take_row(1, "size n")[0]
    n = _to_int(ntok)
    if n < 1:
        raise InstanceParseError(f"size n must be >= 1, got {n}", ntok[0], ntok[1])

    if kind in ("ssp", "sspp", "tssp"):
        coeffs = _int_row(cursor, n, "coefficient row")
        target = _int_row(cursor, 1, "target row")[0]
        cursor.finish()
        cls = {"ssp": SspInstance, "sspp": SspPrimeInstance, "tssp": TsspInstance}[kind]
        return cls(coefficients=coeffs, target=target)

    ctx = make_context(n)
    if kind == "conj":
        u = _int_row(cursor, ctx.hirsch, "exponent row for u")
        v = _int_row(cursor, ctx.hirsch, "exponent row for v")
        cursor.finish()
        return ConjugacyInstance(ctx=ctx, u=u, v=v)
    if kind == "cert":
        w = _int_row(cursor, ctx.hirsch, "exponent row for the conjugator")
        cursor.finish()
        return CertificateFile(ctx=ctx, certificate=Certificate(w=w))

    row = cursor.take_row(n, "solution row")
    values = []
    for tok in row:
        value = _to_int(tok)
        if value not in (-1, 0, 1):
            raise InstanceParseError(
                f"solution entries must be -1, 0, or 1, found {value}", tok[0], tok[1]
            )
        values.append(value)
    cursor.finish()
    return SolutionFile(values=tuple(values))


def _ints(values) -> str:
    return " ".join(str(v) for v in values)


def serialize_instance(obj: ParsedFile) -> str:
    """Canonical text for any parsed object; inverse of parse_instance."""
    if isinstance(obj, SspInstance):
        kind = "ssp"
    elif isinstance(obj, SspPrimeInstance):
        kind = "sspp"
    elif isinstance(obj, TsspInstance):
        kind = "tssp"
    elif isinstance(obj, ConjugacyInstance):
        return (
            f"conj\n{obj.ctx.n}\n{_ints(obj.u)}\n{_ints(obj.v)}\n"
        )
    elif isinstance(obj, CertificateFile):
        return f"cert\n{obj.ctx.n}\n{_ints(obj.certificate.w)}\n"
    elif isinstance(obj, SolutionFile):
        return f"sol\n{len(obj.values)}\n{_ints(obj.values)}\n"
    else:
        raise TypeError(f"cannot serialize {type(obj).__name__}")
    return f"{kind}\n{obj.n}\n{_ints(obj.coefficients)}\n{obj.target}\n"
