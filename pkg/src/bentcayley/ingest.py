"""Input parsing: CAST-128 S-box tables in RFC 2144 text layout, S-box bit
functions, and the ANF text syntax."""

from __future__ import annotations

import re

import numpy as np

from .boolean_fn import Anf, BooleanFunction, function_of


class ParseError(ValueError):
    """Malformed input text; carries line and column when known."""

    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        if line is not None:
            message = f"line {line}, column {column}: {message}"
        super().__init__(message)
        self.line = line
        self.column = column


class CountError(ValueError):
    """An S-box table does not contain exactly 256 entries."""


class RangeError(ValueError):
    """S-box or bit selector out of range."""


class VariableOutOfRange(ValueError):
    """An ANF refers to a variable index >= n."""


_HEXISH = re.compile(r"^[0-9a-fA-F]+$")


def parse_cast128_sboxes(text: str) -> list[list[int]]:
    """The eight 256-entry 32-bit S-box tables, in order S1..S8.

    Accepts the verbatim RFC layout (header and prose lines are skipped) or a
    bare whitespace-separated list; data lines consist solely of hexadecimal
    tokens of exactly 8 digits.
    """
    values: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        tokens = line.split()
        if not tokens or not all(_HEXISH.match(t) for t in tokens):
            continue  # header or prose line
        col = 1
        for tok in tokens:
            col = line.index(tok, col - 1) + 1
            if len(tok) != 8:
                raise ParseError(f"hex token {tok!r} is not 8 digits", lineno, col)
            values.append(int(tok, 16))
    if len(values) != 8 * 256:
        raise CountError(f"expected 8 tables of 256 entries, got {len(values)} values")
    return [values[i * 256:(i + 1) * 256] for i in range(8)]


def sbox_bit_function(tables, box: int, bit: int) -> BooleanFunction:
    """Boolean function on 8 variables: f(i) = bit `bit` of entry i of S-box
    `box`, with bit b the coefficient of 2^b in the 32-bit entry."""
    if not 1 <= box <= 8:
        raise RangeError("box must be in 1..8")
    if not 0 <= bit <= 31:
        raise RangeError("bit must be in 0..31")
    table = tables[box - 1]
    if len(table) != 256:
        raise CountError("S-box table must have 256 entries")
    bits = (np.asarray(table, dtype=np.int64) >> bit) & 1
    return BooleanFunction(8, bits.astype(np.uint8))


_VAR = re.compile(r"^x(\d+)$")


def parse_anf(text: str, n: int) -> BooleanFunction:
    """Parse the ANF syntax: terms joined by '+', products by '*', variables
    x0..x{n-1}, optional constant '1'; whitespace is ignored. Repeated terms
    cancel modulo 2."""
    stripped = "".join(text.split())
    if not stripped:
        raise ParseError("empty ANF")
    if stripped == "0":
        return BooleanFunction(n, np.zeros(1 << n, dtype=np.uint8))
    monomials: set[int] = set()
    for term in stripped.split("+"):
        if not term:
            raise ParseError(f"empty term in {text!r}")
        mask = 0
        for factor in term.split("*"):
            if factor == "1":
                continue
            mvar = _VAR.match(factor)
            if not mvar:
                raise ParseError(f"bad factor {factor!r}")
            k = int(mvar.group(1))
            if k >= n:
                raise VariableOutOfRange(f"variable x{k} outside x0..x{n - 1}")
            mask |= 1 << k
        monomials ^= {mask}
    return function_of(Anf(n, monomials))
