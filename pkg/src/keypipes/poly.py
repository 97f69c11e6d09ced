"""Exact sparse polynomials over the integers and the Demazure operators.

Polynomials live in a fixed number of variables ``x1 .. xn`` and store a map
from exponent tuples to nonzero integer coefficients.  Coefficients are kept
inside the signed 64-bit range; leaving it raises :class:`CoefficientOverflow`
instead of silently growing.
"""

from __future__ import annotations

import re
from collections.abc import Iterable, Mapping, Sequence

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)

Exponents = tuple[int, ...]


class CoefficientOverflow(ArithmeticError):
    """A coefficient left the signed 64-bit range."""


class DivisibilityError(ArithmeticError):
    """The Demazure numerator was not divisible; indicates a bug."""


def _checked(c: int) -> int:
    if c > INT64_MAX or c < INT64_MIN:
        raise CoefficientOverflow(f"coefficient {c} does not fit in 64 bits")
    return c


class Polynomial:
    """Immutable polynomial in ``n`` variables with integer coefficients."""

    __slots__ = ("_terms", "_n", "_hash")

    def __init__(self, terms: Mapping[Sequence[int], int] | Iterable = (), n: int = 0):
        if n < 0:
            raise ValueError("variable count must be nonnegative")
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exponents, int] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != n:
                raise ValueError(f"exponent vector {exps} has length {len(exps)}, expected {n}")
            if any(e < 0 for e in exps):
                raise ValueError(f"negative exponent in {exps}")
            acc[exps] = acc.get(exps, 0) + c
        self._terms = {e: _checked(c) for e, c in acc.items() if c != 0}
        self._n = n
        self._hash = None

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> Polynomial:
        return cls({}, n)

    @classmethod
    def one(cls, n: int) -> Polynomial:
        return cls({(0,) * n: 1}, n)

    @classmethod
    def constant(cls, c: int, n: int) -> Polynomial:
        return cls({(0,) * n: c}, n)

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff: int = 1) -> Polynomial:
        return cls({tuple(exps): coeff}, len(exps))

    @classmethod
    def var(cls, i: int, n: int) -> Polynomial:
        """The variable ``x_i`` (1-based) among ``n`` variables."""
        if not 1 <= i <= n:
            raise IndexError(f"variable index {i} out of range 1..{n}")
        exps = [0] * n
        exps[i - 1] = 1
        return cls({tuple(exps): 1}, n)

    @classmethod
    def parse(cls, text: str, n: int) -> Polynomial:
        """Parse the text form produced by ``str()``."""
        return _parse(text, n)

    # -- accessors ----------------------------------------------------------

    @property
    def n(self) -> int:
        return self._n

    @property
    def terms(self) -> dict[Exponents, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, exps: Sequence[int]) -> int:
        return self._terms.get(tuple(exps), 0)

    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self):
        return iter(sorted(self._terms, reverse=True))

    def variables_used(self) -> set[int]:
        """1-based indices of variables that occur with positive exponent."""
        return {i + 1 for exps in self._terms for i, e in enumerate(exps) if e}

    def evaluate(self, values: Sequence[int]) -> int:
        total = 0
        for exps, c in self._terms.items():
            term = c
            for v, e in zip(values, exps):
                term *= v**e
            total += term
        return total

    # -- arithmetic ---------------------------------------------------------

    def _check_same(self, other: Polynomial) -> None:
        if not isinstance(other, Polynomial):
            raise TypeError(f"expected Polynomial, got {type(other).__name__}")
        if other._n != self._n:
            raise ValueError(f"variable count mismatch: {self._n} vs {other._n}")

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, int):
            return Polynomial.constant(other, self._n)
        self._check_same(other)
        return other

    def __add__(self, other) -> Polynomial:
        other = self._coerce(other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return Polynomial(acc, self._n)

    __radd__ = __add__

    def __neg__(self) -> Polynomial:
        return Polynomial({e: -c for e, c in self._terms.items()}, self._n)

    def __sub__(self, other) -> Polynomial:
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> Polynomial:
        return self._coerce(other) - self

    def __mul__(self, other) -> Polynomial:
        other = self._coerce(other)
        acc: dict[Exponents, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                acc[e] = _checked(acc.get(e, 0) + _checked(c1 * c2))
        return Polynomial(acc, self._n)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> Polynomial:
        if k < 0:
            raise ValueError("negative power")
        result = Polynomial.one(self._n)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self == Polynomial.constant(other, self._n)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._n == other._n and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._n, frozenset(self._terms.items())))
        return self._hash

    # -- substitutions ------------------------------------------------------

    def swap_vars(self, i: int) -> Polynomial:
        """Exchange ``x_i`` and ``x_{i+1}``."""
        if not 1 <= i < self._n:
            raise IndexError(f"swap index {i} out of range 1..{self._n - 1}")
        acc = {}
        for e, c in self._terms.items():
            e = list(e)
            e[i - 1], e[i] = e[i], e[i - 1]
            acc[tuple(e)] = c
        return Polynomial(acc, self._n)

    def embed(self, n: int, offset: int) -> Polynomial:
        """Rename ``x_i`` to ``x_{i+offset}`` inside ``n`` variables."""
        if offset < 0 or offset + self._n > n:
            raise ValueError(f"cannot embed {self._n} variables at offset {offset} into {n}")
        acc = {}
        for e, c in self._terms.items():
            acc[(0,) * offset + e + (0,) * (n - offset - self._n)] = c
        return Polynomial(acc, n)

    # -- printing -----------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for k, exps in enumerate(sorted(self._terms, reverse=True)):
            c = self._terms[exps]
            body = _format_monomial(exps, abs(c))
            if k == 0:
                out.append(("-" if c < 0 else "") + body)
            else:
                out.append((" - " if c < 0 else " + ") + body)
        return "".join(out)

    def __repr__(self) -> str:
        return f"Polynomial({str(self)!r}, n={self._n})"


def _format_monomial(exps: Exponents, c: int) -> str:
    factors = []
    for i, e in enumerate(exps, start=1):
        if e == 1:
            factors.append(f"x{i}")
        elif e > 1:
            factors.append(f"x{i}^{e}")
    if not factors:
        return str(c)
    if c != 1:
        factors.insert(0, str(c))
    return "*".join(factors)


_TERM = re.compile(r"\s*([+-])?\s*([^+-]+)")


def _parse(text: str, n: int) -> Polynomial:
    text = text.strip()
    if text == "0":
        return Polynomial.zero(n)
    acc: dict[Exponents, int] = {}
    pos = 0
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos:
            raise ValueError(f"cannot parse polynomial at position {pos}: {text!r}")
        sign = -1 if m.group(1) == "-" else 1
        coeff = 1
        exps = [0] * n
        for factor in m.group(2).strip().split("*"):
            factor = factor.strip()
            if factor.isdigit():
                coeff *= int(factor)
                continue
            fm = re.fullmatch(r"x(\d+)(?:\^(\d+))?", factor)
            if not fm:
                raise ValueError(f"bad factor {factor!r} in {text!r}")
            i = int(fm.group(1))
            if not 1 <= i <= n:
                raise ValueError(f"variable x{i} out of range for n={n}")
            exps[i - 1] += int(fm.group(2) or 1)
        acc[tuple(exps)] = acc.get(tuple(exps), 0) + sign * coeff
        pos = m.end()
    return Polynomial(acc, n)


def demazure_pi(i: int, f: Polynomial) -> Polynomial:
    """Apply the isobaric divided difference ``pi_i`` to ``f``.

    Works monomial by monomial: for ``x_i^a x_{i+1}^b`` the quotient is a
    geometric sum, positive when ``a >= b`` and negative (possibly empty)
    when ``a < b``.  No polynomial division is performed.
    """
    n = f.n
    if not 1 <= i < n:
        raise IndexError(f"Demazure index {i} out of range 1..{n - 1}")
    acc: dict[Exponents, int] = {}
    for exps, c in f.items():
        a, b = exps[i - 1], exps[i]
        if a >= b:
            sign, lo, hi = 1, b, a
        else:
            sign, lo, hi = -1, a + 1, b - 1
        for j in range(lo, hi + 1):
            e = list(exps)
            e[i - 1], e[i] = a + b - j, j
            e = tuple(e)
            acc[e] = _checked(acc.get(e, 0) + sign * c)
    return Polynomial(acc, n)


def demazure_quotient(i: int, f: Polynomial) -> Polynomial:
    """``pi_i f`` computed by dividing the numerator by ``x_i - x_{i+1}``.

    Slow reference path.  Raises :class:`DivisibilityError` if the division
    leaves a remainder, which cannot happen for a correct numerator.
    """
    n = f.n
    if not 1 <= i < n:
        raise IndexError(f"Demazure index {i} out of range 1..{n - 1}")
    xi, xj = Polynomial.var(i, n), Polynomial.var(i + 1, n)
    numer = xi * f - xj * f.swap_vars(i)
    # exact division by (x_i - x_j), eliminating the largest x_i power first
    quotient: dict[Exponents, int] = {}
    rem = numer.terms
    while rem:
        lead = max(rem, key=lambda e: (e[i - 1], e))
        c = rem[lead]
        if lead[i - 1] == 0:
            raise DivisibilityError(f"remainder term {lead} when dividing by x{i} - x{i + 1}")
        q = list(lead)
        q[i - 1] -= 1
        q = tuple(q)
        quotient[q] = quotient.get(q, 0) + c
        # subtract c * x^q * (x_i - x_{i+1})
        shifted = list(q)
        shifted[i] += 1
        shifted = tuple(shifted)
        rem[lead] -= c
        rem[shifted] = rem.get(shifted, 0) + c
        rem = {e: v for e, v in rem.items() if v}
    return Polynomial(quotient, n)


def is_weakly_decreasing(alpha: Sequence[int]) -> bool:
    return all(alpha[k] >= alpha[k + 1] for k in range(len(alpha) - 1))


def check_composition(alpha: Sequence[int]) -> tuple[int, ...]:
    alpha = tuple(int(p) for p in alpha)
    if any(p < 0 for p in alpha):
        raise ValueError(f"composition has a negative part: {alpha}")
    return alpha


def key_polynomial(alpha: Sequence[int], choose=None) -> Polynomial:
    """The key polynomial of the composition ``alpha``.

    ``choose`` picks the ascent to peel off from the list of 1-based indices
    ``i`` with ``alpha_i < alpha_{i+1}``; the default is the leftmost one.
    """
    alpha = check_composition(alpha)
    if not alpha:
        raise ValueError("composition must have at least one part")
    if choose is None:
        return _key_cached(alpha)
    return _key(alpha, choose)


def _key(alpha: tuple[int, ...], choose) -> Polynomial:
    ascents = [k + 1 for k in range(len(alpha) - 1) if alpha[k] < alpha[k + 1]]
    if not ascents:
        return Polynomial.monomial(alpha)
    i = choose(ascents)
    swapped = list(alpha)
    swapped[i - 1], swapped[i] = swapped[i], swapped[i - 1]
    return demazure_pi(i, _key(tuple(swapped), choose))


_KEY_CACHE: dict[tuple[int, ...], Polynomial] = {}


def _key_cached(alpha: tuple[int, ...]) -> Polynomial:
    hit = _KEY_CACHE.get(alpha)
    if hit is None:
        hit = _key(alpha, lambda ascents: ascents[0])
        _KEY_CACHE[alpha] = hit
    return hit
