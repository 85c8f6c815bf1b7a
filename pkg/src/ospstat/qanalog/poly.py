"""
Sparse Laurent polynomials in q, p, z, t with exact integer coefficients.

Exponent vectors are ordered (q, p, z, t).  q and p exponents may be
negative; z and t exponents may not.

>>> q = LaurentPolynomial.var("q")
>>> str((1 + q) * (1 + q + q**2))
'1 + 2*q + 2*q^2 + q^3'
>>> z = LaurentPolynomial.var("z")
>>> str(2 + 3*q + q**2 + z * q**-1)
'2 + 3*q + q^2 + z*q^-1'
"""

from __future__ import annotations

import json
from collections.abc import Iterable, Mapping

__all__ = ["VARS", "LaurentPolynomial", "ZERO", "ONE"]

VARS = ("q", "p", "z", "t")
_INDEX = {v: i for i, v in enumerate(VARS)}
# factor order inside a printed term
_PRINT_ORDER = (2, 3, 1, 0)

Exp = tuple[int, int, int, int]


def _exp(**powers: int) -> Exp:
    e = [0, 0, 0, 0]
    for name, k in powers.items():
        try:
            e[_INDEX[name]] = int(k)
        except KeyError:
            raise ValueError(f"unknown variable {name!r}") from None
    return tuple(e)


class LaurentPolynomial:
    """Immutable; equality and hashing are on the canonical term set."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Exp, int] | Iterable[tuple[Exp, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Exp, int] = {}
        for e, c in items:
            e = tuple(int(x) for x in e)
            if len(e) != 4:
                raise ValueError(f"exponent vector must have 4 entries: {e}")
            if e[2] < 0 or e[3] < 0:
                raise ValueError(f"z and t exponents must be non-negative: {e}")
            acc[e] = acc.get(e, 0) + int(c)
        self._terms = {e: c for e, c in sorted(acc.items()) if c}
        self._hash = None

    @classmethod
    def _raw(cls, terms: dict[Exp, int]) -> LaurentPolynomial:
        self = object.__new__(cls)
        self._terms = {e: terms[e] for e in sorted(terms) if terms[e]}
        self._hash = None
        return self

    @classmethod
    def constant(cls, c: int) -> LaurentPolynomial:
        return cls._raw({(0, 0, 0, 0): int(c)})

    @classmethod
    def monomial(cls, coef: int = 1, **powers: int) -> LaurentPolynomial:
        """coef * q^a p^b z^c t^d, e.g. monomial(q=2, z=1)."""
        return cls({_exp(**powers): coef})

    @classmethod
    def var(cls, name: str) -> LaurentPolynomial:
        return cls.monomial(**{name: 1})

    # -- inspection -----------------------------------------------------------

    @property
    def terms(self) -> dict[Exp, int]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def degree(self, var: str = "q") -> int:
        i = _INDEX[var]
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return max(e[i] for e in self._terms)

    def low_degree(self, var: str = "q") -> int:
        i = _INDEX[var]
        if not self._terms:
            raise ValueError("the zero polynomial has no degree")
        return min(e[i] for e in self._terms)

    def coefficient(self, var: str, k: int) -> LaurentPolynomial:
        """Coefficient of var^k, as a polynomial in the other variables."""
        i = _INDEX[var]
        out = {}
        for e, c in self._terms.items():
            if e[i] == k:
                e2 = list(e)
                e2[i] = 0
                out[tuple(e2)] = c
        return LaurentPolynomial._raw(out)

    def coefficients(self, var: str = "q") -> list[int]:
        """Dense coefficient list of a univariate polynomial in var, from var^0."""
        i = _INDEX[var]
        if any(x for e in self._terms for j, x in enumerate(e) if j != i):
            raise ValueError(f"not univariate in {var}")
        if not self._terms:
            return []
        if self.low_degree(var) < 0:
            raise ValueError("negative exponents present")
        out = [0] * (self.degree(var) + 1)
        for e, c in self._terms.items():
            out[e[i]] = c
        return out

    # -- arithmetic -----------------------------------------------------------

    @staticmethod
    def _coerce(other) -> LaurentPolynomial:
        if isinstance(other, LaurentPolynomial):
            return other
        if isinstance(other, int):
            return LaurentPolynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return LaurentPolynomial._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial._raw({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[Exp, int] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3])
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPolynomial._raw(out)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            if len(self._terms) != 1:
                raise ValueError("only monomials can be raised to negative powers")
            (e, c), = self._terms.items()
            if c not in (1, -1) or e[2] or e[3]:
                raise ValueError("inverse is not a Laurent polynomial in q, p")
            return LaurentPolynomial._raw({tuple(x * k for x in e): c ** (-k)})
        result = ONE
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def shift(self, **powers: int) -> LaurentPolynomial:
        """Multiply by the monomial q^a p^b z^c t^d."""
        d = _exp(**powers)
        return LaurentPolynomial(
            ((e[0] + d[0], e[1] + d[1], e[2] + d[2], e[3] + d[3]), c)
            for e, c in self._terms.items()
        )

    def substitute_q_over_p(self) -> LaurentPolynomial:
        """Replace q by q/p."""
        return LaurentPolynomial._raw(
            {(e[0], e[1] - e[0], e[2], e[3]): c for e, c in self._terms.items()}
        )

    def evaluate(self, **values: int) -> LaurentPolynomial:
        """Set some variables to integers (±1 only where exponents go negative)."""
        idx = {_INDEX[v]: int(x) for v, x in values.items()}
        out: dict[Exp, int] = {}
        for e, c in self._terms.items():
            e2 = list(e)
            for i, x in idx.items():
                if e[i] < 0 and x not in (1, -1):
                    raise ValueError("negative exponent at a value other than ±1")
                c = c * (x ** abs(e[i]) if e[i] >= 0 else x ** -e[i])
                e2[i] = 0
            e2 = tuple(e2)
            out[e2] = out.get(e2, 0) + c
        return LaurentPolynomial._raw(out)

    def value(self) -> int:
        """The integer value of a constant polynomial."""
        if not self._terms:
            return 0
        if list(self._terms) != [(0, 0, 0, 0)]:
            raise ValueError(f"not a constant: {self}")
        return self._terms[(0, 0, 0, 0)]

    # -- comparison -----------------------------------------------------------

    def __eq__(self, other) -> bool:
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(tuple(self._terms.items()))
        return self._hash

    # -- text and JSON --------------------------------------------------------

    def _text_order(self):
        return sorted(self._terms.items(), key=lambda kv: (kv[0][3], kv[0][2], kv[0][1], kv[0][0]))

    @staticmethod
    def _monomial_text(e: Exp) -> str:
        parts = []
        for i in _PRINT_ORDER:
            k = e[i]
            if k == 0:
                continue
            parts.append(VARS[i] if k == 1 else f"{VARS[i]}^{k}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for idx, (e, c) in enumerate(self._text_order()):
            mono = self._monomial_text(e)
            mag = abs(c)
            if not mono:
                body = str(mag)
            elif mag == 1:
                body = mono
            else:
                body = f"{mag}*{mono}"
            if idx == 0:
                out.append(f"-{body}" if c < 0 else body)
            else:
                out.append(f"{'-' if c < 0 else '+'} {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPolynomial({str(self)!r})"

    def to_dict(self) -> dict:
        return {
            "vars": list(VARS),
            "terms": [{"coef": str(c), "exp": list(e)} for e, c in self._terms.items()],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())

    @classmethod
    def from_json(cls, text: str | dict) -> LaurentPolynomial:
        data = json.loads(text) if isinstance(text, str) else text
        names = data.get("vars", list(VARS))
        terms = []
        for t in data["terms"]:
            powers = dict(zip(names, t["exp"]))
            terms.append((_exp(**powers), int(t["coef"])))
        return cls(terms)

    @classmethod
    def parse(cls, text: str) -> LaurentPolynomial:
        """Read the canonical text form back, e.g. "2 - 3*q + z*q^-1"."""
        s = text.strip()
        if not s:
            raise ValueError("empty polynomial text")
        terms = []
        pos = 0
        sign = 1
        first = True
        while pos < len(s):
            while pos < len(s) and s[pos].isspace():
                pos += 1
            if pos < len(s) and s[pos] in "+-":
                sign = -1 if s[pos] == "-" else 1
                pos += 1
            elif not first:
                raise ValueError(f"expected + or - at offset {pos} in {text!r}")
            else:
                sign = 1
            first = False
            end = pos
            while end < len(s) and not (s[end] in "+-" and s[end - 1] != "^"):
                end += 1
            chunk = s[pos:end].strip()
            if not chunk:
                raise ValueError(f"dangling sign in {text!r}")
            coef = 1
            e = [0, 0, 0, 0]
            for factor in chunk.split("*"):
                factor = factor.strip()
                if factor.isdigit():
                    coef *= int(factor)
                    continue
                name, _, power = factor.partition("^")
                if name not in _INDEX:
                    raise ValueError(f"bad factor {factor!r} in {text!r}")
                e[_INDEX[name]] += int(power) if power else 1
            terms.append((tuple(e), sign * coef))
            pos = end
        return cls(terms)


ZERO = LaurentPolynomial._raw({})
ONE = LaurentPolynomial._raw({(0, 0, 0, 0): 1})
