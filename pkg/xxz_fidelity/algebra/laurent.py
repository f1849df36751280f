"""
laurent.py

Sparse multivariate Laurent polynomials with Q(ω) coefficients.

Variables are addressed by slot index; a polynomial stores a table from
integer exponent vectors to nonzero ExactScalar coefficients.
"""

from fractions import Fraction
from typing import Any, Dict, Iterable, Iterator, Mapping, Optional, Sequence, Tuple

from ..errors import NonExactDivisionError, UnsupportedError, UnsupportedSubstitutionError
from .scalars import ExactScalar

Exponents = Tuple[int, ...]


class MultiLaurent:
    """
    Laurent polynomial in ``nvars`` formal variables.

    Instances are treated as immutable; every operation returns a new
    polynomial. Zero coefficients are never stored.
    """

    __slots__ = ('nvars', 'terms')
    __hash__ = None

    def __init__(self, nvars: int, terms: Optional[Mapping[Exponents, Any]] = None):
        """
        Args:
            nvars: Number of variable slots
            terms: Mapping from exponent tuples to coefficients
        """
        self.nvars = nvars
        clean: Dict[Exponents, ExactScalar] = {}
        if terms:
            for exps, coeff in terms.items():
                c = ExactScalar.coerce(coeff)
                if c:
                    if len(exps) != nvars:
                        raise ValueError(f"exponent vector {exps} has wrong length")
                    clean[tuple(exps)] = c
        self.terms = clean

    # construction

    @classmethod
    def zero(cls, nvars: int) -> 'MultiLaurent':
        return cls(nvars)

    @classmethod
    def constant(cls, nvars: int, value: Any = 1) -> 'MultiLaurent':
        return cls(nvars, {(0,) * nvars: value})

    @classmethod
    def monomial(cls, nvars: int, powers: Mapping[int, int], coeff: Any = 1) -> 'MultiLaurent':
        """
        Build coeff · ∏ v^powers[v].

        Args:
            nvars: Number of variable slots
            powers: Mapping from slot index to exponent
            coeff: Scalar coefficient
        """
        exps = [0] * nvars
        for var, e in powers.items():
            exps[var] += e
        return cls(nvars, {tuple(exps): coeff})

    @classmethod
    def variable(cls, nvars: int, index: int, power: int = 1) -> 'MultiLaurent':
        return cls.monomial(nvars, {index: power})

    def _wrap(self, value: Any) -> 'MultiLaurent':
        if isinstance(value, MultiLaurent):
            if value.nvars != self.nvars:
                raise ValueError("variable count mismatch")
            return value
        return MultiLaurent.constant(self.nvars, ExactScalar.coerce(value))

    # inspection

    def is_zero(self) -> bool:
        return not self.terms

    def is_monomial(self) -> bool:
        return len(self.terms) == 1

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Tuple[Exponents, ExactScalar]]:
        return iter(self.terms.items())

    def degree_range(self, var: int) -> Tuple[int, int]:
        """
        Smallest and largest exponent of a variable.

        Raises:
            ValueError: For the zero polynomial
        """
        if not self.terms:
            raise ValueError("degree range of the zero polynomial")
        exps = [e[var] for e in self.terms]
        return min(exps), max(exps)

    def width(self, var: int) -> int:
        """Degree width max - min in one variable (0 for the zero polynomial)."""
        if not self.terms:
            return 0
        lo, hi = self.degree_range(var)
        return hi - lo

    def is_centred(self, var: int) -> bool:
        """True when the exponents of ``var`` are spread symmetrically around 0."""
        if not self.terms:
            return True
        lo, hi = self.degree_range(var)
        return lo == -hi

    def part(self, var: int, exponent: int) -> 'MultiLaurent':
        """Terms whose exponent of ``var`` equals ``exponent``."""
        return MultiLaurent(self.nvars, {e: c for e, c in self.terms.items() if e[var] == exponent})

    # arithmetic

    def __add__(self, other: Any) -> 'MultiLaurent':
        o = self._wrap(other)
        out = dict(self.terms)
        for e, c in o.terms.items():
            s = out.get(e)
            out[e] = c if s is None else s + c
        return MultiLaurent(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> 'MultiLaurent':
        return MultiLaurent(self.nvars, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Any) -> 'MultiLaurent':
        return self + (-self._wrap(other))

    def __rsub__(self, other: Any) -> 'MultiLaurent':
        return self._wrap(other) - self

    def __mul__(self, other: Any) -> 'MultiLaurent':
        if not isinstance(other, MultiLaurent):
            try:
                c = ExactScalar.coerce(other)
            except TypeError:
                return NotImplemented
            return MultiLaurent(self.nvars, {e: v * c for e, v in self.terms.items()})
        o = self._wrap(other)
        out: Dict[Exponents, ExactScalar] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in o.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = c1 * c2
                s = out.get(e)
                out[e] = prod if s is None else s + prod
        return MultiLaurent(self.nvars, out)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> 'MultiLaurent':
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse_monomial() ** (-exponent)
        result = MultiLaurent.constant(self.nvars)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def inverse_monomial(self) -> 'MultiLaurent':
        """
        Inverse of a single-term polynomial.

        Raises:
            ValueError: If the polynomial is not a monomial
        """
        if not self.is_monomial():
            raise ValueError("only monomials are invertible")
        (exps, coeff), = self.terms.items()
        return MultiLaurent(self.nvars, {tuple(-e for e in exps): coeff.inverse()})

    def __eq__(self, other: Any) -> bool:
        try:
            o = self._wrap(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.terms == o.terms

    def __bool__(self) -> bool:
        return bool(self.terms)

    # substitution

    def swap(self, i: int, j: int) -> 'MultiLaurent':
        """Exchange two variables."""
        out = {}
        for e, c in self.terms.items():
            f = list(e)
            f[i], f[j] = f[j], f[i]
            out[tuple(f)] = c
        return MultiLaurent(self.nvars, out)

    def relabel(self, nvars: int, slot_map: Mapping[int, int]) -> 'MultiLaurent':
        """
        Move slot k to slot_map[k] in a space of ``nvars`` slots.

        Raises:
            ValueError: If a variable that occurs has no target slot
        """
        out: Dict[Exponents, ExactScalar] = {}
        for exps, c in self.terms.items():
            new = [0] * nvars
            for k, e in enumerate(exps):
                if e:
                    if k not in slot_map:
                        raise ValueError(f"slot {k} occurs but is not mapped")
                    new[slot_map[k]] += e
            key = tuple(new)
            s = out.get(key)
            out[key] = c if s is None else s + c
        return MultiLaurent(nvars, out)

    def substitute_monomials(self, mapping: Mapping[int, 'MultiLaurent']) -> 'MultiLaurent':
        """
        Simultaneous substitution of monomial values for several variables.

        Args:
            mapping: Slot index -> single-term (or zero) MultiLaurent

        Raises:
            UnsupportedSubstitutionError: If a value has more than one term
        """
        images = []
        for var, value in mapping.items():
            value = self._wrap(value)
            if len(value.terms) > 1:
                raise UnsupportedSubstitutionError(
                    f"value for slot {var} is not a monomial; use laurent_substitute")
            if value.terms:
                (vexp, vcoeff), = value.terms.items()
            else:
                vexp, vcoeff = (0,) * self.nvars, ExactScalar(0)
            images.append((var, vexp, vcoeff))
        out: Dict[Exponents, ExactScalar] = {}
        for exps, coeff in self.terms.items():
            new = list(exps)
            c = coeff
            for var, vexp, vcoeff in images:
                new[var] = 0
            for var, vexp, vcoeff in images:
                e = exps[var]
                if e:
                    c = c * vcoeff ** e
                    for k, ve in enumerate(vexp):
                        if ve:
                            new[k] += e * ve
            if c:
                key = tuple(new)
                s = out.get(key)
                out[key] = c if s is None else s + c
        return MultiLaurent(self.nvars, out)

    def evaluate(self, point: Sequence[Any]) -> Any:
        """
        Evaluate at a full point.

        Exact inputs (int, Fraction, ExactScalar) give an ExactScalar;
        any mpmath entry switches to floating evaluation at the current
        mpmath precision.
        """
        if len(point) != self.nvars:
            raise ValueError("point has wrong dimension")
        exact = all(isinstance(v, (int, ExactScalar)) or _is_fraction(v) for v in point)
        values = [ExactScalar.coerce(v) for v in point] if exact else list(point)
        cache: Dict[Tuple[int, int], Any] = {}
        total: Any = ExactScalar(0) if exact else 0
        for exps, coeff in self.terms.items():
            term: Any = coeff if exact else coeff.to_mp()
            for var, e in enumerate(exps):
                if e:
                    key = (var, e)
                    p = cache.get(key)
                    if p is None:
                        p = values[var] ** e
                        cache[key] = p
                    term = term * p
            total = total + term
        return total

    # division

    def exact_divide(self, divisor: 'MultiLaurent', var: int) -> 'MultiLaurent':
        """
        Exact quotient by long division in one variable.

        The divisor's top part in ``var`` must be a single term.

        Raises:
            ZeroDivisionError: If the divisor is zero
            UnsupportedError: If the divisor's leading part is not a monomial
            NonExactDivisionError: If the division leaves a remainder
        """
        d = self._wrap(divisor)
        if d.is_zero():
            raise ZeroDivisionError("Laurent division by zero")
        if self.is_zero():
            return MultiLaurent.zero(self.nvars)
        lo_d, hi_d = d.degree_range(var)
        lead = d.part(var, hi_d)
        if not lead.is_monomial():
            raise UnsupportedError("leading part of the divisor must be a single term")
        (lead_exp, lead_coeff), = lead.terms.items()
        inv = lead_coeff.inverse()
        floor = self.degree_range(var)[0] - lo_d
        remainder = self
        quotient: Dict[Exponents, ExactScalar] = {}
        while not remainder.is_zero():
            hi_r = remainder.degree_range(var)[1]
            if hi_r - hi_d < floor:
                raise NonExactDivisionError("Laurent division leaves a remainder")
            top = remainder.part(var, hi_r)
            q_terms = {
                tuple(a - b for a, b in zip(exps, lead_exp)): c * inv
                for exps, c in top.terms.items()
            }
            q = MultiLaurent(self.nvars, q_terms)
            for e, c in q.terms.items():
                s = quotient.get(e)
                quotient[e] = c if s is None else s + c
            remainder = remainder - q * d
        return MultiLaurent(self.nvars, quotient)

    def __floordiv__(self, other: Any) -> 'MultiLaurent':
        if self.nvars != 1:
            raise UnsupportedError("'//' is defined for univariate Laurent polynomials only")
        return self.exact_divide(self._wrap(other), 0)

    # display

    def to_string(self, names: Optional[Sequence[str]] = None) -> str:
        if not self.terms:
            return "0"
        names = names or [f"v{k}" for k in range(self.nvars)]
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            coeff = self.terms[exps]
            factors = []
            for name, e in zip(names, exps):
                if e == 1:
                    factors.append(name)
                elif e:
                    factors.append(f"{name}^{e}")
            mono = "*".join(factors)
            if not mono:
                pieces.append(f"({coeff})")
            elif coeff == 1:
                pieces.append(mono)
            else:
                pieces.append(f"({coeff})*{mono}")
        return " + ".join(pieces)

    def __repr__(self) -> str:
        return f"MultiLaurent({self.to_string()})"


def _is_fraction(value: Any) -> bool:
    return isinstance(value, Fraction)


def bracket(v: MultiLaurent) -> MultiLaurent:
    """
    The bracket [v] = v - 1/v of a Laurent monomial.

    Raises:
        ValueError: If ``v`` is not a monomial
    """
    return v - v.inverse_monomial()


def laurent_substitute(p: MultiLaurent, var: int, value: MultiLaurent) -> MultiLaurent:
    """
    Substitute ``value`` for one variable.

    Monomial values work for every exponent; a multi-term value is only
    allowed when ``var`` appears with non-negative exponents.

    Raises:
        UnsupportedSubstitutionError: Multi-term value into a negative power
    """
    value = p._wrap(value)
    if len(value.terms) <= 1:
        return p.substitute_monomials({var: value})
    if p.is_zero():
        return p
    lo, hi = p.degree_range(var)
    if lo < 0:
        raise UnsupportedSubstitutionError(
            "non-monomial substitution into a negative power")
    result = MultiLaurent.zero(p.nvars)
    for e in range(lo, hi + 1):
        part = p.part(var, e)
        if part.is_zero():
            continue
        stripped = MultiLaurent(p.nvars, {
            exps[:var] + (0,) + exps[var + 1:]: c for exps, c in part.terms.items()})
        result = result + stripped * value ** e
    return result


def product(factors: Iterable[MultiLaurent], nvars: int) -> MultiLaurent:
    """Product of an iterable of polynomials (1 for an empty iterable)."""
    result = MultiLaurent.constant(nvars)
    for f in factors:
        result = result * f
    return result
