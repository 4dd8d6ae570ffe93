"""
Exact arithmetic in Z[i] and Z[X] for the infinite-ring witness facts.

Nothing here decides a predicate over Z[i] or Z[X] in general; the module only
checks a fixed list of membership facts with exact integers.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from sympy import factorint
from sympy.ntheory import sqrt_mod

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GaussianInt:
    re: int
    im: int = 0

    @classmethod
    def of(cls, value: Union[int, GaussianInt]) -> GaussianInt:
        return value if isinstance(value, GaussianInt) else cls(int(value), 0)

    def __add__(self, other: Union[int, GaussianInt]) -> GaussianInt:
        o = GaussianInt.of(other)
        return GaussianInt(self.re + o.re, self.im + o.im)

    def __sub__(self, other: Union[int, GaussianInt]) -> GaussianInt:
        o = GaussianInt.of(other)
        return GaussianInt(self.re - o.re, self.im - o.im)

    def __neg__(self) -> GaussianInt:
        return GaussianInt(-self.re, -self.im)

    def __mul__(self, other: Union[int, GaussianInt]) -> GaussianInt:
        o = GaussianInt.of(other)
        return GaussianInt(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> GaussianInt:
        result, base = GaussianInt(1), self
        while n > 0:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    @property
    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def conjugate(self) -> GaussianInt:
        return GaussianInt(self.re, -self.im)

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_unit(self) -> bool:
        return self.norm == 1

    def canonical(self) -> GaussianInt:
        """The associate with positive real part and nonnegative imaginary part."""
        z = self
        for _ in range(4):
            if z.re > 0 and z.im >= 0:
                return z
            z = GaussianInt(-z.im, z.re)
        return z    # zero

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        imag = {1: "i", -1: "-i"}.get(self.im, f"{self.im}i")
        if self.re == 0:
            return imag
        sign = "" if imag.startswith("-") else "+"
        return f"{self.re}{sign}{imag}"


def _round_div(a: int, n: int) -> int:
    # nearest integer to a / n for n > 0
    return (2 * a + n) // (2 * n)


def gi_exact_div(a: GaussianInt, b: GaussianInt) -> Optional[GaussianInt]:
    """a / b when b divides a, else None."""
    if b.is_zero():
        return GaussianInt(0) if a.is_zero() else None
    num = a * b.conjugate()
    n = b.norm
    if num.re % n or num.im % n:
        return None
    return GaussianInt(num.re // n, num.im // n)


def gi_divmod(a: GaussianInt, b: GaussianInt) -> Tuple[GaussianInt, GaussianInt]:
    """Division with remainder, N(r) <= N(b) / 2."""
    if b.is_zero():
        raise ZeroDivisionError("Gaussian division by zero")
    num = a * b.conjugate()
    q = GaussianInt(_round_div(num.re, b.norm), _round_div(num.im, b.norm))
    return q, a - q * b


def gi_divides(a: GaussianInt, b: GaussianInt) -> bool:
    """a | b in Z[i]."""
    return gi_exact_div(b, a) is not None


def gi_gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    if a.is_zero() and b.is_zero():
        raise ValueError("gcd(0, 0) is undefined")
    while not b.is_zero():
        a, b = b, gi_divmod(a, b)[1]
    return a.canonical()


def gi_associates(a: GaussianInt, b: GaussianInt) -> bool:
    return a.canonical() == b.canonical()


def _split_prime(p: int) -> GaussianInt:
    """A Gaussian prime of norm p for a rational prime p ≡ 1 mod 4."""
    root = sqrt_mod(p - 1, p)
    return gi_gcd(GaussianInt(p), GaussianInt(int(root), 1))


def gi_factor(a: GaussianInt) -> List[Tuple[GaussianInt, int]]:
    """
    Gaussian prime factorisation through the norm.

    Args:
        a: Nonzero Gaussian integer

    Returns:
        (canonical prime, exponent) pairs sorted by norm then coordinates; the
        product equals ``a`` up to a unit
    """
    if a.is_zero():
        raise ValueError("Cannot factor 0")
    candidates: List[GaussianInt] = []
    for p in sorted(factorint(a.norm)):
        if p == 2:
            candidates.append(GaussianInt(1, 1))
        elif p % 4 == 3:
            candidates.append(GaussianInt(p))
        else:
            pi = _split_prime(p)
            candidates.extend([pi, pi.conjugate().canonical()])

    factors = []
    rest = a
    for prime in candidates:
        e = 0
        while True:
            q = gi_exact_div(rest, prime)
            if q is None:
                break
            rest, e = q, e + 1
        if e:
            factors.append((prime, e))
    if not rest.is_unit():
        raise ArithmeticError(f"Factorisation of {a} left cofactor {rest}")
    return sorted(factors, key=lambda f: (f[0].norm, f[0].re, f[0].im))


def gi_member(x: GaussianInt, c: GaussianInt) -> bool:
    """x ∈ (c); (0) is the zero ideal."""
    if c.is_zero():
        return x.is_zero()
    return gi_divides(c, x)


def gi_stable_colon(c: GaussianInt, t: GaussianInt) -> GaussianInt:
    """Generator of ((c) : t^∞): strip from c every prime it shares with t."""
    g = gi_gcd(c, t)
    while not g.is_unit():
        c = gi_exact_div(c, g)
        assert c is not None
        g = gi_gcd(c, t)
    return c.canonical()


def gi_radical(c: GaussianInt) -> GaussianInt:
    """Generator of rad((c)), the product of the distinct prime factors."""
    result = GaussianInt(1)
    for prime, _ in gi_factor(c):
        result = result * prime
    return result.canonical()


def gi_rad_member(x: GaussianInt, c: GaussianInt) -> bool:
    return all(gi_divides(prime, x) for prime, _ in gi_factor(c))


@dataclass(frozen=True)
class IntPoly:
    """Polynomial over Z, lowest degree first, without trailing zeros."""

    coeffs: Tuple[int, ...]

    def __post_init__(self) -> None:
        coeffs = list(self.coeffs)
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        object.__setattr__(self, "coeffs", tuple(int(c) for c in coeffs))

    @classmethod
    def monomial(cls, a: int, m: int) -> IntPoly:
        return cls(tuple([0] * m + [a]))

    @property
    def degree(self) -> Optional[int]:
        """None for the zero polynomial."""
        return len(self.coeffs) - 1 if self.coeffs else None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(tuple(x + y for x, y in zip(a, b)))

    def __mul__(self, other: IntPoly) -> IntPoly:
        if self.is_zero() or other.is_zero():
            return IntPoly(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return IntPoly(tuple(out))

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            if k == 0:
                terms.append(str(c))
            else:
                mono = "X" if k == 1 else f"X^{k}"
                terms.append(mono if c == 1 else f"{c}{mono}")
        return "+".join(terms)


def poly_member(f: IntPoly, c: int, d: int) -> bool:
    """f ∈ (c·X^d) in Z[X]."""
    if c == 0:
        return f.is_zero()
    return all(x == 0 for x in f.coeffs[:d]) and all(x % c == 0 for x in f.coeffs)


def poly_homog_grad_member(a: int, m: int, c: int, d: int) -> bool:
    """aX^m ∈ Grad((cX^d)) under the grading R_j = Z·X^j."""
    if a == 0:
        return True
    if c == 0:
        return False
    if d > 0 and m == 0:
        return False
    return all(a % p == 0 for p in factorint(abs(c)))


def poly_grad_member_by_search(a: int, m: int, c: int, d: int, max_exponent: int = 16) -> bool:
    """Direct search for n <= max_exponent with (aX^m)^n ∈ (cX^d)."""
    return any(poly_member(IntPoly.monomial(a ** n, m * n), c, d) for n in range(1, max_exponent + 1))


@dataclass(frozen=True)
class WitnessFact:
    fact_id: str
    source: str
    statement: str
    passed: bool


def _facts() -> Sequence[Tuple[str, str, str, bool]]:
    from graded_ideals.ring_core import make_cyclic_graded

    ten = GaussianInt(10)
    two = GaussianInt(2)
    a, b = GaussianInt(7, -1), GaussianInt(7, 1)
    product = a * b
    nine_x = (9, 1)
    z12 = make_cyclic_graded(12)
    return [
        ("ex1_product_in_P", "ex1", "0 != (7-i)(7+i) in (10)",
         not product.is_zero() and gi_member(product, ten)),
        ("ex1_colon", "ex1", "7-i not in ((10) : 2^inf)",
         not gi_member(a, gi_stable_colon(ten, two))),
        ("ex1_stable_colon", "ex1", "((10) : 2^inf) = (5)",
         gi_associates(gi_stable_colon(ten, two), GaussianInt(5))),
        ("ex1_radical_colon", "ex1", "7+i not in (Grad((10)) : 2^inf)",
         not gi_member(b, gi_stable_colon(gi_radical(ten), two))),
        ("ex3_18X_in_P", "ex3", "0 != 18X in (9X)",
         poly_member(IntPoly.monomial(18, 1), *nine_x)),
        ("ex3_18_not_in_P", "ex3", "18 not in (9X)",
         not poly_member(IntPoly.monomial(18, 0), *nine_x)),
        ("ex3_X_not_in_grad", "ex3", "X not in Grad((9X))",
         not poly_homog_grad_member(1, 1, *nine_x)),
        ("ex6_27X_in_P", "ex6", "0 != 27X in (9X)",
         poly_member(IntPoly.monomial(27, 1), *nine_x)),
        ("ex6_27_not_in_P", "ex6", "27 not in (9X)",
         not poly_member(IntPoly.monomial(27, 0), *nine_x)),
        ("rem2_18_not_in_grad", "rem2", "18 not in Grad((9X)), so S_1 = {1} has no witness for (18, X)",
         not poly_homog_grad_member(18, 0, *nine_x) and not poly_homog_grad_member(1, 1, *nine_x)),
        ("ex6_27_not_in_grad", "ex6", "27 not in Grad((9X))",
         not poly_homog_grad_member(27, 0, *nine_x)),
        ("ex4_3_zero_divisor", "ex4", "3 * 4 = 0 in Z_12",
         z12.mul(z12.element(3), z12.element(4)) == z12.zero),
    ]


def verify_witness_facts() -> List[WitnessFact]:
    """Check the fixed fact list and report pass/fail per fact."""
    facts = [WitnessFact(*row) for row in _facts()]
    for fact in facts:
        logger.debug(f"{fact.fact_id}: {'pass' if fact.passed else 'FAIL'}")
    failed = [f.fact_id for f in facts if not f.passed]
    if failed:
        logger.warning(f"Witness facts failed: {failed}")
    else:
        logger.info(f"All {len(facts)} witness facts pass")
    return facts


verify_paper_witnesses = verify_witness_facts
