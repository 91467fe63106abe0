"""
Rational functions over QQ in the equivariant parameters λ_1..λ_m and z.

The coefficient field is a sympy sparse FracField with generators ordered
``z, l_m, ..., l_1`` under grlex, so monomials compare graded-lexicographically
with λ_1 < ... < λ_m < z. Every FracElement is kept in sympy's cancelled form
(integer coefficients, coprime numerator and denominator, denominator with a
positive leading coefficient), which makes equality structural.
"""
from typing import Dict, Iterable, Sequence, Tuple
from sympy import QQ
from sympy.polys.fields import FracElement, field
from sympy.polys.orderings import grlex
from sympy.polys.rings import PolyElement

from core.errors import ArityMismatch, NotProper, ZeroDivisionPolynomial

RationalFunction = FracElement
Poly = PolyElement

# Generator index of z in the ring
Z_INDEX = 0


class ExactAlgebra:
    """Coefficient field Frac(QQ[λ_1..λ_m, z]) for a fan with m rays"""

    def __init__(self, m: int):
        if m < 1:
            raise ValueError("At least one equivariant parameter is required")
        self.m = m
        names = ['z'] + [f'l{i}' for i in range(m, 0, -1)]
        self.field, *gens = field(names, QQ, grlex)
        self.ring = self.field.ring
        self.domain = self.field.to_domain()
        self.z = gens[0]
        self._lams = tuple(reversed(gens[1:]))
        self._ring_z = self.ring.gens[Z_INDEX]
        self._ring_lams = tuple(reversed(self.ring.gens[1:]))
        self._shift_cache: Dict[Tuple[int, ...], list] = {}

    def __repr__(self) -> str:
        return f"ExactAlgebra(m={self.m})"

    @property
    def zero(self) -> RationalFunction:
        return self.field.zero

    @property
    def one(self) -> RationalFunction:
        return self.field.one

    def lam(self, i: int) -> RationalFunction:
        """λ_i for a 1-based ray index"""
        return self._lams[i - 1]

    def linear_form(self, coeffs: Sequence[int]) -> RationalFunction:
        """Σ_k coeffs[k]·λ_{k+1}"""
        if len(coeffs) != self.m:
            raise ArityMismatch(f"Expected {self.m} coefficients, got {len(coeffs)}")
        result = self.field.zero
        for c, lam in zip(coeffs, self._lams):
            if c:
                result += c * lam
        return result

    def convert(self, value) -> RationalFunction:
        """Coerce polynomials, rationals and ints of this algebra into the field"""
        if isinstance(value, FracElement):
            if value.field != self.field:
                raise ArityMismatch("Rational function belongs to a different algebra")
            return value
        if isinstance(value, PolyElement):
            if value.ring != self.ring:
                raise ArityMismatch("Polynomial belongs to a different ring")
            return self.field.new(value)
        return self.field(value)

    # --- polynomial layer ---

    def mp_arith(self, a: Poly, b: Poly, op: str) -> Poly:
        """Exact add or mul of two polynomials of this ring"""
        if a.ring != self.ring or b.ring != self.ring:
            raise ArityMismatch(
                f"Polynomials must live in the {self.m + 1}-variable ring of this algebra"
            )
        if op == 'add':
            return a + b
        if op == 'mul':
            return a * b
        raise ValueError(f"Unsupported polynomial operation: {op}")

    def rf_reduce(self, num: Poly, den: Poly) -> RationalFunction:
        """num/den in cancelled canonical form"""
        if not den:
            raise ZeroDivisionPolynomial("Denominator is the zero polynomial")
        return self.field.new(self.ring(num), self.ring(den))

    # --- z direction ---

    def z_degree(self, p: Poly) -> int:
        if not p:
            return -1
        return p.degree(Z_INDEX)

    def is_z_free(self, f: RationalFunction) -> bool:
        return self.z_degree(f.numer) <= 0 and self.z_degree(f.denom) <= 0

    def is_z_polynomial(self, f: RationalFunction) -> bool:
        return self.z_degree(f.denom) <= 0

    def is_proper(self, f: RationalFunction) -> bool:
        return not f or self.z_degree(f.numer) < self.z_degree(f.denom)

    def z_split(self, f: RationalFunction) -> Tuple[RationalFunction, RationalFunction]:
        """
        Split f = polyPart + properPart with polyPart polynomial in z over
        Frac(QQ[λ]) and properPart vanishing at z = ∞.
        """
        num, den = f.numer, f.denom
        dn = self.z_degree(den)
        if dn <= 0:
            return f, self.field.zero
        top = self.z_degree(num)
        if top < dn:
            return self.field.zero, f

        # Pseudo-division: lc^(top - dn + 1)·num = q·den + r
        q, r = num.pdiv(den, Z_INDEX)
        multiplier = den.coeff_wrt(Z_INDEX, dn) ** (top - dn + 1)
        poly_part = self.rf_reduce(q, multiplier)
        proper_part = self.rf_reduce(r, self.mp_arith(den, multiplier, 'mul'))
        return poly_part, proper_part

    def z_inf_leading(self, f: RationalFunction) -> RationalFunction:
        """lim_{z→∞} z·f for a proper rational function f"""
        if not f:
            return self.field.zero
        num, den = f.numer, f.denom
        dn = self.z_degree(den)
        top = self.z_degree(num)
        if top >= dn:
            raise NotProper("Rational function is not proper in z", {'value': str(f)})
        if top < dn - 1:
            return self.field.zero
        return self.field.new(num.coeff_wrt(Z_INDEX, top), den.coeff_wrt(Z_INDEX, dn))

    # --- substitutions ---

    def shift_lambda(self, f: RationalFunction, k: Sequence[int]) -> RationalFunction:
        """Substitute λ_j ↦ λ_j − z·k_j simultaneously"""
        if len(k) != self.m:
            raise ArityMismatch(f"Cocharacter of length {len(k)} for {self.m} parameters")
        if not any(k):
            return f
        key = tuple(k)
        replacements = self._shift_cache.get(key)
        if replacements is None:
            replacements = [
                (lam, lam - kj * self._ring_z)
                for lam, kj in zip(self._ring_lams, key) if kj
            ]
            self._shift_cache[key] = replacements
        num = f.numer.compose(list(replacements))
        den = f.denom.compose(list(replacements))
        return self.field.new(num, den)

    def substitute_lambda(self, f: RationalFunction, values: Iterable) -> RationalFunction:
        """Evaluate λ_1..λ_m at constants, keeping z"""
        pairs = [(lam, value) for lam, value in zip(self._ring_lams, values)]
        num = f.numer.subs(pairs)
        den = f.denom.subs(pairs)
        if not den:
            raise ZeroDivisionPolynomial(
                "Specialization makes the denominator vanish", {'value': str(f)}
            )
        return self.field.new(num, den)

    def nonequivariant(self, f: RationalFunction) -> RationalFunction:
        """Set every λ_i to 0"""
        return self.substitute_lambda(f, [0] * self.m)
