"""
Mirror engine: derivative frame of Ĩ, Birkhoff factorization L = U·P,
and extraction of τ, Υ, Seidel elements and quantum products.
"""
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple

from sympy.polys.matrices import DomainMatrix

from algebra import NovikovSeries, matrix as mx
from algebra.novikov import Degree, degree_sub, is_zero_coefficient
from core.errors import (
    NonPolynomialUpsilon, NotProjectiveSpace, SingularFrame, ZDependentConnection
)
from core.logger import logger
from toric.cohomology import Exponent, GlobalClass, LocalizedClass
from toric.fan import is_projective_space
from toric.model import ToricModel
from .ifunction import StrippedIFun
from .shift import covariant_derivative

LOG_HEAD = 'sum_i u_i*log(y_i)'


@dataclass(frozen=True)
class LaurentFrame:
    """Columns 𝔇^a Ĩ for the basis monomials u^a; rows are fixed points"""
    basis: Tuple[Exponent, ...]
    series: NovikovSeries
    degrees: Tuple[Degree, ...]


@dataclass(frozen=True)
class BirkhoffFactors:
    """L = U·P with U − Id proper in z and P polynomial in z"""
    U: NovikovSeries
    P: NovikovSeries


@dataclass(frozen=True)
class MirrorMap:
    """Corrections τ_d and Υ_d; the degree-0 part of τ is the logarithmic head"""
    tau: NovikovSeries
    upsilon: NovikovSeries
    head: str = LOG_HEAD


@dataclass(frozen=True)
class SeidelElement:
    index: int
    series: NovikovSeries
    connection: NovikovSeries
    residual: NovikovSeries

    @property
    def consistent(self) -> bool:
        return self.residual.is_zero()


def derivative_frame(model: ToricModel, ifun: StrippedIFun) -> LaurentFrame:
    """Assemble the frame matrix degree by degree"""
    basis = model.cohomology.basis
    columns: Dict[Exponent, NovikovSeries] = {(0,) * model.m: ifun.series}

    def column(exponent: Exponent) -> NovikovSeries:
        if exponent not in columns:
            i = max(j for j, a in enumerate(exponent) if a)
            lower = tuple(a - (1 if j == i else 0) for j, a in enumerate(exponent))
            columns[exponent] = covariant_derivative(model, i, column(lower))
        return columns[exponent]

    frame_columns = [column(a) for a in basis]
    domain = model.algebra.domain
    zero = model.algebra.zero
    n = len(model.points)
    coeffs = {}
    for d in ifun.degrees:
        rows = [[zero] * len(basis) for _ in range(n)]
        for col, series in enumerate(frame_columns):
            value = series.coefficient(d)
            if value is None:
                continue
            for row in range(n):
                rows[row][col] = value[row]
        coeffs[d] = mx.from_rows(rows, domain)
    series = model.series(ifun.cutoff, coeffs)

    p0 = series.coefficient((0,) * model.m)
    if p0 is None or p0.det() == zero:
        raise SingularFrame("Degree-0 frame matrix is singular")
    return LaurentFrame(basis=basis, series=series, degrees=tuple(ifun.degrees))


def _split(model: ToricModel, G: DomainMatrix) -> Tuple[DomainMatrix, DomainMatrix]:
    poly_rows, proper_rows = [], []
    for row in mx.rows(G):
        poly_row, proper_row = [], []
        for entry in row:
            poly_part, proper_part = model.algebra.z_split(entry)
            poly_row.append(poly_part)
            proper_row.append(proper_part)
        poly_rows.append(poly_row)
        proper_rows.append(proper_row)
    domain = model.algebra.domain
    return mx.from_rows(poly_rows, domain), mx.from_rows(proper_rows, domain)


def birkhoff_factorize(model: ToricModel, frame: LaurentFrame) -> BirkhoffFactors:
    """
    Recursion over the ω-filtration:
        K_d = L_d − Σ U_{d'}·P_{d−d'},  G_d = K_d·P0⁻¹,
        U_d = proper(G_d),  P_d = poly(G_d)·P0.
    """
    L = frame.series
    zero_degree = (0,) * model.m
    p0 = L.coefficient(zero_degree)
    p0_inv = p0.inv()
    domain = model.algebra.domain
    n = len(model.points)
    U: Dict[Degree, DomainMatrix] = {zero_degree: mx.identity(n, domain)}
    P: Dict[Degree, DomainMatrix] = {zero_degree: p0}

    for d in frame.degrees:
        if not any(d):
            continue
        K = L.coefficient(d)
        if K is None:
            K = DomainMatrix.zeros((n, len(frame.basis)), domain)
        for d1, u1 in list(U.items()):
            if not any(d1) or d1 == d:
                continue
            rest = degree_sub(d, d1)
            if rest in P and any(rest):
                K = K - u1 * P[rest]
        if is_zero_coefficient(K):
            continue
        poly_part, proper_part = _split(model, K * p0_inv)
        if not is_zero_coefficient(proper_part):
            U[d] = proper_part
        if not is_zero_coefficient(poly_part):
            P[d] = poly_part * p0
        logger.debug(f"Factorization sealed degree {list(d)}")

    logger.info(f"Birkhoff factorization done: {len(U) - 1} U-degrees, {len(P) - 1} P-degrees")
    return BirkhoffFactors(U=L.like(U), P=L.like(P))


def factorization_residual(frame: LaurentFrame, factors: BirkhoffFactors) -> NovikovSeries:
    """L − U·P"""
    return frame.series - factors.U * factors.P


def factor_form_violations(model: ToricModel, factors: BirkhoffFactors) -> List[str]:
    """Degrees where U − Id is not proper or P is not z-polynomial"""
    algebra = model.algebra
    problems = []
    for d, M in factors.U.items():
        if not any(d):
            continue
        if not all(algebra.is_proper(e) for row in mx.rows(M) for e in row):
            problems.append(f"U{list(d)} not proper")
    for d, M in factors.P.items():
        if not all(algebra.is_z_polynomial(e) for row in mx.rows(M) for e in row):
            problems.append(f"P{list(d)} not polynomial")
    return problems


def extract_tau(model: ToricModel, factors: BirkhoffFactors) -> NovikovSeries:
    """τ_d = interpolate(lim z·(U_d·1)) for d ≠ 0"""
    cohomology = model.cohomology
    algebra = model.algebra
    coeffs = {}
    for d, M in factors.U.items():
        if not any(d):
            continue
        values = LocalizedClass(tuple(algebra.z_inf_leading(v) for v in mx.row_sums(M)))
        coeffs[d] = cohomology.interpolate(values)
    return factors.U.like(coeffs)


def extract_upsilon(model: ToricModel, factors: BirkhoffFactors) -> NovikovSeries:
    """Υ_d from the first column of P_d; Υ_0 = 1"""
    cohomology = model.cohomology
    algebra = model.algebra
    coeffs = {}
    for d, M in factors.P.items():
        values = LocalizedClass(tuple(mx.column(M, 0)))
        for v in values.values:
            if not algebra.is_z_polynomial(v):
                raise NonPolynomialUpsilon(
                    f"Upsilon coefficient at degree {list(d)} is not polynomial in z",
                    {'degree': list(d)}
                )
        coeffs[d] = cohomology.interpolate(values)
    return factors.P.like(coeffs)


def mirror_map(model: ToricModel, factors: BirkhoffFactors) -> MirrorMap:
    return MirrorMap(tau=extract_tau(model, factors), upsilon=extract_upsilon(model, factors))


def _derive_rows(model: ToricModel, i: int, series: NovikovSeries) -> NovikovSeries:
    """Row x of degree d scaled by u_i(x) + z·(u_i·d)"""
    z = model.algebra.z
    weights = [x.weights[i] for x in model.points]
    domain = model.algebra.domain

    def apply(d, M):
        return mx.from_rows(
            [[(w + z * d[i]) * e for e in row] for w, row in zip(weights, mx.rows(M))],
            domain
        )

    return series.map_items(apply)


def connection_matrix(model: ToricModel, i: int, U: NovikovSeries) -> NovikovSeries:
    """
    C_i = U⁻¹·𝔇_i U, solved from U·C_i = 𝔇_i U degree by degree (U_0 = Id):
        C_d = (𝔇_i U)_d − Σ_{d' ≠ 0} U_{d'}·C_{d−d'}.
    """
    derived = _derive_rows(model, i, U)
    higher = [(d, M) for d, M in U.items() if any(d)]
    C: Dict[Degree, DomainMatrix] = {}
    for d in U.degree_closure():
        acc = derived.coefficient(d)
        for d1, M1 in higher:
            rest = degree_sub(d, d1)
            if rest in C:
                term = M1 * C[rest]
                acc = -term if acc is None else acc - term
        if acc is not None and not is_zero_coefficient(acc):
            C[d] = acc
    return U.like(C)


def connection_matrices(model: ToricModel, factors: BirkhoffFactors) -> List[NovikovSeries]:
    """C_i for every ray, checked z-free"""
    algebra = model.algebra
    result = []
    for i in range(model.m):
        C = connection_matrix(model, i, factors.U)
        logger.debug(f"Connection matrix C_{i + 1} solved over {len(C)} degrees")
        for d, M in C.items():
            if not all(algebra.is_z_free(e) for row in mx.rows(M) for e in row):
                raise ZDependentConnection(
                    f"Connection matrix C_{i + 1} depends on z at degree {list(d)}",
                    {'index': i + 1, 'degree': list(d)}
                )
        result.append(C)
    return result


def seidel_elements(model: ToricModel, factors: BirkhoffFactors,
                    tau: NovikovSeries) -> List[SeidelElement]:
    """
    S_i = u_i + Σ_d (u_i·d)·τ_d (Qy)^d, compared against C_i applied to the
    class 1.
    """
    cohomology = model.cohomology
    connections = connection_matrices(model, factors)
    elements = []
    for i, C in enumerate(connections):
        coeffs = {(0,) * model.m: cohomology.interpolate(cohomology.divisor(i))}
        for d, tau_d in tau.items():
            if d[i]:
                coeffs[d] = tau_d.scale(d[i])
        series = tau.like(coeffs)
        from_connection = C.map(
            lambda M: cohomology.interpolate(LocalizedClass(tuple(mx.row_sums(M))))
        )
        residual = series - from_connection
        if not residual.is_zero():
            logger.warning(f"Seidel element S_{i + 1} disagrees with its connection matrix")
        elements.append(SeidelElement(index=i, series=series, connection=C, residual=residual))
    return elements


def quantum_product_matrix(model: ToricModel, connection: NovikovSeries) -> NovikovSeries:
    """Matrix of S_i⋆ in the monomial basis: P0⁻¹·C_i·P0"""
    p0 = model.cohomology.restriction_matrix
    p0_inv = model.cohomology.restriction_inverse
    return connection.map(lambda M: p0_inv * M * p0)


def specialize_nonequivariant(model: ToricModel, series: NovikovSeries) -> NovikovSeries:
    """Set λ = 0 entrywise"""
    return series.map(lambda M: mx.apply(M, model.algebra.nonequivariant))


def quantum_relation_check(model: ToricModel, ifun: StrippedIFun) -> NovikovSeries:
    """𝔇_1⋯𝔇_m Ĩ − (Qy)^{(1,…,1)}·Ĩ|_{λ → λ − z(1,…,1)} on projective spaces"""
    if not is_projective_space(model.fan):
        raise NotProjectiveSpace("Quantum relation check needs the fan of a projective space")
    ones = (1,) * model.m
    lhs = ifun.series
    for i in range(model.m):
        lhs = covariant_derivative(model, i, lhs)
    rhs = ifun.series.map(
        lambda c: c.map(lambda v: model.algebra.shift_lambda(v, ones))
    ).raise_degree(ones)
    return lhs - rhs


def _power_product(connections: Sequence[NovikovSeries], exponents: Sequence[int],
                   template: NovikovSeries, n: int, domain) -> NovikovSeries:
    result = template.like({(0,) * len(exponents): mx.identity(n, domain)})
    for C, power in zip(connections, exponents):
        for _ in range(power):
            result = result * C
    return result


def batyrev_check(model: ToricModel, connections: Sequence[NovikovSeries]) -> Dict[Degree, Dict[str, bool]]:
    """
    For every wall class d: the classical relation Π_{d_i>0} u_i^{d_i} = 0 on
    restrictions, and the quantum relation
    Π_{d_i>0} C_i^{d_i} = (Qy)^d Π_{d_i<0} C_i^{−d_i}.
    """
    cohomology = model.cohomology
    n = len(model.points)
    domain = model.algebra.domain
    template = connections[0]
    verdicts = {}
    for d in model.curve_classes:
        positive = tuple(max(v, 0) for v in d)
        negative = tuple(max(-v, 0) for v in d)
        classical = not cohomology.monomial_values(positive)
        lhs = _power_product(connections, positive, template, n, domain)
        rhs = _power_product(connections, negative, template, n, domain).raise_degree(d)
        verdicts[d] = {'classical': classical, 'quantum': (lhs - rhs).is_zero()}
    return verdicts
