"""
Engine service: one validated fan, its lazily built model, and cached report bodies
"""
from fractions import Fraction
from itertools import combinations
from typing import Any, Callable, Dict, List, Optional, Sequence

from algebra import NovikovSeries, matrix as mx
from core.cache import SeriesCache
from core.cache.models import cache_key
from core.errors import NotGlobal, ToricShiftError
from core.logger import logger
from mirror import (
    batyrev_check, birkhoff_factorize, classical_shift_residual, compose_check,
    derivative_frame, factorization_residual, flow_residual, ifun_series,
    mirror_map, multi_flow_residual, quantum_product_matrix, quantum_relation_check,
    seidel_elements, shift_operator, specialize_nonequivariant
)
from mirror.engine import factor_form_violations
from toric import Fan
from toric.cohomology import GlobalClass, LocalizedClass, monomial_name
from toric.fan import is_projective_space
from toric.model import ToricModel
from utils import format_degree, format_function, format_rational


def render_localized(model: ToricModel, v: LocalizedClass) -> Dict[str, str]:
    return {x.label: format_function(value) for x, value in zip(model.points, v.values)}


def render_matrix(M) -> List[List[str]]:
    return [[format_function(e) for e in row] for row in mx.rows(M)]


def render_series(series: NovikovSeries, render: Callable[[Any], Any]) -> Dict[str, Any]:
    return {format_degree(d): render(c) for d, c in series.items()}


def nonzero_degrees(series: NovikovSeries) -> List[List[int]]:
    return [list(d) for d in series.degrees()]


class EngineService:
    """Computation service for one fan"""

    def __init__(self, fan: Fan, omega: Optional[Sequence[Fraction]] = None,
                 cache: Optional[SeriesCache] = None):
        self.fan = fan
        self.omega = tuple(omega) if omega is not None else None
        self.cache = cache
        self._model: Optional[ToricModel] = None
        self._ifun = {}
        self._factors = {}

    @property
    def model(self) -> ToricModel:
        """Validated model, built on first use"""
        if self._model is None:
            try:
                self._model = ToricModel(self.fan, self.omega)
            except ToricShiftError as e:
                logger.error(f"Failed to validate fan: {e.message}")
                raise
        return self._model

    @property
    def fan_hash(self) -> str:
        return self.fan.fan_hash()

    def _cached(self, command: str, cutoff: Optional[Fraction],
                compute: Callable[[], Dict[str, Any]],
                extra: Optional[Dict[str, Any]] = None) -> Dict[str, Any]:
        omega = [format_rational(v) for v in self.omega] if self.omega is not None else None
        key = cache_key(
            self.fan_hash,
            format_rational(cutoff) if cutoff is not None else '',
            omega, command, extra
        )
        if self.cache is not None:
            payload = self.cache.get(key)
            if payload is not None:
                logger.info(f"Using cached {command} report")
                return payload
        payload = compute()
        if self.cache is not None:
            self.cache.put(key, command, payload)
        return payload

    def _ifun_for(self, cutoff: Fraction):
        if cutoff not in self._ifun:
            self._ifun[cutoff] = ifun_series(self.model, cutoff)
        return self._ifun[cutoff]

    def _factors_for(self, cutoff: Fraction):
        if cutoff not in self._factors:
            ifun = self._ifun_for(cutoff)
            frame = derivative_frame(self.model, ifun)
            self._factors[cutoff] = (frame, birkhoff_factorize(self.model, frame))
        return self._factors[cutoff]

    # --- commands ---

    def check(self) -> Dict[str, Any]:
        return self._cached('check', None, self._check)

    def _check(self) -> Dict[str, Any]:
        model = self.model
        cert = model.certificate
        cohomology = model.cohomology

        lattice_ok = all(
            all(sum(d[i] * model.fan.rays[i][c] for i in range(model.m)) == 0
                for c in range(model.fan.dimension))
            for d in model.curve_classes
        )
        sections = []
        for i in range(model.m):
            sections.extend(model.section_degrees(model.unit_vector(i)))
        section_ok = all(
            all(sum(d[i] * model.fan.rays[i][c] for i in range(model.m)) == 0
                for c in range(model.fan.dimension))
            for d in sections
        )
        tangent_sets = [x.tangent_weights for x in model.points]
        basis_classes = [
            cohomology.polynomial({a: model.algebra.one}) for a in cohomology.basis
        ]
        pairing = mx.from_rows(
            [[cohomology.pairing(a, b) for b in basis_classes] for a in basis_classes],
            model.algebra.domain
        )

        results = {
            'dimension': model.fan.dimension,
            'rays': [list(r) for r in model.fan.rays],
            'cones': [[i + 1 for i in c] for c in model.fan.cones],
            'omega': [format_rational(v) for v in cert.omega],
            'omega_source': cert.source,
            'support_function': [[format_rational(v) for v in m] for m in cert.support],
            'wall_classes': [w.to_dict() for w in cert.wall_classes],
            'fixed_points': [
                {
                    'label': x.label,
                    'cone': [i + 1 for i in x.cone],
                    'restriction_matrix': x.restriction_table(),
                    'restrictions': {
                        model.fan.ray_label(j): format_function(w)
                        for j, w in enumerate(x.weights)
                    },
                    'euler_class': format_function(x.euler_class),
                }
                for x in model.points
            ],
            'basis': [monomial_name(a) for a in cohomology.basis],
            'pairing_matrix': render_matrix(pairing),
        }
        verdicts = {
            'stanley_reisner': not cohomology.stanley_reisner_violations(),
            'linear_relations': not cohomology.linear_relation_violations(),
            'wall_classes_in_lattice': lattice_ok,
            'section_degrees_in_lattice': section_ok,
            'omega_positive': all(cert.grading(d) > 0 for d in model.curve_classes),
            'euler_classes_nonzero': all(x.euler_class for x in model.points),
            'tangent_weights_distinct': len(set(tangent_sets)) == len(tangent_sets),
            'pairing_nondegenerate': pairing.det() != model.algebra.zero,
        }
        return {'results': results, 'verdicts': verdicts}

    def ifun(self, cutoff: Fraction) -> Dict[str, Any]:
        return self._cached('ifun', cutoff, lambda: self._ifun_report(cutoff))

    def _ifun_report(self, cutoff: Fraction) -> Dict[str, Any]:
        model = self.model
        ifun = self._ifun_for(cutoff)
        global_ok = True
        for _, c in ifun.series.items():
            try:
                model.cohomology.interpolate(c)
            except NotGlobal:
                global_ok = False
        unit = ifun.series.coefficient((0,) * model.m)
        return {
            'results': {
                'gauge': ifun.gauge,
                'degree_count': len(ifun.series),
                'coefficients': render_series(ifun.series, lambda c: render_localized(model, c)),
            },
            'verdicts': {
                'unit_constant_term': unit == model.cohomology.constant(1),
                'coefficients_global': global_ok,
            },
        }

    def flowcheck(self, cutoff: Fraction) -> Dict[str, Any]:
        return self._cached('flowcheck', cutoff, lambda: self._flowcheck(cutoff))

    def _flowcheck(self, cutoff: Fraction) -> Dict[str, Any]:
        model = self.model
        ifun = self._ifun_for(cutoff)
        results, verdicts = {}, {}
        for i in range(model.m):
            residual = flow_residual(model, i, ifun)
            name = f"flow_{model.fan.ray_label(i)}"
            verdicts[name] = residual.is_zero()
            results[name] = nonzero_degrees(residual)
        for i, j in combinations(range(model.m), 2):
            residual = multi_flow_residual(model, (i, j), ifun)
            name = f"multi_flow_{model.fan.ray_label(i)}_{model.fan.ray_label(j)}"
            verdicts[name] = residual.is_zero()
            results[name] = nonzero_degrees(residual)
        for i in range(model.m):
            ok = True
            for exponent in model.cohomology.basis:
                f = model.cohomology.polynomial({exponent: model.algebra.one})
                if classical_shift_residual(model, i, f):
                    ok = False
            verdicts[f"classical_shift_{model.fan.ray_label(i)}"] = ok
        results['degrees_checked'] = len(ifun.series)
        return {'results': results, 'verdicts': verdicts}

    def shift(self, ks: Optional[Sequence[Sequence[int]]] = None,
              pairs: Optional[Sequence[Sequence[Sequence[int]]]] = None) -> Dict[str, Any]:
        model = self.model
        if ks:
            ks = [model.validate_cocharacter(k) for k in ks]
        else:
            ks = [model.unit_vector(i) for i in range(model.m)]
        if pairs is None:
            pairs = [(model.unit_vector(i), model.unit_vector(j))
                     for i, j in combinations(range(model.m), 2)]
        pairs = [
            (model.validate_cocharacter(k), model.validate_cocharacter(l)) for k, l in pairs
        ]
        extra = {'k': [list(k) for k in ks], 'pairs': [[list(k), list(l)] for k, l in pairs]}
        return self._cached('shift', None, lambda: self._shift(ks, pairs), extra)

    def _shift(self, ks, pairs) -> Dict[str, Any]:
        model = self.model
        results = {'factors': {}, 'compositions': {}}
        verdicts = {}
        for k in ks:
            name = format_degree(k)
            try:
                op = shift_operator(model, k)
            except ToricShiftError as e:
                results['factors'][name] = e.to_dict()
                verdicts[f"delta_{name}"] = False
                continue
            results['factors'][name] = {
                sf.point.label: {'offset': list(sf.offset), 'factor': format_function(sf.factor)}
                for sf in op.factors
            }
            verdicts[f"delta_{name}"] = True
        for k, l in pairs:
            name = f"{format_degree(k)}*{format_degree(l)}"
            try:
                results['compositions'][name] = list(compose_check(model, k, l))
                verdicts[f"compose_{name}"] = True
            except ToricShiftError as e:
                results['compositions'][name] = e.to_dict()
                verdicts[f"compose_{name}"] = False
        return {'results': results, 'verdicts': verdicts}

    def mirror(self, cutoff: Fraction) -> Dict[str, Any]:
        return self._cached('mirror', cutoff, lambda: self._mirror(cutoff))

    def _mirror(self, cutoff: Fraction) -> Dict[str, Any]:
        model = self.model
        cohomology = model.cohomology
        frame, factors = self._factors_for(cutoff)

        residual = factorization_residual(frame, factors)
        form_problems = factor_form_violations(model, factors)
        corrections = mirror_map(model, factors)
        tau, upsilon = corrections.tau, corrections.upsilon
        elements = seidel_elements(model, factors, tau)
        connections = [e.connection for e in elements]
        batyrev = batyrev_check(model, connections)
        one = cohomology.one_global()
        upsilon_trivial = all(not any(d) and c == one for d, c in upsilon.items())

        def render_global(c: GlobalClass):
            return cohomology.render(c)

        products = {}
        products_plain = {}
        for e in elements:
            name = model.fan.ray_label(e.index)
            matrix_series = quantum_product_matrix(model, e.connection)
            products[name] = render_series(matrix_series, render_matrix)
            products_plain[name] = render_series(
                specialize_nonequivariant(model, matrix_series), render_matrix
            )

        results = {
            'basis': [monomial_name(a) for a in cohomology.basis],
            'tau_head': corrections.head,
            'tau': render_series(tau, render_global),
            'tau_trivial': tau.is_zero(),
            'upsilon': render_series(upsilon, render_global),
            'upsilon_trivial': upsilon_trivial,
            'seidel_elements': {
                model.fan.ray_label(e.index): render_series(e.series, render_global)
                for e in elements
            },
            'quantum_products': products,
            'quantum_products_nonequivariant': products_plain,
            'factor_form_problems': form_problems,
            'batyrev': {
                format_degree(d): v for d, v in batyrev.items()
            },
        }
        verdicts = {
            'factorization_exact': residual.is_zero(),
            'factor_forms': not form_problems,
            'batyrev_classical': all(v['classical'] for v in batyrev.values()),
        }
        for e in elements:
            verdicts[f"seidel_consistent_{model.fan.ray_label(e.index)}"] = e.consistent
        if is_projective_space(model.fan):
            verdicts['tau_trivial'] = tau.is_zero()
            verdicts['upsilon_trivial'] = upsilon_trivial
            verdicts['batyrev_quantum'] = all(v['quantum'] for v in batyrev.values())
        return {'results': results, 'verdicts': verdicts}

    def qcheck(self, cutoff: Fraction) -> Dict[str, Any]:
        return self._cached('qcheck', cutoff, lambda: self._qcheck(cutoff))

    def _qcheck(self, cutoff: Fraction) -> Dict[str, Any]:
        model = self.model
        ifun = self._ifun_for(cutoff)
        residual = quantum_relation_check(model, ifun)
        all_indices = tuple(range(model.m))
        multi = multi_flow_residual(model, all_indices, ifun)
        return {
            'results': {
                'relation': 'D_1...D_m I = (Qy)^(1,...,1) I',
                'nonzero_degrees': nonzero_degrees(residual),
                'degrees_checked': len(ifun.series),
            },
            'verdicts': {
                'quantum_relation': residual.is_zero(),
                'multi_flow_all': multi.is_zero(),
            },
        }
