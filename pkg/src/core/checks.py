"""
Property suites behind `yhkernel check`.

Each suite draws seeded random inputs, evaluates both sides of an identity
exactly and records pass/fail with the first counterexample.
"""

from dataclasses import dataclass
from typing import List, Optional

from .coeff import TracePoly, U, U_INV, x_var, z_var
from .errors import ParameterError
from .framed_braids import (
    FramedBraidWord, inverse_split, multiply_split, pi_level_map, project_modular,
    split, split_identity,
)
from .padic import (
    approx_sequence, padic_add, padic_from_residues, residue, theta,
)
from .symmetric import all_perms, extend, perm_identity
from .trace import (
    delta_map, e_trace_formula, is_coherent, markov_trace, padic_trace, tower_e,
    tower_g, tower_g_inverse, tower_mul, tower_one, tower_scale, tower_t,
)
from .yokonuma import (
    RelationReport, YBasisElt, YElement, YParams, hecke_quadratic, phi_map,
    relation_suite, y_e, y_eval_word, y_g, y_g_inverse, y_mul, y_one, y_t,
)
from ..config.config import DEFAULT_SAMPLES, is_prime, suite_is_feasible
from ..utils.logger import get_logger
from ..utils.sampling import ElementSampler

logger = get_logger('checks')


@dataclass
class SuiteReport(RelationReport):
    """A RelationReport that remembers how its random inputs were drawn."""
    seed: Optional[int] = None
    samples: int = 0


def _require_feasible(params: YParams):
    if not suite_is_feasible(params.d, params.n):
        raise ParameterError(f"{params} has {params.dimension} basis elements; too large for a suite")


def _sampler(sampler: Optional[ElementSampler]) -> ElementSampler:
    return sampler if sampler is not None else ElementSampler()


# ============== ALGEBRA ==============
def associativity_suite(params: YParams, samples: int = DEFAULT_SAMPLES,
                        sampler: Optional[ElementSampler] = None) -> SuiteReport:
    """(xy)z = x(yz) on random triples."""
    _require_feasible(params)
    sampler = _sampler(sampler)
    report = SuiteReport(f"associativity {params}", seed=sampler.seed, samples=samples)

    def cases():
        for k in range(samples):
            x, y, z = (sampler.element(params) for _ in range(3))
            yield f"sample {k}", y_mul(y_mul(x, y), z), y_mul(x, y_mul(y, z))

    report.add("associativity", cases())
    return report


def word_evaluation_suite(params: YParams, samples: int = DEFAULT_SAMPLES,
                          sampler: Optional[ElementSampler] = None) -> SuiteReport:
    """Evaluation of words is multiplicative and respects the split form."""
    _require_feasible(params)
    sampler = _sampler(sampler)
    report = SuiteReport(f"word evaluation {params}", seed=sampler.seed, samples=samples)
    words = [(sampler.word(params.n), sampler.word(params.n)) for _ in range(samples)]

    def multiplicative():
        for k, (w1, w2) in enumerate(words):
            yield (f"sample {k}", y_eval_word(w1 * w2, params),
                   y_mul(y_eval_word(w1, params), y_eval_word(w2, params)))

    def respects_split():
        for k, (w1, _) in enumerate(words):
            x = split(w1)
            framing_part = YElement(params, {
                YBasisElt(tuple(a % params.d for a in x.framing), perm_identity(params.n)): 1})
            braid_part = y_eval_word(FramedBraidWord(params.n, x.braid), params)
            yield f"sample {k}", y_eval_word(w1, params), y_mul(framing_part, braid_part)

    def inverse_word():
        for k, (w1, _) in enumerate(words):
            yield f"sample {k}", y_eval_word(w1 * w1.inverse(), params), y_one(params)

    report.add("multiplicative", multiplicative())
    report.add("respects_split", respects_split())
    report.add("inverse_word", inverse_word())
    return report


def hecke_suite(n: int) -> SuiteReport:
    """At d = 1 the algebra is the Iwahori-Hecke algebra and the trace is Ocneanu's."""
    params = YParams(1, n)
    report = SuiteReport(f"hecke collapse {params}")
    one = y_one(params)
    report.add("hecke_quadratic", (
        (f"(g{i}+u)(g{i}-1)", hecke_quadratic(params, i), YElement(params)) for i in range(1, n)))
    report.add("g_inverse", (
        (f"g{i}^-1", y_g_inverse(params, i), y_g(params, i).scale(U_INV) - one.scale(U_INV - 1))
        for i in range(1, n)))
    report.add("trace_g", ((f"tr(g{i})", markov_trace(y_g(params, i)), z_var(1)) for i in range(1, n)))
    report.add("trace_g_squared", (
        (f"tr(g{i}^2)", markov_trace(y_mul(y_g(params, i), y_g(params, i))),
         TracePoly.constant(1, U) - z_var(1).scale(U - 1))
        for i in range(1, n)))
    if n >= 2:
        lower = YParams(1, n - 1)

        def markov_rule():
            for perm in all_perms(n - 1):
                a = YElement(params, {YBasisElt((0,) * n, extend(perm, n)): 1})
                small = YElement(lower, {YBasisElt((0,) * (n - 1), perm): 1})
                yield (f"{perm}", markov_trace(y_mul(a, y_g(params, n - 1))),
                       z_var(1) * markov_trace(small))

        report.add("markov_rule", markov_rule())
    return report


# ============== TRACE ==============
def trace_property_suite(params: YParams, samples: int = DEFAULT_SAMPLES,
                         sampler: Optional[ElementSampler] = None) -> SuiteReport:
    """
    Trace rules on random elements.

    Args:
        params: Algebra parameters (n >= 2 for the strand rules)
        samples: Number of random cases per rule
        sampler: Source of random elements

    Returns:
        SuiteReport with trace_commutes, markov_rule, framing_rule and normalization
    """
    _require_feasible(params)
    sampler = _sampler(sampler)
    d, n = params.d, params.n
    report = SuiteReport(f"trace properties {params}", seed=sampler.seed, samples=samples)
    report.add("normalization", [("tr(1)", markov_trace(y_one(params)), TracePoly.constant(d))])

    def commutes():
        for k in range(samples):
            x, y = sampler.element(params), sampler.element(params)
            yield f"sample {k}", markov_trace(y_mul(x, y)), markov_trace(y_mul(y, x))

    report.add("trace_commutes", commutes())
    if n < 2:
        return report
    top = y_g(params, n - 1)

    def markov_rule():
        for k in range(samples):
            a = sampler.element(params, subalgebra=True)
            b = sampler.element(params, subalgebra=True)
            yield (f"sample {k}", markov_trace(y_mul(y_mul(a, top), b)),
                   z_var(d) * markov_trace(y_mul(a, b)))

    def framing_rule():
        for k in range(samples):
            a = sampler.element(params, subalgebra=True)
            m = sampler.integer(-d, d)
            yield (f"sample {k} m={m}", markov_trace(y_mul(a, y_t(params, n, m))),
                   x_var(d, m) * markov_trace(a))

    report.add("markov_rule", markov_rule())
    report.add("framing_rule", framing_rule())
    return report


def closed_form_suite(params: YParams) -> SuiteReport:
    """The closed trace values of 1, g_i, e_i, e_i g_i, g_i^2 and framing monomials."""
    d, n = params.d, params.n
    report = SuiteReport(f"trace closed forms {params}")
    z = z_var(d)
    e_value = e_trace_formula(d)
    report.add("tr_g", ((f"g{i}", markov_trace(y_g(params, i)), z) for i in range(1, n)))
    report.add("tr_e", ((f"e{i}", markov_trace(y_e(params, i, i + 1)), e_value) for i in range(1, n)))
    report.add("tr_e_g", (
        (f"e{i} g{i}", markov_trace(y_mul(y_e(params, i, i + 1), y_g(params, i))), z)
        for i in range(1, n)))
    report.add("tr_g_squared", (
        (f"g{i}^2", markov_trace(y_mul(y_g(params, i), y_g(params, i))),
         TracePoly.constant(d) - z.scale(U - 1) + e_value.scale(U - 1))
        for i in range(1, n)))

    def framings():
        for i in range(1, n + 1):
            for m in range(d):
                yield f"t{i}^{m}", markov_trace(y_t(params, i, m)), x_var(d, m)

    report.add("tr_t", framings())
    return report


def commuting_square_suite(p: int, R: int, n: int, samples: int = DEFAULT_SAMPLES,
                           sampler: Optional[ElementSampler] = None) -> SuiteReport:
    """
    Level maps against traces: phi(e) = e, phi is a homomorphism, phi composes,
    and delta o tr = tr o phi.
    """
    if not is_prime(p):
        raise ParameterError(f"p must be prime, got {p}")
    if R < 1:
        raise ParameterError(f"Depth R must be >= 1, got {R}")
    top = YParams(p ** R, n)
    _require_feasible(top)
    sampler = _sampler(sampler)
    report = SuiteReport(f"commuting square p={p} R={R} n={n}", seed=sampler.seed, samples=samples)

    def phi_e():
        for r in range(1, R + 1):
            for s in range(1, r + 1):
                for i in range(1, n):
                    yield (f"r={r} s={s} e{i}", phi_map(y_e(YParams(p ** r, n), i, i + 1), p, s),
                           y_e(YParams(p ** s, n), i, i + 1))

    pairs = [(sampler.element(top), sampler.element(top)) for _ in range(samples)]

    def homomorphism():
        for k, (x, y) in enumerate(pairs):
            for s in range(1, R):
                yield (f"sample {k} s={s}", phi_map(y_mul(x, y), p, s),
                       y_mul(phi_map(x, p, s), phi_map(y, p, s)))

    def composition():
        for k, (x, _) in enumerate(pairs):
            for s in range(1, R):
                for t in range(1, s):
                    yield f"sample {k} {R}->{s}->{t}", phi_map(phi_map(x, p, s), p, t), phi_map(x, p, t)

    def square():
        for k, (x, _) in enumerate(pairs):
            trace = markov_trace(x)
            for s in range(1, R):
                yield f"sample {k} s={s}", delta_map(trace, p, s), markov_trace(phi_map(x, p, s))

    def delta_homomorphism():
        for k, (x, y) in enumerate(pairs):
            a, b = markov_trace(x), markov_trace(y)
            for s in range(1, R):
                yield (f"sample {k} s={s}", delta_map(a * b, p, s),
                       delta_map(a, p, s) * delta_map(b, p, s))

    report.add("phi_e", phi_e())
    report.add("phi_homomorphism", homomorphism())
    report.add("phi_composition", composition())
    report.add("delta_square", square())
    report.add("delta_homomorphism", delta_homomorphism())
    return report


def tower_suite(p: int, R: int, n: int, samples: int = DEFAULT_SAMPLES,
                sampler: Optional[ElementSampler] = None) -> SuiteReport:
    """Coherence of random tower products and the p-adic closed forms."""
    sampler = _sampler(sampler)
    report = SuiteReport(f"towers p={p} R={R} n={n}", seed=sampler.seed, samples=samples)
    generators = [tower_t(p, R, n, i, sampler.padic(p, R)) for i in range(1, n + 1)]
    for i in range(1, n):
        generators.extend([tower_g(p, R, n, i), tower_g_inverse(p, R, n, i), tower_e(p, R, n, i)])
    product = tower_one(p, R, n)
    coherent = True
    for _ in range(samples):
        product = tower_mul(product, generators[sampler.integer(0, len(generators) - 1)])
        if not is_coherent(product):
            coherent = False
            break
    report.record("tower_coherence", coherent, samples)
    report.record("trace_coherence", padic_trace(product).is_coherent(), 1)

    one = tower_one(p, R, n)

    def quadratic():
        for i in range(1, n):
            g, e = tower_g(p, R, n, i), tower_e(p, R, n, i)
            rhs = one + tower_scale(tower_mul(e, one - g), U - 1)
            yield f"g{i}^2", tower_mul(g, g), rhs

    def e_g_trace():
        for i in range(1, n):
            value = padic_trace(tower_mul(tower_e(p, R, n, i), tower_g(p, R, n, i)))
            yield f"e{i} g{i}", value.levels, tuple(z_var(p ** r) for r in range(1, R + 1))

    report.add("tower_quadratic", quadratic())
    report.add("tau_e_g", e_g_trace())
    return report


# ============== P-ADIC & GROUPS ==============
def padic_suite(p: int, R: int, samples: int = DEFAULT_SAMPLES,
                sampler: Optional[ElementSampler] = None) -> SuiteReport:
    """Coherence, theta composition, additivity and approximation agreement."""
    sampler = _sampler(sampler)
    report = SuiteReport(f"p-adic p={p} R={R}", seed=sampler.seed, samples=samples)
    values = [(sampler.padic(p, R), sampler.padic(p, R)) for _ in range(samples)]

    def coherence():
        for k, (a, _) in enumerate(values):
            residues = a.residues()
            for r in range(2, R + 1):
                yield f"sample {k} r={r}", residues[r - 1] % p ** (r - 1), residues[r - 2]
            yield f"sample {k} rebuild", padic_from_residues(p, residues), a

    def theta_composition():
        for k, (a, _) in enumerate(values):
            for s in range(1, R + 1):
                for t in range(1, s + 1):
                    yield f"sample {k} {s}->{t}", theta(theta(a, s), t), theta(a, t)

    def additivity():
        for k, (a, b) in enumerate(values):
            total = padic_add(a, b)
            for r in range(1, R + 1):
                yield f"sample {k} r={r}", residue(total, r), (residue(a, r) + residue(b, r)) % p ** r

    def approximation():
        for k, (a, _) in enumerate(values):
            for level, approx in approx_sequence(a):
                for r in range(1, level + 1):
                    yield f"sample {k} k={level} r={r}", residue(approx, r), residue(a, r)

    report.add("coherence", coherence())
    report.add("theta_composition", theta_composition())
    report.add("additivity", additivity())
    report.add("approximation", approximation())
    return report


def group_suite(n: int, samples: int = DEFAULT_SAMPLES, p: int = 2, r: int = 2,
                sampler: Optional[ElementSampler] = None) -> SuiteReport:
    """
    Framed braid group laws on random words.

    Args:
        n: Strand count
        samples: Number of random word pairs
        p: Prime for the level maps
        r: Top level; the homomorphism check maps F_{p^r,n} onto every lower level
        sampler: Source of random words

    Returns:
        SuiteReport with split_multiplicative, associativity, inverse and pi_homomorphism
    """
    sampler = _sampler(sampler)
    report = SuiteReport(f"framed braids n={n}", seed=sampler.seed, samples=samples)
    triples = [tuple(sampler.word(n) for _ in range(3)) for _ in range(samples)]

    def multiplicative():
        for k, (w1, w2, _) in enumerate(triples):
            yield f"sample {k}", split(w1 * w2), multiply_split(split(w1), split(w2))

    def associativity():
        for k, (w1, w2, w3) in enumerate(triples):
            a, b, c = split(w1), split(w2), split(w3)
            yield f"sample {k}", multiply_split(multiply_split(a, b), c), multiply_split(a, multiply_split(b, c))

    def inverse():
        for k, (w1, _, _) in enumerate(triples):
            x = split(w1)
            yield f"sample {k} word", split(w1.inverse()), inverse_split(x)
            yield f"sample {k} product", multiply_split(x, inverse_split(x)), split_identity(n)

    def pi_homomorphism():
        for k, (w1, w2, _) in enumerate(triples):
            x = split(w1, p ** r)
            y = split(w2, p ** r)
            for s in range(0, r + 1):
                yield (f"sample {k} s={s}", pi_level_map(multiply_split(x, y), p, s),
                       multiply_split(pi_level_map(x, p, s), pi_level_map(y, p, s)))
            yield f"sample {k} projection", project_modular(split(w1), p ** r), x

    report.add("split_multiplicative", multiplicative())
    report.add("associativity", associativity())
    report.add("inverse", inverse())
    report.add("pi_homomorphism", pi_homomorphism())
    return report


# ============== DRIVER ==============
def run_checks(n: int, d: Optional[int] = None, p: Optional[int] = None, R: Optional[int] = None,
               square: bool = False, samples: int = DEFAULT_SAMPLES,
               seed: Optional[int] = None) -> List[RelationReport]:
    """
    The suite set for one `check` invocation.

    With d: relations, associativity, word evaluation, trace properties and closed
    forms (plus the Hecke collapse when d = 1), then the group laws.
    With p and R: relations at every level, towers, p-adic arithmetic, and the
    commuting square when `square` is set.
    """
    if (d is None) == (p is None):
        raise ParameterError("Give exactly one of d or (p, R)")
    sampler = ElementSampler(seed)
    reports: List[RelationReport] = []
    if d is not None:
        params = YParams(d, n)
        _require_feasible(params)
        reports.append(relation_suite(params))
        reports.append(associativity_suite(params, samples, sampler))
        reports.append(word_evaluation_suite(params, samples, sampler))
        reports.append(trace_property_suite(params, samples, sampler))
        reports.append(closed_form_suite(params))
        if d == 1:
            reports.append(hecke_suite(n))
        reports.append(group_suite(n, samples, sampler=sampler))
    else:
        if R is None:
            raise ParameterError("--p needs --R")
        if not is_prime(p):
            raise ParameterError(f"p must be prime, got {p}")
        for level in range(1, R + 1):
            params = YParams(p ** level, n)
            _require_feasible(params)
            reports.append(relation_suite(params))
        reports.append(tower_suite(p, R, n, samples, sampler))
        reports.append(padic_suite(p, R, samples, sampler))
        if square:
            reports.append(commuting_square_suite(p, R, n, samples, sampler))
    failed = [report.name for report in reports if not report.all_passed]
    if failed:
        logger.warning(f"Failed suites: {', '.join(failed)}")
    else:
        logger.info(f"All {len(reports)} suites passed")
    return reports
