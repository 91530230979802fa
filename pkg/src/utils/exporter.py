"""
Result rendering for the CLI.
Turns traces, algebra elements and suite reports into deterministic pretty text
or versioned JSON, and writes them to files when asked.
"""

import json
from pathlib import Path
from typing import Dict, List, Optional, Sequence

from ..config.config import JSON_SCHEMA_VERSION, OUTPUT_FORMATS
from ..core.coeff import TracePoly
from ..core.errors import ParameterError
from ..core.framed_braids import FramedBraidWord, PadicFramedBraid, SplitFramedBraid, format_split, format_word, padic_project
from ..core.padic import PadicApprox, approx_sequence, format_padic, theta
from ..core.symmetric import format_perm
from ..core.trace import PadicTraceValue, TowerElement
from ..core.yokonuma import RelationReport, YElement
from .logger import get_logger

logger = get_logger('exporter')


class ResultExporter:
    """Renders results in one output format ('pretty' or 'json')."""

    def __init__(self, output_format: str = 'pretty'):
        if output_format not in OUTPUT_FORMATS:
            raise ParameterError(f"Unknown output format {output_format!r}, expected one of {OUTPUT_FORMATS}")
        self.output_format = output_format

    @property
    def is_json(self) -> bool:
        return self.output_format == 'json'

    def _dump(self, payload: Dict) -> str:
        return json.dumps({'schema': JSON_SCHEMA_VERSION, **payload}, indent=2)

    # ---- traces ----
    def trace_payload(self, trace: TracePoly) -> Dict:
        return {'p': None, 'levels': [{'r': None, 'd': trace.d, 'trace': trace.render()}]}

    def padic_trace_payload(self, value: PadicTraceValue) -> Dict:
        return {
            'p': value.p,
            'levels': [
                {'r': r, 'd': value.p ** r, 'trace': level.render()}
                for r, level in enumerate(value.levels, start=1)
            ],
        }

    def trace(self, trace: TracePoly) -> str:
        """A single-algebra trace; JSON uses the level schema with one level."""
        if self.is_json:
            return self._dump(self.trace_payload(trace))
        return trace.render()

    def padic_trace(self, value: PadicTraceValue) -> str:
        if self.is_json:
            return self._dump(self.padic_trace_payload(value))
        return "\n".join(
            f"r={r} d={value.p ** r}: {level.render()}"
            for r, level in enumerate(value.levels, start=1)
        )

    def batch(self, words: Sequence[str], payloads: List[Dict], lines: List[str]) -> str:
        """One result per input word, in input order."""
        if self.is_json:
            results = [{'word': word, **payload} for word, payload in zip(words, payloads)]
            return self._dump({'results': results})
        return "\n".join(lines)

    # ---- algebra elements ----
    def element(self, x: YElement) -> str:
        if self.is_json:
            return self._dump({
                'd': x.params.d,
                'n': x.params.n,
                'terms': len(x),
                'element': x.render(),
            })
        return x.render()

    def tower(self, x: TowerElement) -> str:
        if self.is_json:
            return self._dump({
                'p': x.p,
                'n': x.n,
                'levels': [
                    {'r': r, 'd': x.p ** r, 'element': level.render()}
                    for r, level in enumerate(x.levels, start=1)
                ],
            })
        return "\n".join(
            f"r={r} d={x.p ** r}: {level.render()}" for r, level in enumerate(x.levels, start=1))

    # ---- suites ----
    def reports(self, reports: Sequence[RelationReport]) -> str:
        """Pass/fail per named check; JSON carries the seed and sample count of each suite."""
        if self.is_json:
            return self._dump({
                'passed': all(report.all_passed for report in reports),
                'suites': [
                    {
                        'name': report.name,
                        'passed': report.all_passed,
                        'seed': getattr(report, 'seed', None),
                        'samples': getattr(report, 'samples', 0),
                        'checks': [
                            {
                                'name': result.name,
                                'passed': result.passed,
                                'checked': result.checked,
                                'detail': result.detail,
                            }
                            for result in report.results
                        ],
                    }
                    for report in reports
                ],
            })
        lines = []
        for report in reports:
            lines.append(f"[{'PASS' if report.all_passed else 'FAIL'}] {report.name}")
            for result in report.results:
                mark = 'ok  ' if result.passed else 'FAIL'
                line = f"  {mark} {result.name} ({result.checked} cases)"
                if result.detail:
                    line += f": {result.detail}"
                lines.append(line)
        return "\n".join(lines)

    # ---- p-adic values and framed braids ----
    def padic(self, a: PadicApprox) -> str:
        """Residues, truncations and approximating constants of a p-adic value."""
        truncations = [format_padic(theta(a, s)) for s in range(1, a.precision + 1)]
        approximants = [(k, format_padic(approx)) for k, approx in approx_sequence(a)]
        if self.is_json:
            return self._dump({
                'p': a.p,
                'R': a.precision,
                'value': format_padic(a),
                'residues': a.residues(),
                'truncations': truncations,
                'approximants': [{'k': k, 'value': value} for k, value in approximants],
            })
        lines = [f"value: {format_padic(a)}", f"residues: {', '.join(str(v) for v in a.residues())}"]
        lines.extend(f"theta_{s}: {text}" for s, text in enumerate(truncations, start=1))
        lines.extend(f"approximant {k}: {text}" for k, text in approximants)
        return "\n".join(lines)

    def split(self, x: SplitFramedBraid) -> str:
        braid = format_word(FramedBraidWord(x.n, x.braid))
        if self.is_json:
            return self._dump({
                'n': x.n,
                'modulus': x.modulus,
                'framing': list(x.framing),
                'braid': braid,
                'permutation': format_perm(x.perm),
            })
        return f"{format_split(x)} perm {format_perm(x.perm)}"

    def padic_split(self, x: PadicFramedBraid) -> str:
        braid = format_word(FramedBraidWord(x.n, x.braid))
        levels = [padic_project(x, r) for r in range(1, x.precision + 1)]
        if self.is_json:
            return self._dump({
                'n': x.n,
                'p': x.p,
                'R': x.precision,
                'framing': [format_padic(f) for f in x.framings],
                'braid': braid,
                'permutation': format_perm(x.perm),
                'levels': [
                    {'r': r, 'd': level.modulus, 'framing': list(level.framing)}
                    for r, level in enumerate(levels, start=1)
                ],
            })
        lines = [
            f"framing ({', '.join(format_padic(f) for f in x.framings)}) braid {braid or '1'}"
            f" perm {format_perm(x.perm)}"
        ]
        lines.extend(f"r={r}: {format_split(level)}" for r, level in enumerate(levels, start=1))
        return "\n".join(lines)


def write_output(text: str, path: Optional[Path] = None) -> None:
    """Print to stdout, or write the text (newline-terminated) to `path`."""
    if path is None:
        print(text)
        return
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text + "\n", encoding="utf-8")
    logger.info(f"Wrote results to {path}")
