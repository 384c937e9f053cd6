"""
Randomized and exhaustive property suites backing the campaigns: Kelmans
rotation monotonicity, detector/oracle agreement and spectral hygiene.
"""

import logging
import math
import time
from typing import Dict, List

import numpy as np

from chorded import find_chorded_cycle, find_chorded_cycle_oracle
from graphs import Graph, all_graphs, random_connected_graph, random_graph, to_graph6
from spectra import (
    char_poly, count_eigs_above, eigen_residual, kelmans_rotate, perron, radius_disagreement, sign_at_sqrt,
    spectral_radius, spectrum,
)
from spectra.numeric import ARGMAX_TIE
from utils.config_utils import jacobi_options, power_options
from .report import FAIL, PASS, VerificationReport

logger = logging.getLogger(__name__)

class PropertyVerifier:
    def __init__(self, config: Dict):
        self.config = config
        self.logger = logging.getLogger(__name__)
        self.band = config['numeric']['decision_band']
        self.max_order = config['exact']['max_order']
        self.settings = config['campaigns']['properties']
        self.jacobi = jacobi_options(config)
        self.power = power_options(config)

    def _finish(self, claim: str, n, scanned: int, hits: int, failures: List[str],
                started: float, tolerance: float, extra: Dict) -> VerificationReport:
        report = VerificationReport(
            claim=claim,
            n=n,
            classes_scanned=scanned,
            condition_hits=hits,
            counterexamples=sorted(set(failures)),
            tolerance=tolerance,
            runtime_ms=int((time.perf_counter() - started) * 1000),
            verdict=PASS if not failures else FAIL,
            extra=extra,
        )
        self.logger.info(f"✅ {claim} {n}: {scanned} graphs, {hits} checks, verdict {report.verdict}")
        return report

    def verify_kelmans(self, samples: int = None, n_max: int = None, seed: int = None) -> VerificationReport:
        """ρ grows under every admissible rotation of random connected graphs"""
        samples = samples or self.settings['kelmans_samples']
        n_max = n_max or self.settings['kelmans_n_max']
        seed = self.settings['seed'] if seed is None else seed
        tolerance = self.settings['kelmans_tolerance']
        rng = np.random.default_rng(seed)
        started = time.perf_counter()
        failures, pairs = [], 0
        smallest_gain = math.inf

        for _ in range(samples):
            n = int(rng.integers(3, n_max + 1))
            G = random_connected_graph(n, float(rng.uniform(0.2, 0.7)), rng)
            data = perron(G, **self.jacobi)
            x = data.vector
            for u in range(n):
                for v in range(n):
                    if u == v or x[u] < x[v] - ARGMAX_TIE:
                        continue
                    rotated = kelmans_rotate(G, u, v)
                    if rotated is G:
                        continue
                    pairs += 1
                    gain = spectral_radius(rotated, **self.jacobi) - data.rho
                    smallest_gain = min(smallest_gain, gain)
                    if gain <= tolerance:
                        self.logger.warning(f"❌ rotation ({u}, {v}) of {to_graph6(G)} changes ρ by {gain:.3e}")
                        failures.append(to_graph6(G))

        extra = {'seed': seed, 'pairs': pairs, 'smallest_gain': smallest_gain if pairs else None}
        return self._finish("kelmans", f"3..{n_max}", samples, pairs, failures, started, tolerance, extra)

    def verify_detector(self, n_max: int = None, random_samples: int = None, seed: int = None) -> VerificationReport:
        """Menger detector against cycle enumeration: every class up to n_max,
        then random graphs of order 8..12"""
        n_max = n_max or self.settings['detector_n_max']
        random_samples = self.settings['detector_random'] if random_samples is None else random_samples
        seed = self.settings['seed'] if seed is None else seed
        rng = np.random.default_rng(seed)
        started = time.perf_counter()
        failures, scanned, chorded = [], 0, 0

        def check(G: Graph) -> None:
            nonlocal scanned, chorded
            scanned += 1
            witness = find_chorded_cycle(G)
            expected = find_chorded_cycle_oracle(G, self.config['oracle']['max_order'],
                                                 self.config['oracle']['max_paths'])
            chorded += witness is not None
            if (witness is None) != (expected is None) or (witness is not None and not witness.is_valid(G)):
                self.logger.warning(f"❌ detector disagrees with oracle on {to_graph6(G)}")
                failures.append(to_graph6(G))

        for n in range(1, n_max + 1):
            for G in all_graphs(n):
                check(G)
        for _ in range(random_samples):
            check(random_graph(int(rng.integers(8, 13)), float(rng.uniform(0.1, 0.5)), rng))

        extra = {'seed': seed, 'random_samples': random_samples, 'chorded': chorded}
        return self._finish("detector", f"1..{n_max}+random", scanned, scanned, failures, started, 0.0, extra)

    def check_hygiene(self, G: Graph) -> List[str]:
        """Problems found with the numeric spectrum of G, empty when clean.

        Residuals, trace identities and the power-iteration radius must sit
        within hygiene_tolerance. When every eigenvalue is farther than the
        decision band from sqrt(2n-4), the exact sign of the characteristic
        polynomial and the exact count above the threshold must match the
        numeric spectrum.
        """
        tolerance = self.settings['hygiene_tolerance']
        values = np.array(spectrum(G, **self.jacobi).values)
        problems = []
        errors = {
            'residual': eigen_residual(G, **self.jacobi),
            'trace': float(abs(values.sum())),
            'trace of A^2': float(abs((values ** 2).sum() - 2 * G.e)),
            'power iteration': radius_disagreement(G, self.jacobi['tolerance'], self.jacobi['max_sweeps'],
                                                   self.power['tolerance'], self.power['max_iterations']),
        }
        problems += [f"{name} error {err:.3e}" for name, err in errors.items() if err > tolerance]

        m = 2 * G.n - 4
        gaps = math.sqrt(max(m, 0)) - values
        if m > 0 and G.n <= self.max_order and np.all(np.abs(gaps) > self.band):
            numeric_sign = int(np.sign(np.prod(gaps)))
            exact_sign = sign_at_sqrt(char_poly(G, self.max_order), m).sign
            if exact_sign != numeric_sign:
                problems.append(f"char poly sign at sqrt({m}) is {exact_sign}, numeric {numeric_sign}")
            numeric_above = int((gaps < 0).sum())
            counted = count_eigs_above(G, m, self.max_order)
            if counted.above != numeric_above or counted.is_eigenvalue:
                problems.append(f"{counted.above} eigenvalues above sqrt({m}) exactly, {numeric_above} numerically")
        return problems

    def verify_hygiene(self, n_max: int = None) -> VerificationReport:
        """check_hygiene over every class of order 1..n_max"""
        n_max = n_max or self.settings['hygiene_n_max']
        tolerance = self.settings['hygiene_tolerance']
        started = time.perf_counter()
        failures, scanned = [], 0

        for n in range(1, n_max + 1):
            for G in all_graphs(n):
                scanned += 1
                problems = self.check_hygiene(G)
                if problems:
                    self.logger.warning(f"❌ numeric hygiene broken on {to_graph6(G)}: {'; '.join(problems)}")
                    failures.append(to_graph6(G))

        extra = {'exact_checks_up_to': min(n_max, self.max_order)}
        return self._finish("hygiene", f"1..{n_max}", scanned, scanned, failures, started, tolerance, extra)
