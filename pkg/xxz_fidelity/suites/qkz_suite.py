"""
qkz_suite.py

Symbolic checks of the vertex-model relations for N <= 3: Yang-Baxter
equations, unitarity and inversion, exchange, reflection, reduction,
singlet transport, the homogeneous limit and every identity of the
generalised overlap.
"""

from fractions import Fraction
from typing import Any, Dict, Optional

from ..errors import FidelityError
from ..models.omega import verify_omega_lemmas, verify_omega_theorem
from ..models import qkz, vertex_model
from .base_suite import BaseVerificationSuite


class QkzSuite(BaseVerificationSuite):
    """Exact qKZ checks; every residual must vanish identically."""

    def __init__(self, suite_name: str = "qkz", config: Optional[Dict[str, Any]] = None):
        super().__init__(suite_name, config)
        self.samples = 200
        self.seed = None
        self.betas = [Fraction(2), Fraction(3, 5)]

    def initialize(self) -> bool:
        self.samples = int(self.config.get('samples', self.samples))
        self.seed = self.config.get('seed', self.seed)
        self.betas = [Fraction(b) for b in self.config.get('betas', self.betas)]
        self._initialized = True
        return True

    def run_checks(self) -> None:
        vm = vertex_model
        self.check("braid Yang-Baxter", vm.verify_braid_ybe)
        self.check("boundary Yang-Baxter", vm.verify_boundary_ybe)
        self.check("R unitarity", vm.verify_r_unitarity)
        self.check("K inversion", vm.verify_k_inversion)
        self.check("R at q^-1 on the singlet", vm.verify_singlet_projection)
        self.check("R(1) is the identity", vm.verify_r_identity)

        for N in range(2, qkz.MAX_N + 1):
            for i in range(1, N):
                self.check(f"exchange N={N} i={i}", lambda N=N, i=i: qkz.verify_exchange(N, i))
                self.check(f"reduction N={N} i={i}", lambda N=N, i=i: qkz.verify_reduction(N, i))
                self.check(f"Xi injective N={N} i={i}", lambda N=N, i=i: qkz.XiMap(N, i).is_injective())
        for N in range(1, qkz.MAX_N + 1):
            for side in ('left', 'right'):
                self.check(f"reflection N={N} {side}",
                           lambda N=N, side=side: qkz.verify_reflection(N, side))
        self.check("singlet transport", qkz.verify_singlet_transport)

        for N in range(1, qkz.MAX_N + 1):
            for beta in self.betas:
                self.check(
                    f"homogeneous limit N={N} beta={beta}",
                    lambda N=N, beta=beta: qkz.verify_homogeneous_limit(N, beta),
                    passed=lambda r: (r['eigen_residual_zero'] and not r['outside_sector']
                                      and r['base_component'] == '1'),
                )

        for N in range(1, qkz.MAX_N + 1):
            for N1 in range(N + 1):
                N2 = N - N1
                self._omega_checks(N1, N2)

    def _omega_checks(self, N1: int, N2: int) -> None:
        label = f"Ω({N1},{N2})"
        try:
            lemmas = verify_omega_lemmas(N1, N2)
        except FidelityError as e:
            entry = self.record(f"{label} lemmas", False)
            entry['error'] = f"{e.__class__.__name__}: {e}"
            return
        for lemma in lemmas:
            self.record(f"{label} {lemma['name']}", lemma['passed'], detail=lemma['detail'])
        self.check(
            f"{label} character formula",
            lambda: verify_omega_theorem(N1, N2, self.samples, self.seed),
            passed=lambda r: r['mismatches'] == 0 and r['samples'] > 0,
        )
