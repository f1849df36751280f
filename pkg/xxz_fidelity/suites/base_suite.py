"""
base_suite.py

Base class for verification suites.
A suite runs a family of exact or numerical identity checks and reports
each one as a record instead of raising.
"""

from abc import ABC, abstractmethod
from typing import Any, Callable, Dict, List, Optional
import logging

from ..errors import FidelityError
from ..numerics import DEFAULT_PRECISION, precision

logger = logging.getLogger(__name__)


def describe(value: Any) -> Any:
    """JSON-friendly rendering of a residual."""
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if isinstance(value, dict):
        return {str(k): describe(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [describe(v) for v in value]
    return str(value)


class BaseVerificationSuite(ABC):
    """
    Base class for all verification suites.

    Subclasses implement ``initialize`` (read their options) and ``run_checks``
    (call ``check`` or ``record`` once per identity).
    """

    def __init__(self, suite_name: str, config: Optional[Dict[str, Any]] = None):
        """
        Initialize the suite.

        Args:
            suite_name: Name used in reports and on the command line
            config: Optional suite options
        """
        self.suite_name = suite_name
        self.config = config or {}
        self.checks: List[Dict[str, Any]] = []
        self._initialized = False

    @abstractmethod
    def initialize(self) -> bool:
        """
        Read options and prepare inputs.

        Returns:
            bool: True if the suite is ready to run
        """
        pass

    @abstractmethod
    def run_checks(self) -> None:
        """Run every check of the suite."""
        pass

    def record(self, name: str, passed: bool, residual: Any = None, detail: str = '') -> Dict[str, Any]:
        """Append one check record."""
        entry = {
            'name': name,
            'passed': bool(passed),
            'residual': describe(residual),
            'detail': detail,
        }
        self.checks.append(entry)
        if not passed:
            logger.warning("%s: check %s failed", self.suite_name, name)
        return entry

    def check(self, name: str, fn: Callable[[], Any], passed: Optional[Callable[[Any], bool]] = None,
              detail: str = '') -> Dict[str, Any]:
        """
        Run ``fn`` and record the outcome.

        A returned dict or list counts as a residual that passes when empty,
        unless ``passed`` decides otherwise. Library errors become a failed
        record with an 'error' entry.
        """
        try:
            result = fn()
        except FidelityError as e:
            entry = self.record(name, False, None, detail)
            entry['error'] = f"{e.__class__.__name__}: {e}"
            return entry
        if passed is not None:
            ok = passed(result)
        elif isinstance(result, (dict, list)):
            ok = not result
        else:
            ok = bool(result)
        residual = result if not ok or isinstance(result, (dict, list)) else None
        return self.record(name, ok, residual, detail)

    def process(self, input_data: Any = None) -> Dict[str, Any]:
        """
        Run the suite.

        Returns:
            Report with the suite name, the overall outcome and the checks
        """
        if not self._initialized:
            self.initialize()
        self.checks = []
        with precision(int(self.config.get('precision', DEFAULT_PRECISION))):
            self.run_checks()
        failed = [c['name'] for c in self.checks if not c['passed']]
        logger.info("%s: %d checks, %d failed", self.suite_name, len(self.checks), len(failed))
        return {
            'suite': self.suite_name,
            'passed': not failed,
            'failed': failed,
            'checks': list(self.checks),
        }

    def get_config(self) -> Dict[str, Any]:
        """Options the suite ran with, as recorded in the verify report."""
        return self.config.copy()

    def __repr__(self) -> str:
        return f"{self.__class__.__name__}(name='{self.suite_name}')"
