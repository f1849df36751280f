"""
suites/__init__.py

Verification suites behind the ``verify`` command.
Each suite runs one family of identities and returns a report dict.
"""

from .base_suite import BaseVerificationSuite
from .qkz_suite import QkzSuite
from .oracle_suite import OracleSuite
from .character_suite import CharacterSuite
from .asymptotics_suite import AsymptoticsSuite

SUITES = {
    'qkz': QkzSuite,
    'oracle': OracleSuite,
    'characters': CharacterSuite,
    'asymptotics': AsymptoticsSuite,
}

__all__ = [
    'BaseVerificationSuite',
    'QkzSuite',
    'OracleSuite',
    'CharacterSuite',
    'AsymptoticsSuite',
    'SUITES',
]
