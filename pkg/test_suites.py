"""
test_suites.py

Tests for the verification suite infrastructure and the run configuration.
"""

import sys
import os
import json
import tempfile

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import pytest

from xxz_fidelity.config import RunConfig
from xxz_fidelity.errors import ArgumentError, ConsistencyError
from xxz_fidelity.suites import (
    SUITES,
    AsymptoticsSuite,
    BaseVerificationSuite,
    CharacterSuite,
    OracleSuite,
    QkzSuite,
)


def test_base_suite():
    """Test BaseVerificationSuite bookkeeping."""
    print("🧪 Testing BaseVerificationSuite...")

    class TestSuite(BaseVerificationSuite):
        def initialize(self):
            self.limit = self.config.get('limit', 3)
            self._initialized = True
            return True

        def run_checks(self):
            self.check("empty residual", lambda: {})
            self.check("non-empty residual", lambda: {'entry': 1})
            self.check("truthy", lambda: self.limit == 3)
            self.check("library error", self._fail)
            self.record("manual", True, 0.5, detail="recorded directly")

        def _fail(self):
            raise ConsistencyError("no pivot")

    suite = TestSuite("test-suite", {'limit': 3})
    assert suite.suite_name == "test-suite"

    report = suite.process()
    assert report['suite'] == "test-suite"
    assert not report['passed']
    assert report['failed'] == ["non-empty residual", "library error"]
    errors = [c for c in report['checks'] if 'error' in c]
    assert errors[0]['error'] == "ConsistencyError: no pivot"
    assert report['checks'][1]['residual'] == {'entry': 1}
    assert report['checks'][4]['residual'] == 0.5

    options = suite.get_config()
    assert options == {'limit': 3}
    options['limit'] = 4
    assert suite.get_config() == {'limit': 3}, "get_config should return a copy"
    assert "truthy" in TestSuite("other", {'limit': 4}).process()['failed']

    assert repr(suite) == "TestSuite(name='test-suite')"

    with pytest.raises(ArgumentError):
        TestSuite("low", {'precision': 10}).process()

    print("✅ BaseVerificationSuite tests passed")


def test_run_config():
    """Test defaults, files, environment and validation."""
    print("🧪 Testing RunConfig...")

    config = RunConfig()
    assert config.get('numerics.precision') == 60
    assert config.get('asymptotics.compare_n') == [72, 73]
    assert config.get('missing.key', 'fallback') == 'fallback'

    config.set('oracle.max_n', 6)
    assert config.get('oracle.max_n') == 6
    config.validate()

    previous = os.environ.get('XXZ_MAX_N')
    os.environ['XXZ_MAX_N'] = '9'
    try:
        assert RunConfig().get('oracle.max_n') == 9
        os.environ['XXZ_MAX_N'] = 'nine'
        with pytest.raises(ArgumentError):
            RunConfig()
    finally:
        if previous is None:
            del os.environ['XXZ_MAX_N']
        else:
            os.environ['XXZ_MAX_N'] = previous

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'config.json')
        with open(path, 'w', encoding='utf-8') as f:
            json.dump({'asymptotics': {'tolerance': 1e-2}}, f)
        config = RunConfig(path)
        assert config.get('asymptotics.tolerance') == 1e-2
        assert config.get('asymptotics.interior_min') == 8

        with open(path, 'w', encoding='utf-8') as f:
            f.write('{not json')
        with pytest.raises(ArgumentError):
            RunConfig(path)

    config = RunConfig()
    config.set('oracle.x_values', ['1/2', '-3'])
    with pytest.raises(ArgumentError):
        config.validate()
    config = RunConfig()
    config.set('logging.level', 'LOUD')
    with pytest.raises(ArgumentError):
        config.validate()

    print("✅ RunConfig tests passed")


def test_exact_suites():
    """Test the oracle, character and qKZ suites on small inputs."""
    print("🧪 Testing exact suites...")

    assert set(SUITES) == {'qkz', 'oracle', 'characters', 'asymptotics'}

    oracle = OracleSuite(config={'max_n': 5, 'x_values': ['1/2', '2'], 'ao_n_max': 3})
    report = oracle.process()
    assert report['passed'], report['failed']
    names = [c['name'] for c in report['checks']]
    assert "O(2,2) x=1/2" in names
    assert "O(2,2) global sign" in names
    assert "O(1,3) global sign" not in names

    characters = CharacterSuite(config={'max_n': 4, 'random_points': 3, 'reduction_n_max': 3,
                                        'symbolic_n_max': 3, 'seed': 11})
    report = characters.process()
    assert report['passed'], report['failed']

    qkz = QkzSuite(config={'samples': 5, 'seed': 3})
    report = qkz.process()
    assert report['passed'], report['failed']
    assert any(c['name'] == "Ω(2,1) character formula" for c in report['checks'])

    print("✅ Exact suite tests passed")


def test_asymptotics_suite():
    """Test the numerical suite with a reduced configuration."""
    print("🧪 Testing AsymptoticsSuite...")

    suite = AsymptoticsSuite(config={'x': '2', 'compare_n': [24], 'tolerance': 1.0,
                                     'tau_n_max': 40, 'ode_n_max': 2, 'precision': 40})
    report = suite.process()
    by_name = {c['name']: c for c in report['checks']}
    assert by_name["coefficients at r=1"]['passed']
    assert by_name["D continuous at r=1"]['passed']
    assert by_name["CFT profile even-even"]['passed']
    assert by_name["CFT log coefficient odd-even"]['passed']
    assert by_name["energy expansion N=5 x=7/5"]['passed']
    assert by_name["differential equation odd n=2"]['passed']
    assert "finite-size comparison N=24 x=2" in by_name

    print("✅ AsymptoticsSuite tests passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("🔮 xxz_fidelity - Suite Tests")
    print("=" * 60)
    print()

    try:
        test_base_suite()
        print()
        test_run_config()
        print()
        test_exact_suites()
        print()
        test_asymptotics_suite()
        print()
        print("=" * 60)
        print("✨ All tests passed! ✨")
        print("=" * 60)
        return True
    except AssertionError as e:
        print(f"❌ Test failed: {e}")
        return False
    except Exception as e:
        print(f"❌ Error during testing: {e}")
        import traceback
        traceback.print_exc()
        return False


if __name__ == "__main__":
    success = run_all_tests()
    sys.exit(0 if success else 1)
