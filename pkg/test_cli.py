"""
test_cli.py

Tests for the command-line frontend: table output, JSON documents,
configuration precedence and exit codes.
"""

import sys
import os
import csv
import io
import json
import math
import tempfile
from contextlib import redirect_stderr, redirect_stdout
from fractions import Fraction

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

from xxz_fidelity.cli import (
    EXIT_ARGUMENT,
    EXIT_OK,
    build_parser,
    format_cell,
    load_config,
    main,
)
from xxz_fidelity.overlap import overlap_determinant


def run_cli(*argv):
    """Run main and return (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    with redirect_stdout(out), redirect_stderr(err):
        code = main(list(argv))
    return code, out.getvalue(), err.getvalue()


def read_rows(text):
    return list(csv.DictReader(io.StringIO(text)))


def test_lbf_command():
    """Test single pairs and sweeps."""
    print("🧪 Testing lbf command...")

    code, out, err = run_cli('lbf', '--n1', '2', '--n2', '2', '--x', '1')
    assert code == EXIT_OK, err
    rows = read_rows(out)
    assert len(rows) == 1
    assert rows[0]['O'] == '11'
    assert rows[0]['x'] == '1'
    assert abs(float(rows[0]['F']) - math.log(132 / 121)) < 1e-12
    assert "🔮" in err

    code, out, _ = run_cli('lbf', '--n', '6', '--x', '1/2')
    assert code == EXIT_OK
    assert [r['N1'] for r in read_rows(out)] == ['0', '2', '4', '6']

    code, _, err = run_cli('lbf', '--n1', '1', '--n2', '3', '--x', '1')
    assert code == EXIT_ARGUMENT
    assert "ill-defined" in err

    code, _, _ = run_cli('lbf', '--n1', '2', '--n2', '2')
    assert code == EXIT_ARGUMENT
    code, _, _ = run_cli('lbf', '--n1', '2', '--n2', '2', '--x', '-1/2')
    assert code == EXIT_ARGUMENT
    code, _, _ = run_cli('lbf', '--n1', '2', '--n2', '2', '--x', 'abc')
    assert code == EXIT_ARGUMENT

    print("✅ lbf command tests passed")


def test_overlap_and_char_commands():
    """Test symbolic and exact output."""
    print("🧪 Testing overlap and char commands...")

    code, out, _ = run_cli('overlap', '--n1', '2', '--n2', '2')
    assert code == EXIT_OK
    assert read_rows(out)[0]['O'] == str(overlap_determinant(2, 2).polynomial)

    code, out, _ = run_cli('overlap', '--n1', '2', '--n2', '1', '--x', '2/5', '--route', 'contraction')
    assert code == EXIT_OK
    row = read_rows(out)[0]
    assert row['O'] == '39/25'
    assert row['route'] == 'contraction'

    code, out, _ = run_cli('char', '--n', '5', '--x', '1', '--format', 'json')
    assert code == EXIT_OK
    document = json.loads(out)
    assert document['rows'][0]['N'] == 5
    assert document['rows'][0]['chi'] == '891'
    assert document['rows'][0]['normalized'] == '1'
    assert document['checks'] == []
    assert document['config']['output']['format'] == 'json'

    print("✅ overlap and char command tests passed")


def test_asymptote_and_compare_commands():
    """Test the series and comparison tables."""
    print("🧪 Testing asymptote and compare commands...")

    code, out, _ = run_cli('asymptote', '--n1', '10', '--n2', '12', '--x', '1', '--order', 'const')
    assert code == EXIT_OK
    row = read_rows(out)[0]
    assert row['order'] == 'const'
    diff = float(row['F_exact']) - float(row['F_asymp'])
    assert abs(diff - float(row['diff'])) < 1e-12

    code, out, _ = run_cli('compare', '--n', '12', '--x', '2')
    assert code == EXIT_OK
    rows = read_rows(out)
    assert list(rows[0]) == ['N', 'N1', 'N2', 'xi', 'F_exact', 'F_asymp', 'diff']
    assert [r['N1'] for r in rows] == ['2', '4', '6', '8', '10']

    code, _, _ = run_cli('compare', '--n', '5', '--x', '2')
    assert code == EXIT_ARGUMENT

    print("✅ asymptote and compare command tests passed")


def test_configuration():
    """Test file, environment and flag precedence."""
    print("🧪 Testing configuration...")

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'config.json')
        with open(path, 'w', encoding='utf-8') as f:
            json.dump({'numerics': {'precision': 40}, 'output': {'format': 'json'}}, f)

        args = build_parser().parse_args(['lbf', '--config', path, '--precision', '50'])
        config = load_config(args)
        assert config.get('numerics.precision') == 50
        assert config.get('output.format') == 'json'
        assert config.get('oracle.max_n') == 12

        out_path = os.path.join(tmp, 'table.csv')
        code, out, err = run_cli('lbf', '--n', '4', '--x', '1', '--out', out_path)
        assert code == EXIT_OK
        assert out == ''
        assert "📍" in err
        with open(out_path, encoding='utf-8') as f:
            assert len(read_rows(f.read())) == 3

    code, _, _ = run_cli('lbf', '--n', '4', '--x', '1', '--precision', '10')
    assert code == EXIT_ARGUMENT
    code, _, _ = run_cli('lbf', '--config', '/nonexistent/config.json', '--n', '4', '--x', '1')
    assert code == EXIT_ARGUMENT
    code, _, _ = run_cli('frobnicate')
    assert code == EXIT_ARGUMENT

    assert format_cell(True, 10) is True
    assert format_cell(3, 10) == 3
    assert format_cell(Fraction(3, 2), 10) == '3/2'

    print("✅ Configuration tests passed")


def test_verify_command():
    """Test a small verification run."""
    print("🧪 Testing verify command...")

    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, 'config.json')
        with open(path, 'w', encoding='utf-8') as f:
            json.dump({'characters': {'max_n': 4, 'random_points': 3,
                                      'reduction_n_max': 3, 'symbolic_n_max': 3}}, f)
        code, out, err = run_cli('verify', 'characters', '--config', path, '--seed', '5')
        json_code, json_out, _ = run_cli('verify', 'characters', '--config', path, '--seed', '5',
                                         '--format', 'json')

    assert code == EXIT_OK, err
    rows = read_rows(out)
    assert list(rows[0]) == ['suite', 'name', 'passed', 'residual']
    assert all(r['suite'] == 'characters' and r['passed'] == 'True' for r in rows)
    assert "✅ characters" in err

    assert json_code == EXIT_OK
    document = json.loads(json_out)
    options = document['suites']['characters']
    assert options['max_n'] == 4
    assert options['seed'] == 5
    assert options['precision'] == 60
    assert all(c['passed'] for c in document['checks'])

    print("✅ verify command tests passed")


def run_all_tests():
    """Run all tests."""
    print("=" * 60)
    print("🔮 xxz_fidelity - Command Line Tests")
    print("=" * 60)
    print()

    try:
        test_lbf_command()
        print()
        test_overlap_and_char_commands()
        print()
        test_asymptote_and_compare_commands()
        print()
        test_configuration()
        print()
        test_verify_command()
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
