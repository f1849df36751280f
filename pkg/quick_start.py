#!/usr/bin/env python3
"""
quick_start.py

Quick start script for xxz_fidelity.
Walks through a ground state, the two overlap routes, the fidelity and
its large-N series in a few lines each.
"""

import sys
from fractions import Fraction

from xxz_fidelity import compare_routes, lbf, lbf_asymptotic, precision
from xxz_fidelity.asymptotics import BoundaryParam, coeffs
from xxz_fidelity.characters import chi_specialized
from xxz_fidelity.models import ground_state


def main():
    print("=" * 70)
    print("🔮 XXZ bipartite fidelity - Quick Start 🔮".center(70))
    print("=" * 70)
    print()

    x = Fraction(1, 2)

    print(f"📐 Ground state of N=4 at x={x}...")
    gs = ground_state(4, x)
    for word, value in gs.as_dict().items():
        print(f"   {word}: {value}")
    print()

    print("🔗 Overlap O_{2,2} by contraction and by determinant...")
    record = compare_routes(2, 2, x)
    print(f"   contraction: {record['contraction']}")
    print(f"   determinant: {record['determinant']}")
    print(f"   sign: {record['sign']}, LBF agrees: {record['lbf_equal']}")
    print()

    print("🧮 Specialised character χ_5 in the variable x...")
    print(f"   {chi_specialized(5)}")
    print()

    with precision(30):
        print("📈 Fidelity against its large-N series...")
        for N1, N2 in ((2, 2), (10, 10), (36, 36)):
            exact = lbf(N1, N2, x).value
            asymp = lbf_asymptotic(N1, N2, x)
            print(f"   F_{{{N1},{N2}}}: exact {float(exact):.6f}  series {float(asymp):.6f}")
        print()

        param = BoundaryParam.from_x(x)
        c = coeffs(param.r)
        print(f"⚙️  r = {float(param.r):.6f}, D = {float(c.D):.6f}, "
              f"τ₂ = {float(c.tau2):.6f}, τ̄₂ = {float(c.tau2_bar):.6f}")
    print()

    print("=" * 70)
    print("✨ Next Steps")
    print("=" * 70)
    print()
    print("1. 📊 Fidelity table:")
    print("   python app.py lbf --n 12 --x 1/2")
    print()
    print("2. 🧪 Run a verification suite:")
    print("   python app.py verify qkz --format json")
    print()
    print("3. 📉 Comparison sweep for plotting:")
    print("   python app.py compare --n 72 --x 1/2 --out sweep.csv")
    print()
    print("=" * 70)


if __name__ == "__main__":
    try:
        main()
    except KeyboardInterrupt:
        sys.exit(0)
    except Exception as e:
        print(f"\n❌ Error: {e}")
        import traceback
        traceback.print_exc()
        sys.exit(1)
