"""
app.py

Command-line entry point for xxz_fidelity.
Runs one subcommand (lbf, overlap, char, asymptote, compare, verify)
and exits with its status code.
"""

import sys

from xxz_fidelity.cli import main

if __name__ == "__main__":
    sys.exit(main())
