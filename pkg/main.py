#!/usr/bin/env python3
"""
Main entry point for flagk - exact Pieri-Chevalley computations in K(G/B).

Commands:
1. roots     - Cartan matrix, positive roots and rho of a root system
2. weyl      - Weyl group order, longest element and per-element data
3. paths     - LS paths of a dominant shape, optionally as a DOT crystal graph
4. character - Character of the irreducible module V_lambda
5. expand    - Coefficients of e^lambda [O_{X_w}] in the Schubert basis
6. verify    - Verification suites (identities, Chevalley covers, cohomology, G2 golden)

Exit status: 0 on success, 1 when a consistency check fails, 2 on invalid input.
"""
import sys

# Ensure environment is loaded before importing config-dependent modules
from utils import env_utils
if not env_utils.env_vars:
    env_utils.load_environment()

from utils.logging_utils import log_error, log_info


if __name__ == "__main__":
    try:
        from src.cli import run
        sys.exit(run(sys.argv[1:]))
    except KeyboardInterrupt:
        log_info('CLI', "Interrupted by user")
        sys.exit(1)
    except Exception as e:
        log_error('CLI', f"Unexpected error: {e}", e)
        sys.exit(1)
