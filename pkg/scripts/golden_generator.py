#!/usr/bin/env python3
"""
Write a golden file for the expansion of e^lambda [O_{X_w}].

The file holds the expansion exactly as `flagk expand --format json` prints it
plus the per-path table, rows sorted by their canonical JSON so that
regenerating an unchanged case gives an identical file.

Usage:
    python scripts/golden_generator.py --type G2 --lambda 0,1 --word 1,2,1,2
    python scripts/golden_generator.py --type A3 --lambda 1,0,1 --word 1,2,3 --output test/golden/a3.json
"""

import argparse
import os
import sys

# Add project root for imports
sys.path.insert(0, os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

from utils.logging_utils import log_error, log_info, log_success

SCRIPT_TAG = "GoldenGenerator"
GOLDEN_DIR = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "test", "golden")


def default_output(rs, lam, word):
    """test/golden/<type><rank>_<lambda>_<word>.json, e.g. g2_omega2_s1s2s1s2.json for omega_2."""
    nonzero = [i + 1 for i, a in enumerate(lam) if a]
    if len(nonzero) == 1 and lam[nonzero[0] - 1] == 1:
        weight = f"omega{nonzero[0]}"
    else:
        weight = "lam" + "_".join(str(a) for a in lam)
    from src.weyl import format_word
    return os.path.join(GOLDEN_DIR, f"{rs.name.lower()}_{weight}_{format_word(word)}.json")


def generate(cartan_type, lam_text, word_text, output=None):
    """Compute the expansion and its table and write the golden file.

    Returns:
        bool: True if the file was written
    """
    from src.pieri import expand, path_table
    from src.rootdata import build_root_system, check_dominant_integral, parse_cartan_type
    from src.weyl import generate_group, parse_word
    from utils.json_utils import canonical_dumps, write_json

    letter, rank = parse_cartan_type(cartan_type)
    rs = build_root_system(letter, rank)
    lam = check_dominant_integral(rs, tuple(int(a) for a in lam_text.split(',')))
    word = parse_word(word_text)
    w = generate_group(rs).from_reduced_word(word)

    expansion = expand(rs, lam, w)
    rows = sorted((row.to_json() for row in path_table(rs, lam, w)), key=canonical_dumps)
    output = output or default_output(rs, lam, word)

    log_info(SCRIPT_TAG, f"{rs.name} lambda={list(lam)} w={word_text}: {expansion.path_count} paths")
    if not write_json(output, {'expansion': expansion.to_json(), 'table': rows}):
        return False
    log_success(SCRIPT_TAG, f"Wrote {output}")
    return True


def main() -> None:
    """Load config, parse args, run and exit."""
    parser = argparse.ArgumentParser(
        description="Generate a golden expansion file for the test suite",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog=__doc__,
    )
    parser.add_argument("--type", required=True, help="Cartan type with rank, e.g. G2")
    parser.add_argument("--lambda", dest="weight", required=True, help="Dominant weight, e.g. 0,1")
    parser.add_argument("--word", required=True, help="Reduced word of w, e.g. 1,2,1,2")
    parser.add_argument("--output", help="Output path (default: test/golden/<case>.json)")
    args = parser.parse_args()

    from utils import ensure_environment_loaded
    ensure_environment_loaded()

    try:
        ok = generate(args.type, args.weight, args.word, args.output)
    except ValueError as e:
        log_error(SCRIPT_TAG, f"Invalid input: {e}", e)
        sys.exit(2)
    if not ok:
        sys.exit(1)


if __name__ == "__main__":
    main()
