#!/usr/bin/env python3
"""Regenerate the shipped fixture files from the library definitions."""

import argparse
import sys

from bsfloer.cli import main as cli_main


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--output", default="fixtures",
                    help="directory to write (default: fixtures)")
    args = ap.parse_args()
    return cli_main(["fixtures", "--output", args.output])


if __name__ == "__main__":
    sys.exit(main())
