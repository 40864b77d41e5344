#!/usr/bin/env python3
# -*- coding: utf-8 -*-
"""hermispec_cli.py: Console entry point for the Hermitian spectral engine."""

import os
import sys

# Add the engine directory to the path so the package imports without installation
sys.path.append(os.path.dirname(os.path.abspath(__file__)))

from hermispec.cli import main

if __name__ == "__main__":
    sys.exit(main())
