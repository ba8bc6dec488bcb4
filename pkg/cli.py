#!/usr/bin/env python3
"""
Speh command line

    ./cli.py classify --place '{"place": "padic_real", "p": 7}'
    ./cli.py check --suite composite --trials 200
"""
from speh.cli import main

if __name__ == '__main__':
    main()
