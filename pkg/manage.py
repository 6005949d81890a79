#!/usr/bin/env python
"""Command-line entry point: roots, gamma, rewrite and verify."""
import os
import sys


def main():
    os.environ.setdefault("DJANGO_SETTINGS_MODULE", "config.settings")
    try:
        from django.core.management import execute_from_command_line
    except ImportError as exc:
        raise ImportError("Django is required to run the osinvariants commands; install requirements.txt first.") from exc
    execute_from_command_line(sys.argv)


if __name__ == "__main__":
    main()
