"""Entry point for `python -m klspecht`."""

from .cli import main

if __name__ == '__main__':
    main()
