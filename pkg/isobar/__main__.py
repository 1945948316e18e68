"""Allow isobar to be run as a module: python -m isobar"""

from isobar.cli import main

if __name__ == "__main__":
    main()
