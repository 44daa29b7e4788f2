"""Default entrypoint for the hardylab module."""
import sys

from hardylab import main

sys.exit(main.main(sys.argv[1:]))
