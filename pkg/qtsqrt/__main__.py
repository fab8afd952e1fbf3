import sys

from qtsqrt.cli import main

sys.exit(main())
