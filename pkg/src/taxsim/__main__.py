import sys

from taxsim.cli import main

sys.exit(main())
