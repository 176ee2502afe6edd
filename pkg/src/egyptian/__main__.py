import sys

from egyptian.cli import main

sys.exit(main())
