import sys

from bezout_bezier.cli import main

sys.exit(main())
