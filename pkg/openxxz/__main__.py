import sys

from openxxz.main import main

sys.exit(main())
