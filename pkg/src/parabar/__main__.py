import sys

from parabar.cli import main

sys.exit(main())
