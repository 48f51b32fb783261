from socles.cli import main
import sys

sys.exit(main())
