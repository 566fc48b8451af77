import sys

from t3recon.cli import main

sys.exit(main())
