# Copyright (c) EulerLax Authors.
# Licensed under the MIT License.
import sys

from eulerlax.cli import main

if __name__ == "__main__":
    sys.exit(main())
