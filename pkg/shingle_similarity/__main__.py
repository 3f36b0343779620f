""" Run the command-line interface with `python -m shingle_similarity`. """

# Copyright 2023 shingle_similarity contributors
#
# This Source Code Form is subject to the terms of the Mozilla Public
# License, v. 2.0. If a copy of the MPL was not distributed with this
# file, You can obtain one at https://mozilla.org/MPL/2.0/.


# Import sys.
import sys

# Local imports.
from .cli import main


# Main.
if __name__ == '__main__': sys.exit(main())

